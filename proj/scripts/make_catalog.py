#!/usr/bin/env python3
"""Generate data/groups.cat: Cayley tables for all groups of order <= 24
plus a few extras (F20 etc.).  Verifies group axioms and pairwise
non-isomorphism before writing.  Also regenerates the embedded header
include/socle/catalog_data.hpp.
"""

import itertools
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")


class Group:
    def __init__(self, name, table):
        self.name = name
        self.n = len(table)
        self.table = table  # table[a][b] = a*b, identity is 0
        self._check()
        self.inv = [next(b for b in range(self.n) if table[a][b] == 0)
                    for a in range(self.n)]

    def _check(self):
        n, t = self.n, self.table
        assert all(t[0][a] == a and t[a][0] == a for a in range(n)), self.name
        for a in range(n):
            assert sorted(t[a]) == list(range(n)), self.name
            assert sorted(t[b][a] for b in range(n)) == list(range(n)), self.name
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert t[t[a][b]][c] == t[a][t[b][c]], self.name

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self):
        return sorted(self.order_of(a) for a in range(self.n))

    def center_size(self):
        return sum(1 for a in range(self.n)
                   if all(self.table[a][b] == self.table[b][a]
                          for b in range(self.n)))

    def derived_size(self):
        t = self.table
        gens = set()
        for a in range(self.n):
            for b in range(self.n):
                c = t[t[t[a][b]][self.inv[a]]][self.inv[b]]
                gens.add(c)
        return len(closure(self, gens))

    def invariants(self):
        return (self.n, tuple(self.element_orders()), self.center_size(),
                self.derived_size())


def closure(G, seed):
    cur = set(seed) | {0}
    frontier = list(cur)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(cur):
                for c in (G.table[a][b], G.table[b][a]):
                    if c not in cur:
                        cur.add(c)
                        nxt.append(c)
        frontier = nxt
    return cur


def from_elements(name, elems, mul):
    """Build a Group from an element list (identity first) and a mul function."""
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    return Group(name, table)


def cyclic(n, name=None):
    return Group(name or f"C{n}",
                 [[(a + b) % n for b in range(n)] for a in range(n)])


def direct(name, A, B):
    elems = [(a, b) for a in range(A.n) for b in range(B.n)]
    return from_elements(name, elems,
                         lambda x, y: (A.table[x[0]][y[0]], B.table[x[1]][y[1]]))


def semidirect(name, N, m, phi):
    """N ⋊ C_m, phi a permutation of N's elements (automorphism of order dividing m).
    Elements (h, n) with h in C_m; (h1,n1)(h2,n2) = (h1+h2, phi^h2... ).
    Convention: (n1, h1)*(n2, h2) = (n1 * phi^{h1}(n2), h1+h2)."""
    powers = [list(range(N.n))]
    for _ in range(m - 1):
        powers.append([phi[x] for x in powers[-1]])
    assert [phi[x] for x in powers[-1]] == powers[0], "phi order must divide m"
    elems = [(n, h) for h in range(m) for n in range(N.n)]
    elems.remove((0, 0))
    elems.insert(0, (0, 0))

    def mul(x, y):
        n1, h1 = x
        n2, h2 = y
        return (N.table[n1][powers[h1][n2]], (h1 + h2) % m)
    return from_elements(name, elems, mul)


def dihedral(n):
    inv = [(-x) % n for x in range(n)]
    return semidirect(f"D{n}", cyclic(n), 2, inv)


def dicyclic(n, name=None):
    """Order 4n: <a,b | a^{2n}=1, b^2=a^n, b a b^-1 = a^-1>."""
    m = 2 * n
    elems = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        # (a^i1 b^j1)(a^i2 b^j2)
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        # b a^i2 = a^-i2 b
        i = (i1 - i2) % m
        if j2 == 0:
            return (i, 1)
        return ((i + n) % m, 0)  # b^2 = a^n
    return from_elements(name or f"Dic{n}", elems, mul)


def sym(n, name=None):
    elems = sorted(itertools.permutations(range(n)))
    ident = tuple(range(n))
    elems.remove(ident)
    elems.insert(0, ident)
    return from_elements(name or f"S{n}",
                         elems, lambda p, q: tuple(p[q[i]] for i in range(n)))


def alt(n, name=None):
    def sign(p):
        s = 1
        p = list(p)
        for i in range(len(p)):
            while p[i] != i:
                j = p[i]
                p[i], p[j] = p[j], p[i]
                s = -s
        return s
    elems = [p for p in itertools.permutations(range(n)) if sign(p) == 1]
    ident = tuple(range(n))
    elems.remove(ident)
    elems.insert(0, ident)
    return from_elements(name or f"A{n}",
                         elems, lambda p, q: tuple(p[q[i]] for i in range(n)))


def sl23():
    def mats():
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        if (a * d - b * c) % 3 == 1:
                            yield (a, b, c, d)
    elems = list(mats())
    ident = (1, 0, 0, 1)
    elems.remove(ident)
    elems.insert(0, ident)

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)
    return from_elements("SL2_3", elems, mul)


def quotient(name, G, nsub):
    members = sorted(closure(G, nsub))
    mset = set(members)
    for a in range(G.n):  # normality
        for h in members:
            assert G.table[G.table[a][h]][G.inv[a]] in mset
    cosets = []
    seen = set()
    for a in range(G.n):
        if a in seen:
            continue
        cs = frozenset(G.table[a][h] for h in members)
        seen |= cs
        cosets.append(cs)
    cosets.sort(key=lambda cs: 0 if 0 in cs else min(cs) + 1)

    def mul(x, y):
        a, b = min(x), min(y)
        c = G.table[a][b]
        return next(cs for cs in cosets if c in cs)
    return from_elements(name, cosets, mul)


def automorphisms_of_order(G, k):
    """Brute-force automorphisms of small G whose order divides k (as element perms)."""
    gens = []
    cur = {0}
    for a in range(G.n):
        if a not in cur:
            gens.append(a)
            cur = closure(G, gens)
    results = []

    def images_to_perm(imgs):
        # extend generator images to a full map by closure of words
        perm = {0: 0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g, ig in zip(gens, imgs):
                y = G.table[x][g]
                iy = G.table[perm[x]][ig]
                if y in perm:
                    if perm[y] != iy:
                        return None
                else:
                    perm[y] = iy
                    frontier.append(y)
        if len(perm) != G.n or len(set(perm.values())) != G.n:
            return None
        # homomorphism check
        for a in range(G.n):
            for b in range(G.n):
                if perm[G.table[a][b]] != G.table[perm[a]][perm[b]]:
                    return None
        return [perm[i] for i in range(G.n)]

    cands = [[a for a in range(G.n) if G.order_of(a) == G.order_of(g)]
             for g in gens]
    for imgs in itertools.product(*cands):
        perm = images_to_perm(list(imgs))
        if perm is None:
            continue
        # order of perm divides k?
        p = perm
        ok = False
        for _ in range(k):
            if p == list(range(G.n)):
                ok = True
                break
            p = [perm[x] for x in p]
        if ok:
            results.append(perm)
    return results


def isomorphic(G, H):
    if G.invariants() != H.invariants():
        return False
    gens = []
    cur = {0}
    for a in range(G.n):
        if a not in cur:
            gens.append(a)
            cur = closure(G, gens)

    def extend(imgs):
        perm = {0: 0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g, ig in zip(gens, imgs):
                y = G.table[x][g]
                iy = H.table[perm[x]][ig]
                if y in perm:
                    if perm[y] != iy:
                        return None
                else:
                    perm[y] = iy
                    frontier.append(y)
        if len(perm) != G.n or len(set(perm.values())) != G.n:
            return None
        for a in range(G.n):
            for b in range(G.n):
                if perm[G.table[a][b]] != H.table[perm[a]][perm[b]]:
                    return None
        return perm

    cands = [[a for a in range(H.n) if H.order_of(a) == G.order_of(g)]
             for g in gens]
    for imgs in itertools.product(*cands):
        if extend(list(imgs)) is not None:
            return True
    return False


def build_all():
    gs = []

    def add(g):
        gs.append(g)

    C2, C3, C4, C5, C6 = cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6)

    add(cyclic(1))
    add(C2)
    add(C3)
    add(C4)
    add(direct("C2xC2", C2, C2))
    add(C5)
    add(C6)
    add(sym(3))
    add(cyclic(7))
    # order 8
    add(cyclic(8))
    add(direct("C4xC2", C4, C2))
    add(direct("C2xC2xC2", direct("t", C2, C2), C2))
    add(dihedral(4))
    add(dicyclic(2, "Q8"))
    # order 9..15
    add(cyclic(9))
    add(direct("C3xC3", C3, C3))
    add(cyclic(10))
    add(dihedral(5))
    add(cyclic(11))
    add(cyclic(12))
    add(direct("C6xC2", C6, C2))
    add(dihedral(6))
    add(alt(4))
    add(dicyclic(3))
    add(cyclic(13))
    add(cyclic(14))
    add(dihedral(7))
    add(cyclic(15))
    # order 16
    add(cyclic(16))
    add(direct("C4xC4", C4, C4))
    add(direct("C8xC2", cyclic(8), C2))
    add(direct("C4xC2xC2", C4, direct("t", C2, C2)))
    add(direct("C2x2x2x2", direct("t", C2, C2), direct("t", C2, C2)))
    gs[-1].name = "C2xC2xC2xC2"
    add(dihedral(8))
    add(dicyclic(4, "Q16"))
    # C8 : C2 with the three nontrivial actions
    C8 = cyclic(8)
    add(semidirect("SD16", C8, 2, [(3 * x) % 8 for x in range(8)]))
    add(semidirect("M16", C8, 2, [(5 * x) % 8 for x in range(8)]))
    add(direct("D4xC2", dihedral(4), C2))
    add(direct("Q8xC2", dicyclic(2, "Q8"), C2))
    add(semidirect("C4sC4", C4, 4, [(3 * x) % 4 for x in range(4)]))
    # (C4xC2) : C2 with a -> ab and central product D4 * C4
    C4xC2 = direct("t", C4, C2)
    phi = None
    for cand in automorphisms_of_order(C4xC2, 2):
        g = semidirect("C4xC2sC2", C4xC2, 2, cand)
        if not any(isomorphic(g, h) for h in gs if h.n == 16):
            phi = cand
            add(g)
            break
    assert phi is not None
    # Pauli group: (D4 x C4) / <(r^2, 2)>
    D4xC4 = direct("t", dihedral(4), C4)
    r2 = None
    D4 = dihedral(4)
    for a in range(D4.n):
        if D4.order_of(a) == 2 and all(D4.table[a][b] == D4.table[b][a]
                                       for b in range(D4.n)):
            r2 = a
            break
    # element (r2, 2) in the product ordering used by direct()
    idx = None
    k = 0
    for a in range(D4.n):
        for b in range(4):
            if (a, b) == (r2, 2):
                idx = k
            k += 1
    add(quotient("Pauli16", D4xC4, {idx}))
    # order 17..23
    add(cyclic(17))
    add(cyclic(18))
    add(direct("C3xC6", C3, C6))
    add(dihedral(9))
    add(direct("S3xC3", sym(3), C3))
    C3xC3 = direct("t", C3, C3)
    add(semidirect("GD9", C3xC3, 2,
                   [C3xC3.inv[x] for x in range(9)]))  # generalized dihedral
    add(cyclic(19))
    add(cyclic(20))
    add(direct("C10xC2", cyclic(10), C2))
    add(dihedral(10))
    add(dicyclic(5))
    add(semidirect("F20", C5, 4, [(2 * x) % 5 for x in range(5)]))
    add(cyclic(21))
    add(semidirect("C7sC3", cyclic(7), 3, [(2 * x) % 7 for x in range(7)]))
    add(cyclic(22))
    add(dihedral(11))
    add(cyclic(23))
    # order 24
    add(cyclic(24))
    add(direct("C12xC2", cyclic(12), C2))
    add(direct("C6xC2xC2", C6, direct("t", C2, C2)))
    add(semidirect("C3sC8", C3, 8, [C3.inv[x] for x in range(3)]))
    add(sl23())
    add(dicyclic(6))
    add(direct("C4xS3", C4, sym(3)))
    add(dihedral(12))
    add(direct("C2xDic3", C2, dicyclic(3)))
    add(direct("C3xD4", C3, dihedral(4)))
    add(direct("C3xQ8", C3, dicyclic(2, "Q8")))
    add(sym(4))
    add(direct("C2xA4", C2, alt(4)))
    add(direct("D6xC2", dihedral(6), C2))
    # (C6xC2) : C2, the one not isomorphic to anything above
    C6xC2 = direct("t", C6, C2)
    found = False
    for cand in automorphisms_of_order(C6xC2, 2):
        g = semidirect("C3sD4", C6xC2, 2, cand)
        if not any(isomorphic(g, h) for h in gs if h.n == 24):
            add(g)
            found = True
            break
    assert found
    return gs


def main():
    gs = build_all()
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1,
                18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15}
    by_order = {}
    for g in gs:
        by_order.setdefault(g.n, []).append(g)
    for n, cnt in expected.items():
        have = len(by_order.get(n, []))
        assert have == cnt, f"order {n}: have {have}, want {cnt}"
    # pairwise non-isomorphism
    for n, lst in by_order.items():
        for i in range(len(lst)):
            for j in range(i + 1, len(lst)):
                assert not isomorphic(lst[i], lst[j]), \
                    f"{lst[i].name} ~ {lst[j].name}"
    print(f"catalog: {len(gs)} groups verified")

    gs.sort(key=lambda g: (g.n, g.name))
    lines = []
    for g in gs:
        lines.append(f"group {g.name}")
        flat = " ".join(str(x) for row in g.table for x in row)
        lines.append(f"table: {g.n} {flat}")
    text = "\n".join(lines) + "\n"
    os.makedirs(os.path.join(ROOT, "data"), exist_ok=True)
    with open(os.path.join(ROOT, "data", "groups.cat"), "w") as f:
        f.write(text)

    os.makedirs(os.path.join(ROOT, "include", "socle"), exist_ok=True)
    with open(os.path.join(ROOT, "include", "socle", "catalog_data.hpp"), "w") as f:
        f.write("// Generated by scripts/make_catalog.py. Do not edit.\n")
        f.write("#pragma once\n\nnamespace socle {\n\n")
        f.write("inline const char* builtin_catalog_text() {\n")
        f.write("  return\n")
        for ln in text.split("\n"):
            f.write(f'    "{ln}\\n"\n')
        f.write("  ;\n}\n\n}  // namespace socle\n")
    print("wrote data/groups.cat and include/socle/catalog_data.hpp")


if __name__ == "__main__":
    sys.exit(main())
