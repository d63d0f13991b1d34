#pragma once

// Independent brute-force oracles used to cross-check the certified ranks.
// These deliberately avoid the valuation-matrix linear algebra of the library:
// multiplicative classes are decided by squarefree-multiplicity p-th-power
// tests plus constant exhaustion, additive classes by exhaustive search over
// candidate preimage numerators.

#include <optional>
#include <vector>

#include "socle/kummer.hpp"

namespace socle::oracles {

inline bool oracle_is_pth_power(const RatFunc& f, long p) {
  if (f.is_zero()) return false;
  if (f.is_constant()) {
    for (const auto& d : f.parent()->base()->all_elements())
      if (!d.is_zero() && RatFunc::constant(f.parent(), d).pow(p) == f)
        return true;
    return false;
  }
  // f = num/den with gcd 1; f = g^p iff num and den are p-th powers up to
  // constants that are themselves p-th powers
  auto part_root = [&](const MultiPoly& m) -> std::optional<MultiPoly> {
    MultiPoly cur = m.monic();
    MultiPoly root = MultiPoly::from_int(f.parent(), 1);
    auto sup = prime_support({cur});
    if (!sup.complete) return std::nullopt;
    for (const auto& q : sup.primes) {
      long k = poly_multiplicity(cur, q);
      if (k % p != 0) return std::nullopt;
      root = root * q.pow(static_cast<int>(k / p));
    }
    if (*cur.exact_div(root.pow(static_cast<int>(p))) !=
        MultiPoly::from_int(f.parent(), 1))
      return std::nullopt;
    return root;
  };
  auto rn = part_root(f.num());
  auto rd = part_root(f.den());
  if (!rn || !rd) return false;
  RatFunc g(*rn, *rd);
  RatFunc c = f / g.pow(p);
  return c.is_constant() && oracle_is_pth_power(c, p);
}

inline bool oracle_member(const RatFunc& b, const std::vector<RatFunc>& A,
                          long p) {
  long combos = 1;
  for (size_t i = 0; i < A.size(); ++i) combos *= p;
  for (long mask = 0; mask < combos; ++mask) {
    RatFunc r = b;
    long rem = mask;
    for (size_t i = 0; i < A.size(); ++i) {
      r = r / A[i].pow(rem % p);
      rem /= p;
    }
    if (oracle_is_pth_power(r, p)) return true;
  }
  return false;
}

inline long oracle_kummer_rank(const std::vector<RatFunc>& A, long p) {
  // rank = log_p of the subgroup generated by the classes
  long combos = 1;
  for (size_t i = 0; i < A.size(); ++i) combos *= p;
  long trivial = 0;
  for (long mask = 0; mask < combos; ++mask) {
    RatFunc r = RatFunc::from_int(A[0].parent(), 1);
    long rem = mask;
    for (size_t i = 0; i < A.size(); ++i) {
      r = r * A[i].pow(rem % p);
      rem /= p;
    }
    if (oracle_is_pth_power(r, p)) ++trivial;
  }
  long rank = 0, size = combos / trivial;
  while (size > 1) {
    size /= p;
    ++rank;
  }
  return rank;
}

/// Exhaustive preimage search for alpha^p - alpha = b over F_q(t): the
/// denominator of alpha is forced by the pole structure, the numerator is
/// enumerated coefficient by coefficient.
inline bool oracle_wp_preimage(const RatFunc& b, long p) {
  if (b.is_zero()) return true;
  auto K = b.parent();
  auto base = K->base();
  if (b.is_constant()) {
    for (const auto& c : base->all_elements())
      if (c.pow(Int(p)) - c == b.constant_value()) return true;
    return false;
  }
  // poles of alpha have order k exactly when b has a pole of order p*k there
  MultiPoly E = MultiPoly::from_int(K, 1);
  auto sup = prime_support({b.den()});
  if (!sup.complete) throw Error("oracle: incomplete support");
  for (const auto& q : sup.primes) {
    long k = poly_multiplicity(b.den(), q);
    if (k % p != 0) return false;
    E = E * q.pow(static_cast<int>(k / p));
  }
  long bound = std::max<long>(E.degree_in(0),
                              (b.num().degree_in(0) + p - 1) / p);
  auto elems = base->all_elements();
  long count = 1;
  for (long i = 0; i <= bound; ++i) {
    count *= static_cast<long>(elems.size());
    if (count > 2000000) throw Error("oracle: search space too large");
  }
  RatFunc den = RatFunc(E, MultiPoly::from_int(K, 1));
  for (long mask = 0; mask < count; ++mask) {
    long rem = mask;
    MultiPoly N(K);
    for (long i = 0; i <= bound; ++i) {
      const auto& c = elems[rem % elems.size()];
      rem /= static_cast<long>(elems.size());
      if (!c.is_zero()) N.add_term({static_cast<int>(i)}, c);
    }
    RatFunc alpha = RatFunc(N, MultiPoly::from_int(K, 1)) / den;
    if (alpha.pow(p) - alpha == b) return true;
  }
  return false;
}

inline long oracle_as_rank(const std::vector<RatFunc>& A, long p) {
  long combos = 1;
  for (size_t i = 0; i < A.size(); ++i) combos *= p;
  long trivial = 0;
  for (long mask = 0; mask < combos; ++mask) {
    RatFunc r = RatFunc::from_int(A[0].parent(), 0);
    long rem = mask;
    for (size_t i = 0; i < A.size(); ++i) {
      r = r + A[i] * RatFunc::from_int(A[0].parent(), rem % p);
      rem /= p;
    }
    if (oracle_wp_preimage(r, p)) ++trivial;
  }
  long rank = 0, size = combos / trivial;
  while (size > 1) {
    size /= p;
    ++rank;
  }
  return rank;
}

}  // namespace socle::oracles
