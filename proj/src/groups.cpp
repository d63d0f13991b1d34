#include "socle/groups.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "socle/catalog_data.hpp"

namespace socle {

// ---------------------------------------------------------------------------
// FiniteGroup

GroupPtr FiniteGroup::from_table(std::string name, int n,
                                 std::vector<int> table) {
  if (n <= 0 || static_cast<int>(table.size()) != n * n)
    throw NotAGroupError("table size does not match the stated order");
  for (int v : table)
    if (v < 0 || v >= n) throw NotAGroupError("table entry out of range");
  auto mul = [&](int a, int b) { return table[a * n + b]; };
  // identity at 0
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw NotAGroupError("element 0 is not an identity (fails on " +
                           std::to_string(a) + ")");
  // inverses
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) inv[a] = b;
    if (inv[a] < 0)
      throw NotAGroupError("no inverse for element " + std::to_string(a));
  }
  // associativity, exhaustive at this scale
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroupError("associativity fails on (" + std::to_string(a) +
                               "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_ = std::move(table);
  g->inv_ = std::move(inv);
  return g;
}

namespace {

using Perm = std::vector<int>;

Perm parse_cycles(const std::string& s, int& degree) {
  // "(1,2,3)(4,5)" on 1-based points; degree grows to the max point seen
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in permutation", 1, int(i));
    size_t j = s.find(')', i);
    if (j == std::string::npos)
      throw ParseError("unbalanced cycle", 1, int(i));
    std::string body = s.substr(i + 1, j - i - 1);
    std::vector<int> cyc;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) cyc.push_back(std::stoi(tok));
    for (int v : cyc) degree = std::max(degree, v);
    cycles.push_back(cyc);
    i = j + 1;
  }
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k)
      p[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {  // (a·b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

GroupPtr FiniteGroup::from_permutations(std::string name,
                                        const std::vector<std::string>& gens) {
  // first pass finds the degree, second parses every generator at that degree
  int degree = 1;
  for (const auto& s : gens) parse_cycles(s, degree);
  std::vector<Perm> gp;
  for (const auto& s : gens) {
    int d = degree;
    gp.push_back(parse_cycles(s, d));
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> elems{id};
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gp) {
      Perm nx = perm_mul(elems[i], g);
      if (seen.insert(nx).second) elems.push_back(nx);
      if (elems.size() > 10000) throw NotAGroupError("closure too large");
    }
  // identity first, the rest in lexicographic order
  std::sort(elems.begin() + 1, elems.end());
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  int n = static_cast<int>(elems.size());
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index.at(perm_mul(elems[a], elems[b]));
  return from_table(std::move(name), n, std::move(table));
}

int FiniteGroup::pow(int a, long e) const {
  int r = 0, base = a;
  if (e < 0) {
    base = inverse(a);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// subgroups

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members.size() != o.members.size())
    return members.size() < o.members.size();
  return members < o.members;
}

Subgroup generated_subgroup(const GroupPtr& G, std::vector<int> gens) {
  std::set<int> s{0};
  std::vector<int> frontier{0};
  for (int g : gens)
    if (s.insert(g).second) frontier.push_back(g);
  for (size_t i = 0; i < frontier.size(); ++i)
    for (int g : gens) {
      int nx = G->mul(frontier[i], g);
      if (s.insert(nx).second) frontier.push_back(nx);
      nx = G->mul(frontier[i], G->inverse(g));
      if (s.insert(nx).second) frontier.push_back(nx);
    }
  Subgroup out;
  out.parent = G;
  out.members.assign(s.begin(), s.end());
  return out;
}

Subgroup make_subgroup(const GroupPtr& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup out;
  out.parent = G;
  out.members = members;
  if (!out.contains(0)) throw NotASubgroupError("missing identity");
  for (int a : members) {
    if (a < 0 || a >= G->order())
      throw NotASubgroupError("member out of range");
    if (!out.contains(G->inverse(a)))
      throw NotASubgroupError("not closed under inverse");
    for (int b : members)
      if (!out.contains(G->mul(a, b)))
        throw NotASubgroupError("not closed under multiplication");
  }
  return out;
}

Subgroup trivial_subgroup(const GroupPtr& G) {
  Subgroup s;
  s.parent = G;
  s.members = {0};
  return s;
}

Subgroup full_subgroup(const GroupPtr& G) {
  Subgroup s;
  s.parent = G;
  s.members.resize(G->order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

bool is_normal(const Subgroup& H) {
  const auto& G = H.parent;
  for (int g = 0; g < G->order(); ++g)
    for (int h : H.members)
      if (!H.contains(G->mul(G->mul(g, h), G->inverse(g)))) return false;
  return true;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  Subgroup out;
  out.parent = A.parent;
  std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(),
                        B.members.end(), std::back_inserter(out.members));
  return out;
}

int product_set_size(const Subgroup& A, const Subgroup& B) {
  std::set<int> s;
  for (int a : A.members)
    for (int b : B.members) s.insert(A.parent->mul(a, b));
  return static_cast<int>(s.size());
}

std::optional<Subgroup> subgroup_product(const Subgroup& A, const Subgroup& B) {
  std::set<int> s;
  for (int a : A.members)
    for (int b : B.members) s.insert(A.parent->mul(a, b));
  std::vector<int> v(s.begin(), s.end());
  try {
    return make_subgroup(A.parent, std::move(v));
  } catch (const NotASubgroupError&) {
    return std::nullopt;
  }
}

Subgroup normal_core(const Subgroup& H) {
  const auto& G = H.parent;
  Subgroup core = H;
  for (int g = 0; g < G->order(); ++g) {
    std::vector<int> conj;
    for (int h : H.members) conj.push_back(G->mul(G->mul(g, h), G->inverse(g)));
    std::sort(conj.begin(), conj.end());
    Subgroup cs;
    cs.parent = G;
    cs.members = std::move(conj);
    core = intersect(core, cs);
  }
  return core;
}

std::vector<Subgroup> subgroups(const GroupPtr& G, int order_bound) {
  if (G->order() > order_bound)
    throw OrderBoundExceededError("group order " + std::to_string(G->order()) +
                                  " exceeds the bound " +
                                  std::to_string(order_bound));
  static std::mutex mtx;
  static std::map<const FiniteGroup*, std::vector<Subgroup>> cache;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(G.get());
    if (it != cache.end()) return it->second;
  }
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members).second) all.push_back(std::move(s));
  };
  add(trivial_subgroup(G));
  for (int g = 0; g < G->order(); ++g) add(generated_subgroup(G, {g}));
  // pairwise joins until stable
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> gens = all[i].members;
      gens.insert(gens.end(), all[j].members.begin(), all[j].members.end());
      add(generated_subgroup(G, gens));
    }
  std::sort(all.begin(), all.end());
  {
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(G.get(), all);
  }
  return all;
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  int na = A->order(), nb = B->order(), n = na * nb;
  // (a,b) is encoded as a*|B| + b, so the identity (0,0) stays at index 0
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[(a1 * nb + b1) * n + (a2 * nb + b2)] =
              A->mul(a1, a2) * nb + B->mul(b1, b2);
  return FiniteGroup::from_table(A->name() + "x" + B->name(), n,
                                 std::move(table));
}

// ---------------------------------------------------------------------------
// Frattini machinery

namespace {

std::vector<Subgroup> index_p_normals(const GroupPtr& G, long p) {
  std::vector<Subgroup> out;
  if (G->order() % p != 0) return out;
  int target = G->order() / static_cast<int>(p);
  for (const auto& s : subgroups(G))
    if (s.size() == target && is_normal(s)) out.push_back(s);
  return out;
}

}  // namespace

std::pair<Subgroup, long> frattini_p(const GroupPtr& G, long p) {
  static std::mutex mtx;
  static std::map<std::pair<const FiniteGroup*, long>, std::pair<Subgroup, long>>
      cache;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find({G.get(), p});
    if (it != cache.end()) return it->second;
  }
  // generated by commutators and p-th powers
  std::vector<int> gens;
  for (int a = 0; a < G->order(); ++a) {
    gens.push_back(G->pow(a, p));
    for (int b = 0; b < G->order(); ++b)
      gens.push_back(G->mul(G->mul(a, b),
                            G->mul(G->inverse(a), G->inverse(b))));
  }
  Subgroup phi = generated_subgroup(G, gens);
  // cross-check against the defining intersection where full subgroup
  // enumeration is feasible
  if (G->order() <= 24) {
    Subgroup lit = full_subgroup(G);
    for (const auto& nsub : index_p_normals(G, p)) lit = intersect(lit, nsub);
    if (!(phi == lit))
      throw Error("internal: Frattini cross-check failed on " + G->name());
  }
  long quot = G->order() / phi.size();
  long rank = 0;
  while (quot > 1) {
    if (quot % p != 0)
      throw Error("internal: Frattini quotient is not a p-group");
    quot /= p;
    ++rank;
  }
  std::pair<Subgroup, long> out{phi, rank};
  {
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(std::make_pair(G.get(), p), out);
  }
  return out;
}

Subgroup relative_frattini(const GroupPtr& G, const Subgroup& H, long p) {
  make_subgroup(G, H.members);  // validates H ≤ G
  auto [phi, rank] = frattini_p(G, p);
  auto prod = subgroup_product(H, phi);
  if (!prod) throw Error("internal: H·Φ^p(G) is not a subgroup");
  // cross-check: intersection of index-p normal subgroups containing H
  Subgroup lit = full_subgroup(G);
  for (const auto& nsub : index_p_normals(G, p)) {
    bool contains_h = true;
    for (int h : H.members)
      if (!nsub.contains(h)) contains_h = false;
    if (contains_h) lit = intersect(lit, nsub);
  }
  if (!(*prod == lit))
    throw Error("internal: relative Frattini cross-check failed");
  return *prod;
}

SocleCheck verify_socle_equation(const GroupPtr& G, const Subgroup& N,
                                 const Subgroup& H, long p) {
  make_subgroup(G, N.members);
  make_subgroup(G, H.members);
  SocleCheck out;
  Subgroup core = normal_core(N);
  auto core_h = subgroup_product(core, H);  // core is normal: always a subgroup
  out.core_hypothesis = core_h && core_h->size() == G->order();
  out.nh_is_g = product_set_size(N, H) == G->order();

  out.lhs = relative_frattini(G, intersect(N, H), p);
  out.rhs = intersect(relative_frattini(G, N, p), relative_frattini(G, H, p));
  out.equation_holds = out.lhs == out.rhs;
  if (!out.equation_holds) {
    for (int g : out.rhs.members)
      if (!out.lhs.contains(g)) {
        out.witness = g;
        break;
      }
  }
  if (out.core_hypothesis) {
    if (!out.equation_holds)
      throw Error("internal: socle equation failed under the core hypothesis");
    out.verdict = SocleVerdict::Holds;
  } else if (out.nh_is_g) {
    out.verdict =
        out.equation_holds ? SocleVerdict::Holds : SocleVerdict::Fails;
  } else {
    out.verdict = SocleVerdict::HypothesisNotMet;
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalog

Catalog Catalog::from_text(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line, pending_name;
  while (std::getline(in, line)) {
    // trim
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("group ", 0) == 0) {
      pending_name = line.substr(6);
      continue;
    }
    if (line.rfind("table:", 0) == 0) {
      if (pending_name.empty())
        throw ParseError("table without a group name", 0, 0);
      std::istringstream ts(line.substr(6));
      int n;
      ts >> n;
      std::vector<int> table;
      int v;
      while (ts >> v) table.push_back(v);
      auto g = FiniteGroup::from_table(pending_name, n, std::move(table));
      cat.groups_[pending_name] = g;
      cat.names_.push_back(pending_name);
      pending_name.clear();
      continue;
    }
    if (line.rfind("perm:", 0) == 0) {
      if (pending_name.empty())
        throw ParseError("perm without a group name", 0, 0);
      std::istringstream ts(line.substr(5));
      int n;
      ts >> n;
      std::vector<std::string> gens;
      std::string tok;
      while (ts >> tok) gens.push_back(tok);
      auto g = FiniteGroup::from_permutations(pending_name, gens);
      if (g->order() != n)
        throw NotAGroupError("closure of " + pending_name + " has order " +
                             std::to_string(g->order()) + ", expected " +
                             std::to_string(n));
      cat.groups_[pending_name] = g;
      cat.names_.push_back(pending_name);
      pending_name.clear();
      continue;
    }
    throw ParseError("unrecognized catalog line: " + line, 0, 0);
  }
  return cat;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open catalog file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

const Catalog& Catalog::builtin() {
  static Catalog cat = from_text(builtin_catalog_text());
  return cat;
}

const GroupPtr& Catalog::get(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw Error("unknown group: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// explorer

std::vector<ExploreRecord> explore_counterexamples(const Catalog& cat,
                                                   int max_order, long p) {
  if (max_order > 64)
    throw OrderBoundExceededError("explorer bound is 64");
  std::vector<ExploreRecord> out;
  for (const auto& name : cat.names()) {
    const auto& G = cat.get(name);
    if (G->order() > max_order || G->order() <= 1) continue;
    auto subs = subgroups(G);
    for (const auto& N : subs)
      for (const auto& H : subs) {
        if (product_set_size(N, H) != G->order()) continue;
        Subgroup core = normal_core(N);
        auto core_h = subgroup_product(core, H);
        bool core_hyp = core_h && core_h->size() == G->order();
        if (core_hyp) continue;  // guaranteed by the proposition
        auto chk = verify_socle_equation(G, N, H, p);
        ExploreRecord rec;
        rec.group = name;
        rec.N = N;
        rec.H = H;
        rec.equation_holds = chk.equation_holds;
        rec.core_hypothesis = false;
        out.push_back(std::move(rec));
      }
  }
  return out;
}

}  // namespace socle
