#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/errors.hpp"

namespace socle {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table; element 0 is the identity.
/// The table is verified exhaustively on construction.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// `table` is row-major: table[a*n + b] = a·b. Throws NotAGroupError with a
  /// failing triple in the message.
  static GroupPtr from_table(std::string name, int n, std::vector<int> table);
  /// Generators as products of cycles on 1-based points, e.g.
  /// "(1,2,3,4,5) (2,3,5,4)". The closure is expanded to a table.
  static GroupPtr from_permutations(std::string name,
                                    const std::vector<std::string>& gens);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int pow(int a, long e) const;
  const std::vector<int>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  std::string name_;
  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
};

/// A verified subgroup: sorted member indices, closed, containing 0.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted

  bool contains(int g) const;
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const;
};

/// Subgroup generated by a set of elements.
Subgroup generated_subgroup(const GroupPtr& G, std::vector<int> gens);
/// Throws NotASubgroupError when the member set is not a subgroup of G.
Subgroup make_subgroup(const GroupPtr& G, std::vector<int> members);
Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup full_subgroup(const GroupPtr& G);
bool is_normal(const Subgroup& H);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// The set product A·B; nullopt when it is not a subgroup.
std::optional<Subgroup> subgroup_product(const Subgroup& A, const Subgroup& B);
/// |A·B| as a plain set product.
int product_set_size(const Subgroup& A, const Subgroup& B);
/// Intersection of all conjugates of H: the largest normal subgroup inside H.
Subgroup normal_core(const Subgroup& H);

/// The direct product A × B as a verified table; (a,b) ↦ a·|B| + b.
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);

/// All subgroups, deterministically ordered by (size, members).
std::vector<Subgroup> subgroups(const GroupPtr& G, int order_bound = 64);

/// Φ^p(G) with the rank n of the elementary abelian quotient G/Φ^p(G) ≅ C_p^n.
/// Computed from commutators and p-th powers, cross-checked against the
/// literal intersection of index-p normal subgroups whenever full subgroup
/// enumeration is feasible (order ≤ 24).
std::pair<Subgroup, long> frattini_p(const GroupPtr& G, long p);

/// Φ^p(G,H) = H·Φ^p(G) = intersection of index-p normal subgroups ⊇ H.
Subgroup relative_frattini(const GroupPtr& G, const Subgroup& H, long p);

enum class SocleVerdict { Holds, Fails, HypothesisNotMet };
struct SocleCheck {
  SocleVerdict verdict = SocleVerdict::HypothesisNotMet;
  bool core_hypothesis = false;  // core(N)·H = G
  bool nh_is_g = false;          // |N·H| = |G| as a set product
  bool equation_holds = false;   // Φ^p(G,N∩H) = Φ^p(G,N) ∩ Φ^p(G,H)
  Subgroup lhs, rhs;
  std::optional<int> witness;    // element of rhs \ lhs when the equation fails
};
SocleCheck verify_socle_equation(const GroupPtr& G, const Subgroup& N,
                                 const Subgroup& H, long p);

struct ExploreRecord {
  std::string group;
  Subgroup N, H;
  bool equation_holds = false;
  bool core_hypothesis = false;
};

/// A named collection of verified groups.
class Catalog {
 public:
  /// The built-in catalog: all groups of order ≤ 24 plus selected others.
  static const Catalog& builtin();
  static Catalog from_text(const std::string& text);
  static Catalog from_file(const std::string& path);

  const GroupPtr& get(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::map<std::string, GroupPtr> groups_;
  std::vector<std::string> names_;
};

/// Scan all catalog groups of order ≤ max_order for pairs with N·H = G but
/// core(N)·H ≠ G, and evaluate the socle equation on each.
std::vector<ExploreRecord> explore_counterexamples(const Catalog& cat,
                                                   int max_order, long p);

}  // namespace socle
