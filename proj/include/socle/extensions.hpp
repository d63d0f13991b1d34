#pragma once

#include <optional>
#include <vector>

#include "socle/field.hpp"
#include "socle/groups.hpp"
#include "socle/upoly.hpp"

namespace socle {

/// A verified action of a finite group on a finite tower by field
/// automorphisms fixing the rational/prime base. Each element's map is a
/// base-linear matrix on the flat coordinates.
class GaloisAction {
 public:
  /// `gen_images[k]` = (group element g_k, images of every tower generator of
  /// `ambient` under σ_{g_k}). The action extends through the group by
  /// σ_{ab} = σ_a∘σ_b; inconsistent or non-automorphism data throws
  /// InvalidRelationError.
  static GaloisAction build(
      GroupPtr group, FieldPtr ambient,
      const std::vector<std::pair<int, std::vector<FieldElement>>>& gen_images);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& ambient() const { return ambient_; }
  FieldElement apply(int g, const FieldElement& e) const;

  /// Elements acting as the identity on every given field element.
  Subgroup fixing_subgroup(const std::vector<FieldElement>& elems) const;

 private:
  GaloisAction() = default;
  GroupPtr group_;
  FieldPtr ambient_;
  // maps_[g] is a dim×dim matrix (rows = images of basis vectors), row-major
  std::vector<std::vector<Rat>> maps_;
  long dim_ = 0;
};

struct ExtensionInstance {
  FieldPtr ambient;
  std::vector<FieldElement> sub1_gens, sub2_gens;
  std::optional<GaloisAction> galois;
};

struct DisjointnessReport {
  long dim1 = 0, dim2 = 0, dim_compositum = 0;
  bool linearly_disjoint = false;
  /// The G = H₁H₂ criterion, when Galois data is available; must agree.
  std::optional<bool> group_criterion;
};
DisjointnessReport disjointness_check(const ExtensionInstance& inst);

struct SocleSubgroup {
  Subgroup phi;    // Φ^p(G,H); its fixed field is the p-socle
  long rank = 0;   // G/Φ^p(G,H) ≅ C_p^rank
};
SocleSubgroup socle_subgroup(const GroupPtr& G, const Subgroup& H, long p);

/// Distinct conjugates θ_1,…,θ_n in a common overfield.
struct ConjugateSet {
  std::vector<FieldElement> theta;
};

/// Solve σ_i(λ) = Σ_k ℓ_k·θ_i^k exactly. SingularSystemError when conjugates
/// repeat.
std::vector<FieldElement> vandermonde_coordinates(
    const std::vector<FieldElement>& lambda_images, const ConjugateSet& conj);

/// From a verified relation Σ f_i·φ^i = 0 (f_n ≠ 0), extract an algebraic
/// dependence Σ a_i·α^i = 0 for α = the leading coefficient of φ, by matching
/// top-degree terms. InvalidRelationError when the relation fails
/// re-verification or f_n = 0.
std::vector<FieldElement> leading_coeff_certificate(
    const UPoly& phi, const std::vector<UPoly>& relation);

}  // namespace socle
