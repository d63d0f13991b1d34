#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/multipoly.hpp"

namespace socle {

enum class ClassKind { Kummer, ArtinSchreier };
enum class SysStatus { CertifiedIndependent, DependenceWitness, Inconclusive };

/// A family of multiplicative classes in F*/(F*)^p (Kummer) or additive
/// classes in F/℘(F) (Artin-Schreier), together with the valuation-matrix
/// certificate that backs the computed rank.
struct ClassSystem {
  ClassKind kind = ClassKind::Kummer;
  Int p;
  FunFieldPtr field;
  std::vector<RatFunc> elements;
  bool relative = false;

  std::vector<MultiPoly> primes;  // certified column primes (mixed-only when relative)
  std::vector<PrimeKind> prime_kinds;
  std::vector<std::vector<long>> valuation_matrix;  // rows follow elements
  bool support_complete = true;

  long rank = 0;  // certified exact rank, or certified lower bound when inconclusive
  SysStatus status = SysStatus::Inconclusive;
  std::vector<long> witness;          // dependence vector over F_p, empty otherwise
  std::optional<RatFunc> witness_alpha;  // verified p-th root / ℘-preimage part
  std::string note;
};

/// Verdict of the membership test b ∈ ⟨A⟩·(F*)^p.
enum class MemberVerdict { Member, NonMember, Inconclusive };
struct MembershipResult {
  MemberVerdict verdict = MemberVerdict::Inconclusive;
  std::vector<long> nu;               // exponents on A for member verdicts
  std::optional<RatFunc> alpha;       // b = (∏ a_i^{nu_i})·alpha^p, verified
  std::optional<MultiPoly> witness_prime;  // unsolvable valuation congruence
  std::string note;
};

/// Result of solving α^p − α = b over a finite-characteristic function field.
struct WpObstruction {
  std::string reason;            // "pole-order" | "inconsistent-system"
  std::optional<MultiPoly> prime;
  long pole_order = 0;
  // Farkas-style certificate for inconsistent linear systems: a row vector y
  // with y^T·M = 0 but y^T·rhs ≠ 0, over F_p.
  std::vector<long> farkas;
};
struct WpResult {
  std::optional<RatFunc> alpha;
  std::optional<WpObstruction> obstruction;
  bool solved() const { return alpha.has_value(); }
};

/// An elementary abelian extension built from a certified-independent system.
struct ExtensionDescriptor {
  FunFieldPtr base;
  ClassKind kind = ClassKind::Kummer;
  long rank = 0;
  std::vector<RatFunc> generators;
  std::vector<std::string> defining_polys;  // X^p - a_i or X^p - X - a_i
  // action[i][j] = k: canonical generator σ_i sends root_j to ε_p^k·root_j
  // (Kummer) or root_j + k (Artin-Schreier).
  std::vector<std::vector<long>> galois_action;
};

/// True when the base field contains a primitive p-th root of unity.
bool has_eps_p(const FieldPtr& base, const Int& p);

ClassSystem kummer_rank(const std::vector<RatFunc>& elems, const Int& p);
/// Rank modulo C(T)*·C(U)*·(F*)^p; valuation matrix restricted to mixed primes.
ClassSystem kummer_relative_rank(const std::vector<RatFunc>& elems, const Int& p);
ClassSystem as_rank(const std::vector<RatFunc>& elems, const Int& p);
/// Rank modulo C(T)+C(U)+℘(F) via the valuation −1 obstruction.
ClassSystem as_relative_rank(const std::vector<RatFunc>& elems, const Int& p);

WpResult wp_solve(const RatFunc& b, const Int& p);

MembershipResult pth_root_membership(const RatFunc& b,
                                     const std::vector<RatFunc>& A,
                                     const Int& p);

ExtensionDescriptor build_cpn_extension(const ClassSystem& sys);

}  // namespace socle
