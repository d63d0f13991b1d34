#pragma once

#include <utility>
#include <vector>

#include "socle/field.hpp"

namespace socle {

/// Dense univariate polynomial over an exact field.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}
  UPoly(FieldPtr field, std::vector<FieldElement> coeffs);

  static UPoly from_rationals(const FieldPtr& f, const std::vector<Rat>& cs);
  static UPoly x(const FieldPtr& f);  // the monomial X
  static UPoly constant(const FieldPtr& f, const FieldElement& c);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const FieldElement& lead() const { return c_.back(); }
  FieldElement coeff(int i) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const FieldElement& s) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly mod(const UPoly& d) const { return divmod(d).second; }
  UPoly monic() const;
  UPoly derivative() const;
  UPoly pow_mod(const Int& e, const UPoly& m) const;
  UPoly shift_pow(int k) const;  // multiply by X^k
  FieldElement eval(const FieldElement& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<FieldElement> c_;  // c_[i] coeff of X^i, no trailing zeros
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);  // monic gcd

/// Square-free decomposition; works in any characteristic (taking p-th roots
/// of coefficients over finite fields when needed). Returns (factor, mult)
/// with factors monic, square-free and pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Full factorization into monic irreducibles over a finite base field.
/// UnsupportedBaseError over infinite fields.
std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& f);

struct IrredCertificate {
  bool certified = false;
  bool irreducible = false;  // meaningful only when certified
  std::string method;
  UPoly counterexample_factor;  // a proper factor when reducible and found
};

/// Tries to certify (ir)reducibility: finite-field factorization; root search
/// for degree <= 3; rational-root and Eisenstein tests over Q; the
/// coprime-degree argument over towers of Q for polynomials with rational
/// coefficients. Leaves certified=false when no method applies.
IrredCertificate certify_irreducible(const UPoly& f);

/// Extend F by a monic irreducible polynomial. Throws ReducibleError when a
/// factorization is found, UncertifiedIrreducibilityError when irreducibility
/// cannot be certified and allow_asserted is false.
FieldPtr extend_field(const FieldPtr& F, const UPoly& minpoly,
                      const std::string& symbol, bool allow_asserted = false);

/// Coefficients of the n-th cyclotomic polynomial over Q.
std::vector<Rat> cyclotomic_coeffs(long n);

long euler_phi(long n);

}  // namespace socle
