#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/upoly.hpp"

namespace socle {

class FunctionFieldDescriptor;
using FunFieldPtr = std::shared_ptr<const FunctionFieldDescriptor>;

/// A rational function field over an exact constant field, with the variable
/// set split into T-variables and U-variables.
class FunctionFieldDescriptor
    : public std::enable_shared_from_this<FunctionFieldDescriptor> {
 public:
  static FunFieldPtr make(FieldPtr base, std::vector<std::string> t_vars,
                          std::vector<std::string> u_vars);

  const FieldPtr& base() const { return base_; }
  const std::vector<std::string>& t_vars() const { return t_vars_; }
  const std::vector<std::string>& u_vars() const { return u_vars_; }
  int nvars() const { return static_cast<int>(t_vars_.size() + u_vars_.size()); }
  int n_t() const { return static_cast<int>(t_vars_.size()); }
  const std::string& var_name(int i) const;
  int var_index(const std::string& name) const;  // -1 when absent
  bool is_t_var(int i) const { return i < n_t(); }
  bool same_as(const FunctionFieldDescriptor& o) const;
  std::string to_string() const;

 private:
  FunctionFieldDescriptor() = default;
  FieldPtr base_;
  std::vector<std::string> t_vars_, u_vars_;
};

using Exponents = std::vector<int>;

/// Graded lexicographic order, T-variables before U-variables.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial; no zero coefficients stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(FunFieldPtr parent) : parent_(std::move(parent)) {}

  static MultiPoly constant(const FunFieldPtr& p, const FieldElement& c);
  static MultiPoly from_int(const FunFieldPtr& p, long v);
  static MultiPoly variable(const FunFieldPtr& p, int var);
  static MultiPoly monomial(const FunFieldPtr& p, Exponents e,
                            const FieldElement& c);

  const FunFieldPtr& parent() const { return parent_; }
  const std::map<Exponents, FieldElement, GrlexLess>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;  // 0 for the zero polynomial
  int total_degree() const;             // -1 for 0
  int degree_in(int var) const;
  bool uses_var(int var) const;
  /// true if every variable used is a T-variable (constants count as pure)
  bool is_pure_t() const;
  bool is_pure_u() const;
  /// indices of variables with positive degree
  std::vector<int> support_vars() const;

  const std::pair<const Exponents, FieldElement>& leading() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const FieldElement& s) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  MultiPoly pow(int e) const;
  MultiPoly derivative(int var) const;

  /// Exact division; nullopt when the division is not exact.
  std::optional<MultiPoly> exact_div(const MultiPoly& d) const;
  /// Divide by the grlex-leading coefficient.
  MultiPoly monic() const;

  void add_term(const Exponents& e, const FieldElement& c);

  /// Conversion to a univariate polynomial when only variable `var` is used.
  UPoly to_upoly(int var) const;
  static MultiPoly from_upoly(const FunFieldPtr& p, const UPoly& f, int var);

  std::string to_string() const;

 private:
  FunFieldPtr parent_;
  std::map<Exponents, FieldElement, GrlexLess> terms_;
};

MultiPoly mp_gcd(const MultiPoly& a, const MultiPoly& b);

/// Reduced canonical fraction: gcd cancelled, denominator monic in grlex.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MultiPoly num, MultiPoly den);  // normalizes
  static RatFunc of(const MultiPoly& p);
  static RatFunc constant(const FunFieldPtr& f, const FieldElement& c);
  static RatFunc from_int(const FunFieldPtr& f, long v);
  static RatFunc variable(const FunFieldPtr& f, int var);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const FunFieldPtr& parent() const { return num_.parent(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  FieldElement constant_value() const;
  bool is_pure_t() const { return num_.is_pure_t() && den_.is_pure_t(); }
  bool is_pure_u() const { return num_.is_pure_u() && den_.is_pure_u(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  RatFunc inv() const;
  RatFunc pow(long e) const;

  std::string to_string() const;

 private:
  MultiPoly num_, den_;
};

inline RatFunc normalize(const MultiPoly& num, const MultiPoly& den) {
  return RatFunc(num, den);
}

enum class PrimeKind { PureT, PureU, Mixed };

struct ValuationResult {
  MultiPoly prime;
  std::optional<long> value;  // nullopt encodes +infinity (input 0)
  PrimeKind prime_kind = PrimeKind::Mixed;
  bool prime_certified = true;
  std::string certificate;
};

struct PrimeCertificate {
  bool certified = false;
  PrimeKind kind = PrimeKind::Mixed;
  std::string method;
};

/// Certify irreducibility of a multivariate polynomial: linear polynomials,
/// polynomials univariate in disguise, constants rejected. Anything else is
/// left uncertified.
PrimeCertificate certify_prime(const MultiPoly& q);

/// q-adic valuation of f. Throws NotIrreducibleError when q cannot be
/// certified irreducible, unless assert_irreducible is set.
ValuationResult valuation(const RatFunc& f, const MultiPoly& q,
                          bool assert_irreducible = false);
long poly_multiplicity(const MultiPoly& f, const MultiPoly& q);

/// Substitution of variables by rational functions; unmapped variables stay.
RatFunc substitute(const RatFunc& f,
                   const std::map<std::string, RatFunc>& bindings);

/// (x-y)^p == x^p - y^p, proved by exact arithmetic. Requires char = p.
bool freshman_check(const RatFunc& x, const RatFunc& y, const Int& p);

/// A coprime-basis ("gcd-free") factor refinement of the given polynomials,
/// with certification of each basis element. complete=false when some factor
/// could not be certified irreducible.
struct PrimeSupport {
  std::vector<MultiPoly> primes;            // certified irreducible, monic
  std::vector<PrimeKind> kinds;
  std::vector<MultiPoly> uncertified;       // leftover composite/unknown parts
  bool complete = true;
};
PrimeSupport prime_support(const std::vector<MultiPoly>& polys);

/// In characteristic p: the polynomial e with e^p == f, when it exists.
std::optional<MultiPoly> mp_pth_root(const MultiPoly& f);

}  // namespace socle
