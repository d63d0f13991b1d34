#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socle/errors.hpp"

namespace socle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Scalar arithmetic in the prime/rational base. In characteristic p the
/// values are integers in [0, p), in characteristic 0 ordinary rationals.
Rat sc_norm(const Int& ch, const Rat& a);
Rat sc_add(const Int& ch, const Rat& a, const Rat& b);
Rat sc_sub(const Int& ch, const Rat& a, const Rat& b);
Rat sc_mul(const Int& ch, const Rat& a, const Rat& b);
Rat sc_neg(const Int& ch, const Rat& a);
Rat sc_inv(const Int& ch, const Rat& a);

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// One step of a field tower: a generator with its monic minimal polynomial
/// over the level below. Coefficients are stored as flat coordinate vectors
/// over the prime/rational base with respect to the sub-tower's basis.
struct TowerStep {
  std::string symbol;
  int degree = 0;
  std::vector<std::vector<Rat>> minpoly;  // degree+1 entries, monic
  bool certified = true;
  std::string certificate;  // how irreducibility was established
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr parent, std::vector<Rat> coords);

  const FieldPtr& parent() const { return parent_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime/rational base.
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  FieldElement inv() const;
  FieldElement pow(const Int& e) const;

  std::string to_string() const;

 private:
  FieldPtr parent_;
  std::vector<Rat> coords_;
};

/// An exact computable field: the rationals or a prime field, extended by a
/// tower of certified-irreducible monic polynomials. Immutable after
/// construction; elements are canonical coordinate vectors over the base.
class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime_field(const Int& p);
  /// Q(eps_n); degree phi(n) over Q.
  static FieldPtr cyclotomic(long n);
  /// Internal: used by extend(); minpoly coefficients over *this.
  FieldPtr extended(TowerStep step) const;

  const Int& characteristic() const { return characteristic_; }
  long total_degree() const { return total_degree_; }
  const std::vector<TowerStep>& steps() const { return steps_; }
  bool fully_certified() const;
  bool is_finite() const { return characteristic_ != 0; }
  Int order() const;  // number of elements; finite fields only
  bool same_as(const FieldDescriptor& o) const;
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rat& r) const;
  FieldElement from_int(long v) const { return from_rational(Rat(v)); }
  /// Tower generator of step `level` (0-based), as an element of the full field.
  FieldElement generator(int level) const;
  FieldElement element(std::vector<Rat> coords) const;
  /// Generator lookup by symbol; nullopt when absent.
  std::optional<FieldElement> named_generator(const std::string& symbol) const;

  /// Enumerate all elements (finite fields of small order only).
  std::vector<FieldElement> all_elements() const;
  /// A multiplicative generator of F_q^* (small finite fields).
  FieldElement multiplicative_generator() const;

  // arithmetic engine on flat coordinate vectors
  std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> sub_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> mul_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> neg_vec(const std::vector<Rat>& a) const;
  std::vector<Rat> inv_vec(const std::vector<Rat>& a) const;

 private:
  friend class FieldElement;
  FieldDescriptor() = default;

  void mul_level(int level, const Rat* a, const Rat* b, Rat* out) const;
  void inv_level(int level, const Rat* a, Rat* out) const;

  Int characteristic_;  // 0 or p
  std::vector<TowerStep> steps_;
  long total_degree_ = 1;
  std::vector<long> level_dims_;  // level_dims_[k] = dim of level k over base
};

inline FieldElement make_prime_field_element(const FieldPtr& f, long v) {
  return f->from_int(v);
}

/// The field with p elements; NotPrimeError if p is composite.
FieldPtr make_prime_field(const Int& p);
/// Q(eps_n).
FieldPtr make_cyclotomic(long n);
/// F_{p^k} as F_p extended by a certified irreducible polynomial of degree k,
/// with named generator `symbol`.
FieldPtr make_finite_field(const Int& p, int k, const std::string& symbol);

/// Dimension and basis of the smallest unital subalgebra containing `gens`,
/// over the prime/rational base of A.
std::pair<long, std::vector<FieldElement>> span_closure(
    const FieldPtr& A, const std::vector<FieldElement>& gens);

}  // namespace socle
