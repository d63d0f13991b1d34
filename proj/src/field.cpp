#include "socle/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace socle {

namespace {

Int mod_pos(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

Int mod_inverse(const Int& a, const Int& p) {
  Int t = 0, newt = 1, r = p, newr = mod_pos(a, p);
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DivisionByZeroError("element not invertible mod p");
  return mod_pos(t, p);
}

}  // namespace

Rat sc_norm(const Int& ch, const Rat& a) {
  if (ch == 0) return a;
  Int num = numerator(a), den = denominator(a);
  Int v = mod_pos(num, ch);
  if (den != 1) v = mod_pos(v * mod_inverse(den, ch), ch);
  return Rat(v);
}

Rat sc_add(const Int& ch, const Rat& a, const Rat& b) { return sc_norm(ch, a + b); }
Rat sc_sub(const Int& ch, const Rat& a, const Rat& b) { return sc_norm(ch, a - b); }
Rat sc_mul(const Int& ch, const Rat& a, const Rat& b) { return sc_norm(ch, a * b); }
Rat sc_neg(const Int& ch, const Rat& a) { return sc_norm(ch, -a); }

Rat sc_inv(const Int& ch, const Rat& a) {
  if (a == 0) throw DivisionByZeroError("inverse of zero");
  if (ch == 0) return Rat(1) / a;
  return Rat(mod_inverse(numerator(a), ch));
}

// ---------------------------------------------------------------------------
// FieldDescriptor construction

FieldPtr FieldDescriptor::rationals() {
  auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  f->characteristic_ = 0;
  f->total_degree_ = 1;
  f->level_dims_ = {1};
  return f;
}

FieldPtr FieldDescriptor::prime_field(const Int& p) {
  auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  f->characteristic_ = p;
  f->total_degree_ = 1;
  f->level_dims_ = {1};
  return f;
}

FieldPtr make_prime_field(const Int& p) {
  if (p < 2) throw NotPrimeError("p must be >= 2");
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw NotPrimeError("not prime: " + p.str());
  return FieldDescriptor::prime_field(p);
}

FieldPtr FieldDescriptor::extended(TowerStep step) const {
  auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  f->characteristic_ = characteristic_;
  f->steps_ = steps_;
  f->steps_.push_back(std::move(step));
  f->total_degree_ = total_degree_ * f->steps_.back().degree;
  f->level_dims_ = level_dims_;
  f->level_dims_.push_back(f->total_degree_);
  return f;
}

bool FieldDescriptor::fully_certified() const {
  for (const auto& s : steps_)
    if (!s.certified) return false;
  return true;
}

Int FieldDescriptor::order() const {
  if (characteristic_ == 0) throw Error("infinite field has no order");
  Int q = 1;
  for (long i = 0; i < total_degree_; ++i) q *= characteristic_;
  return q;
}

bool FieldDescriptor::same_as(const FieldDescriptor& o) const {
  if (this == &o) return true;
  if (characteristic_ != o.characteristic_) return false;
  if (steps_.size() != o.steps_.size()) return false;
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].degree != o.steps_[i].degree) return false;
    if (steps_[i].minpoly != o.steps_[i].minpoly) return false;
  }
  return true;
}

std::string FieldDescriptor::to_string() const {
  std::ostringstream os;
  if (characteristic_ == 0)
    os << "Q";
  else
    os << "Fp(" << characteristic_ << ")";
  for (const auto& s : steps_)
    os << "[" << s.symbol << ":deg" << s.degree << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// element factories

FieldElement::FieldElement(FieldPtr parent, std::vector<Rat> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  const Int& ch = parent_->characteristic();
  for (auto& c : coords_) c = sc_norm(ch, c);
}

FieldElement FieldDescriptor::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rat>(total_degree_, Rat(0)));
}

FieldElement FieldDescriptor::one() const { return from_rational(Rat(1)); }

FieldElement FieldDescriptor::from_rational(const Rat& r) const {
  std::vector<Rat> c(total_degree_, Rat(0));
  c[0] = sc_norm(characteristic_, r);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldDescriptor::generator(int level) const {
  if (level < 0 || level >= static_cast<int>(steps_.size()))
    throw Error("no such tower level");
  std::vector<Rat> c(total_degree_, Rat(0));
  // generator g_level has exponent vector e_level = 1: index = D(level)
  c[level_dims_[level]] = Rat(1);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldDescriptor::element(std::vector<Rat> coords) const {
  if (static_cast<long>(coords.size()) != total_degree_)
    throw Error("coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}

std::optional<FieldElement> FieldDescriptor::named_generator(
    const std::string& symbol) const {
  for (size_t i = 0; i < steps_.size(); ++i)
    if (steps_[i].symbol == symbol) return generator(static_cast<int>(i));
  return std::nullopt;
}

std::vector<FieldElement> FieldDescriptor::all_elements() const {
  if (characteristic_ == 0) throw Error("cannot enumerate an infinite field");
  Int q = order();
  if (q > 4096) throw Error("field too large to enumerate");
  long n = static_cast<long>(q);
  long p = static_cast<long>(characteristic_);
  std::vector<FieldElement> out;
  out.reserve(n);
  std::vector<Rat> c(total_degree_, Rat(0));
  for (long v = 0; v < n; ++v) {
    long x = v;
    for (long i = 0; i < total_degree_; ++i) {
      c[i] = Rat(x % p);
      x /= p;
    }
    out.push_back(FieldElement(shared_from_this(), c));
  }
  return out;
}

FieldElement FieldDescriptor::multiplicative_generator() const {
  Int q = order();
  Int m = q - 1;
  // prime factors of q-1
  std::vector<Int> primes;
  Int mm = m;
  for (Int d = 2; d * d <= mm; ++d) {
    if (mm % d == 0) {
      primes.push_back(d);
      while (mm % d == 0) mm /= d;
    }
  }
  if (mm > 1) primes.push_back(mm);
  for (const auto& e : all_elements()) {
    if (e.is_zero()) continue;
    bool ok = true;
    for (const auto& pr : primes) {
      if (e.pow(m / pr).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  throw Error("no multiplicative generator found");
}

// ---------------------------------------------------------------------------
// vector arithmetic

std::vector<Rat> FieldDescriptor::add_vec(const std::vector<Rat>& a,
                                          const std::vector<Rat>& b) const {
  std::vector<Rat> out(total_degree_);
  for (long i = 0; i < total_degree_; ++i) out[i] = sc_add(characteristic_, a[i], b[i]);
  return out;
}

std::vector<Rat> FieldDescriptor::sub_vec(const std::vector<Rat>& a,
                                          const std::vector<Rat>& b) const {
  std::vector<Rat> out(total_degree_);
  for (long i = 0; i < total_degree_; ++i) out[i] = sc_sub(characteristic_, a[i], b[i]);
  return out;
}

std::vector<Rat> FieldDescriptor::neg_vec(const std::vector<Rat>& a) const {
  std::vector<Rat> out(total_degree_);
  for (long i = 0; i < total_degree_; ++i) out[i] = sc_neg(characteristic_, a[i]);
  return out;
}

std::vector<Rat> FieldDescriptor::mul_vec(const std::vector<Rat>& a,
                                          const std::vector<Rat>& b) const {
  std::vector<Rat> out(total_degree_, Rat(0));
  mul_level(static_cast<int>(steps_.size()), a.data(), b.data(), out.data());
  return out;
}

std::vector<Rat> FieldDescriptor::inv_vec(const std::vector<Rat>& a) const {
  bool zero = true;
  for (const auto& c : a)
    if (c != 0) { zero = false; break; }
  if (zero) throw DivisionByZeroError("inverse of zero field element");
  std::vector<Rat> out(total_degree_, Rat(0));
  inv_level(static_cast<int>(steps_.size()), a.data(), out.data());
  return out;
}

void FieldDescriptor::mul_level(int level, const Rat* a, const Rat* b,
                                Rat* out) const {
  if (level == 0) {
    out[0] = sc_mul(characteristic_, a[0], b[0]);
    return;
  }
  const TowerStep& st = steps_[level - 1];
  long m = level_dims_[level - 1];
  int d = st.degree;
  // schoolbook product of two degree<d polynomials over level-1
  std::vector<Rat> tmp(static_cast<size_t>(2 * d - 1) * m, Rat(0));
  std::vector<Rat> prod(m);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::fill(prod.begin(), prod.end(), Rat(0));
      mul_level(level - 1, a + i * m, b + j * m, prod.data());
      Rat* dst = tmp.data() + static_cast<size_t>(i + j) * m;
      for (long k = 0; k < m; ++k) dst[k] = sc_add(characteristic_, dst[k], prod[k]);
    }
  }
  // reduce modulo the monic minimal polynomial
  for (int deg = 2 * d - 2; deg >= d; --deg) {
    Rat* c = tmp.data() + static_cast<size_t>(deg) * m;
    bool nz = false;
    for (long k = 0; k < m; ++k)
      if (c[k] != 0) { nz = true; break; }
    if (!nz) continue;
    for (int i = 0; i < d; ++i) {
      std::fill(prod.begin(), prod.end(), Rat(0));
      mul_level(level - 1, c, st.minpoly[i].data(), prod.data());
      Rat* dst = tmp.data() + static_cast<size_t>(deg - d + i) * m;
      for (long k = 0; k < m; ++k) dst[k] = sc_sub(characteristic_, dst[k], prod[k]);
    }
    for (long k = 0; k < m; ++k) c[k] = Rat(0);
  }
  for (long k = 0; k < static_cast<long>(d) * m; ++k) out[k] = tmp[k];
}

namespace {

// dense polynomial over a tower level, for the extended-Euclid inverse
using Blocks = std::vector<std::vector<Rat>>;

bool blocks_zero(const Blocks& b) {
  for (const auto& blk : b)
    for (const auto& c : blk)
      if (c != 0) return false;
  return true;
}

void strip(Blocks& b) {
  auto nz = [](const std::vector<Rat>& blk) {
    for (const auto& c : blk)
      if (c != 0) return true;
    return false;
  };
  while (!b.empty() && !nz(b.back())) b.pop_back();
}

}  // namespace

void FieldDescriptor::inv_level(int level, const Rat* a, Rat* out) const {
  if (level == 0) {
    out[0] = sc_inv(characteristic_, a[0]);
    return;
  }
  const TowerStep& st = steps_[level - 1];
  long m = level_dims_[level - 1];
  int d = st.degree;

  auto bmul = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::vector<Rat> r(m, Rat(0));
    mul_level(level - 1, x.data(), y.data(), r.data());
    return r;
  };
  auto binv = [&](const std::vector<Rat>& x) {
    std::vector<Rat> r(m, Rat(0));
    inv_level(level - 1, x.data(), r.data());
    return r;
  };
  auto bsub = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::vector<Rat> r(m);
    for (long k = 0; k < m; ++k) r[k] = sc_sub(characteristic_, x[k], y[k]);
    return r;
  };

  auto poly_mul = [&](const Blocks& x, const Blocks& y) {
    Blocks r(x.size() + y.size() ? x.size() + y.size() - 1 : 0,
             std::vector<Rat>(m, Rat(0)));
    if (x.empty() || y.empty()) return Blocks{};
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) {
        auto p = bmul(x[i], y[j]);
        for (long k = 0; k < m; ++k)
          r[i + j][k] = sc_add(characteristic_, r[i + j][k], p[k]);
      }
    strip(r);
    return r;
  };
  auto poly_sub = [&](const Blocks& x, const Blocks& y) {
    Blocks r = x;
    if (r.size() < y.size()) r.resize(y.size(), std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < y.size(); ++i) r[i] = bsub(r[i], y[i]);
    strip(r);
    return r;
  };
  // division with remainder; divisor must be nonzero
  auto poly_divmod = [&](Blocks x, const Blocks& y) {
    Blocks q;
    auto ylead_inv = binv(y.back());
    while (x.size() >= y.size() && !x.empty()) {
      size_t shift = x.size() - y.size();
      auto factor = bmul(x.back(), ylead_inv);
      if (q.size() < shift + 1) q.resize(shift + 1, std::vector<Rat>(m, Rat(0)));
      for (long k = 0; k < m; ++k)
        q[shift][k] = sc_add(characteristic_, q[shift][k], factor[k]);
      for (size_t i = 0; i < y.size(); ++i) {
        auto p = bmul(factor, y[i]);
        x[shift + i] = bsub(x[shift + i], p);
      }
      strip(x);
    }
    return std::make_pair(q, x);
  };

  // extended Euclid: s*a + t*minpoly = gcd (a unit since minpoly irreducible)
  Blocks r0;  // minpoly
  for (int i = 0; i <= d; ++i) r0.push_back(st.minpoly[i]);
  Blocks r1;  // a as polynomial in the generator
  for (int i = 0; i < d; ++i)
    r1.emplace_back(a + static_cast<size_t>(i) * m,
                    a + static_cast<size_t>(i + 1) * m);
  strip(r1);
  Blocks s0{}, s1{std::vector<Rat>(m, Rat(0))};
  s1[0][0] = Rat(1);
  // invariant: s_i * a == r_i  (mod minpoly)
  while (!(r1.size() == 1)) {
    if (r1.empty())
      throw DivisionByZeroError("element not invertible (minpoly reducible?)");
    auto [q, r2] = poly_divmod(r0, r1);
    auto s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant of the lower level; scale s1 by its inverse
  auto c_inv = binv(r1[0]);
  Blocks res;
  for (auto& blk : s1) res.push_back(bmul(blk, c_inv));
  // reduce modulo minpoly to degree < d
  if (res.size() >= static_cast<size_t>(d + 1)) {
    Blocks mp;
    for (int i = 0; i <= d; ++i) mp.push_back(st.minpoly[i]);
    res = poly_divmod(res, mp).second;
  }
  for (int i = 0; i < d; ++i)
    for (long k = 0; k < m; ++k)
      out[static_cast<size_t>(i) * m + k] =
          (i < static_cast<int>(res.size())) ? res[i][k] : Rat(0);
}

// ---------------------------------------------------------------------------
// FieldElement operations

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::is_constant() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat FieldElement::constant_value() const {
  if (!is_constant()) throw Error("element is not a base-field constant");
  return coords_[0];
}

namespace {
void check_parents(const FieldElement& a, const FieldElement& b) {
  if (!a.parent() || !b.parent() || !a.parent()->same_as(*b.parent()))
    throw ParentMismatchError("field elements have different parents");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_parents(*this, o);
  return FieldElement(parent_, parent_->add_vec(coords_, o.coords_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_parents(*this, o);
  return FieldElement(parent_, parent_->sub_vec(coords_, o.coords_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_parents(*this, o);
  return FieldElement(parent_, parent_->mul_vec(coords_, o.coords_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_parents(*this, o);
  return *this * o.inv();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(parent_, parent_->neg_vec(coords_));
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_parents(*this, o);
  return coords_ == o.coords_;
}

FieldElement FieldElement::inv() const {
  return FieldElement(parent_, parent_->inv_vec(coords_));
}

FieldElement FieldElement::pow(const Int& e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement base = *this;
  FieldElement acc = parent_->one();
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string FieldElement::to_string() const {
  // canonical: coordinates with tower monomials
  const auto& steps = parent_->steps();
  std::ostringstream os;
  bool first = true;
  for (long idx = 0; idx < static_cast<long>(coords_.size()); ++idx) {
    if (coords_[idx] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[idx];
    long rest = idx;
    for (size_t lvl = 0; lvl < steps.size(); ++lvl) {
      long e = rest % steps[lvl].degree;
      rest /= steps[lvl].degree;
      if (e > 0) {
        os << "*" << steps[lvl].symbol;
        if (e > 1) os << "^" << e;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// span closure

std::pair<long, std::vector<FieldElement>> span_closure(
    const FieldPtr& A, const std::vector<FieldElement>& gens) {
  const Int& ch = A->characteristic();
  long dim = A->total_degree();
  // row-reduced basis over the base field; pivots tracked per row
  std::vector<std::vector<Rat>> rows;
  std::vector<long> pivots;

  auto reduce_insert = [&](std::vector<Rat> v) -> bool {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] != 0) {
        Rat f = v[pivots[r]];
        for (long k = 0; k < dim; ++k)
          v[k] = sc_sub(ch, v[k], sc_mul(ch, f, rows[r][k]));
      }
    }
    long piv = -1;
    for (long k = 0; k < dim; ++k)
      if (v[k] != 0) { piv = k; break; }
    if (piv < 0) return false;
    Rat inv = sc_inv(ch, v[piv]);
    for (long k = 0; k < dim; ++k) v[k] = sc_mul(ch, v[k], inv);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  };

  reduce_insert(A->one().coords());
  for (const auto& g : gens) reduce_insert(g.coords());

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Rat>> snapshot = rows;
    for (const auto& row : snapshot) {
      for (const auto& g : gens) {
        auto prod = A->mul_vec(row, g.coords());
        if (reduce_insert(std::move(prod))) grew = true;
      }
    }
  }
  std::vector<FieldElement> basis;
  for (const auto& r : rows) basis.push_back(A->element(r));
  return {static_cast<long>(rows.size()), std::move(basis)};
}

}  // namespace socle
