#include "socle/upoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace socle {

UPoly::UPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void UPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_rationals(const FieldPtr& f, const std::vector<Rat>& cs) {
  std::vector<FieldElement> v;
  v.reserve(cs.size());
  for (const auto& r : cs) v.push_back(f->from_rational(r));
  return UPoly(f, std::move(v));
}

UPoly UPoly::x(const FieldPtr& f) {
  return UPoly(f, {f->zero(), f->one()});
}

UPoly UPoly::constant(const FieldPtr& f, const FieldElement& c) {
  return UPoly(f, {c});
}

FieldElement UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] - o.c_[i];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(field_);
  std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, field_->zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const FieldElement& s) const {
  std::vector<FieldElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<FieldElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return UPoly(field_, std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  UPoly r = *this;
  if (r.degree() < d.degree()) return {UPoly(field_), r};
  std::vector<FieldElement> q(r.degree() - d.degree() + 1, field_->zero());
  FieldElement lead_inv = d.lead().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    FieldElement f = r.lead() * lead_inv;
    q[shift] = q[shift] + f;
    std::vector<FieldElement> sub(shift + d.c_.size(), field_->zero());
    for (size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = d.c_[i] * f;
    r = r - UPoly(field_, std::move(sub));
  }
  return {UPoly(field_, std::move(q)), r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<FieldElement> v;
  v.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i] * field_->from_rational(Rat(static_cast<long>(i))));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::pow_mod(const Int& e, const UPoly& m) const {
  UPoly base = this->mod(m);
  UPoly acc = UPoly::constant(field_, field_->one()).mod(m);
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = (acc * base).mod(m);
    base = (base * base).mod(m);
    k >>= 1;
  }
  return acc;
}

UPoly UPoly::shift_pow(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElement> v(c_.size() + k, field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return UPoly(field_, std::move(v));
}

FieldElement UPoly::eval(const FieldElement& x) const {
  FieldElement acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string() << ")";
    if (i >= 1) {
      os << "*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.mod(y);
    x = y;
    y = r;
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// square-free decomposition

namespace {

/// p-th root of an element of a finite field (Frobenius is bijective).
FieldElement coeff_pth_root(const FieldElement& c) {
  const auto& F = c.parent();
  long e = F->total_degree();
  Int exp = 1;
  for (long i = 0; i < e - 1; ++i) exp *= F->characteristic();
  return c.pow(exp);  // c^(p^(e-1))
}

/// For f with f' = 0 in characteristic p: f(X) = g(X^p); returns g.
UPoly upoly_pth_root(const UPoly& f) {
  long p = static_cast<long>(f.field()->characteristic());
  std::vector<FieldElement> v;
  for (int i = 0; i <= f.degree(); i += p) v.push_back(coeff_pth_root(f.coeff(i)));
  return UPoly(f.field(), std::move(v));
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0.monic();
  if (f.degree() <= 0) return out;
  const Int& ch = f.field()->characteristic();
  UPoly d = f.derivative();
  if (ch != 0 && d.is_zero()) {
    if (!f.field()->is_finite())
      throw UnsupportedBaseError("p-th roots need a finite base field");
    auto inner = squarefree_decomposition(upoly_pth_root(f));
    long p = static_cast<long>(ch);
    for (auto& [g, m] : inner) out.emplace_back(g, m * p);
    return out;
  }
  UPoly c = upoly_gcd(f, d);
  UPoly w = f.divmod(c).first;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = upoly_gcd(w, c);
    UPoly z = w.divmod(y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c.divmod(y).first;
  }
  if (c.degree() > 0) {
    if (ch == 0) throw Error("internal: nontrivial residual in characteristic 0");
    auto inner = squarefree_decomposition(upoly_pth_root(c));
    long p = static_cast<long>(ch);
    for (auto& [g, m] : inner) out.emplace_back(g, m * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first.degree() < b.first.degree();
  });
  return out;
}

// ---------------------------------------------------------------------------
// factorization over finite fields

namespace {

UPoly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  long p = static_cast<long>(F->characteristic());
  long dim = F->total_degree();
  std::vector<FieldElement> v;
  for (int i = 0; i <= deg; ++i) {
    std::vector<Rat> coords(dim);
    for (long k = 0; k < dim; ++k)
      coords[k] = Rat(static_cast<long>(rng() % static_cast<unsigned long>(p)));
    v.push_back(F->element(coords));
  }
  return UPoly(F, std::move(v));
}

void equal_degree_split(const UPoly& f, int d, std::mt19937_64& rng,
                        std::vector<UPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto& F = f.field();
  Int q = F->order();
  for (;;) {
    UPoly r = random_poly(F, f.degree() - 1, rng);
    if (r.degree() < 1) continue;
    UPoly g;
    if (F->characteristic() == 2) {
      // trace map T(r) = r + r^2 + ... + r^(2^(kd-1)) mod f
      long bits = 0;
      Int qq = q;
      while (qq > 1) { qq >>= 1; ++bits; }
      long total = bits * d;
      UPoly acc = r.mod(f);
      UPoly cur = r.mod(f);
      for (long i = 1; i < total; ++i) {
        cur = (cur * cur).mod(f);
        acc = acc + cur;
      }
      g = upoly_gcd(acc, f);
    } else {
      Int qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      UPoly s = r.pow_mod((qd - 1) / 2, f);
      g = upoly_gcd(s - UPoly::constant(F, F->one()), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f.divmod(g).first.monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& f) {
  const auto& F = f.field();
  if (!F->is_finite())
    throw UnsupportedBaseError(
        "full univariate factorization requires a finite base field");
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(f.degree()));
  Int q = F->order();
  for (const auto& [sf, mult] : squarefree_decomposition(f)) {
    // distinct-degree on the square-free part
    UPoly g = sf;
    UPoly xq = UPoly::x(F);
    UPoly h = xq;  // will hold x^(q^d) mod g
    int d = 0;
    while (g.degree() > 0) {
      ++d;
      if (2 * d > g.degree()) {
        out.emplace_back(g.monic(), mult);
        break;
      }
      h = h.pow_mod(q, g);
      UPoly part = upoly_gcd(h - xq, g);
      if (part.degree() > 0) {
        std::vector<UPoly> irr;
        equal_degree_split(part, d, rng, irr);
        for (auto& p : irr) out.emplace_back(p, mult);
        g = g.divmod(part).first;
        h = h.mod(g);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree())
      return a.first.degree() < b.first.degree();
    // deterministic order: compare coefficient coordinate vectors
    for (int i = a.first.degree(); i >= 0; --i) {
      const auto& ca = a.first.coeff(i).coords();
      const auto& cb = b.first.coeff(i).coords();
      if (ca != cb) return ca < cb;
    }
    return a.second < b.second;
  });
  return out;
}

// ---------------------------------------------------------------------------
// irreducibility certification

namespace {

std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> ds;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  return ds;
}

std::vector<Int> prime_divisors_of(Int n, const Int& bound = Int(1000000)) {
  if (n < 0) n = -n;
  std::vector<Int> ps;
  for (Int d = 2; d * d <= n && d <= bound; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);  // may be composite if bound hit; callers re-check
  return ps;
}

/// Scale a polynomial over Q to primitive integer coefficients.
std::vector<Int> integer_coeffs(const UPoly& f) {
  Int lcm_den = 1;
  for (int i = 0; i <= f.degree(); ++i) {
    Int d = denominator(f.coeff(i).constant_value());
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<Int> v;
  Int content = 0;
  for (int i = 0; i <= f.degree(); ++i) {
    Rat c = f.coeff(i).constant_value() * Rat(lcm_den);
    v.push_back(numerator(c));
    content = gcd(content, v.back());
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  return v;
}

}  // namespace

IrredCertificate certify_irreducible(const UPoly& f) {
  IrredCertificate cert;
  const auto& F = f.field();
  if (f.degree() <= 0) {
    cert.certified = true;
    cert.irreducible = false;
    cert.method = "degenerate";
    return cert;
  }
  if (f.degree() == 1) {
    cert.certified = true;
    cert.irreducible = true;
    cert.method = "linear";
    return cert;
  }
  if (F->is_finite()) {
    auto fac = factor_univariate(f);
    cert.certified = true;
    cert.irreducible = fac.size() == 1 && fac[0].second == 1 &&
                       fac[0].first.degree() == f.degree();
    cert.method = "finite-field-factorization";
    if (!cert.irreducible && !fac.empty() &&
        fac[0].first.degree() < f.degree())
      cert.counterexample_factor = fac[0].first;
    return cert;
  }
  // characteristic 0
  bool rational_coeffs = true;
  for (int i = 0; i <= f.degree(); ++i)
    if (!f.coeff(i).is_constant()) { rational_coeffs = false; break; }
  if (F->total_degree() == 1 || rational_coeffs) {
    // work over Q
    UPoly fq = f;
    std::vector<Int> ic = integer_coeffs(f);
    int n = f.degree();
    // rational root test
    if (ic[0] == 0) {
      cert.certified = true;
      cert.irreducible = false;
      cert.method = "root(0)";
      cert.counterexample_factor = UPoly::x(F);
      return cert;
    }
    for (const auto& pnum : divisors_of(ic[0])) {
      for (const auto& pden : divisors_of(ic[n])) {
        for (int sign = 0; sign < 2; ++sign) {
          Rat root = Rat(sign ? -pnum : pnum, pden);
          if (f.eval(F->from_rational(root)).is_zero()) {
            if (n == 1) break;
            cert.certified = true;
            cert.irreducible = false;
            cert.method = "rational-root";
            cert.counterexample_factor =
                UPoly::x(F) - UPoly::constant(F, F->from_rational(root));
            return cert;
          }
        }
      }
    }
    bool irreducible_over_q = false;
    std::string q_method;
    if (n <= 3) {
      irreducible_over_q = true;  // no root and degree <= 3
      q_method = "root-search";
    } else {
      for (const auto& p : prime_divisors_of(ic[0])) {
        bool ok = ic[n] % p != 0 && ic[0] % (p * p) != 0;
        for (int i = 0; ok && i < n; ++i) ok = ic[i] % p == 0;
        if (ok) {
          irreducible_over_q = true;
          q_method = "eisenstein(" + p.str() + ")";
          break;
        }
      }
    }
    if (irreducible_over_q) {
      if (F->total_degree() == 1) {
        cert.certified = true;
        cert.irreducible = true;
        cert.method = q_method;
        return cert;
      }
      // coprime-degree argument: [F:Q] coprime to deg f, coefficients in Q
      Int g = gcd(Int(F->total_degree()), Int(n));
      if (g == 1) {
        cert.certified = true;
        cert.irreducible = true;
        cert.method = q_method + "+coprime-degree";
        return cert;
      }
    }
  }
  cert.certified = false;
  cert.method = "none";
  return cert;
}

FieldPtr extend_field(const FieldPtr& F, const UPoly& minpoly,
                      const std::string& symbol, bool allow_asserted) {
  if (minpoly.degree() < 2)
    throw Error("extension polynomial must have degree >= 2");
  if (!minpoly.lead().is_one())
    throw Error("extension polynomial must be monic");
  TowerStep step;
  step.symbol = symbol;
  step.degree = minpoly.degree();
  for (int i = 0; i <= minpoly.degree(); ++i)
    step.minpoly.push_back(minpoly.coeff(i).coords());
  auto cert = certify_irreducible(minpoly);
  if (cert.certified && !cert.irreducible)
    throw ReducibleError("polynomial is reducible over the base" +
                         (cert.counterexample_factor.is_zero()
                              ? std::string()
                              : ": factor " + cert.counterexample_factor.to_string()));
  if (cert.certified) {
    step.certified = true;
    step.certificate = cert.method;
  } else {
    if (!allow_asserted)
      throw UncertifiedIrreducibilityError(
          "irreducibility cannot be certified; pass allow_asserted to assert it");
    step.certified = false;
    step.certificate = "asserted";
  }
  return F->extended(std::move(step));
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials and named field constructors

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rat> cyclotomic_coeffs(long n) {
  static std::map<long, std::vector<Rat>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto Q = FieldDescriptor::rationals();
  // x^n - 1
  std::vector<Rat> xn(n + 1, Rat(0));
  xn[0] = Rat(-1);
  xn[n] = Rat(1);
  UPoly f = UPoly::from_rationals(Q, xn);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    UPoly phi_d = UPoly::from_rationals(Q, cyclotomic_coeffs(d));
    f = f.divmod(phi_d).first;
  }
  std::vector<Rat> out;
  for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i).constant_value());
  cache[n] = out;
  return out;
}

FieldPtr make_cyclotomic(long n) {
  if (n < 1) throw Error("cyclotomic index must be >= 1");
  if (n <= 2) return FieldDescriptor::rationals();
  auto Q = FieldDescriptor::rationals();
  UPoly phi = UPoly::from_rationals(Q, cyclotomic_coeffs(n));
  TowerStep step;
  step.symbol = "zeta" + std::to_string(n);
  step.degree = phi.degree();
  for (int i = 0; i <= phi.degree(); ++i)
    step.minpoly.push_back(phi.coeff(i).coords());
  step.certified = true;
  step.certificate = "cyclotomic";
  return Q->extended(std::move(step));
}

FieldPtr FieldDescriptor::cyclotomic(long n) { return make_cyclotomic(n); }

FieldPtr make_finite_field(const Int& p, int k, const std::string& symbol) {
  auto Fp = make_prime_field(p);
  if (k == 1) return Fp;
  long pl = static_cast<long>(p);
  // deterministic search for a monic irreducible of degree k
  // iterate over lower coefficient vectors in lexicographic order
  std::vector<long> lower(k, 0);
  for (;;) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < k; ++i) cs.push_back(Fp->from_int(lower[i]));
    cs.push_back(Fp->one());
    UPoly f(Fp, std::move(cs));
    if (f.degree() == k) {
      auto cert = certify_irreducible(f);
      if (cert.certified && cert.irreducible) return extend_field(Fp, f, symbol);
    }
    int i = 0;
    while (i < k && ++lower[i] == pl) lower[i++] = 0;
    if (i == k) throw Error("no irreducible polynomial found (impossible)");
  }
}

}  // namespace socle
