#include "socle/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace socle {

// ---------------------------------------------------------------------------
// FunctionFieldDescriptor

FunFieldPtr FunctionFieldDescriptor::make(FieldPtr base,
                                          std::vector<std::string> t_vars,
                                          std::vector<std::string> u_vars) {
  auto f = std::shared_ptr<FunctionFieldDescriptor>(new FunctionFieldDescriptor());
  f->base_ = std::move(base);
  f->t_vars_ = std::move(t_vars);
  f->u_vars_ = std::move(u_vars);
  if (f->t_vars_.size() + f->u_vars_.size() == 0)
    throw Error("function field needs at least one variable");
  for (int i = 0; i < f->nvars(); ++i)
    for (int j = i + 1; j < f->nvars(); ++j)
      if (f->var_name(i) == f->var_name(j))
        throw Error("duplicate variable name: " + f->var_name(i));
  return f;
}

const std::string& FunctionFieldDescriptor::var_name(int i) const {
  if (i < n_t()) return t_vars_[i];
  return u_vars_[i - n_t()];
}

int FunctionFieldDescriptor::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (var_name(i) == name) return i;
  return -1;
}

bool FunctionFieldDescriptor::same_as(const FunctionFieldDescriptor& o) const {
  return base_->same_as(*o.base_) && t_vars_ == o.t_vars_ && u_vars_ == o.u_vars_;
}

std::string FunctionFieldDescriptor::to_string() const {
  std::ostringstream os;
  os << base_->to_string() << "(";
  for (int i = 0; i < nvars(); ++i) {
    if (i) os << ",";
    os << var_name(i);
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// term order

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a < b;  // lexicographic tiebreak, T-variables first
}

// ---------------------------------------------------------------------------
// MultiPoly basics

MultiPoly MultiPoly::constant(const FunFieldPtr& p, const FieldElement& c) {
  MultiPoly r(p);
  if (!c.is_zero()) r.terms_.emplace(Exponents(p->nvars(), 0), c);
  return r;
}

MultiPoly MultiPoly::from_int(const FunFieldPtr& p, long v) {
  return constant(p, p->base()->from_int(v));
}

MultiPoly MultiPoly::variable(const FunFieldPtr& p, int var) {
  Exponents e(p->nvars(), 0);
  e[var] = 1;
  return monomial(p, std::move(e), p->base()->one());
}

MultiPoly MultiPoly::monomial(const FunFieldPtr& p, Exponents e,
                              const FieldElement& c) {
  MultiPoly r(p);
  if (!c.is_zero()) r.terms_.emplace(std::move(e), c);
  return r;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

FieldElement MultiPoly::constant_value() const {
  if (terms_.empty()) return parent_->base()->zero();
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.rbegin()->first) d += e;
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::uses_var(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

bool MultiPoly::is_pure_t() const {
  for (int v = parent_->n_t(); v < parent_->nvars(); ++v)
    if (uses_var(v)) return false;
  return true;
}

bool MultiPoly::is_pure_u() const {
  for (int v = 0; v < parent_->n_t(); ++v)
    if (uses_var(v)) return false;
  return true;
}

std::vector<int> MultiPoly::support_vars() const {
  std::vector<int> out;
  for (int v = 0; v < parent_->nvars(); ++v)
    if (uses_var(v)) out.push_back(v);
  return out;
}

const std::pair<const Exponents, FieldElement>& MultiPoly::leading() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(parent_);
  Exponents e(parent_->nvars());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < parent_->nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const FieldElement& s) const {
  MultiPoly r(parent_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(parent_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error("negative power of a polynomial");
  MultiPoly acc = MultiPoly::constant(parent_, parent_->base()->one());
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(parent_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * parent_->base()->from_int(e[var]));
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw DivisionByZeroError("division by zero polynomial");
  MultiPoly q(parent_);
  MultiPoly r = *this;
  const auto& [dle, dlc] = d.leading();
  FieldElement dlc_inv = dlc.inv();
  Exponents e(parent_->nvars());
  while (!r.is_zero()) {
    const auto& [rle, rlc] = r.leading();
    bool divisible = true;
    for (int i = 0; i < parent_->nvars(); ++i) {
      if (rle[i] < dle[i]) { divisible = false; break; }
      e[i] = rle[i] - dle[i];
    }
    if (!divisible) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(parent_, e, rlc * dlc_inv);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().second.inv();
}

UPoly MultiPoly::to_upoly(int var) const {
  std::vector<FieldElement> cs(degree_in(var) + 1, parent_->base()->zero());
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < parent_->nvars(); ++i)
      if (i != var && e[i] != 0)
        throw Error("polynomial is not univariate in the requested variable");
    cs[e[var]] = cs[e[var]] + c;
  }
  return UPoly(parent_->base(), std::move(cs));
}

MultiPoly MultiPoly::from_upoly(const FunFieldPtr& p, const UPoly& f, int var) {
  MultiPoly r(p);
  Exponents e(p->nvars(), 0);
  for (int i = 0; i <= f.degree(); ++i) {
    e[var] = i;
    r.add_term(e, f.coeff(i));
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (int e : it->first)
      if (e) has_var = true;
    if (!has_var || !it->second.is_one()) {
      std::string cs = it->second.to_string();
      if (cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos)
        os << "(" << cs << ")";
      else
        os << cs;
      if (has_var) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < parent_->nvars(); ++i) {
      if (it->first[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << parent_->var_name(i);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// multivariate gcd (content / primitive part recursion, primitive PRS)

namespace {

MultiPoly gcd_list(const std::vector<MultiPoly>& ps);

// f as a dense polynomial in variable v with MultiPoly coefficients
std::vector<MultiPoly> coeffs_in(const MultiPoly& f, int v) {
  std::vector<MultiPoly> out(f.degree_in(v) + 1, MultiPoly(f.parent()));
  for (const auto& [e, c] : f.terms()) {
    Exponents e2 = e;
    int k = e2[v];
    e2[v] = 0;
    out[k].add_term(e2, c);
  }
  return out;
}

MultiPoly assemble(const std::vector<MultiPoly>& cs, int v,
                   const FunFieldPtr& parent) {
  MultiPoly r(parent);
  for (size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms()) {
      Exponents e2 = e;
      e2[v] += static_cast<int>(k);
      r.add_term(e2, c);
    }
  }
  return r;
}

void strip_coeffs(std::vector<MultiPoly>& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

std::vector<MultiPoly> coeff_mul(const std::vector<MultiPoly>& a,
                                 const MultiPoly& s) {
  std::vector<MultiPoly> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c * s);
  return r;
}

// pseudo-remainder of A by B as polynomials in v (B nonzero)
std::vector<MultiPoly> prem(std::vector<MultiPoly> A,
                            const std::vector<MultiPoly>& B) {
  strip_coeffs(A);
  int db = static_cast<int>(B.size()) - 1;
  while (static_cast<int>(A.size()) - 1 >= db) {
    int da = static_cast<int>(A.size()) - 1;
    MultiPoly lead = A[da];
    A = coeff_mul(A, B[db]);
    for (int i = 0; i <= db; ++i)
      A[da - db + i] = A[da - db + i] - lead * B[i];
    strip_coeffs(A);
    if (static_cast<int>(A.size()) - 1 == da) throw Error("prem did not reduce");
  }
  return A;
}

MultiPoly gcd_list(const std::vector<MultiPoly>& ps) {
  MultiPoly g;
  bool started = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    if (!started) {
      g = p;
      started = true;
    } else {
      g = mp_gcd(g, p);
    }
    if (started && g.is_constant()) break;
  }
  if (!started) return g;  // all zero: zero polynomial
  return g.monic();
}

}  // namespace

MultiPoly mp_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const auto& parent = a.parent();
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(parent, parent->base()->one());
  // highest-index variable used by either
  int v = -1;
  for (int i = parent->nvars() - 1; i >= 0; --i)
    if (a.uses_var(i) || b.uses_var(i)) { v = i; break; }
  auto ca = coeffs_in(a, v);
  auto cb = coeffs_in(b, v);
  MultiPoly cont_a = gcd_list(ca);
  MultiPoly cont_b = gcd_list(cb);
  MultiPoly cg = mp_gcd(cont_a, cont_b);
  auto pp = [&](std::vector<MultiPoly> cs, const MultiPoly& cont) {
    for (auto& c : cs) {
      auto q = c.exact_div(cont);
      if (!q) throw Error("internal: content does not divide coefficient");
      c = *q;
    }
    return cs;
  };
  auto A = pp(ca, cont_a);
  auto B = pp(cb, cont_b);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    auto R = prem(A, B);
    if (!R.empty()) {
      MultiPoly cr = gcd_list(R);
      R = pp(R, cr);
    }
    A = std::move(B);
    B = std::move(R);
  }
  MultiPoly gp = assemble(A, v, parent);
  return (gp * cg).monic();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw ZeroDenominatorError("zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = MultiPoly::constant(den.parent(), den.parent()->base()->one());
    return;
  }
  MultiPoly g = mp_gcd(num, den);
  if (!g.is_constant()) {
    num = *num.exact_div(g);
    den = *den.exact_div(g);
  }
  FieldElement lc_inv = den.leading().second.inv();
  num_ = num * lc_inv;
  den_ = den * lc_inv;
}

RatFunc RatFunc::of(const MultiPoly& p) {
  return RatFunc(p, MultiPoly::constant(p.parent(), p.parent()->base()->one()));
}

RatFunc RatFunc::constant(const FunFieldPtr& f, const FieldElement& c) {
  return RatFunc::of(MultiPoly::constant(f, c));
}

RatFunc RatFunc::from_int(const FunFieldPtr& f, long v) {
  return RatFunc::of(MultiPoly::from_int(f, v));
}

RatFunc RatFunc::variable(const FunFieldPtr& f, int var) {
  return RatFunc::of(MultiPoly::variable(f, var));
}

FieldElement RatFunc::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZeroError("division by zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc acc = RatFunc::from_int(parent(), 1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string RatFunc::to_string() const {
  if (is_polynomial() && den_.is_constant() && !den_.is_zero() &&
      den_.constant_value().is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// prime certification and valuation

namespace {

PrimeKind kind_of(const MultiPoly& q) {
  bool has_t = false, has_u = false;
  const auto& p = q.parent();
  for (int v : q.support_vars()) {
    if (p->is_t_var(v))
      has_t = true;
    else
      has_u = true;
  }
  if (has_t && has_u) return PrimeKind::Mixed;
  if (has_u) return PrimeKind::PureU;
  return PrimeKind::PureT;
}

}  // namespace

PrimeCertificate certify_prime(const MultiPoly& q) {
  PrimeCertificate cert;
  cert.kind = kind_of(q);
  if (q.is_constant()) {
    cert.certified = false;
    cert.method = "constant";
    return cert;
  }
  if (q.total_degree() == 1) {
    cert.certified = true;
    cert.method = "linear";
    return cert;
  }
  auto sup = q.support_vars();
  if (sup.size() == 1) {
    UPoly f = q.to_upoly(sup[0]);
    auto c = certify_irreducible(f);
    if (c.certified && c.irreducible) {
      cert.certified = true;
      cert.method = "univariate:" + c.method;
      return cert;
    }
    if (c.certified && !c.irreducible) {
      cert.certified = false;
      cert.method = "univariate-reducible";
      return cert;
    }
  }
  cert.certified = false;
  cert.method = "uncertified";
  return cert;
}

long poly_multiplicity(const MultiPoly& f, const MultiPoly& q) {
  if (f.is_zero()) throw Error("multiplicity of zero polynomial");
  long m = 0;
  MultiPoly cur = f;
  for (;;) {
    auto d = cur.exact_div(q);
    if (!d) return m;
    cur = *d;
    ++m;
  }
}

ValuationResult valuation(const RatFunc& f, const MultiPoly& q,
                          bool assert_irreducible) {
  ValuationResult r;
  auto cert = certify_prime(q);
  r.prime = q.monic();
  r.prime_kind = cert.kind;
  r.prime_certified = cert.certified;
  r.certificate = cert.method;
  if (!cert.certified) {
    if (!assert_irreducible)
      throw NotIrreducibleError("valuation prime not certified irreducible (" +
                                cert.method + ")");
    r.certificate = "asserted";
  }
  if (f.is_zero()) {
    r.value = std::nullopt;  // +infinity
    return r;
  }
  r.value = poly_multiplicity(f.num(), r.prime) -
            poly_multiplicity(f.den(), r.prime);
  return r;
}

// ---------------------------------------------------------------------------
// substitution

RatFunc substitute(const RatFunc& f,
                   const std::map<std::string, RatFunc>& bindings) {
  const auto& parent = f.parent();
  std::vector<RatFunc> images(parent->nvars());
  for (int v = 0; v < parent->nvars(); ++v) {
    auto it = bindings.find(parent->var_name(v));
    images[v] = (it != bindings.end()) ? it->second : RatFunc::variable(parent, v);
  }
  auto eval_poly = [&](const MultiPoly& p) {
    RatFunc acc = RatFunc::from_int(parent, 0);
    for (const auto& [e, c] : p.terms()) {
      RatFunc term = RatFunc::constant(parent, c);
      for (int v = 0; v < parent->nvars(); ++v)
        if (e[v] > 0) term = term * images[v].pow(e[v]);
      acc = acc + term;
    }
    return acc;
  };
  RatFunc dn = eval_poly(f.den());
  if (dn.is_zero())
    throw PoleAtSubstitutionError("substitution hits a pole of the function");
  return eval_poly(f.num()) / dn;
}

// ---------------------------------------------------------------------------
// freshman's dream

bool freshman_check(const RatFunc& x, const RatFunc& y, const Int& p) {
  const auto& base = x.parent()->base();
  if (base->characteristic() != p || p == 0)
    throw WrongCharacteristicError("freshman_check needs characteristic p");
  long pl = static_cast<long>(p);
  RatFunc lhs = (x - y).pow(pl);
  RatFunc rhs = x.pow(pl) - y.pow(pl);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// p-th roots of polynomials in characteristic p

std::optional<MultiPoly> mp_pth_root(const MultiPoly& f) {
  const auto& base = f.parent()->base();
  const Int& ch = base->characteristic();
  if (ch == 0) return std::nullopt;
  long p = static_cast<long>(ch);
  long e = base->total_degree();
  Int root_exp = 1;
  for (long i = 0; i < e - 1; ++i) root_exp *= ch;
  MultiPoly r(f.parent());
  for (const auto& [ex, c] : f.terms()) {
    Exponents e2 = ex;
    for (auto& x : e2) {
      if (x % p != 0) return std::nullopt;
      x /= p;
    }
    r.add_term(e2, c.pow(root_exp));  // Frobenius inverse on a finite base
  }
  return r;
}

// ---------------------------------------------------------------------------
// prime support via gcd-free basis refinement

PrimeSupport prime_support(const std::vector<MultiPoly>& polys) {
  PrimeSupport out;
  const Int* ch = nullptr;
  std::vector<MultiPoly> queue;
  for (auto f : polys) {
    if (f.is_zero() || f.is_constant()) continue;
    ch = &f.parent()->base()->characteristic();
    // strip perfect p-th powers so gcd-splitting sees the radical
    if (*ch != 0) {
      for (;;) {
        auto root = mp_pth_root(f);
        if (!root) break;
        f = *root;
      }
    }
    f = f.monic();
    queue.push_back(f);
    // peel repeated factors: gcd with partial derivatives
    for (int v = 0; v < f.parent()->nvars(); ++v) {
      MultiPoly d = f.derivative(v);
      if (d.is_zero()) continue;
      MultiPoly g = mp_gcd(f, d);
      if (!g.is_constant()) queue.push_back(g.monic());
    }
  }

  std::vector<MultiPoly> basis;
  auto insert = [&](MultiPoly f, auto&& self) -> void {
    if (f.is_constant()) return;
    f = f.monic();
    for (size_t i = 0; i < basis.size(); ++i) {
      MultiPoly g = mp_gcd(f, basis[i]);
      if (g.is_constant()) continue;
      if (g != basis[i]) {
        MultiPoly rest = basis[i].exact_div(g)->monic();
        basis[i] = g;
        self(rest, self);
      }
      // remove all copies of g from f
      for (;;) {
        auto q = f.exact_div(basis[i]);
        if (!q) break;
        f = q->monic();
      }
      if (f.is_constant()) return;
      i = static_cast<size_t>(-1);  // restart: basis may have changed
    }
    basis.push_back(f);
  };
  for (auto& f : queue) insert(f, insert);

  // refine until pairwise coprime
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size() && !changed; ++i)
      for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
        MultiPoly g = mp_gcd(basis[i], basis[j]);
        if (!g.is_constant()) {
          std::vector<MultiPoly> re(basis);
          basis.clear();
          for (auto& f : re) insert(f, insert);
          changed = true;
        }
      }
  }

  // certify each basis element; split univariate-in-disguise pieces
  for (const auto& b : basis) {
    auto cert = certify_prime(b);
    if (cert.certified) {
      out.primes.push_back(b);
      out.kinds.push_back(cert.kind);
      continue;
    }
    auto sup = b.support_vars();
    if (sup.size() == 1 && b.parent()->base()->is_finite()) {
      UPoly f = b.to_upoly(sup[0]);
      for (const auto& [irr, mult] : factor_univariate(f)) {
        MultiPoly m = MultiPoly::from_upoly(b.parent(), irr, sup[0]);
        out.primes.push_back(m.monic());
        out.kinds.push_back(kind_of(m));
      }
      continue;
    }
    out.uncertified.push_back(b);
    out.complete = false;
  }
  // deterministic order
  std::vector<size_t> idx(out.primes.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    const auto& a = out.primes[i];
    const auto& b = out.primes[j];
    if (a.total_degree() != b.total_degree())
      return a.total_degree() < b.total_degree();
    return a.to_string() < b.to_string();
  });
  std::vector<MultiPoly> ps;
  std::vector<PrimeKind> ks;
  for (size_t i : idx) {
    ps.push_back(out.primes[i]);
    ks.push_back(out.kinds[i]);
  }
  out.primes = std::move(ps);
  out.kinds = std::move(ks);
  return out;
}

}  // namespace socle
