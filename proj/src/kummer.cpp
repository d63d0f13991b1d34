#include "socle/kummer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace socle {

// ---------------------------------------------------------------------------
// small dense linear algebra over F_p

namespace {

long modp(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long inv_modp(long a, long p) {
  long t = 0, nt = 1, r = p, nr = modp(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return modp(t, p);
}

using Row = std::vector<long>;
using Mat = std::vector<Row>;

struct LinResult {
  std::optional<Row> x;   // one solution (free variables = 0)
  Mat kernel;             // basis of the homogeneous kernel
  Row farkas;             // y with y^T·A = 0, y^T·b != 0 when inconsistent
};

// Solve A·x = b over F_p; `cols` is the number of unknowns (A may have no
// rows, in which case everything solves).
LinResult fp_solve(Mat A, Row b, long p, size_t cols) {
  size_t rows = A.size();
  if (rows == 0) {
    LinResult out;
    out.x = Row(cols, 0);
    for (size_t i = 0; i < cols; ++i) {
      Row k(cols, 0);
      k[i] = 1;
      out.kernel.push_back(std::move(k));
    }
    return out;
  }
  for (auto& r : A)
    for (auto& v : r) v = modp(v, p);
  for (auto& v : b) v = modp(v, p);
  // track row operations for the Farkas certificate
  Mat Y(rows, Row(rows, 0));
  for (size_t i = 0; i < rows; ++i) Y[i][i] = 1;

  std::vector<int> pivot_col(rows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(b[piv], b[rank]);
    std::swap(Y[piv], Y[rank]);
    long inv = inv_modp(A[rank][c], p);
    for (size_t j = 0; j < cols; ++j) A[rank][j] = modp(A[rank][j] * inv, p);
    b[rank] = modp(b[rank] * inv, p);
    for (auto& v : Y[rank]) v = modp(v * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || A[i][c] == 0) continue;
      long f = A[i][c];
      for (size_t j = 0; j < cols; ++j)
        A[i][j] = modp(A[i][j] - f * A[rank][j], p);
      b[i] = modp(b[i] - f * b[rank], p);
      for (size_t k = 0; k < rows; ++k)
        Y[i][k] = modp(Y[i][k] - f * Y[rank][k], p);
    }
    pivot_col[rank] = static_cast<int>(c);
    ++rank;
  }
  LinResult out;
  for (size_t i = rank; i < rows; ++i) {
    if (b[i] != 0) {
      out.farkas = Y[i];
      return out;
    }
  }
  Row x(cols, 0);
  std::vector<bool> is_pivot(cols, false);
  for (size_t i = 0; i < rank; ++i) {
    x[pivot_col[i]] = b[i];
    is_pivot[pivot_col[i]] = true;
  }
  out.x = x;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Row k(cols, 0);
    k[fc] = 1;
    for (size_t i = 0; i < rank; ++i)
      k[pivot_col[i]] = modp(-A[i][fc], p);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

long fp_rank(const Mat& A, long p) {
  if (A.empty() || A[0].empty()) return 0;
  Mat M = A;
  size_t rows = M.size(), cols = M[0].size();
  for (auto& r : M)
    for (auto& v : r) v = modp(v, p);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    long inv = inv_modp(M[rank][c], p);
    for (size_t j = c; j < cols; ++j) M[rank][j] = modp(M[rank][j] * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || M[i][c] == 0) continue;
      long f = M[i][c];
      for (size_t j = c; j < cols; ++j)
        M[i][j] = modp(M[i][j] - f * M[rank][j], p);
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

// Kernel of x^T·A (left kernel = dependencies among the rows of A).
Mat fp_row_kernel(const Mat& A, long p) {
  if (A.empty()) return {};
  size_t rows = A.size(), cols = A[0].size();
  Mat At(cols, Row(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) At[j][i] = modp(A[i][j], p);
  auto r = fp_solve(At, Row(cols, 0), p, rows);
  return r.kernel;
}

// ---------------------------------------------------------------------------
// constant-class helpers

std::optional<long> cyclotomic_index(const FieldPtr& base) {
  for (const auto& s : base->steps())
    if (s.certificate == "cyclotomic" && s.symbol.rfind("zeta", 0) == 0)
      return std::stol(s.symbol.substr(4));
  return std::nullopt;
}

std::optional<Int> int_nth_root(const Int& v, long n) {
  if (v < 0) return std::nullopt;
  if (v == 0 || v == 1) return v;
  Int lo = 1, hi = v;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    Int pw = 1;
    bool over = false;
    for (long i = 0; i < n; ++i) {
      pw *= mid;
      if (pw > v) { over = true; break; }
    }
    if (over)
      hi = mid - 1;
    else
      lo = mid;
  }
  Int pw = 1;
  for (long i = 0; i < n; ++i) pw *= lo;
  if (pw == v) return lo;
  return std::nullopt;
}

std::optional<Rat> rational_pth_root(const Rat& r, long p) {
  if (r == 0) return Rat(0);
  bool neg = r < 0;
  if (neg && p % 2 == 0) return std::nullopt;
  Rat a = neg ? Rat(-r) : r;
  auto rn = int_nth_root(numerator(a), p);
  auto rd = int_nth_root(denominator(a), p);
  if (!rn || !rd) return std::nullopt;
  Rat out(*rn, *rd);
  return neg ? Rat(-out) : out;
}

// discrete log base the multiplicative generator; finite fields of small order
long fq_dlog(const FieldPtr& base, const FieldElement& c) {
  auto g = base->multiplicative_generator();
  long q1 = static_cast<long>(base->order() - 1);
  FieldElement acc = base->one();
  for (long k = 0; k < q1; ++k) {
    if (acc == c) return k;
    acc = acc * g;
  }
  throw Error("discrete log of zero");
}

// d with d^p = c in the base field, when one exists and is findable
std::optional<FieldElement> const_pth_root(const FieldPtr& base,
                                           const FieldElement& c, long p) {
  if (c.is_zero()) return base->zero();
  if (base->is_finite()) {
    long q1 = static_cast<long>(base->order() - 1);
    long k = fq_dlog(base, c);
    // solve p*m = k mod q1
    for (long m = 0; m < q1; ++m)
      if (modp(p * m - k, q1) == 0)
        return base->multiplicative_generator().pow(m);
    return std::nullopt;
  }
  if (c.is_constant()) {
    auto rr = rational_pth_root(c.constant_value(), p);
    if (!rr) return std::nullopt;
    return base->from_rational(*rr);
  }
  // cyclotomic base: try c = zeta^k * rational
  auto n_opt = cyclotomic_index(base);
  if (!n_opt) return std::nullopt;
  long n = *n_opt;
  FieldElement z = base->generator(0);
  FieldElement zk = base->one();
  for (long k = 0; k < n; ++k) {
    FieldElement q = c / zk;
    if (q.is_constant()) {
      Rat r = q.constant_value();
      long kk = k;
      if (r < 0 && n % 2 == 0) {
        kk = (kk + n / 2) % n;
        r = -r;
      }
      auto rr = rational_pth_root(r, p);
      if (!rr) return std::nullopt;
      for (long m = 0; m < n; ++m)
        if (modp(p * m - kk, n) == 0)
          return z.pow(m) * base->from_rational(*rr);
      return std::nullopt;
    }
    zk = zk * z;
  }
  return std::nullopt;
}

long val_at(const RatFunc& f, const MultiPoly& q) {
  if (f.is_zero()) return 0;  // the zero class carries no valuation data
  return poly_multiplicity(f.num(), q) - poly_multiplicity(f.den(), q);
}

void check_common_parent(const std::vector<RatFunc>& elems) {
  for (size_t i = 1; i < elems.size(); ++i)
    if (!elems[i].parent()->same_as(*elems[0].parent()))
      throw ParentMismatchError("elements from different function fields");
}

PrimeSupport support_of(const std::vector<RatFunc>& elems) {
  std::vector<MultiPoly> polys;
  for (const auto& f : elems) {
    if (f.is_zero()) continue;  // the zero class contributes no primes
    polys.push_back(f.num());
    polys.push_back(f.den());
  }
  return prime_support(polys);
}

}  // namespace

// ---------------------------------------------------------------------------

bool has_eps_p(const FieldPtr& base, const Int& p) {
  if (p == 2) return true;
  if (base->is_finite()) return (base->order() - 1) % p == 0;
  auto n = cyclotomic_index(base);
  return n && *n % static_cast<long>(p) == 0;
}

// ---------------------------------------------------------------------------
// Kummer ranks

namespace {

ClassSystem kummer_rank_impl(const std::vector<RatFunc>& elems, const Int& p_,
                             bool relative) {
  if (elems.empty()) {
    ClassSystem s;
    s.kind = ClassKind::Kummer;
    s.p = p_;
    s.relative = relative;
    s.status = SysStatus::CertifiedIndependent;
    return s;
  }
  check_common_parent(elems);
  const auto& field = elems[0].parent();
  const auto& base = field->base();
  long p = static_cast<long>(p_);
  if (p < 2) throw Error("p must be a prime >= 2");
  if (base->characteristic() == p_)
    throw WrongCharacteristicError("Kummer classes need p != characteristic");
  if (!has_eps_p(base, p_))
    throw MissingRootOfUnityError("base field has no primitive " +
                                  std::to_string(p) + "-th root of unity");
  for (const auto& e : elems)
    if (e.is_zero())
      throw DivisionByZeroError("zero has no multiplicative class");
  if (relative && (field->n_t() == 0 || field->nvars() == field->n_t()))
    throw UnsupportedShapeError(
        "relative rank needs both T- and U-variables");
  for (const auto& e : elems)
    if (e.is_zero()) throw Error("Kummer class of 0 is undefined");

  ClassSystem sys;
  sys.kind = ClassKind::Kummer;
  sys.p = p_;
  sys.field = field;
  sys.elements = elems;
  sys.relative = relative;

  auto sup = support_of(elems);
  sys.support_complete = sup.complete;
  for (size_t j = 0; j < sup.primes.size(); ++j) {
    if (relative && sup.kinds[j] != PrimeKind::Mixed) continue;
    sys.primes.push_back(sup.primes[j]);
    sys.prime_kinds.push_back(sup.kinds[j]);
  }
  size_t n = elems.size();
  Mat M(n, Row(sys.primes.size(), 0));
  for (size_t i = 0; i < n; ++i) {
    sys.valuation_matrix.emplace_back();
    for (size_t j = 0; j < sys.primes.size(); ++j) {
      long v = val_at(elems[i], sys.primes[j]);
      sys.valuation_matrix[i].push_back(v);
      M[i][j] = modp(v, p);
    }
  }
  // over a finite base with complete support the constant part of each class
  // lives in the cyclic group F_q*/(F_q*)^p; one extra discrete-log column
  // makes the rank exact
  bool augmented = false;
  if (!relative && base->is_finite() && sys.support_complete) {
    Row cc(n, 0);
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      RatFunc r = elems[i];
      for (size_t j = 0; j < sys.primes.size(); ++j)
        r = r / RatFunc::of(sys.primes[j]).pow(sys.valuation_matrix[i][j]);
      if (!r.is_constant()) {
        ok = false;
        break;
      }
      cc[i] = modp(fq_dlog(base, r.constant_value()), p);
    }
    if (ok) {
      for (size_t i = 0; i < n; ++i) M[i].push_back(cc[i]);
      augmented = true;
    }
  }
  long r0 = fp_rank(M, p);
  if (r0 == static_cast<long>(n)) {
    sys.rank = r0;
    sys.status = SysStatus::CertifiedIndependent;
    sys.note = relative ? "full rank on mixed primes"
               : augmented ? "full rank with constant-class column"
                           : "full valuation rank";
    return sys;
  }

  // residual of the nu-combination after stripping the column primes
  auto residual = [&](const Row& nu) {
    RatFunc c = RatFunc::from_int(field, 1);
    for (size_t i = 0; i < n; ++i) c = c * elems[i].pow(nu[i]);
    RatFunc E = RatFunc::from_int(field, 1);
    for (size_t j = 0; j < sys.primes.size(); ++j) {
      long v = val_at(c, sys.primes[j]);
      if (v % p != 0) throw Error("internal: kernel vector not in kernel");
      E = E * RatFunc::of(sys.primes[j]).pow(v / p);
    }
    return std::pair<RatFunc, RatFunc>(c / E.pow(p), E);
  };

  Mat kern = fp_row_kernel(M, p);
  bool all_resolved = true;
  for (const auto& nu : kern) {
    auto [r, E] = residual(nu);
    bool dependent = false;
    if (relative) {
      // dependent iff the residual is a product of pure primes and a constant
      if (sys.support_complete) {
        dependent = true;  // all mixed valuations are 0 by construction
        sys.witness_alpha = E;
      }
    } else if (r.is_constant()) {
      auto d = const_pth_root(base, r.constant_value(), p);
      if (d) {
        dependent = true;
        sys.witness_alpha = RatFunc::constant(field, *d) * E;
      }
    }
    if (dependent && sys.witness.empty()) sys.witness = nu;
    if (!dependent) all_resolved = false;
  }
  sys.rank = r0;
  if (!sys.witness.empty() && all_resolved) {
    sys.status = SysStatus::DependenceWitness;
    sys.note = "verified dependence; rank is exact";
  } else if (!sys.witness.empty()) {
    sys.status = SysStatus::DependenceWitness;
    sys.note = "verified dependence; rank is a certified lower bound";
  } else {
    sys.status = SysStatus::Inconclusive;
    sys.note = sys.support_complete
                   ? "constant classes could not be resolved"
                   : "prime support incomplete";
  }
  return sys;
}

}  // namespace

ClassSystem kummer_rank(const std::vector<RatFunc>& elems, const Int& p) {
  return kummer_rank_impl(elems, p, /*relative=*/false);
}

ClassSystem kummer_relative_rank(const std::vector<RatFunc>& elems,
                                 const Int& p) {
  return kummer_rank_impl(elems, p, /*relative=*/true);
}

// ---------------------------------------------------------------------------
// wp_solve

WpResult wp_solve(const RatFunc& b, const Int& p_) {
  const auto& field = b.parent();
  if (!field) throw Error("wp_solve: empty function");
  const auto& base = field->base();
  if (!base->is_finite())
    throw UnsupportedBaseError("wp_solve needs a finite constant field");
  if (base->characteristic() != p_)
    throw WrongCharacteristicError("wp_solve needs p = characteristic");
  long p = static_cast<long>(p_);

  WpResult out;
  if (b.is_zero()) {
    out.alpha = RatFunc::from_int(field, 0);
    return out;
  }
  auto dsup = prime_support({b.den()});
  if (!dsup.complete)
    throw UnsupportedShapeError("denominator could not be fully factored");
  MultiPoly E = MultiPoly::from_int(field, 1);
  for (const auto& q : dsup.primes) {
    long k = poly_multiplicity(b.den(), q);
    if (k == 0) continue;
    if (k % p != 0) {
      WpObstruction ob;
      ob.reason = "pole-order";
      ob.prime = q;
      ob.pole_order = k;
      out.obstruction = ob;
      return out;
    }
    E = E * q.pow(static_cast<int>(k / p));
  }
  // den = lc * E^p
  MultiPoly Ep = E.pow(p);
  auto lc_poly = b.den().exact_div(Ep);
  if (!lc_poly || !lc_poly->is_constant())
    throw Error("internal: denominator is not a p-th power times a constant");
  FieldElement lc = lc_poly->constant_value();
  MultiPoly N = b.num() * lc.inv();  // equation: A^p - A·E^{p-1} = N

  int nv = field->nvars();
  std::vector<int> B(nv, 0);
  for (int v = 0; v < nv; ++v)
    B[v] = std::max<long>(E.degree_in(v), (N.degree_in(v) + p - 1) / p);
  long count = 1;
  for (int v = 0; v < nv; ++v) {
    count *= B[v] + 1;
    if (count > 512)
      throw UnsupportedShapeError("wp_solve ansatz too large for desk scale");
  }
  std::vector<Exponents> monos;
  Exponents cur(nv, 0);
  for (;;) {
    monos.push_back(cur);
    int v = 0;
    while (v < nv && cur[v] == B[v]) cur[v++] = 0;
    if (v == nv) break;
    ++cur[v];
  }

  long m = base->total_degree();  // F_q as an F_p-space
  MultiPoly Epm1 = E.pow(p - 1);
  // one column per (monomial, F_p-basis vector of F_q)
  std::vector<MultiPoly> colpolys;
  std::vector<FieldElement> basis;
  for (long k = 0; k < m; ++k) {
    std::vector<Rat> coords(m, Rat(0));
    coords[k] = 1;
    basis.push_back(base->element(coords));
  }
  for (const auto& e : monos)
    for (long k = 0; k < m; ++k) {
      Exponents ep = e;
      for (auto& x : ep) x *= p;
      MultiPoly col = MultiPoly::monomial(field, ep, basis[k].pow(p_)) -
                      MultiPoly::monomial(field, e, basis[k]) * Epm1;
      colpolys.push_back(col);
    }
  // row index: every monomial appearing anywhere, times m coordinates
  std::map<Exponents, size_t, GrlexLess> rowpos;
  auto note_monos = [&](const MultiPoly& f) {
    for (const auto& [e, c] : f.terms())
      if (!rowpos.count(e)) {
        size_t s = rowpos.size();
        rowpos[e] = s;
      }
  };
  for (const auto& c : colpolys) note_monos(c);
  note_monos(N);
  size_t nrows = rowpos.size() * m;
  Mat A(nrows, Row(colpolys.size(), 0));
  Row rhs(nrows, 0);
  for (size_t j = 0; j < colpolys.size(); ++j)
    for (const auto& [e, c] : colpolys[j].terms()) {
      size_t base_row = rowpos[e] * m;
      for (long k = 0; k < m; ++k)
        A[base_row + k][j] = static_cast<long>(numerator(c.coords()[k]));
    }
  for (const auto& [e, c] : N.terms()) {
    size_t base_row = rowpos[e] * m;
    for (long k = 0; k < m; ++k)
      rhs[base_row + k] = static_cast<long>(numerator(c.coords()[k]));
  }
  auto sol = fp_solve(A, rhs, p, colpolys.size());
  if (!sol.x) {
    // re-check the certificate before handing it out
    for (size_t j = 0; j < colpolys.size(); ++j) {
      long acc = 0;
      for (size_t i = 0; i < nrows; ++i)
        acc = modp(acc + sol.farkas[i] * A[i][j], p);
      if (acc != 0) throw Error("internal: invalid Farkas certificate");
    }
    long acc = 0;
    for (size_t i = 0; i < nrows; ++i)
      acc = modp(acc + sol.farkas[i] * rhs[i], p);
    if (acc == 0) throw Error("internal: invalid Farkas certificate");
    WpObstruction ob;
    ob.reason = "inconsistent-system";
    ob.farkas = sol.farkas;
    out.obstruction = ob;
    return out;
  }
  MultiPoly Apoly(field);
  for (size_t mi = 0; mi < monos.size(); ++mi) {
    std::vector<Rat> coords(m, Rat(0));
    for (long k = 0; k < m; ++k) coords[k] = (*sol.x)[mi * m + k];
    FieldElement c = base->element(coords);
    Apoly.add_term(monos[mi], c);
  }
  RatFunc alpha(Apoly, E);
  if (alpha.pow(p) - alpha != b)
    throw Error("internal: wp_solve verification failed");
  out.alpha = alpha;
  return out;
}

// ---------------------------------------------------------------------------
// Artin-Schreier ranks

ClassSystem as_rank(const std::vector<RatFunc>& elems, const Int& p_) {
  ClassSystem sys;
  sys.kind = ClassKind::ArtinSchreier;
  sys.p = p_;
  if (elems.empty()) {
    sys.status = SysStatus::CertifiedIndependent;
    return sys;
  }
  check_common_parent(elems);
  const auto& field = elems[0].parent();
  const auto& base = field->base();
  if (base->characteristic() != p_)
    throw WrongCharacteristicError("Artin-Schreier classes need p = char");
  if (!base->is_finite())
    throw UnsupportedBaseError("as_rank needs a finite constant field");
  long p = static_cast<long>(p_);
  sys.field = field;
  sys.elements = elems;

  auto sup = support_of(elems);
  sys.support_complete = sup.complete;
  sys.primes = sup.primes;
  sys.prime_kinds = sup.kinds;
  for (const auto& e : elems) {
    sys.valuation_matrix.emplace_back();
    for (const auto& q : sys.primes)
      sys.valuation_matrix.back().push_back(val_at(e, q));
  }

  size_t n = elems.size();
  std::vector<size_t> indep;  // indices into elems
  for (size_t j = 0; j < n; ++j) {
    long combos = 1;
    for (size_t i = 0; i < indep.size(); ++i) {
      combos *= p;
      if (combos > 729)
        throw OrderBoundExceededError("as_rank combination cap exceeded");
    }
    bool dependent = false;
    for (long mask = 0; mask < combos && !dependent; ++mask) {
      RatFunc c = elems[j];
      long rem = mask;
      Row lambda(indep.size(), 0);
      for (size_t i = 0; i < indep.size(); ++i) {
        lambda[i] = rem % p;
        rem /= p;
        if (lambda[i])
          c = c - RatFunc::from_int(field, lambda[i]) * elems[indep[i]];
      }
      auto w = wp_solve(c, p_);
      if (w.solved()) {
        dependent = true;
        if (sys.witness.empty()) {
          sys.witness.assign(n, 0);
          sys.witness[j] = 1;
          for (size_t i = 0; i < indep.size(); ++i)
            sys.witness[indep[i]] = modp(-lambda[i], p);
          sys.witness_alpha = w.alpha;
        }
      }
    }
    if (!dependent) indep.push_back(j);
  }
  sys.rank = static_cast<long>(indep.size());
  if (sys.witness.empty()) {
    sys.status = SysStatus::CertifiedIndependent;
  } else {
    sys.status = SysStatus::DependenceWitness;
    sys.note = "rank of the maximal independent subset (exhaustive scan)";
  }
  return sys;
}

ClassSystem as_relative_rank(const std::vector<RatFunc>& elems, const Int& p_) {
  ClassSystem sys;
  sys.kind = ClassKind::ArtinSchreier;
  sys.p = p_;
  sys.relative = true;
  if (elems.empty()) {
    sys.status = SysStatus::CertifiedIndependent;
    return sys;
  }
  check_common_parent(elems);
  const auto& field = elems[0].parent();
  const auto& base = field->base();
  if (base->characteristic() != p_)
    throw WrongCharacteristicError("Artin-Schreier classes need p = char");
  if (field->n_t() == 0 || field->nvars() == field->n_t())
    throw UnsupportedShapeError("relative rank needs both T- and U-variables");
  long p = static_cast<long>(p_);
  sys.field = field;
  sys.elements = elems;

  auto sup = support_of(elems);
  sys.support_complete = sup.complete;
  for (size_t j = 0; j < sup.primes.size(); ++j) {
    if (sup.kinds[j] != PrimeKind::Mixed) continue;
    sys.primes.push_back(sup.primes[j]);
    sys.prime_kinds.push_back(sup.kinds[j]);
  }
  for (const auto& e : elems) {
    sys.valuation_matrix.emplace_back();
    for (const auto& q : sys.primes)
      sys.valuation_matrix.back().push_back(val_at(e, q));
  }

  size_t n = elems.size();
  long combos = 1;
  for (size_t i = 0; i < n; ++i) {
    combos *= p;
    if (combos > 729)
      throw OrderBoundExceededError("as_relative_rank combination cap exceeded");
  }
  // classify every nonzero combination: 1 = certified nonzero mod
  // C(T)+C(U)+wp(F), -1 = verified dependent, 0 = unknown
  std::vector<int> cls(combos, 0);
  std::vector<Row> nus(combos);
  for (long mask = 1; mask < combos; ++mask) {
    Row nu(n, 0);
    long rem = mask;
    RatFunc c = RatFunc::from_int(field, 0);
    for (size_t i = 0; i < n; ++i) {
      nu[i] = rem % p;
      rem /= p;
      if (nu[i]) c = c + RatFunc::from_int(field, nu[i]) * elems[i];
    }
    nus[mask] = nu;
    if (c.is_zero() || c.is_pure_t() || c.is_pure_u()) {
      cls[mask] = -1;
      if (sys.witness.empty()) {
        sys.witness = nu;
        sys.witness_alpha = RatFunc::from_int(field, 0);
      }
      continue;
    }
    // valuation obstruction at a certified mixed prime
    bool obstructed = false;
    auto csup = prime_support({c.den()});
    for (size_t j = 0; j < csup.primes.size() && !obstructed; ++j) {
      if (csup.kinds[j] != PrimeKind::Mixed) continue;
      long v = val_at(c, csup.primes[j]);
      if (v < 0 && modp(v, p) != 0) obstructed = true;
    }
    if (obstructed) {
      cls[mask] = 1;
      continue;
    }
    try {
      auto w = wp_solve(c, p_);
      if (w.solved()) {
        cls[mask] = -1;
        if (sys.witness.empty()) {
          sys.witness = nu;
          sys.witness_alpha = w.alpha;
        }
      }
    } catch (const Error&) {
      // leave unknown
    }
  }

  bool all_nonzero = true, any_dep = false;
  for (long mask = 1; mask < combos; ++mask) {
    if (cls[mask] != 1) all_nonzero = false;
    if (cls[mask] == -1) any_dep = true;
  }
  if (all_nonzero) {
    sys.rank = static_cast<long>(n);
    sys.status = SysStatus::CertifiedIndependent;
    sys.note = "every nontrivial combination obstructed at a mixed prime";
    return sys;
  }
  // greedy certified subset: every combination supported inside it is nonzero
  std::vector<size_t> S;
  for (size_t j = 0; j < n; ++j) {
    bool ok = true;
    for (long mask = 1; mask < combos && ok; ++mask) {
      if (nus[mask][j] == 0) continue;
      bool inside = true;
      for (size_t i = 0; i < n; ++i)
        if (nus[mask][i] != 0 && i != j &&
            std::find(S.begin(), S.end(), i) == S.end())
          inside = false;
      if (inside && cls[mask] != 1) ok = false;
    }
    if (ok) S.push_back(j);
  }
  sys.rank = static_cast<long>(S.size());
  sys.status = any_dep ? SysStatus::DependenceWitness : SysStatus::Inconclusive;
  sys.note = any_dep ? "verified dependence found"
                     : "some combinations could not be classified";
  return sys;
}

// ---------------------------------------------------------------------------
// membership

MembershipResult pth_root_membership(const RatFunc& b,
                                     const std::vector<RatFunc>& A,
                                     const Int& p_) {
  std::vector<RatFunc> all = A;
  all.push_back(b);
  check_common_parent(all);
  const auto& field = b.parent();
  const auto& base = field->base();
  long p = static_cast<long>(p_);
  if (base->characteristic() == p_)
    throw WrongCharacteristicError("Kummer membership needs p != char");
  if (!has_eps_p(base, p_))
    throw MissingRootOfUnityError("base field has no primitive " +
                                  std::to_string(p) + "-th root of unity");
  for (const auto& e : all)
    if (e.is_zero()) throw Error("Kummer class of 0 is undefined");

  MembershipResult out;
  auto sup = support_of(all);
  size_t n = A.size();
  // columns = nu_i, rows = primes: sum nu_i v_q(a_i) = v_q(b) mod p
  Mat M(sup.primes.size(), Row(n, 0));
  Row rhs(sup.primes.size(), 0);
  for (size_t r = 0; r < sup.primes.size(); ++r) {
    for (size_t i = 0; i < n; ++i) M[r][i] = modp(val_at(A[i], sup.primes[r]), p);
    rhs[r] = modp(val_at(b, sup.primes[r]), p);
  }
  auto sol = fp_solve(M, rhs, p, n);
  if (!sol.x) {
    out.verdict = MemberVerdict::NonMember;
    for (size_t r = 0; r < sup.primes.size(); ++r)
      if (sol.farkas[r] != 0) {
        out.witness_prime = sup.primes[r];
        break;
      }
    out.note = "valuation congruences unsolvable mod p";
    return out;
  }
  long kdim = static_cast<long>(sol.kernel.size());
  long cand_count = 1;
  for (long i = 0; i < kdim; ++i) {
    cand_count *= p;
    if (cand_count > 729) {
      out.verdict = MemberVerdict::Inconclusive;
      out.note = "kernel too large for desk-scale enumeration";
      return out;
    }
  }
  bool all_decisive = true;
  for (long mask = 0; mask < cand_count; ++mask) {
    Row nu = *sol.x;
    long rem = mask;
    for (long kd = 0; kd < kdim; ++kd) {
      long lam = rem % p;
      rem /= p;
      for (size_t i = 0; i < n; ++i)
        nu[i] = modp(nu[i] + lam * sol.kernel[kd][i], p);
    }
    RatFunc r = b;
    for (size_t i = 0; i < n; ++i) r = r / A[i].pow(nu[i]);
    RatFunc E = RatFunc::from_int(field, 1);
    for (size_t j = 0; j < sup.primes.size(); ++j) {
      long v = val_at(r, sup.primes[j]);
      if (v % p != 0) throw Error("internal: residual valuation not 0 mod p");
      E = E * RatFunc::of(sup.primes[j]).pow(v / p);
    }
    RatFunc c0 = r / E.pow(p);
    if (!c0.is_constant()) {
      all_decisive = false;
      continue;
    }
    auto d = const_pth_root(base, c0.constant_value(), p);
    if (d) {
      RatFunc alpha = RatFunc::constant(field, *d) * E;
      RatFunc check = alpha.pow(p);
      for (size_t i = 0; i < n; ++i) check = check * A[i].pow(nu[i]);
      if (check != b) throw Error("internal: membership verification failed");
      out.verdict = MemberVerdict::Member;
      out.nu = nu;
      out.alpha = alpha;
      return out;
    }
    if (!base->is_finite() && base->total_degree() > 1)
      all_decisive = false;  // p-th powers in a cyclotomic tower are undecided
  }
  if (all_decisive && sup.complete) {
    out.verdict = MemberVerdict::NonMember;
    out.note = "constant class obstruction after exhausting the kernel";
  } else {
    out.verdict = MemberVerdict::Inconclusive;
    out.note = sup.complete ? "constant classes undecided"
                            : "prime support incomplete";
  }
  return out;
}

// ---------------------------------------------------------------------------
// extension construction

ExtensionDescriptor build_cpn_extension(const ClassSystem& sys) {
  if (sys.status != SysStatus::CertifiedIndependent)
    throw NotCertifiedError("extension construction needs certified independence");
  ExtensionDescriptor ext;
  ext.base = sys.field;
  ext.kind = sys.kind;
  ext.rank = sys.rank;
  ext.generators = sys.elements;
  long p = sys.p == 0 ? 0 : static_cast<long>(sys.p);
  for (const auto& a : sys.elements) {
    std::ostringstream os;
    if (sys.kind == ClassKind::Kummer)
      os << "X^" << p << " - (" << a.to_string() << ")";
    else
      os << "X^" << p << " - X - (" << a.to_string() << ")";
    ext.defining_polys.push_back(os.str());
  }
  size_t n = sys.elements.size();
  ext.galois_action.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) ext.galois_action[i][i] = 1;
  return ext;
}

}  // namespace socle
