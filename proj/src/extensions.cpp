#include "socle/extensions.hpp"

#include <algorithm>
#include <map>

namespace socle {

namespace {

// exponent tuples of the monomial basis of a tower, in flat-index order
std::vector<std::vector<int>> basis_exponents(const FieldPtr& F) {
  std::vector<long> D;  // block size below each level
  long acc = 1;
  for (const auto& s : F->steps()) {
    D.push_back(acc);
    acc *= s.degree;
  }
  std::vector<std::vector<int>> out(F->total_degree());
  for (long b = 0; b < F->total_degree(); ++b) {
    std::vector<int> e(F->steps().size(), 0);
    long rem = b;
    for (int lvl = static_cast<int>(F->steps().size()) - 1; lvl >= 0; --lvl) {
      e[lvl] = static_cast<int>(rem / D[lvl]);
      rem %= D[lvl];
    }
    out[b] = std::move(e);
  }
  return out;
}

using Matrix = std::vector<Rat>;  // dim*dim row-major

FieldElement apply_matrix(const FieldPtr& F, const Matrix& M,
                          const FieldElement& e) {
  long dim = F->total_degree();
  const Int& ch = F->characteristic();
  std::vector<Rat> out(dim, Rat(0));
  for (long i = 0; i < dim; ++i) {
    const Rat& c = e.coords()[i];
    if (c == 0) continue;
    for (long j = 0; j < dim; ++j)
      out[j] = sc_add(ch, out[j], sc_mul(ch, c, M[i * dim + j]));
  }
  return F->element(std::move(out));
}

// first B, then A (composition of the corresponding automorphisms)
Matrix compose(const FieldPtr& F, const Matrix& A, const Matrix& B) {
  long dim = F->total_degree();
  const Int& ch = F->characteristic();
  Matrix C(dim * dim, Rat(0));
  for (long i = 0; i < dim; ++i)
    for (long k = 0; k < dim; ++k) {
      const Rat& b = B[i * dim + k];
      if (b == 0) continue;
      for (long j = 0; j < dim; ++j)
        C[i * dim + j] = sc_add(ch, C[i * dim + j],
                                sc_mul(ch, b, A[k * dim + j]));
    }
  return C;
}

bool matrix_invertible(const FieldPtr& F, Matrix M) {
  long dim = F->total_degree();
  const Int& ch = F->characteristic();
  long rank = 0;
  for (long c = 0; c < dim && rank < dim; ++c) {
    long piv = rank;
    while (piv < dim && M[piv * dim + c] == 0) ++piv;
    if (piv == dim) continue;
    std::swap_ranges(M.begin() + piv * dim, M.begin() + (piv + 1) * dim,
                     M.begin() + rank * dim);
    Rat inv = sc_inv(ch, M[rank * dim + c]);
    for (long j = 0; j < dim; ++j)
      M[rank * dim + j] = sc_mul(ch, M[rank * dim + j], inv);
    for (long i = 0; i < dim; ++i) {
      if (i == rank) continue;
      Rat f = M[i * dim + c];
      if (f == 0) continue;
      for (long j = 0; j < dim; ++j)
        M[i * dim + j] = sc_sub(ch, M[i * dim + j],
                                sc_mul(ch, f, M[rank * dim + j]));
    }
    ++rank;
  }
  return rank == dim;
}

}  // namespace

GaloisAction GaloisAction::build(
    GroupPtr group, FieldPtr ambient,
    const std::vector<std::pair<int, std::vector<FieldElement>>>& gen_images) {
  GaloisAction act;
  act.group_ = group;
  act.ambient_ = ambient;
  act.dim_ = ambient->total_degree();
  long dim = act.dim_;
  auto exps = basis_exponents(ambient);
  std::vector<FieldElement> basis;
  for (const auto& e : exps) {
    FieldElement b = ambient->one();
    for (size_t lvl = 0; lvl < e.size(); ++lvl)
      b = b * ambient->generator(static_cast<int>(lvl)).pow(e[lvl]);
    basis.push_back(b);
  }

  auto build_matrix = [&](const std::vector<FieldElement>& imgs) {
    if (imgs.size() != ambient->steps().size())
      throw InvalidRelationError("one image per tower generator required");
    Matrix M(dim * dim, Rat(0));
    std::vector<FieldElement> basis_imgs;
    for (long b = 0; b < dim; ++b) {
      FieldElement im = ambient->one();
      for (size_t lvl = 0; lvl < exps[b].size(); ++lvl)
        im = im * imgs[lvl].pow(exps[b][lvl]);
      for (long j = 0; j < dim; ++j) M[b * dim + j] = im.coords()[j];
      basis_imgs.push_back(im);
    }
    // ring-homomorphism check on all basis pairs, then invertibility
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j)
        if (apply_matrix(ambient, M, basis[i] * basis[j]) !=
            basis_imgs[i] * basis_imgs[j])
          throw InvalidRelationError(
              "generator images do not define a ring homomorphism");
    if (!matrix_invertible(ambient, M))
      throw InvalidRelationError("generator image map is not invertible");
    return M;
  };

  int n = group->order();
  std::vector<std::optional<Matrix>> maps(n);
  Matrix id(dim * dim, Rat(0));
  for (long i = 0; i < dim; ++i) id[i * dim + i] = 1;
  maps[0] = id;
  std::vector<std::pair<int, Matrix>> gens;
  for (const auto& [g, imgs] : gen_images) {
    if (g < 0 || g >= n) throw InvalidRelationError("generator index out of range");
    gens.emplace_back(g, build_matrix(imgs));
  }
  std::vector<int> frontier{0};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& [g, Mg] : gens) {
      int h = group->mul(frontier[i], g);
      // σ_{f·g} = σ_f ∘ σ_g
      Matrix Mh = compose(ambient, *maps[frontier[i]], Mg);
      if (maps[h]) {
        if (*maps[h] != Mh)
          throw InvalidRelationError(
              "generator images violate the group relations");
      } else {
        maps[h] = std::move(Mh);
        frontier.push_back(h);
      }
    }
  for (int g = 0; g < n; ++g)
    if (!maps[g])
      throw InvalidRelationError("given elements do not generate the group");
  act.maps_.resize(n);
  for (int g = 0; g < n; ++g) act.maps_[g] = std::move(*maps[g]);
  return act;
}

FieldElement GaloisAction::apply(int g, const FieldElement& e) const {
  if (g < 0 || g >= group_->order()) throw Error("group element out of range");
  return apply_matrix(ambient_, maps_[g], e);
}

Subgroup GaloisAction::fixing_subgroup(
    const std::vector<FieldElement>& elems) const {
  std::vector<int> members;
  for (int g = 0; g < group_->order(); ++g) {
    bool fixes = true;
    for (const auto& e : elems)
      if (apply(g, e) != e) fixes = false;
    if (fixes) members.push_back(g);
  }
  return make_subgroup(group_, std::move(members));
}

// ---------------------------------------------------------------------------

DisjointnessReport disjointness_check(const ExtensionInstance& inst) {
  DisjointnessReport rep;
  rep.dim1 = span_closure(inst.ambient, inst.sub1_gens).first;
  rep.dim2 = span_closure(inst.ambient, inst.sub2_gens).first;
  std::vector<FieldElement> both = inst.sub1_gens;
  both.insert(both.end(), inst.sub2_gens.begin(), inst.sub2_gens.end());
  rep.dim_compositum = span_closure(inst.ambient, both).first;
  rep.linearly_disjoint = rep.dim_compositum == rep.dim1 * rep.dim2;
  if (inst.galois) {
    const auto& act = *inst.galois;
    auto H1 = act.fixing_subgroup(inst.sub1_gens);
    auto H2 = act.fixing_subgroup(inst.sub2_gens);
    int order = act.group()->order();
    if (order == rep.dim1 * H1.size() && order == rep.dim2 * H2.size()) {
      bool crit = product_set_size(H1, H2) == order;
      rep.group_criterion = crit;
      if (crit != rep.linearly_disjoint)
        throw Error("internal: dimension and group criteria disagree");
    }
  }
  return rep;
}

SocleSubgroup socle_subgroup(const GroupPtr& G, const Subgroup& H, long p) {
  SocleSubgroup out;
  out.phi = relative_frattini(G, H, p);
  long quot = G->order() / out.phi.size();
  while (quot > 1) {
    if (quot % p != 0)
      throw Error("internal: socle quotient is not a p-group");
    quot /= p;
    ++out.rank;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> vandermonde_coordinates(
    const std::vector<FieldElement>& lambda_images, const ConjugateSet& conj) {
  size_t n = conj.theta.size();
  if (lambda_images.size() != n)
    throw Error("need one image per conjugate");
  if (n == 0) return {};
  const auto& F = conj.theta[0].parent();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (conj.theta[i] == conj.theta[j])
        throw SingularSystemError("repeated conjugate");
  // A[i][k] = theta_i^k
  std::vector<std::vector<FieldElement>> A(n);
  std::vector<FieldElement> b = lambda_images;
  for (size_t i = 0; i < n; ++i) {
    FieldElement pw = F->one();
    for (size_t k = 0; k < n; ++k) {
      A[i].push_back(pw);
      pw = pw * conj.theta[i];
    }
  }
  // Gaussian elimination with exact field arithmetic
  std::vector<size_t> perm(n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c].is_zero()) ++piv;
    if (piv == n) throw SingularSystemError("singular Vandermonde system");
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    FieldElement inv = A[c][c].inv();
    for (size_t k = 0; k < n; ++k) A[c][k] = A[c][k] * inv;
    b[c] = b[c] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || A[i][c].is_zero()) continue;
      FieldElement f = A[i][c];
      for (size_t k = 0; k < n; ++k) A[i][k] = A[i][k] - f * A[c][k];
      b[i] = b[i] - f * b[c];
    }
  }
  // residual re-check
  for (size_t i = 0; i < n; ++i) {
    FieldElement acc = F->zero();
    FieldElement pw = F->one();
    for (size_t k = 0; k < n; ++k) {
      acc = acc + b[k] * pw;
      pw = pw * conj.theta[i];
    }
    if (acc != lambda_images[i])
      throw Error("internal: Vandermonde residual nonzero");
  }
  return b;
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> leading_coeff_certificate(
    const UPoly& phi, const std::vector<UPoly>& relation) {
  if (relation.empty() || relation.back().is_zero())
    throw InvalidRelationError("leading relation coefficient f_n is zero");
  if (phi.is_zero()) throw InvalidRelationError("phi is zero");
  const auto& F = phi.field();
  // re-verify the relation exactly
  UPoly acc = UPoly::constant(F, F->zero());
  UPoly pw = UPoly::constant(F, F->one());
  for (size_t i = 0; i < relation.size(); ++i) {
    acc = acc + relation[i] * pw;
    pw = pw * phi;
  }
  if (!acc.is_zero())
    throw InvalidRelationError("relation does not evaluate to zero");

  size_t n = relation.size() - 1;
  int dphi = phi.degree();
  int N = -1;
  for (size_t i = 0; i <= n; ++i) {
    if (relation[i].is_zero()) continue;
    N = std::max<int>(N, relation[i].degree() + static_cast<int>(i) * dphi);
  }
  FieldElement alpha = phi.lead();
  std::vector<FieldElement> a(n + 1, F->zero());
  for (size_t i = 0; i <= n; ++i) {
    if (relation[i].is_zero()) continue;
    if (relation[i].degree() + static_cast<int>(i) * dphi == N)
      a[i] = relation[i].lead();
  }
  // the certificate must be nontrivial and vanish at alpha
  bool nontrivial = false;
  FieldElement val = F->zero();
  for (size_t i = 0; i <= n; ++i) {
    if (!a[i].is_zero()) nontrivial = true;
    val = val + a[i] * alpha.pow(static_cast<long>(i));
  }
  if (!nontrivial || !val.is_zero())
    throw Error("internal: leading-coefficient certificate failed");
  return a;
}

}  // namespace socle
