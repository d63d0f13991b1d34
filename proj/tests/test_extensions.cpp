#include "doctest.h"
#include "socle/extensions.hpp"

#include <numeric>

using namespace socle;

namespace {

// ambient Q(eps5, 2^(1/5)) of degree 20
FieldPtr make_k20() {
  auto F = make_cyclotomic(5);
  auto x5m2 =
      UPoly::from_rationals(F, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  return extend_field(F, x5m2, "r5");
}

// the order-20 Frobenius group acting on K20: a of order 5 with r -> z·r,
// b of order 4 with z -> z^2, subject to b·a·b⁻¹ = a²
GaloisAction make_f20_action(const FieldPtr& K) {
  const auto& G = Catalog::builtin().get("F20");
  int a = -1, b = -1;
  for (int x = 0; x < 20 && (a < 0 || b < 0); ++x) {
    if (a < 0 && generated_subgroup(G, {x}).size() == 5) a = x;
    if (b < 0 && generated_subgroup(G, {x}).size() == 4) b = x;
  }
  // replace b by a conjugate/power satisfying b·a·b⁻¹ = a²
  int aa = G->mul(a, a);
  int found_b = -1;
  for (int x = 0; x < 20; ++x) {
    if (generated_subgroup(G, {x}).size() != 4) continue;
    if (G->mul(G->mul(x, a), G->inverse(x)) == aa) {
      found_b = x;
      break;
    }
  }
  REQUIRE(found_b >= 0);
  b = found_b;
  auto z = K->generator(0);
  auto r = K->generator(1);
  std::vector<std::pair<int, std::vector<FieldElement>>> gen_images = {
      {a, {z, z * r}},          // sigma: z -> z, r -> z·r
      {b, {z * z, r}},          // tau: z -> z², r -> r
  };
  return GaloisAction::build(G, K, gen_images);
}

}  // namespace

TEST_CASE("galois action on Q(eps5, 2^(1/5))") {
  auto K = make_k20();
  auto act = make_f20_action(K);
  auto z = K->generator(0);
  auto r = K->generator(1);
  // every element's map is an automorphism; spot-check orbit sizes
  int moved = 0;
  for (int g = 0; g < 20; ++g)
    if (act.apply(g, r) != r) ++moved;
  CHECK(moved == 16);  // stabilizer of r has order 4
  CHECK(act.fixing_subgroup({r}).size() == 4);
  CHECK(act.fixing_subgroup({z}).size() == 5);
  CHECK(act.fixing_subgroup({z, r}).size() == 1);
  CHECK(act.fixing_subgroup({K->one()}).size() == 20);

  // inconsistent images are rejected: r -> r + 1 is no automorphism
  const auto& G = Catalog::builtin().get("F20");
  CHECK_THROWS_AS(GaloisAction::build(
                      G, K, {{1, {z, r + K->one()}}}),
                  InvalidRelationError);
}

TEST_CASE("disjointness: the two degree-5 radical subfields are not disjoint") {
  auto K = make_k20();
  auto z = K->generator(0);
  auto r = K->generator(1);
  ExtensionInstance inst;
  inst.ambient = K;
  inst.sub1_gens = {r};
  inst.sub2_gens = {z * r};
  inst.galois = make_f20_action(K);
  auto rep = disjointness_check(inst);
  CHECK(rep.dim1 == 5);
  CHECK(rep.dim2 == 5);
  CHECK(rep.dim_compositum == 20);
  CHECK(!rep.linearly_disjoint);
  REQUIRE(rep.group_criterion.has_value());
  CHECK(!*rep.group_criterion);
}

TEST_CASE("disjointness: trivial and biquadratic cases") {
  auto K = make_k20();
  ExtensionInstance triv;
  triv.ambient = K;
  triv.sub1_gens = {K->one()};
  triv.sub2_gens = {K->generator(1)};
  auto rep = disjointness_check(triv);
  CHECK(rep.dim1 == 1);
  CHECK(rep.dim2 == 5);
  CHECK(rep.dim_compositum == 5);
  CHECK(rep.linearly_disjoint);

  // two distinct quadratic subfields of the biquadratic field Q(eps8):
  // sqrt2 = eps8 + eps8⁷ and i = eps8²
  auto K8 = make_cyclotomic(8);
  auto zeta = K8->generator(0);
  auto sqrt2 = zeta + zeta.pow(7);
  CHECK(sqrt2 * sqrt2 == K8->from_int(2));
  ExtensionInstance bi;
  bi.ambient = K8;
  bi.sub1_gens = {sqrt2};
  bi.sub2_gens = {zeta * zeta};
  auto rep2 = disjointness_check(bi);
  CHECK(rep2.dim1 == 2);
  CHECK(rep2.dim2 == 2);
  CHECK(rep2.dim_compositum == 4);
  CHECK(rep2.linearly_disjoint);
  // dimension law
  CHECK(rep2.dim_compositum % std::lcm(rep2.dim1, rep2.dim2) == 0);
  CHECK((rep2.dim1 * rep2.dim2) % rep2.dim_compositum == 0);
}

TEST_CASE("socle subgroups of F20") {
  const auto& G = Catalog::builtin().get("F20");

  auto s0 = socle_subgroup(G, trivial_subgroup(G), 2);
  CHECK(s0.rank == 1);  // the quadratic subfield Q(sqrt5)
  CHECK(G->order() / s0.phi.size() == 2);

  // H = a point stabilizer of order 4: socle trivial
  auto K = make_k20();
  auto act = make_f20_action(K);
  auto H = act.fixing_subgroup({K->generator(1)});
  REQUIRE(H.size() == 4);
  auto s1 = socle_subgroup(G, H, 2);
  CHECK(s1.rank == 0);
  CHECK(s1.phi.size() == 20);

  // elementary abelian: socle is everything
  const auto& E = Catalog::builtin().get("C2xC2xC2");
  auto s2 = socle_subgroup(E, trivial_subgroup(E), 2);
  CHECK(s2.rank == 3);
  CHECK(s2.phi.size() == 1);

  // consistency with frattini_p
  auto [phi, rank] = frattini_p(G, 2);
  CHECK(socle_subgroup(G, trivial_subgroup(G), 2).phi == phi);
}

TEST_CASE("vandermonde coordinates") {
  auto Q = FieldDescriptor::rationals();
  auto K = extend_field(Q, UPoly::from_rationals(Q, {Rat(-2), Rat(0), Rat(1)}),
                        "s2");
  auto s = K->generator(0);
  ConjugateSet conj{{s, -s}};

  // lambda = 3 + 5*sqrt2
  auto lam1 = K->from_int(3) + K->from_int(5) * s;
  auto lam2 = K->from_int(3) - K->from_int(5) * s;
  auto l = vandermonde_coordinates({lam1, lam2}, conj);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == K->from_int(3));
  CHECK(l[1] == K->from_int(5));

  // identity and constant cases
  auto lt = vandermonde_coordinates({s, -s}, conj);
  CHECK(lt[0].is_zero());
  CHECK(lt[1].is_one());
  auto lc = vandermonde_coordinates({K->one(), K->one()}, conj);
  CHECK(lc[0].is_one());
  CHECK(lc[1].is_zero());

  ConjugateSet dup{{s, s}};
  CHECK_THROWS_AS(vandermonde_coordinates({lam1, lam2}, dup),
                  SingularSystemError);
}

TEST_CASE("leading coefficient certificate") {
  auto Q = FieldDescriptor::rationals();
  auto K = extend_field(Q, UPoly::from_rationals(Q, {Rat(-2), Rat(0), Rat(1)}),
                        "s2");
  auto s2 = K->generator(0);

  // phi = sqrt2·t, relation phi² - 2t² = 0
  UPoly phi(K, {K->zero(), s2});
  UPoly f0 = UPoly::from_rationals(K, {Rat(0), Rat(0), Rat(-2)});  // -2t²
  UPoly f1 = UPoly::constant(K, K->zero());
  UPoly f2 = UPoly::constant(K, K->one());
  auto cert = leading_coeff_certificate(phi, {f0, f1, f2});
  REQUIRE(cert.size() == 3);
  CHECK(cert[0] == K->from_int(-2));
  CHECK(cert[1].is_zero());
  CHECK(cert[2].is_one());
  // alpha = sqrt2 satisfies alpha² - 2 = 0
  CHECK((cert[2] * s2 * s2 + cert[0]).is_zero());

  // phi = t with relation 1·phi - t = 0: certificate for alpha = 1
  UPoly t(K, {K->zero(), K->one()});
  auto cert2 = leading_coeff_certificate(
      t, {UPoly(K, {K->zero(), -K->one()}), UPoly::constant(K, K->one())});
  CHECK(cert2.size() == 2);
  CHECK(!(cert2[0].is_zero() && cert2[1].is_zero()));

  // degenerate relations are rejected
  CHECK_THROWS_AS(
      leading_coeff_certificate(t, {UPoly::constant(K, K->zero())}),
      InvalidRelationError);
  CHECK_THROWS_AS(
      leading_coeff_certificate(t, {t, UPoly::constant(K, K->one())}),
      InvalidRelationError);  // t + 1·t != 0
}
