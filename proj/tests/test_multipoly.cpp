#include "doctest.h"
#include "socle/multipoly.hpp"

#include <random>

using namespace socle;

namespace {

struct FF {
  FunFieldPtr K;
  RatFunc t, u, one, zero;
  FF(FieldPtr base, std::vector<std::string> tv, std::vector<std::string> uv) {
    K = FunctionFieldDescriptor::make(std::move(base), std::move(tv),
                                      std::move(uv));
    t = RatFunc::variable(K, 0);
    if (K->nvars() > 1) u = RatFunc::variable(K, 1);
    one = RatFunc::from_int(K, 1);
    zero = RatFunc::from_int(K, 0);
  }
};

}  // namespace

TEST_CASE("rational function normalization") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t, u = F.u;

  // (t^2 - u^2)/(t - u) reduces to t + u
  auto f = (t * t - u * u) / (t - u);
  CHECK(f == t + u);
  CHECK(f.is_polynomial());

  // 0/t is the canonical zero
  RatFunc z(MultiPoly(F.K), F.t.num());
  CHECK(z.is_zero());
  CHECK(z.den().is_constant());
  CHECK(z.den().constant_value().is_one());

  // 2t/2 normalizes to t with monic denominator
  auto g = RatFunc(F.t.num() * F.K->base()->from_int(2),
                   MultiPoly::from_int(F.K, 2));
  CHECK(g == t);

  // denominator is grlex-monic after every operation
  auto h = (t + u) / (RatFunc::from_int(F.K, 3) * u);
  CHECK(h.den().leading().second.is_one());

  CHECK_THROWS_AS(RatFunc(F.one.num(), MultiPoly(F.K)), ZeroDenominatorError);
  CHECK_THROWS_AS(F.t / F.zero, DivisionByZeroError);
  CHECK_THROWS_AS(F.zero.inv(), DivisionByZeroError);
}

TEST_CASE("normalization is idempotent and arithmetic is exact") {
  FF F(make_prime_field(3), {"t"}, {"u"});
  std::mt19937 rng(7);
  auto rand_poly = [&]() {
    MultiPoly p(F.K);
    for (int k = 0; k < 4; ++k) {
      Exponents e{int(rng() % 3), int(rng() % 3)};
      p.add_term(e, F.K->base()->from_int(long(rng() % 3)));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    if (b.is_zero() || c.is_zero()) continue;
    RatFunc f(a, b), g(c, b);
    // renormalizing a normalized fraction changes nothing
    CHECK(RatFunc(f.num(), f.den()) == f);
    // field laws
    CHECK(f + g == g + f);
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    if (!g.is_zero()) CHECK((f / g) * g == f);
    CHECK(f * (g + RatFunc::from_int(F.K, 1)) == f * g + f);
  }
}

TEST_CASE("multivariate gcd") {
  FF F(make_prime_field(5), {"t"}, {"u"});
  auto t = F.t.num(), u = F.u.num();
  auto a = (t + u) * (t + u) * (t - u);
  auto b = (t + u) * (t * t + u);
  auto g = mp_gcd(a, b);
  CHECK(g == (t + u).monic());
  CHECK(mp_gcd(t, u).is_constant());
  // gcd divides both arguments exactly
  CHECK(a.exact_div(g).has_value());
  CHECK(b.exact_div(g).has_value());
}

TEST_CASE("valuations at certified primes") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t, u = F.u;
  auto q = (t + u).num();  // linear, hence certified prime

  auto v1 = valuation((t + u).pow(3) / (t - u), q);
  CHECK(v1.prime_certified);
  CHECK(v1.certificate == "linear");
  CHECK(v1.prime_kind == PrimeKind::Mixed);
  REQUIRE(v1.value.has_value());
  CHECK(*v1.value == 3);

  auto v2 = valuation(F.one / (t + u), q);
  REQUIRE(v2.value.has_value());
  CHECK(*v2.value == -1);

  auto v3 = valuation(F.zero, q);
  CHECK(!v3.value.has_value());  // +infinity

  // v(fg) = v(f)+v(g), v(f+g) >= min(v(f),v(g))
  std::mt19937 rng(11);
  auto rand_rf = [&]() {
    MultiPoly n(F.K), d(F.K);
    for (int k = 0; k < 3; ++k) {
      n.add_term({int(rng() % 3), int(rng() % 2)},
                 F.K->base()->from_int(long(rng() % 7)));
      d.add_term({int(rng() % 2), int(rng() % 2)},
                 F.K->base()->from_int(long(rng() % 7)));
    }
    if (d.is_zero()) d = MultiPoly::from_int(F.K, 1);
    return RatFunc(n, d);
  };
  for (int trial = 0; trial < 25; ++trial) {
    RatFunc f = rand_rf(), g = rand_rf();
    if (f.is_zero() || g.is_zero()) continue;
    long vf = *valuation(f, q).value;
    long vg = *valuation(g, q).value;
    CHECK(*valuation(f * g, q).value == vf + vg);
    RatFunc s = f + g;
    if (!s.is_zero()) CHECK(*valuation(s, q).value >= std::min(vf, vg));
  }

  // a nonzero pure-T function has valuation 0 at every mixed prime
  auto pure = (t * t + t + F.one) / t;
  CHECK(*valuation(pure, q).value == 0);

  // uncertified prime is rejected unless asserted
  auto big = (t * t + u).num() * (t + u).num() + F.one.num();
  if (!certify_prime(big).certified) {
    CHECK_THROWS_AS(valuation(t, big), NotIrreducibleError);
    auto va = valuation(t, big, /*assert_irreducible=*/true);
    CHECK(va.certificate == "asserted");
  }
}

TEST_CASE("prime certification") {
  FF F(make_prime_field(3), {"t"}, {"u"});
  auto t = F.t.num(), u = F.u.num();

  auto lin = certify_prime(t + u + MultiPoly::from_int(F.K, 1));
  CHECK(lin.certified);
  CHECK(lin.kind == PrimeKind::Mixed);

  // t^2+1 = (t+i)(t-i)? over F_3: t^2+1 is irreducible
  auto uni = certify_prime(t * t + MultiPoly::from_int(F.K, 1));
  CHECK(uni.certified);
  CHECK(uni.kind == PrimeKind::PureT);

  // t^2+2 = (t+1)(t+2) over F_3: reducible, so not a prime
  auto red = certify_prime(t * t + MultiPoly::from_int(F.K, 2));
  CHECK(!red.certified);

  auto cst = certify_prime(MultiPoly::from_int(F.K, 2));
  CHECK(!cst.certified);

  auto pu = certify_prime(u + MultiPoly::from_int(F.K, 1));
  CHECK(pu.certified);
  CHECK(pu.kind == PrimeKind::PureU);
}

TEST_CASE("prime support refinement") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t.num(), u = F.u.num();
  auto one = MultiPoly::from_int(F.K, 1);

  // {(t+u)(t+u+1), t+u} refines to {t+u, t+u+1}
  auto s = prime_support({(t + u) * (t + u + one), t + u});
  CHECK(s.complete);
  REQUIRE(s.primes.size() == 2);
  CHECK(s.primes[0] == (t + u).monic());
  CHECK(s.primes[1] == (t + u + one).monic());
  CHECK(s.kinds[0] == PrimeKind::Mixed);

  // squarefull input: (t+1)^3 * t
  auto s2 = prime_support({(t + one).pow(3) * t});
  CHECK(s2.complete);
  REQUIRE(s2.primes.size() == 2);

  // univariate-in-disguise splits via factorization: t^2+3t+2 = (t+1)(t+2)
  auto s3 = prime_support({t * t + MultiPoly::from_int(F.K, 3) * t +
                           MultiPoly::from_int(F.K, 2)});
  CHECK(s3.complete);
  CHECK(s3.primes.size() == 2);

  // products of the primes (with uncertified parts) recover each input
  auto f = (t + u) * (t + u) * (t * t + one) * u;
  auto s4 = prime_support({f});
  CHECK(s4.complete);
  MultiPoly prod = one;
  for (const auto& q : s4.primes) prod = prod * q.pow(poly_multiplicity(f, q));
  CHECK(prod.monic() == f.monic());
}

TEST_CASE("p-th roots and perfect powers in characteristic p") {
  FF F(make_prime_field(3), {"t"}, {"u"});
  auto t = F.t.num(), u = F.u.num();
  auto f = (t + u).pow(3);
  auto r = mp_pth_root(f);
  REQUIRE(r.has_value());
  CHECK(*r == t + u);
  CHECK(!mp_pth_root(t + u).has_value());

  // with a non-prime coefficient field: coefficient roots via Frobenius
  FF G(make_finite_field(2, 2, "w"), {"t"}, {});
  auto w = MultiPoly::constant(G.K, G.K->base()->generator(0));
  auto g = (G.t.num() + w) * (G.t.num() + w);
  auto r2 = mp_pth_root(g);
  REQUIRE(r2.has_value());
  CHECK(*r2 == G.t.num() + w);
}

TEST_CASE("substitution") {
  FF F(make_prime_field(5), {"t"}, {"u"});
  auto t = F.t, u = F.u;

  // t -> u+1 in t^2 + u
  auto f = t * t + u;
  auto g = substitute(f, {{"t", u + F.one}});
  CHECK(g == (u + F.one) * (u + F.one) + u);

  // unmapped variables stay
  CHECK(substitute(t + u, {{"u", F.zero}}) == t);

  // substitution into a pole
  auto h = F.one / t;
  CHECK_THROWS_AS(substitute(h, {{"t", F.zero}}), PoleAtSubstitutionError);

  // composing with rational images
  auto k = substitute(t, {{"t", F.one / u}});
  CHECK(k == F.one / u);
}

TEST_CASE("freshman's dream holds exactly in characteristic p") {
  for (long p : {2L, 3L, 5L}) {
    FF F(make_prime_field(p), {"t"}, {"u"});
    auto x = (F.t + F.u) / (F.t - F.u + F.one);
    auto y = F.t * F.u + F.one;
    CHECK(freshman_check(x, y, Int(p)));
    CHECK(freshman_check(F.t, F.u, Int(p)));
  }
  FF Q(FieldDescriptor::rationals(), {"t"}, {"u"});
  CHECK_THROWS_AS(freshman_check(Q.t, Q.u, Int(2)), WrongCharacteristicError);
  FF F3(make_prime_field(3), {"t"}, {});
  CHECK_THROWS_AS(freshman_check(F3.t, F3.one, Int(2)),
                  WrongCharacteristicError);
}

TEST_CASE("grlex order and degrees") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t.num(), u = F.u.num();
  auto f = t * t * u + t + u * u * u * u;
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(1) == 4);
  // leading term is the u^4 monomial (highest total degree)
  CHECK(f.leading().first == Exponents{0, 4});
  CHECK(f.is_pure_t() == false);
  CHECK((t * t + t).is_pure_t());
  CHECK((u + MultiPoly::from_int(F.K, 1)).is_pure_u());
}
