#include "doctest.h"
#include "socle/field.hpp"
#include "socle/upoly.hpp"

using namespace socle;

TEST_CASE("factorization over F_2 and F_3") {
  auto F2 = make_prime_field(2);
  auto F3 = make_prime_field(3);

  // x^2+1 = (x+1)^2 over F_2
  auto f = UPoly::from_rationals(F2, {Rat(1), Rat(0), Rat(1)});
  auto fac = factor_univariate(f);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].second == 2);
  CHECK(fac[0].first.degree() == 1);

  // x^2+1 irreducible over F_3
  auto g = UPoly::from_rationals(F3, {Rat(1), Rat(0), Rat(1)});
  auto gfac = factor_univariate(g);
  REQUIRE(gfac.size() == 1);
  CHECK(gfac[0].second == 1);
  CHECK(gfac[0].first.degree() == 2);

  // x over F_5
  auto F5 = make_prime_field(5);
  auto xf = factor_univariate(UPoly::x(F5));
  REQUIRE(xf.size() == 1);
  CHECK(xf[0].first.degree() == 1);
  CHECK(xf[0].second == 1);
}

TEST_CASE("factorization re-multiplies to input") {
  auto F = make_finite_field(2, 2, "w");  // F_4
  // a messy product
  auto x = UPoly::x(F);
  auto one = UPoly::constant(F, F->one());
  auto w = UPoly::constant(F, F->generator(0));
  auto f = (x + w) * (x + w) * (x * x + x + w) * (x + one);
  auto fac = factor_univariate(f);
  UPoly prod = UPoly::constant(F, f.lead());
  int total_deg = 0;
  for (const auto& [p, m] : fac) {
    for (int i = 0; i < m; ++i) prod = prod * p;
    total_deg += p.degree() * m;
  }
  CHECK(prod == f);
  CHECK(total_deg == f.degree());
}

TEST_CASE("squarefree decomposition handles p-th powers") {
  auto F3 = make_prime_field(3);
  auto x = UPoly::x(F3);
  auto one = UPoly::constant(F3, F3->one());
  auto f = (x + one) * (x + one) * (x + one) * x;  // (x+1)^3 * x
  auto sf = squarefree_decomposition(f);
  REQUIRE(sf.size() == 2);
  bool saw1 = false, saw3 = false;
  for (auto& [g, m] : sf) {
    if (m == 1) { saw1 = true; CHECK(g == x); }
    if (m == 3) { saw3 = true; CHECK(g == x + one); }
  }
  CHECK(saw1);
  CHECK(saw3);
}

TEST_CASE("irreducibility certificates over Q") {
  auto Q = FieldDescriptor::rationals();
  auto x5m2 = UPoly::from_rationals(Q, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto c = certify_irreducible(x5m2);
  CHECK(c.certified);
  CHECK(c.irreducible);

  auto reducible = UPoly::from_rationals(Q, {Rat(-1), Rat(0), Rat(1)});  // x^2-1
  auto c2 = certify_irreducible(reducible);
  CHECK(c2.certified);
  CHECK(!c2.irreducible);

  auto cubic = UPoly::from_rationals(Q, {Rat(2), Rat(0), Rat(0), Rat(1)});  // x^3+2
  auto c3 = certify_irreducible(cubic);
  CHECK(c3.certified);
  CHECK(c3.irreducible);
}

TEST_CASE("coprime-degree certificate") {
  auto F = make_cyclotomic(5);  // degree 4 over Q
  auto x5m2 = UPoly::from_rationals(F, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto c = certify_irreducible(x5m2);
  CHECK(c.certified);
  CHECK(c.irreducible);
}

TEST_CASE("cyclotomic polynomial coefficients") {
  // Phi_1 = x-1, Phi_4 = x^2+1, Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1
  CHECK(cyclotomic_coeffs(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  CHECK(cyclotomic_coeffs(6) == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
  CHECK(cyclotomic_coeffs(12) ==
        std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("gcd and division") {
  auto F7 = make_prime_field(7);
  auto x = UPoly::x(F7);
  auto one = UPoly::constant(F7, F7->one());
  auto a = (x + one) * (x + one) * x;
  auto b = (x + one) * (x * x + one);
  auto g = upoly_gcd(a, b);
  CHECK(g == x + one);
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
}
