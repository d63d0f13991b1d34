#include "doctest.h"
#include "socle/field.hpp"
#include "socle/upoly.hpp"

#include <random>

using namespace socle;

TEST_CASE("prime field construction") {
  auto F7 = make_prime_field(7);
  CHECK(F7->characteristic() == 7);
  CHECK(F7->order() == 7);
  auto F2 = make_prime_field(2);
  CHECK(F2->order() == 2);
  CHECK_THROWS_AS(make_prime_field(4), NotPrimeError);
  CHECK_THROWS_AS(make_prime_field(1), NotPrimeError);
}

TEST_CASE("cyclotomic fields") {
  CHECK(make_cyclotomic(5)->total_degree() == 4);
  CHECK(make_cyclotomic(1)->total_degree() == 1);
  CHECK(make_cyclotomic(8)->total_degree() == 4);
  CHECK(make_cyclotomic(12)->total_degree() == 4);
  // zeta_5 satisfies its minimal polynomial
  auto F = make_cyclotomic(5);
  auto z = F->generator(0);
  auto s = F->one() + z + z.pow(2) + z.pow(3) + z.pow(4);
  CHECK(s.is_zero());
}

TEST_CASE("extension fields") {
  auto F2 = make_prime_field(2);
  // x^2+x+1 over F_2 -> F_4
  auto f4poly = UPoly::from_rationals(F2, {Rat(1), Rat(1), Rat(1)});
  auto F4 = extend_field(F2, f4poly, "w");
  CHECK(F4->order() == 4);
  auto w = F4->generator(0);
  CHECK(w * w == w + F4->one());  // w^2 = w + 1

  // x^2+1 = (x+1)^2 over F_2
  auto sq = UPoly::from_rationals(F2, {Rat(1), Rat(0), Rat(1)});
  CHECK_THROWS_AS(extend_field(F2, sq, "i"), ReducibleError);

  // x^5 - 2 over Q
  auto Q = FieldDescriptor::rationals();
  auto x5m2 = UPoly::from_rationals(Q, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto K = extend_field(Q, x5m2, "r5");
  CHECK(K->total_degree() == 5);
  auto r = K->generator(0);
  CHECK(r.pow(5) == K->from_int(2));
}

TEST_CASE("field axioms on random elements") {
  auto F = make_finite_field(3, 2, "g");  // F_9
  CHECK(F->order() == 9);
  auto elems = F->all_elements();
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = elems[rng() % 9], b = elems[rng() % 9], c = elems[rng() % 9];
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == F->one());
  }
  CHECK_THROWS_AS(F->zero().inv(), DivisionByZeroError);
}

TEST_CASE("frobenius law in characteristic p") {
  auto F = make_finite_field(2, 3, "g");  // F_8
  auto elems = F->all_elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      CHECK((a + b) * (a + b) == a * a + b * b);
}

TEST_CASE("tower arithmetic and inverse in Q(zeta5, 2^(1/5))") {
  auto F = make_cyclotomic(5);
  auto x5m2 = UPoly::from_rationals(F, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto K = extend_field(F, x5m2, "r5");
  CHECK(K->total_degree() == 20);
  auto z = K->generator(0);
  auto r = K->generator(1);
  CHECK(r.pow(5) == K->from_int(2));
  auto e = z * r + K->one();
  CHECK(e * e.inv() == K->one());
  // (2(z + z^4) + 1)^2 = 5
  auto s = z + z.pow(4);
  auto w = K->from_int(2) * s + K->one();
  CHECK(w * w == K->from_int(5));
}

TEST_CASE("span closure dimensions") {
  auto F = make_cyclotomic(5);
  auto x5m2 = UPoly::from_rationals(F, {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  auto K = extend_field(F, x5m2, "r5");
  auto z = K->generator(0);
  auto r = K->generator(1);
  CHECK(span_closure(K, {r}).first == 5);
  CHECK(span_closure(K, {K->one()}).first == 1);
  CHECK(span_closure(K, {z + z.pow(4)}).first == 2);
  CHECK(span_closure(K, {z, r}).first == 20);
  // monotonicity and divisibility
  auto d1 = span_closure(K, {z}).first;
  auto d2 = span_closure(K, {z, r}).first;
  CHECK(d1 <= d2);
  CHECK(20 % d1 == 0);
}

TEST_CASE("multiplicative generator of small fields") {
  auto F = make_finite_field(3, 4, "g");  // F_81
  auto gen = F->multiplicative_generator();
  // order is exactly 80
  CHECK(gen.pow(80).is_one());
  CHECK(!gen.pow(40).is_one());
  CHECK(!gen.pow(16).is_one());
}
