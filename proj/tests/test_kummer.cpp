#include "doctest.h"
#include "oracles.hpp"
#include "socle/kummer.hpp"

#include <random>

using namespace socle;
using namespace socle::oracles;

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

TEST_CASE("kummer_rank basics over F_7(t)") {
  FF F(make_prime_field(7), {"t"}, {});
  auto t = F.t;

  auto s1 = kummer_rank({t, t + F.one}, 3);
  CHECK(s1.rank == 2);
  CHECK(s1.status == SysStatus::CertifiedIndependent);

  auto s2 = kummer_rank({t * (t + F.one).pow(3), t}, 3);
  CHECK(s2.rank == 1);
  CHECK(s2.status == SysStatus::DependenceWitness);
  REQUIRE(!s2.witness.empty());
  // witness re-check: the nu-combination is a p-th power
  RatFunc c = F.one;
  for (size_t i = 0; i < 2; ++i)
    c = c * s2.elements[i].pow(s2.witness[i]);
  CHECK(oracle_is_pth_power(c, 3));

  auto s3 = kummer_rank({F.one}, 3);
  CHECK(s3.rank == 0);

  CHECK_THROWS_AS(kummer_rank({t}, 7), WrongCharacteristicError);
  // F_7 has no 5th roots of unity (5 does not divide 6)
  CHECK_THROWS_AS(kummer_rank({t}, 5), MissingRootOfUnityError);
  CHECK_THROWS_AS(kummer_rank({F.zero}, 3), Error);
}

TEST_CASE("kummer_rank resolves constant classes over finite bases") {
  // 3 is a generator of F_7*, so its class mod cubes is nontrivial
  FF F(make_prime_field(7), {"t"}, {});
  auto three = RatFunc::from_int(F.K, 3);
  auto s = kummer_rank({three}, 3);
  CHECK(s.rank == 1);
  CHECK(s.status == SysStatus::CertifiedIndependent);
  // 6 = 3·2 = 3^3·... check: is 6 a cube in F_7? 6 = 6, cubes are {1,6}: yes
  auto six = RatFunc::from_int(F.K, 6);
  auto s2 = kummer_rank({six}, 3);
  CHECK(s2.rank == 0);
}

TEST_CASE("kummer_relative_rank") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t, u = F.u;

  // the q_i = t+u+c_i family
  std::vector<RatFunc> fam;
  for (long c = 0; c < 5; ++c) fam.push_back(t + u + RatFunc::from_int(F.K, c));
  auto s = kummer_relative_rank(fam, 3);
  CHECK(s.rank == 5);
  CHECK(s.status == SysStatus::CertifiedIndependent);
  for (auto k : s.prime_kinds) CHECK(k == PrimeKind::Mixed);

  // a pure-T element has relative rank 0
  auto s2 = kummer_relative_rank({t + F.one}, 3);
  CHECK(s2.rank == 0);
  CHECK(s2.status == SysStatus::DependenceWitness);

  auto s3 = kummer_relative_rank({(t + u) * (t + u + F.one), t + u}, 3);
  CHECK(s3.rank == 2);
  CHECK(s3.status == SysStatus::CertifiedIndependent);

  // relative rank never exceeds the absolute rank
  auto abs = kummer_rank(fam, 3);
  CHECK(s.rank <= abs.rank);
}

TEST_CASE("kummer_relative_rank over a cyclotomic base") {
  FF F(make_cyclotomic(3), {"t"}, {"u"});
  std::vector<RatFunc> fam;
  for (long c = 0; c < 5; ++c)
    fam.push_back(F.t + F.u + RatFunc::from_int(F.K, c));
  auto s = kummer_relative_rank(fam, 3);
  CHECK(s.rank == 5);
  CHECK(s.status == SysStatus::CertifiedIndependent);
}

TEST_CASE("kummer scaling invariance") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  auto t = F.t, u = F.u;
  std::vector<RatFunc> A{t + u, t * u + F.one};
  auto base_rank = kummer_rank(A, 3).rank;
  // multiply by p-th powers
  std::vector<RatFunc> B{A[0] * (t + F.one).pow(3), A[1] * u.pow(6)};
  CHECK(kummer_rank(B, 3).rank == base_rank);
  CHECK(kummer_relative_rank(B, 3).rank == kummer_relative_rank(A, 3).rank);
}

TEST_CASE("wp_solve") {
  FF F2(make_prime_field(2), {"t"}, {});
  auto t = F2.t;

  // b = wp(t^3+t)
  auto a0 = t.pow(3) + t;
  auto b = a0 * a0 - a0;
  auto r = wp_solve(b, 2);
  REQUIRE(r.solved());
  CHECK(r.alpha->pow(2) - *r.alpha == b);

  auto rz = wp_solve(F2.zero, 2);
  REQUIRE(rz.solved());
  CHECK(rz.alpha->is_zero());

  FF F3(make_prime_field(3), {"t"}, {});
  auto r2 = wp_solve(F3.one / F3.t, 3);
  CHECK(!r2.solved());
  REQUIRE(r2.obstruction.has_value());
  CHECK(r2.obstruction->reason == "pole-order");
  CHECK(r2.obstruction->pole_order == 1);

  // pole order divisible by p but still unsolvable: 1/t^2 over F_2
  auto r3 = wp_solve(F2.one / (F2.t * F2.t), 2);
  CHECK(!r3.solved());
  REQUIRE(r3.obstruction.has_value());
  CHECK(r3.obstruction->reason == "inconsistent-system");
  CHECK(!r3.obstruction->farkas.empty());

  CHECK_THROWS_AS(wp_solve(F3.t, 2), WrongCharacteristicError);
  FF Q(FieldDescriptor::rationals(), {"t"}, {});
  CHECK_THROWS_AS(wp_solve(Q.t, 2), UnsupportedBaseError);
}

TEST_CASE("wp_solve round-trips random preimages") {
  FF F(make_finite_field(2, 2, "w"), {"t"}, {});
  std::mt19937 rng(31);
  auto elems = F.K->base()->all_elements();
  for (int trial = 0; trial < 20; ++trial) {
    // random alpha = A/t^k
    MultiPoly A(F.K);
    for (int i = 0; i < 3; ++i)
      A.add_term({int(rng() % 4)}, elems[rng() % elems.size()]);
    int k = int(rng() % 3);
    if (A.is_zero()) continue;
    RatFunc alpha(A, F.t.num().pow(k));
    RatFunc b = alpha.pow(2) - alpha;
    auto r = wp_solve(b, 2);
    REQUIRE(r.solved());
    CHECK(r.alpha->pow(2) - *r.alpha == b);
  }
}

TEST_CASE("as_rank") {
  FF F2(make_prime_field(2), {"t"}, {});
  auto t = F2.t;

  // wp(h) has rank 0
  auto h = t.pow(3) + F2.one / t.pow(2);
  auto s0 = as_rank({h * h - h}, 2);
  CHECK(s0.rank == 0);
  CHECK(s0.status == SysStatus::DependenceWitness);

  auto s1 = as_rank({F2.one / (t * t)}, 2);
  CHECK(s1.rank == 1);
  CHECK(s1.status == SysStatus::CertifiedIndependent);

  FF F4(make_finite_field(2, 2, "w"), {"t"}, {});
  auto w = RatFunc::constant(F4.K, F4.K->base()->generator(0));
  auto s2 = as_rank({F4.one / F4.t, w / F4.t}, 2);
  CHECK(s2.rank == 2);
  CHECK(s2.status == SysStatus::CertifiedIndependent);

  CHECK_THROWS_AS(as_rank({t}, 3), WrongCharacteristicError);
}

TEST_CASE("as_rank witnesses re-check and wp-shifts do not change ranks") {
  FF F(make_prime_field(3), {"t"}, {});
  auto t = F.t;
  auto a1 = F.one / t;
  auto a2 = (F.one + F.one) / t;  // 2/t: dependent with a1 over F_3
  auto s = as_rank({a1, a2, t}, 3);
  CHECK(s.rank == 2);
  CHECK(s.status == SysStatus::DependenceWitness);
  REQUIRE(!s.witness.empty());
  RatFunc comb = F.zero;
  for (size_t i = 0; i < 3; ++i)
    comb = comb + RatFunc::from_int(F.K, s.witness[i]) * s.elements[i];
  CHECK(wp_solve(comb, 3).solved());

  // adding wp(h) leaves the rank unchanged
  auto h = t * t + F.one / t.pow(3);
  auto shifted = as_rank({a1 + (h.pow(3) - h), a2, t}, 3);
  CHECK(shifted.rank == s.rank);
}

TEST_CASE("as_relative_rank") {
  FF F2(make_prime_field(2), {"t"}, {"u"});
  auto q = F2.t + F2.u;

  auto s1 = as_relative_rank({F2.one / q}, 2);
  CHECK(s1.rank == 1);
  CHECK(s1.status == SysStatus::CertifiedIndependent);

  // duplicate classes
  auto s2 = as_relative_rank({F2.one / q, F2.one / q}, 2);
  CHECK(s2.rank == 1);
  CHECK(s2.status == SysStatus::DependenceWitness);

  FF F4(make_finite_field(2, 2, "w"), {"t"}, {"u"});
  auto q4 = F4.t + F4.u;
  auto w = RatFunc::constant(F4.K, F4.K->base()->generator(0));
  auto s3 = as_relative_rank({F4.one / q4, w / q4}, 2);
  CHECK(s3.rank == 2);
  CHECK(s3.status == SysStatus::CertifiedIndependent);

  // the c_i/q family over F_3(t,u)
  FF F3(make_prime_field(3), {"t"}, {"u"});
  auto q3 = F3.t + F3.u;
  auto s4 = as_relative_rank({F3.one / q3, (F3.one + F3.one) / q3}, 3);
  CHECK(s4.rank == 1);  // 2 = 2·1 in F_3, so the classes are dependent

  // pure elements die in the relative group
  auto s5 = as_relative_rank({F3.t, F3.one / q3}, 3);
  CHECK(s5.rank == 1);
  CHECK(s5.status == SysStatus::DependenceWitness);
}

TEST_CASE("pth_root_membership") {
  FF F(make_prime_field(7), {"t"}, {});
  auto t = F.t;

  auto a1 = t * t + F.one;
  auto b1 = a1 * a1 * (t + F.one).pow(3);
  auto m1 = pth_root_membership(b1, {a1}, 3);
  CHECK(m1.verdict == MemberVerdict::Member);
  REQUIRE(m1.nu.size() == 1);
  CHECK(m1.nu[0] == 2);

  // b = t, A = {t^2}, p = 3: member via nu=2 and alpha=1/t
  auto m2 = pth_root_membership(t, {t * t}, 3);
  CHECK(m2.verdict == MemberVerdict::Member);
  REQUIRE(m2.nu.size() == 1);
  CHECK(m2.nu[0] == 2);
  REQUIRE(m2.alpha.has_value());
  CHECK(*m2.alpha * t.pow(1) == *m2.alpha * t);  // sanity
  CHECK((t * t).pow(2) * m2.alpha->pow(3) == t);

  // b = t, A = {u}, p = 2 over F_7(t,u): non-member, witness prime t
  FF G(make_prime_field(7), {"t"}, {"u"});
  auto m3 = pth_root_membership(G.t, {G.u}, 2);
  CHECK(m3.verdict == MemberVerdict::NonMember);
  REQUIRE(m3.witness_prime.has_value());
  CHECK(*m3.witness_prime == G.t.num());

  CHECK_THROWS_AS(pth_root_membership(t, {t}, 7), WrongCharacteristicError);
}

TEST_CASE("oracle equivalence on randomized systems") {
  std::mt19937 rng(97);
  for (long q : {5L, 7L}) {
    FF F(make_prime_field(q), {"t"}, {});
    long p = (q == 5) ? 2 : 3;  // p | q-1 in both cases
    auto rand_elem = [&]() {
      MultiPoly n(F.K), d(F.K);
      for (int i = 0; i < 2; ++i) {
        n.add_term({int(rng() % 4)}, F.K->base()->from_int(long(rng() % q)));
        d.add_term({int(rng() % 3)}, F.K->base()->from_int(long(rng() % q)));
      }
      if (n.is_zero()) n = MultiPoly::from_int(F.K, 1);
      if (d.is_zero()) d = MultiPoly::from_int(F.K, 1);
      return RatFunc(n, d);
    };
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<RatFunc> A;
      int n = 1 + int(rng() % 3);
      for (int i = 0; i < n; ++i) A.push_back(rand_elem());
      auto sys = kummer_rank(A, p);
      long oracle = oracle_kummer_rank(A, p);
      CHECK(sys.rank == oracle);
      // membership cross-check on one random b
      auto b = rand_elem();
      auto mem = pth_root_membership(b, A, p);
      bool om = oracle_member(b, A, p);
      if (mem.verdict == MemberVerdict::Member) CHECK(om);
      if (mem.verdict == MemberVerdict::NonMember) CHECK(!om);
    }
  }
}

TEST_CASE("build_cpn_extension") {
  FF F(make_prime_field(7), {"t"}, {"u"});
  std::vector<RatFunc> fam{F.t + F.u, F.t + F.u + F.one};
  auto sys = kummer_relative_rank(fam, 3);
  REQUIRE(sys.status == SysStatus::CertifiedIndependent);
  auto ext = build_cpn_extension(sys);
  CHECK(ext.rank == 2);
  CHECK(ext.defining_polys.size() == 2);
  CHECK(ext.defining_polys[0].rfind("X^3 - ", 0) == 0);
  CHECK(ext.galois_action.size() == 2);
  CHECK(ext.galois_action[0][0] == 1);
  CHECK(ext.galois_action[0][1] == 0);

  // empty system: trivial extension
  auto ext0 = build_cpn_extension(kummer_rank({}, 3));
  CHECK(ext0.rank == 0);

  // dependent system is rejected
  auto dep = kummer_relative_rank({F.t + F.one}, 3);
  CHECK_THROWS_AS(build_cpn_extension(dep), NotCertifiedError);
}
