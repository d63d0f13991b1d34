#include "doctest.h"
#include "socle/groups.hpp"

using namespace socle;

TEST_CASE("catalog loading and verification") {
  const auto& cat = Catalog::builtin();
  CHECK(cat.names().size() == 74);
  CHECK(cat.get("C4")->order() == 4);
  CHECK(cat.get("Q8")->order() == 8);
  CHECK(cat.get("F20")->order() == 20);
  CHECK(cat.get("S4")->order() == 24);
  CHECK_THROWS_AS(cat.get("nope"), Error);

  // a table with a broken triple is rejected
  std::vector<int> bad{0, 1, 1, 0};  // 1*1 = 0 ok; make identity wrong
  bad = {0, 1, 1, 1};
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 2, bad), NotAGroupError);
}

TEST_CASE("permutation groups") {
  // F20 generated by a 5-cycle and an order-4 normalizing element
  auto F20 = FiniteGroup::from_permutations("F20p",
                                            {"(1,2,3,4,5)", "(2,3,5,4)"});
  CHECK(F20->order() == 20);
  auto S3 = FiniteGroup::from_permutations("S3p", {"(1,2)", "(1,2,3)"});
  CHECK(S3->order() == 6);
  auto C1 = FiniteGroup::from_permutations("C1p", {});
  CHECK(C1->order() == 1);
}

TEST_CASE("subgroup enumeration") {
  const auto& cat = Catalog::builtin();
  CHECK(subgroups(cat.get("C1")).size() == 1);
  CHECK(subgroups(cat.get("C4")).size() == 3);
  CHECK(subgroups(cat.get("Q8")).size() == 6);
  CHECK(subgroups(cat.get("S3")).size() == 6);
  CHECK(subgroups(cat.get("C2xC2")).size() == 5);
  // deterministic order: sizes ascending
  auto subs = subgroups(cat.get("D4"));
  for (size_t i = 1; i < subs.size(); ++i)
    CHECK(!(subs[i] < subs[i - 1]));
  // Lagrange
  for (const auto& s : subs) CHECK(8 % s.size() == 0);
}

TEST_CASE("frattini subgroups") {
  const auto& cat = Catalog::builtin();

  auto [phi_c4, r_c4] = frattini_p(cat.get("C4"), 2);
  CHECK(phi_c4.size() == 2);
  CHECK(r_c4 == 1);

  auto [phi_q8, r_q8] = frattini_p(cat.get("Q8"), 2);
  CHECK(phi_q8.size() == 2);
  CHECK(r_q8 == 2);

  auto [phi_ea, r_ea] = frattini_p(cat.get("C2xC2xC2"), 2);
  CHECK(phi_ea.size() == 1);
  CHECK(r_ea == 3);

  auto [phi_c9, r_c9] = frattini_p(cat.get("C9"), 3);
  CHECK(phi_c9.size() == 3);
  CHECK(r_c9 == 1);

  // p not dividing the order: Phi = G, rank 0
  auto [phi_c5, r_c5] = frattini_p(cat.get("C5"), 2);
  CHECK(phi_c5.size() == 5);
  CHECK(r_c5 == 0);
}

TEST_CASE("frattini respects direct products") {
  // spot-check the product law by building C4 x C2 as a table
  const auto& cat = Catalog::builtin();
  auto [phi, rank] = frattini_p(cat.get("C4xC2"), 2);
  auto [phi4, r4] = frattini_p(cat.get("C4"), 2);
  auto [phi2, r2] = frattini_p(cat.get("C2"), 2);
  CHECK(rank == r4 + r2);
  CHECK(phi.size() == phi4.size() * phi2.size());
  auto [phiq, rq] = frattini_p(cat.get("Q8xC2"), 2);
  auto [phiq8, rq8] = frattini_p(cat.get("Q8"), 2);
  CHECK(rq == rq8 + 1);
  CHECK(phiq.size() == phiq8.size());
}

TEST_CASE("relative frattini") {
  const auto& cat = Catalog::builtin();
  const auto& G = cat.get("C2xC2");

  CHECK(relative_frattini(G, full_subgroup(G), 2).size() == 4);
  CHECK(relative_frattini(G, trivial_subgroup(G), 2).size() == 1);

  // H = a factor: Phi(G,H) = H
  auto subs = subgroups(G);
  for (const auto& H : subs)
    if (H.size() == 2) CHECK(relative_frattini(G, H, 2) == H);

  // monotonicity on a richer group
  const auto& D4 = cat.get("D4");
  auto dsubs = subgroups(D4);
  for (const auto& H : dsubs)
    for (const auto& K : dsubs) {
      bool nested = true;
      for (int h : H.members)
        if (!K.contains(h)) nested = false;
      if (!nested) continue;
      auto fH = relative_frattini(D4, H, 2);
      auto fK = relative_frattini(D4, K, 2);
      for (int h : fH.members) CHECK(fK.contains(h));
    }
}

TEST_CASE("p-group generation fact") {
  // for a p-group, H·Φ^p(G) = G forces H = G
  const auto& cat = Catalog::builtin();
  for (const std::string name : {"C4", "C8", "D4", "Q8", "C2xC2", "C9",
                                 "C3xC3", "C16", "Q16", "SD16"}) {
    const auto& G = cat.get(name);
    long p = (G->order() % 2 == 0) ? 2 : 3;
    auto [phi, rank] = frattini_p(G, p);
    for (const auto& H : subgroups(G)) {
      auto prod = subgroup_product(H, phi);
      REQUIRE(prod.has_value());
      if (prod->size() == G->order()) CHECK(H.size() == G->order());
    }
  }
}

TEST_CASE("socle equation verification") {
  const auto& cat = Catalog::builtin();

  // direct product case: holds under the core hypothesis
  const auto& G = cat.get("C4xC2");
  auto subs = subgroups(G);
  // N = the C4 factor (cyclic of order 4), H = a complement of order 2
  Subgroup N, H;
  for (const auto& s : subs) {
    if (s.size() != 4) continue;
    for (int m : s.members)
      if (generated_subgroup(G, {m}).size() == 4) N = s;
  }
  for (const auto& s : subs)
    if (s.size() == 2 && intersect(s, N).size() == 1) H = s;
  REQUIRE(N.size() == 4);
  REQUIRE(H.size() == 2);
  auto chk = verify_socle_equation(G, N, H, 2);
  CHECK(chk.core_hypothesis);
  CHECK(chk.verdict == SocleVerdict::Holds);

  // N = H = G holds trivially
  auto chk2 = verify_socle_equation(G, full_subgroup(G), full_subgroup(G), 2);
  CHECK(chk2.verdict == SocleVerdict::Holds);

  // F20 with N a point stabilizer and H the 5-cycle subgroup
  const auto& F20 = cat.get("F20");
  auto fs = subgroups(F20);
  Subgroup stab, five;
  for (const auto& s : fs)
    if (s.size() == 5) five = s;
  for (const auto& s : fs)
    if (s.size() == 4 && normal_core(s).size() == 1 &&
        product_set_size(s, five) == 20)
      stab = s;
  REQUIRE(stab.size() == 4);
  REQUIRE(five.size() == 5);
  auto chk3 = verify_socle_equation(F20, stab, five, 2);
  CHECK(!chk3.core_hypothesis);
  CHECK(chk3.nh_is_g);
  CHECK((chk3.verdict == SocleVerdict::Holds ||
         chk3.verdict == SocleVerdict::Fails));
}

TEST_CASE("explorer") {
  const auto& cat = Catalog::builtin();
  auto recs = explore_counterexamples(cat, 1, 2);
  CHECK(recs.empty());
  auto recs8 = explore_counterexamples(cat, 8, 2);
  // every record is re-verifiable
  for (const auto& r : recs8) {
    const auto& G = cat.get(r.group);
    auto chk = verify_socle_equation(G, r.N, r.H, 2);
    CHECK(chk.equation_holds == r.equation_holds);
    CHECK(!chk.core_hypothesis);
    CHECK(chk.nh_is_g);
  }
  CHECK_THROWS_AS(explore_counterexamples(cat, 100, 2),
                  OrderBoundExceededError);
}
