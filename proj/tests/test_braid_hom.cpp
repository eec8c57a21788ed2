#include "doctest.h"

#include "braidperm/braid_hom.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace {
Permutation P(const char* s, int n) { return Permutation::parse(s, n); }
BraidHom mu(int k) { return named_hom("mu", {{"k", k}}); }
}  // namespace

TEST_SUITE("braid_hom") {

TEST_CASE("validation") {
  CHECK(is_valid(mu(5)));
  CHECK(is_valid(BraidHom::constant(4, P("(1,2,3)", 3))));
  const BraidHom bad(3, 3, {P("(1,2)", 3), P("(1,2,3)", 3)});
  const auto rep = validate(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].braid);
  const BraidHom far(4, 4, {P("(1,2)", 4), P("(2,3)", 4), P("(1,3)", 4)});
  CHECK_FALSE(is_valid(far));
  CHECK_THROWS(BraidHom(3, 3, {P("(1,2)", 3)}));
  CHECK_THROWS(BraidHom(3, 3, {P("(1,2)", 3), P("(1,2)", 4)}));
}

TEST_CASE("word images") {
  CHECK(mu(4).image(alpha(4)).to_string() == "(1,2,3,4)");
  CHECK(named_hom("nu6").image(alpha(6)).to_string() == "(1,2,3)(4,5)");
  CHECK(named_hom("nu6").alpha().to_string() == "(1,2,3)(4,5)");
  CHECK(named_hom("nu6").sigma(1).to_string() == "(1,2)(3,4)(5,6)");
  CHECK(mu(6).image(BraidWord::empty(6)).is_identity());
  const auto h = named_hom("psi5_6");
  for (int i = 1; i < 4; ++i)
    CHECK(h.image(BraidWord::sigma(5, i + 1)) == h.alpha() * h.sigma(i) * h.alpha().inverse());
}

TEST_CASE("special presentation reconstruction") {
  const auto h = named_hom("nu6");
  const auto g = BraidHom::from_sigma1_alpha(6, h.sigma(1), h.alpha());
  CHECK(g == h);
  CHECK(BraidHom::from_alpha_beta(6, h.alpha(), h.beta()) == h);
}

TEST_CASE("classification") {
  const auto c6 = classify(mu(6));
  CHECK_FALSE(c6.is_cyclic);
  CHECK(c6.is_transitive);
  CHECK(c6.is_primitive);
  CHECK_FALSE(c6.is_even);
  const auto cn = classify(named_hom("nu6"));
  CHECK_FALSE(cn.is_cyclic);
  CHECK(cn.is_transitive);
  CHECK(image_order(named_hom("nu6")) == 720);
  const auto cc = classify(named_hom("constant", {{"k", 5}, {"n", 4}}));
  CHECK(cc.is_cyclic);
  CHECK(cc.is_abelian);
  CHECK(cc.is_transitive);
  CHECK_THROWS(classify(BraidHom(3, 3, {P("(1,2)", 3), P("(1,2,3)", 3)})));
}

TEST_CASE("conjugacy between homomorphisms") {
  const auto m3 = mu(3);
  CHECK(*hom_conjugacy(m3, m3) == Permutation::identity(3));
  const auto g = P("(1,3)", 3);
  const auto c = hom_conjugacy(m3, m3.conjugate_by(g));
  REQUIRE(c);
  CHECK(*c == g);
  CHECK_FALSE(hom_conjugacy(mu(6), named_hom("nu6")));
  CHECK(hom_conjugacy(named_hom("nu6"), named_hom("kappa_mu6")));
}

TEST_CASE("conjugacy agrees with brute force") {
  // pairs of catalog homs of equal shape, plus random conjugates
  std::vector<BraidHom> homs;
  for (int i = 1; i <= 4; ++i) homs.push_back(named_hom("psi4_6", {{"i", i}}));
  homs.push_back(named_hom("fixed_pair", {{"k", 4}, {"n", 6}}));
  homs.push_back(named_hom("b4_extra", {{"j", 3}, {"n", 6}}));
  for (const auto& a : homs)
    for (const auto& b : homs) {
      if (a.n() != b.n()) continue;
      const auto fast = hom_conjugacy(a, b);
      const auto slow = oracle::brute_force_conjugacy(a, b);
      REQUIRE(static_cast<bool>(fast) == static_cast<bool>(slow));
      if (fast) REQUIRE(a.conjugate_by(*fast) == b);
    }
  const auto g = P("(1,5,2)(3,6)", 6);
  const auto h = named_hom("psi4_6", {{"i", 2}});
  REQUIRE(hom_conjugacy(h, h.conjugate_by(g)));
}

TEST_CASE("reductions and products") {
  const auto ext = disjoint_product(mu(5), BraidHom::constant(5, Permutation::identity(2)));
  CHECK(ext.n() == 7);
  CHECK(reduction(ext, {1, 2, 3, 4, 5}) == mu(5));
  const auto cyc = BraidHom::constant(3, P("(1,2)(3,4)", 4));
  CHECK(reduction(cyc, {1, 2}) == BraidHom::constant(3, P("(1,2)", 2)));
  CHECK_THROWS(reduction(mu(5), {1, 2}));
  const auto psi57 = disjoint_product(named_hom("psi5_6"), BraidHom::constant(5, Permutation::identity(1)));
  CHECK(reduction(psi57, {1, 2, 3, 4, 5, 6}) == named_hom("psi5_6"));
}

TEST_CASE("catalog") {
  for (const auto& name : catalog_names()) CHECK_FALSE(name.empty());
  const auto m1 = named_hom("model", {{"j", 1}, {"k", 7}});
  CHECK(m1.n() == 14);
  for (int i = 1; i <= 6; ++i) {
    const auto want = Permutation::from_cycles(14, {{2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1}});
    CHECK(m1.sigma(i) == want);
  }
  const auto psi = named_hom("psi5_6");
  CHECK(psi.sigma(1).to_string() == "(1,2)(3,4)(5,6)");
  CHECK(psi.sigma(4).to_string() == "(1,2)(3,5)(4,6)");
  const auto nu = named_hom("nu6");
  for (int i = 1; i <= 4; ++i) CHECK(psi.sigma(i) == nu.sigma(i));
  CHECK_THROWS(named_hom("no_such_hom"));
  CHECK_THROWS(named_hom("mu"));
  CHECK_THROWS(named_hom("model", {{"j", 4}, {"k", 7}}));
}

TEST_CASE("every catalog entry validates and generators are conjugate") {
  const std::vector<std::pair<std::string, std::map<std::string, int>>> entries = {
      {"mu", {{"k", 7}}},          {"nu6", {}},
      {"nu4_1", {}},               {"nu4_2", {}},
      {"nu4_3", {}},               {"constant", {{"k", 4}, {"n", 5}}},
      {"psi3", {{"n", 6}, {"i", 3}}}, {"psi4_5", {}},
      {"psi4_6", {{"i", 4}}},      {"psi5_6", {}},
      {"kappa_mu6", {}},           {"model", {{"j", 3}, {"k", 8}}},
      {"mu_lift", {{"n", 6}, {"j", 2}}}, {"psi56_lift", {{"j", 3}}},
      {"nu6_lift", {{"y", 1}}},    {"fixed_pair", {{"k", 5}, {"n", 7}}},
      {"doubled", {{"k", 5}, {"n", 10}}}, {"b4_extra", {{"j", 6}, {"n", 8}}},
      {"b6_s10", {}}};
  for (const auto& [name, params] : entries) {
    INFO(name);
    const auto h = named_hom(name, params);
    REQUIRE(is_valid(h));
    for (int i = 2; i < h.k(); ++i) CHECK(cycle_type(h.sigma(i)) == cycle_type(h.sigma(1)));
    const auto c = classify(h);
    CHECK(c.is_cyclic == c.is_abelian);
    if (!c.is_cyclic && h.k() != 4) {
      CHECK(c.ord_alpha % h.k() == 0);
      CHECK(c.ord_beta % (h.k() - 1) == 0);
    }
  }
}

TEST_CASE("kappa is an outer automorphism of S(6)") {
  const auto m6 = mu(6);
  const auto km = compose(m6, [](const Permutation& p) { return kappa(p); });
  CHECK(is_valid(km));
  CHECK(km == named_hom("kappa_mu6"));
  CHECK(hom_conjugacy(km, named_hom("nu6")));
  const auto kk = compose(km, [](const Permutation& p) { return kappa(p); });
  CHECK(hom_conjugacy(kk, m6));
  // transpositions go to triple transpositions
  CHECK(cycle_type(kappa(P("(1,2)", 6))).parts == std::vector<int>{2, 2, 2});
}

TEST_CASE("model homs are non-cyclic, transitive, imprimitive, pairwise distinct") {
  for (int k : {7, 8}) {
    std::vector<BraidHom> ms;
    for (int j = 1; j <= 3; ++j) ms.push_back(named_hom("model", {{"j", j}, {"k", k}}));
    for (const auto& m : ms) {
      const auto c = classify(m);
      CHECK_FALSE(c.is_cyclic);
      CHECK(c.is_transitive);
      CHECK_FALSE(c.is_primitive);
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) CHECK_FALSE(hom_conjugacy(ms[a], ms[b]));
    CHECK(r_component(ms[0].sigma(1), 2).t() == 0);
    CHECK(r_component(ms[1].sigma(1), 2).t() == k);
    CHECK(r_component(ms[2].sigma(1), 2).t() == k - 2);
  }
}

TEST_CASE("pull back to B4") {
  const auto h = pull_back_to_b4(named_hom("psi3", {{"n", 4}, {"i", 1}}));
  CHECK(h.k() == 4);
  CHECK(is_valid(h));
  CHECK(h.sigma(1) == h.sigma(3));
}

}  // TEST_SUITE
