#include "doctest.h"

#include "braidperm/commutator.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace {
Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

long long closure_order(const BPrimeHom& h) { return static_cast<long long>(group_closure(h.k, h.images()).size()); }
}  // namespace

TEST_SUITE("commutator") {

TEST_CASE("canonical and exceptional restrictions") {
  const auto m5 = mu_prime(5);
  CHECK(validate_bprime(m5).ok);
  CHECK(m5.u == P("(1,3,2)", 5));
  CHECK(m5.v == P("(1,2,3)", 5));
  CHECK(m5.ci(1) == P("(1,2)(3,4)", 5));
  CHECK(m5.ci(2) == P("(1,2)(4,5)", 5));
  const auto n6 = nu6_prime();
  CHECK(validate_bprime(n6).ok);
  CHECK(n6.u == P("(1,3,6)(2,5,4)", 6));
  CHECK(n6.w == P("(2,3)(5,6)", 6));
  BPrimeHom triv{6, Permutation::identity(6), Permutation::identity(6), Permutation::identity(6),
                 {Permutation::identity(6), Permutation::identity(6), Permutation::identity(6)}};
  CHECK(triv.is_trivial());
  CHECK(validate_bprime(triv).ok);
  CHECK(closure_order(mu_prime(6)) == 360);
  CHECK(closure_order(n6) == 360);
  CHECK(validate_bprime(mu_prime(4)).ok);
}

TEST_CASE("restriction of a braid homomorphism") {
  for (int k : {5, 6, 7}) CHECK(restrict_to_commutator(named_hom("mu", {{"k", k}})) == mu_prime(k));
  CHECK(hom_conjugacy(named_hom("nu6"), named_hom("nu6")));
  const auto r = restrict_to_commutator(named_hom("nu6"));
  CHECK(validate_bprime(r).ok);
  bool conj = false;
  for (const auto& g : oracle::all_perms(6)) conj = conj || r.conjugate_by(g) == nu6_prime();
  CHECK(conj);
}

TEST_CASE("a broken relation is reported") {
  auto h = mu_prime(5);
  h.w = P("(1,2)(3,4)", 5);
  const auto rep = validate_bprime(h);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("commutator generators in B_k") {
  const auto c5 = lambda_prime_images(5);
  REQUIRE(c5.size() == 2);
  CHECK(words_equal(c5[0], BraidWord(5, {3, -1})));
  CHECK(words_equal(c5[0] * c5[1] * c5[0], c5[1] * c5[0] * c5[1]));
  const auto c6 = lambda_prime_images(6);
  CHECK(words_equal(c6[0] * c6[2], c6[2] * c6[0]));
  for (int k = 4; k <= 7; ++k) {
    const auto cs = lambda_prime_images(k);
    for (int i = 1; i <= k - 3; ++i) {
      CHECK(perm_image(cs[i - 1]) == Permutation::from_cycles(k, {{1, 2}, {i + 2, i + 3}}));
      CHECK(exponent_sum(cs[i - 1]) == 0);
    }
    CHECK(exponent_sum(comm_u(k)) == 0);
    CHECK(exponent_sum(comm_v(k)) == 0);
    CHECK(exponent_sum(comm_w(k)) == 0);
  }
}

TEST_CASE("tameness") {
  CHECK(*is_tame(mu_prime(6)) == std::vector<int>{3, 4, 5, 6});
  CHECK(*is_tame(mu_prime(5)) == std::vector<int>{3, 4, 5});
  CHECK_FALSE(is_tame(nu6_prime()));
  BPrimeHom triv{5, Permutation::identity(5), Permutation::identity(5), Permutation::identity(5),
                 {Permutation::identity(5), Permutation::identity(5)}};
  CHECK_THROWS(is_tame(triv));
}

TEST_CASE("census of B'_k -> S(k)") {
  const auto five = census_bprime(5);
  REQUIRE(five.size() == 1);
  const auto six = census_bprime(6, 2);
  REQUIRE(six.size() == 2);
  int tame = 0;
  for (const auto& rec : six) {
    CHECK(rec.image_order == 360);
    CHECK(rec.image_is_alternating);
    tame += rec.tame_orbit.has_value();
  }
  CHECK(tame == 1);
  CHECK(five[0].image_order == 60);
  for (const auto& rec : five) {
    const auto& h = rec.hom;
    for (const auto& p : h.images()) {
      CHECK_FALSE(p.is_identity());
      CHECK(p.is_even());
    }
  }
  CHECK_THROWS(census_bprime(4));
  CHECK_THROWS(census_bprime(7));
}

}  // TEST_SUITE
