#include "doctest.h"

#include <set>

#include "braidperm/census.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace {

std::vector<CensusRecord> run(int k, int n, bool nc = false, bool tr = false, int workers = 1) {
  CensusQuery q;
  q.k = k;
  q.n = n;
  q.non_cyclic = nc;
  q.transitive = tr;
  q.workers = workers;
  return enumerate(q);
}

std::set<oracle::Tuple> canonical_set(const std::vector<CensusRecord>& recs, int n) {
  const auto group = oracle::all_perms(n);
  std::set<oracle::Tuple> out;
  for (const auto& r : recs) out.insert(oracle::tuple_canonical(r.representative.images(), group));
  return out;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("class lists agree with brute-force tuple search") {
  for (auto [k, n] : {std::pair{3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 5}, {3, 6}}) {
    INFO(k << "," << n);
    const auto recs = run(k, n);
    const auto want = oracle::brute_force_classes(k, n);
    CHECK(recs.size() == want.size());
    CHECK(canonical_set(recs, n) == want);
  }
}

TEST_CASE("filters") {
  CHECK(run(3, 4, true, true).size() == 2);
  CHECK(run(3, 5, true, true).size() == 1);
  CHECK(run(3, 6, true, true).size() == 7);
  for (const auto& r : run(5, 4)) CHECK(r.classification.is_cyclic);
  CensusQuery q;
  q.k = 4;
  q.n = 4;
  q.non_cyclic = true;
  q.transitive = true;
  q.primitive = true;
  for (const auto& r : enumerate(q)) CHECK(r.classification.is_primitive);
  q.primitive = false;
  q.even = true;
  for (const auto& r : enumerate(q)) CHECK(r.classification.is_even);
}

TEST_CASE("catalog comparisons") {
  CHECK(verify_against_catalog(run(6, 6, true), {named_hom("mu", {{"k", 6}}), named_hom("nu6")}).ok());
  CHECK(verify_against_catalog(run(4, 4, true, true), {named_hom("mu", {{"k", 4}}), named_hom("nu4_1"),
                                                      named_hom("nu4_2"), named_hom("nu4_3")})
            .ok());
  CHECK(verify_against_catalog(run(5, 6, true, true), {named_hom("psi5_6")}).ok());
  const auto miss = verify_against_catalog(run(6, 6, true), {named_hom("mu", {{"k", 6}})});
  CHECK_FALSE(miss.ok());
  CHECK(miss.unmatched_records.size() == 1);
}

TEST_CASE("soundness and seeds") {
  for (const auto& r : run(4, 6)) {
    REQUIRE(is_valid(r.representative));
    CHECK(r.representative.sigma(1) == r.seed_sigma1);
    CHECK(r.representative.alpha() == r.seed_alpha);
    CHECK(r.representative.sigma(1) == class_min_representative(cycle_type(r.seed_sigma1), 6));
  }
}

TEST_CASE("class sizes add up to the number of homomorphisms") {
  // every tuple, counted directly
  for (auto [k, n] : {std::pair{3, 4}, {4, 5}}) {
    long long total = 0;
    const auto perms = oracle::all_perms(n);
    oracle::Tuple cur;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == k - 1) {
        ++total;
        return;
      }
      for (const auto& p : perms) {
        cur.push_back(p);
        if (oracle::tuple_valid(cur)) self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    long long sum = 0;
    for (const auto& r : run(k, n)) {
      REQUIRE(r.class_size_hint);
      sum += *r.class_size_hint;
    }
    CHECK(sum == total);
  }
}

TEST_CASE("result does not depend on worker count") {
  for (auto [k, n] : {std::pair{4, 6}, {6, 7}}) {
    const auto a = run(k, n, false, false, 1);
    const auto b = run(k, n, false, false, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].representative == b[i].representative);
  }
}

TEST_CASE("without dedup every completion of each class minimum is listed") {
  CensusQuery q;
  q.k = 3;
  q.n = 4;
  q.dedup = false;
  const auto all = enumerate(q);
  const auto dedup = run(3, 4);
  CHECK(all.size() > dedup.size());
  std::set<BraidHom> reps;
  for (const auto& r : all) reps.insert(r.representative);
  for (const auto& r : dedup) CHECK(reps.count(r.representative));
  std::size_t alphas = 0;
  for (const auto& ct : all_cycle_types(4)) alphas += alpha_solutions(3, class_min_representative(ct, 4)).size();
  CHECK(all.size() == alphas);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(run(3, 10), BudgetExceeded);
  CensusQuery q;
  q.k = 10;
  q.n = 5;
  CHECK_THROWS_AS(enumerate(q), BudgetExceeded);
  try {
    run(3, 12);
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimated_pairs() > 0);
  }
  CHECK(census_cost(3, 5) > 0);
}

TEST_CASE("canonical form under the centralizer") {
  const auto h = named_hom("psi4_6", {{"i", 1}});
  const auto rep = class_min_representative(cycle_type(h.sigma(1)), 6);
  const auto g = conjugacy_witness(h.sigma(1), rep);
  REQUIRE(g);
  const auto base = h.conjugate_by(*g);
  const auto canon = canonical_under_centralizer(base);
  for (const auto& c : centralizer_elements(rep)) CHECK(canonical_under_centralizer(base.conjugate_by(c)) == canon);
}

TEST_CASE("diagnostics") {
  const auto recs = run(5, 6, true);
  const auto rep = diagnostics(recs);
  CHECK(rep.ok());
  for (const auto& r : recs) {
    CHECK(r.classification.ord_alpha % 5 == 0);
    CHECK(r.classification.ord_beta % 4 == 0);
  }
  const auto six = run(6, 6, true);
  const auto d6 = diagnostics(six);
  CHECK(d6.ok());
  for (const auto& e : d6.entries)
    if (e.check == "at least k-2 fixed points of sigma_1") CHECK_FALSE(e.applicable);
  for (const auto& e : rep.entries)
    if (e.check == "at least k-2 fixed points of sigma_1") CHECK_FALSE(e.applicable);
}

}  // TEST_SUITE
