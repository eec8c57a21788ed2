// One PASS/FAIL line per acceptance criterion. Expected values and time
// limits are pinned here; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidperm/census.hpp"
#include "braidperm/cohomology.hpp"
#include "braidperm/commutator.hpp"
#include "braidperm/retraction.hpp"
#include "braidperm/suites.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<CensusRecord> census(int k, int n, int workers) {
  CensusQuery q;
  q.k = k;
  q.n = n;
  q.workers = workers;
  return enumerate(q);
}

template <class Pred>
std::vector<CensusRecord> keep(const std::vector<CensusRecord>& in, Pred p) {
  std::vector<CensusRecord> out;
  for (const auto& r : in)
    if (p(r)) out.push_back(r);
  return out;
}

bool nc(const CensusRecord& r) { return !r.classification.is_cyclic; }
bool nct(const CensusRecord& r) { return nc(r) && r.classification.is_transitive; }

std::string list_match(const std::vector<CensusRecord>& recs, const std::vector<BraidHom>& want, bool& ok) {
  const auto m = verify_against_catalog(recs, want);
  ok = m.ok();
  std::ostringstream os;
  os << recs.size() << " found / " << want.size() << " expected";
  for (auto i : m.unmatched_records) os << "; extra " << recs[i].representative.to_string();
  for (auto i : m.unmatched_expected) os << "; missing " << want[i].to_string();
  return os.str();
}

// Orbit count of non-cyclic transitive pairs (s1, s2) with s1 s2 s1 = s2 s1 s2
// under simultaneous conjugation, by exhausting S(n)^2.
long long brute_force_b3_transitive_classes(int n) {
  const auto all = oracle::all_perms(n);
  std::set<std::pair<Permutation, Permutation>> pairs;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a == b) continue;
      const auto& ai = a.images();
      const auto& bi = b.images();
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = ai[bi[ai[x] - 1] - 1] == bi[ai[bi[x] - 1] - 1];
      if (ok && is_transitive(n, {a, b})) pairs.emplace(a, b);
    }
  long long classes = 0;
  std::set<std::pair<Permutation, Permutation>> seen;
  for (const auto& pr : pairs) {
    if (seen.count(pr)) continue;
    ++classes;
    for (const auto& g : all) seen.emplace(pr.first.conjugate_by(g), pr.second.conjugate_by(g));
  }
  return classes;
}

struct RetractionTally {
  int components = 0;
  std::vector<std::string> failures;
};

void retraction_checks(const std::string& label, const BraidHom& h, RetractionTally& tally) {
  if (h.k() < 4) return;
  std::set<int> lengths;
  for (int r : cycle_type(h.sigma(1)).parts) lengths.insert(r);
  for (int r : lengths) {
    const auto nh = normalize(h, r);
    ++tally.components;
    const auto om = omega(nh);
    const auto ph = phi_sigma(nh);
    std::string bad;
    if (!is_valid(om)) bad = "Omega invalid";
    else if (omega_star(nh) != om) bad = "Omega != Omega*";
    else if (!is_valid(ph)) bad = "phi_Sigma invalid";
    else {
      for (int i = 1; i < om.k(); ++i)
        if (pi(r, nh.t, ph.sigma(i)) != om.sigma(i)) bad = "pi o phi_Sigma != Omega";
      const auto g = g_relations_check(nh);
      if (!g.clean()) bad = "g-relations: " + g.failures.front();
    }
    if (!bad.empty()) tally.failures.push_back(label + " r=" + std::to_string(r) + ": " + bad);
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

// ---------------------------------------------------------------------------

Outcome small_census(int workers) {
  Outcome o;
  const std::vector<std::pair<int, std::size_t>> b3{{4, 2}, {5, 1}, {6, 7}, {7, 3}};
  for (auto [n, count] : b3) {
    const auto recs = keep(census(3, n, workers), nct);
    o.expect(recs.size() == count, "B3 -> S(" + std::to_string(n) + ") has " + std::to_string(count) +
                                       " non-cyclic transitive classes (found " + std::to_string(recs.size()) + ")");
    std::vector<BraidHom> want;
    for (int i = 1; i <= psi3_count(n); ++i) want.push_back(named_hom("psi3", {{"n", n}, {"i", i}}));
    bool ok = false;
    const auto detail = list_match(recs, want, ok);
    o.expect(ok, "B3 -> S(" + std::to_string(n) + ") list equals the psi3 table: " + detail);
  }
  {
    const auto all = census(4, 5, workers);
    bool ok = false;
    const auto d = list_match(keep(all, nct), {named_hom("psi4_5")}, ok);
    o.expect(ok, "B4 -> S(5) non-cyclic transitive = {psi4_5}: " + d);
    for (const auto& r : keep(all, [](const CensusRecord& r) { return r.classification.is_transitive; }))
      o.expect(r.representative.sigma(1) == r.representative.sigma(3),
               "transitive B4 -> S(5) has equal sigma_1, sigma_3 images: " + r.representative.to_string());
  }
  {
    const auto recs = keep(census(4, 6, workers), [](const CensusRecord& r) {
      return r.classification.is_transitive && r.representative.sigma(1) != r.representative.sigma(3);
    });
    std::vector<BraidHom> want;
    for (int i = 1; i <= 4; ++i) want.push_back(named_hom("psi4_6", {{"i", i}}));
    bool ok = false;
    const auto d = list_match(recs, want, ok);
    o.expect(ok, "B4 -> S(6) transitive with sigma_1 != sigma_3 = {psi4_6 i=1..4}: " + d);
  }
  {
    bool ok = false;
    const auto d = list_match(keep(census(5, 6, workers), nct), {named_hom("psi5_6")}, ok);
    o.expect(ok, "B5 -> S(6) non-cyclic transitive = {psi5_6}: " + d);
  }
  return o;
}

Outcome artin(int workers) {
  Outcome o;
  auto mu = [](int k) { return named_hom("mu", {{"k", k}}); };
  const std::vector<std::pair<int, std::vector<BraidHom>>> cases{
      {4, {mu(4), named_hom("nu4_1"), named_hom("nu4_2"), named_hom("nu4_3")}},
      {5, {mu(5)}},
      {6, {mu(6), named_hom("nu6")}},
      {7, {mu(7)}}};
  for (const auto& [k, want] : cases) {
    const auto all = census(k, k, workers);
    const auto recs = k == 4 ? keep(all, nct) : keep(all, nc);
    bool ok = false;
    const auto d = list_match(recs, want, ok);
    o.expect(ok, "B" + std::to_string(k) + " -> S(" + std::to_string(k) + "): " + d);
    o.note("k=" + std::to_string(k) + ": " + d);
  }
  return o;
}

Outcome small_degree(int workers) {
  Outcome o;
  for (int k = 5; k <= 7; ++k)
    for (int n = 2; n < k; ++n)
      for (const auto& r : census(k, n, workers))
        o.expect(r.classification.is_cyclic, "B" + std::to_string(k) + " -> S(" + std::to_string(n) +
                                                 ") is cyclic: " + r.representative.to_string());
  for (auto [k, n] : std::vector<std::pair<int, int>>{{6, 7}, {7, 8}, {6, 8}, {6, 9}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = keep(census(k, n, workers), nct);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(recs.empty(), "every transitive B" + std::to_string(k) + " -> S(" + std::to_string(n) + ") is cyclic" +
                               (recs.empty() ? "" : ": " + recs.front().representative.to_string()));
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1fs)", s);
    o.note("(" + std::to_string(k) + "," + std::to_string(n) + ") sweep: " + std::to_string(recs.size()) +
           " non-cyclic transitive" + buf);
  }
  const auto mu5 = named_hom("mu", {{"k", 5}});
  bool ok = false;
  const auto d =
      list_match(keep(census(5, 7, workers), nc),
                 {disjoint_product(named_hom("psi5_6"), BraidHom::constant(5, Permutation::identity(1))),
                  disjoint_product(mu5, BraidHom::constant(5, Permutation::transposition(2, 1, 2))),
                  disjoint_product(mu5, BraidHom::constant(5, Permutation::identity(2)))},
                 ok);
  o.expect(ok, "B5 -> S(7) non-cyclic = {psi5_6 + 1, mu5 + (6,7), mu5 + 1 + 1}: " + d);
  return o;
}

std::string fmt(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Outcome cohomology_matrix() {
  Outcome o;
  auto check = [&](const std::string& label, const TwistedAction& a, const std::vector<long long>& want) {
    const auto got = h1(a).invariants.factors;
    o.expect(got == want, label + " H1 = " + fmt(want) + " (got " + fmt(got) + ")");
  };
  for (long long r : {2, 3, 4, 5}) {
    const std::string m = " mod " + std::to_string(r);
    for (long long n : {5, 6, 7}) check("mu" + std::to_string(n) + m, family_action("mu", {{"n", n}, {"m", r}}), {r, r});
    const long long g = std::gcd(2LL, r);
    check("psi56" + m, family_action("psi56", {{"m", r}}), g == 1 ? std::vector<long long>{r} : std::vector<long long>{g, r});
    check("nu6" + m, family_action("nu6", {{"m", r}}), {r});
    for (long long q : {5, 6})
      for (long long t = 1; t <= 6; ++t)
        check("cyclic q=" + std::to_string(q) + " t=" + std::to_string(t) + m,
              family_action("cyclic", {{"n", q}, {"t", t}, {"m", r}}), {r});
  }
  return o;
}

Outcome bijection() {
  Outcome o;
  int roundtrips = 0;
  auto roundtrip = [&](const std::string& label, const TwistedAction& a, const std::vector<Cochain>& zs) {
    for (const auto& z : zs) {
      ++roundtrips;
      o.expect(cocycle_check(a, z).ok, label + " canonical cocycle passes the cocycle check");
      const auto phi = cocycle_to_hom(a, z);
      o.expect(is_valid(phi), label + " Phi_z validates");
      o.expect(hom_to_cocycle(a, phi) == z, label + " z_{Phi_z} = z");
    }
  };
  for (long long r : {2, 3, 4, 5}) {
    const std::string m = " mod " + std::to_string(r);
    for (long long n : {5, 6, 7})
      roundtrip("mu" + std::to_string(n) + m, family_action("mu", {{"n", n}, {"m", r}}),
                canonical_cocycles("mu", {{"n", n}, {"m", r}}));
    roundtrip("psi56" + m, family_action("psi56", {{"m", r}}), canonical_cocycles("psi56", {{"m", r}}));
    for (long long y = 0; y < r; ++y)
      roundtrip("nu6 y=" + std::to_string(y) + m, family_action("nu6", {{"m", r}}),
                canonical_cocycles("nu6", {{"m", r}, {"y", y}}));
    for (long long t = 1; t <= 6; ++t)
      roundtrip("cyclic t=" + std::to_string(t) + m, family_action("cyclic", {{"n", 6}, {"t", t}, {"m", r}}),
                canonical_cocycles("cyclic", {{"n", 6}, {"t", t}, {"m", r}, {"a", 1}}));
  }
  o.note(std::to_string(roundtrips) + " canonical cocycles round-tripped");

  // Omega = mu_4 over Z/2: count all lifts and compare with |H1| * |B1|.
  const auto a = family_action("mu", {{"n", 4}, {"m", 2}});
  const long long h1_order = h1(a).invariants.order();
  std::set<std::vector<Vec>> cobs;
  for (int mask = 0; mask < 16; ++mask) {
    Vec h(4);
    for (int j = 0; j < 4; ++j) h[j] = mask >> j & 1;
    cobs.insert(coboundary(a, h).h);
  }
  const long long b1_order = static_cast<long long>(cobs.size());
  const auto lifts = mu4_lift_census();
  o.expect(h1_order == 4, "|H1(mu4, Z/2)| = 4 (got " + std::to_string(h1_order) + ")");
  o.expect(b1_order == 8, "|B1(mu4, Z/2)| = 8 (got " + std::to_string(b1_order) + ")");
  o.expect(static_cast<long long>(lifts.homs.size()) == h1_order * b1_order,
           "lift count " + std::to_string(lifts.homs.size()) + " = |H1| * |B1| = " + std::to_string(h1_order * b1_order));
  o.expect(lifts.classes.size() == 4, "lifts fall into 4 classes (got " + std::to_string(lifts.classes.size()) + ")");
  std::set<std::size_t> hit;
  for (int j = 0; j <= 3; ++j) {
    const auto phi = named_hom("mu_lift", {{"n", 4}, {"j", j}});
    for (std::size_t c = 0; c < lifts.classes.size(); ++c)
      for (auto idx : lifts.classes[c])
        if (lifts.homs[idx] == phi) hit.insert(c);
  }
  o.expect(hit.size() == 4, "the four listed lifts meet all four classes (met " + std::to_string(hit.size()) + ")");
  o.note("mu4 lifts: " + std::to_string(lifts.homs.size()) + " homomorphisms in " + std::to_string(lifts.classes.size()) +
         " classes");
  return o;
}

Outcome retraction_suite(int workers) {
  Outcome o;
  RetractionTally catalog, cen;
  for (const auto& [label, h] : catalog_instances()) retraction_checks(label, h, catalog);
  int records = 0;
  for (int k = 6; k <= 7; ++k)
    for (int n = k; n <= 9; ++n)
      for (const auto& r : keep(census(k, n, workers), nc)) {
        ++records;
        retraction_checks("B" + std::to_string(k) + "->S(" + std::to_string(n) + ") " + r.representative.to_string(),
                          r.representative, cen);
      }
  for (const auto& f : catalog.failures) o.expect(false, f);
  for (const auto& f : cen.failures) o.expect(false, f);
  o.expect(catalog.components > 0 && cen.components > 0, "components were checked");
  o.note(std::to_string(catalog.components) + " catalog components, " + std::to_string(cen.components) +
         " components over " + std::to_string(records) + " non-cyclic census records");
  return o;
}

Outcome models() {
  Outcome o;
  for (int k : {7, 8}) {
    const std::string K = " k=" + std::to_string(k);
    std::vector<BraidHom> ms;
    for (int j = 1; j <= 3; ++j) ms.push_back(named_hom("model", {{"j", j}, {"k", k}}));
    const int want_t[3] = {0, k, k - 2};
    const auto mu_act = family_action("mu", {{"n", k}, {"m", 2}});
    const auto zs = canonical_cocycles("mu", {{"n", k}, {"m", 2}});
    for (int j = 1; j <= 3; ++j) {
      const auto& h = ms[j - 1];
      const std::string L = "phi" + std::to_string(j) + K;
      o.expect(is_valid(h), L + " validates");
      const auto c = classify(h);
      o.expect(!c.is_cyclic, L + " non-cyclic");
      o.expect(c.is_transitive, L + " transitive");
      o.expect(!c.is_primitive, L + " imprimitive");
      o.expect(component_length(h, 2) == want_t[j - 1], L + " 2-component length " + std::to_string(want_t[j - 1]));
      RetractionTally t;
      retraction_checks(L, h, t);
      for (const auto& f : t.failures) o.expect(false, f);
      // as a lift of mu_k on the blocks {2m-1, 2m}
      Cochain want = j == 1 ? zs[0] : zs[1];
      if (j == 3)
        for (std::size_t i = 0; i < want.h.size(); ++i)
          for (int x = 0; x < k; ++x) want.h[i][x] = (zs[0].h[i][x] + zs[1].h[i][x]) % 2;
      const auto z = hom_to_cocycle(mu_act, h);
      o.expect(z == want, L + " has cocycle z" + (j == 3 ? std::string("1+z2") : "z" + std::to_string(j)));
      o.expect(cocycle_to_hom(mu_act, z) == h, L + " is recovered from its cocycle");
      o.expect(!is_coboundary(mu_act, z), L + " cocycle is not a coboundary");
      // the retraction of each nondegenerate component through its own cohomology
      for (int r : {2, 4}) {
        if (component_length(h, r) == 0) continue;
        const auto nh = normalize(h, r);
        const TwistedAction act(omega(nh), r);
        const auto ph = phi_sigma(nh);
        const auto zz = hom_to_cocycle(act, ph);
        o.expect(cocycle_check(act, zz).ok, L + " phi_Sigma cocycle (r=" + std::to_string(r) + ") passes");
        o.expect(cocycle_to_hom(act, zz) == ph, L + " phi_Sigma round-trips (r=" + std::to_string(r) + ")");
      }
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        o.expect(!hom_conjugacy(ms[a], ms[b]),
                 "phi" + std::to_string(a + 1) + " and phi" + std::to_string(b + 1) + " not conjugate" + K);
  }
  return o;
}

bool bprime_conjugate(const BPrimeHom& a, const BPrimeHom& b) {
  for (const auto& g : oracle::all_perms(a.k))
    if (a.conjugate_by(g) == b) return true;
  return false;
}

Outcome commutator_census(int workers) {
  Outcome o;
  const auto five = census_bprime(5, workers);
  o.expect(five.size() == 1, "B'5 -> S(5) has 1 nontrivial class (got " + std::to_string(five.size()) + ")");
  if (!five.empty()) o.expect(bprime_conjugate(five[0].hom, mu_prime(5)), "the class is mu'5");
  const auto six = census_bprime(6, workers);
  o.expect(six.size() == 2, "B'6 -> S(6) has 2 nontrivial classes (got " + std::to_string(six.size()) + ")");
  int mu = 0, nu = 0;
  for (const auto& r : six) {
    mu += bprime_conjugate(r.hom, mu_prime(6));
    nu += bprime_conjugate(r.hom, nu6_prime());
  }
  o.expect(mu == 1 && nu == 1, "the classes are mu'6 and nu'6");
  for (const auto& r : five) o.expect(r.image_order == 60 && r.image_is_alternating, "B'5 image is A(5)");
  for (const auto& r : six) o.expect(r.image_order == 360 && r.image_is_alternating, "B'6 image is A(6)");
  return o;
}

Outcome identities() {
  Outcome o;
  int pairs = 0;
  for (int k = 3; k <= 7; ++k) {
    bool gorin = false;
    for (const auto& id : known_identities(k, 5)) {
      ++pairs;
      gorin = gorin || id.name == "Gorin";
      const bool oracle_eq = words_equal(id.lhs, id.rhs);
      const bool proj_eq = perm_image(id.lhs) == perm_image(id.rhs);
      o.expect(oracle_eq, "k=" + std::to_string(k) + " " + id.name + " by handle reduction");
      o.expect(proj_eq, "k=" + std::to_string(k) + " " + id.name + " by projection to S(k)");
      o.expect(oracle::artin_equal(id.lhs, id.rhs), "k=" + std::to_string(k) + " " + id.name + " by the free-group action");
    }
    if (k >= 4) o.expect(gorin, "Gorin's relation present for k=" + std::to_string(k));
  }
  o.note(std::to_string(pairs) + " identity pairs");
  return o;
}

Outcome special_arithmetic() {
  Outcome o;
  int hits = 0;
  for (int k : {3, 5, 6, 7})
    for (long long n = 1; n <= 60; ++n) {
      std::vector<int> got;
      for (const auto& s : special_params(k, n)) {
        got.push_back(s.case_index);
        for (long long t = 1; t <= 4; ++t)
          o.expect(s.balanced(k, n, t), "balance k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
      std::sort(got.begin(), got.end());
      got.erase(std::unique(got.begin(), got.end()), got.end());
      hits += !got.empty();
      o.expect(got == oracle::progression_cases(k, n),
               "special_params(" + std::to_string(k) + "," + std::to_string(n) + ") matches the progression table");
    }
  o.note(std::to_string(hits) + " (k, n) pairs with special parameters");
  for (auto [k, m] : {std::pair{3, 2}, {3, 3}, {4, 2}})
    for (const auto& v : {BraidWord::empty(m), BraidWord::sigma(m, 1), BraidWord::sigma(m, 1, -1)}) {
      const auto h = cable_hom(k, m, v);
      const std::string L = "cable (" + std::to_string(k) + "," + std::to_string(m) + ") v=" + v.to_string();
      for (std::size_t i = 0; i + 1 < h.size(); ++i)
        o.expect(words_equal(h[i] * h[i + 1] * h[i], h[i + 1] * h[i] * h[i + 1]), L + " braid relation");
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 2; j < h.size(); ++j) o.expect(words_equal(h[i] * h[j], h[j] * h[i]), L + " far relation");
    }
  return o;
}

Outcome permutation_facts(int workers) {
  Outcome o;
  auto take = [&](const std::vector<SuiteCheck>& cs) {
    for (const auto& c : cs) {
      o.expect(c.ok, c.name + (c.detail.empty() ? "" : ": " + c.detail));
      if (c.ok) o.note(c.name + " (" + c.detail + ")");
    }
  };
  take(permutation_fact_checks());
  std::vector<CensusRecord> cat;
  for (const auto& [label, h] : catalog_instances())
    if (!classify(h).is_cyclic) cat.push_back(CensusRecord{h, classify(h), std::nullopt, h.sigma(1), h.alpha()});
  take(census_diagnostic_checks(cat, "catalog"));
  std::vector<CensusRecord> grid;
  for (int k = 5; k <= 7; ++k)
    for (int n = k; n <= 9; ++n)
      for (const auto& r : keep(census(k, n, workers), nc)) grid.push_back(r);
  take(census_diagnostic_checks(grid, "census k=5..7, n<=9"));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int workers = 1;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--workers") workers = std::stoi(argv[i + 1]);

  const std::vector<Criterion> criteria{
      {1, "small-case census exactness", 10, [&] {
         auto o = small_census(workers);
         o.note("independent S(7)^2 brute force: " + std::to_string(brute_force_b3_transitive_classes(7)) +
                " non-cyclic transitive B3 -> S(7) classes");
         return o;
       }},
      {2, "Artin classes for k = 4..7", 120, [&] { return artin(workers); }},
      {3, "small degrees are cyclic; sweeps up to (6,9)", 900, [&] { return small_degree(workers); }},
      {4, "first cohomology matrix", 5, [] { return cohomology_matrix(); }},
      {5, "cocycle / homomorphism bijection", 60, [] { return bijection(); }},
      {6, "retraction suite", 600, [&] { return retraction_suite(workers); }},
      {7, "model homomorphisms for k = 7, 8", 600, [] { return models(); }},
      {8, "commutator subgroup census", 300, [&] { return commutator_census(workers); }},
      {9, "word identity fixtures", 30, [] { return identities(); }},
      {10, "special homomorphism arithmetic and cabling", 60, [] { return special_arithmetic(); }},
      {11, "permutation facts and census diagnostics", 600, [&] { return permutation_facts(workers); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.expect(false, "runtime within " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    std::printf("criterion %2d: %s  %s  (%.2f s, limit %.0f s)\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), s,
                c.limit_s);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
