#include "braidperm/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidperm {
namespace {

using Params = std::map<std::string, int>;

SuiteCheck check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok, std::move(detail)};
}

std::string hom_name(int k, int n) { return "B" + std::to_string(k) + " -> S(" + std::to_string(n) + ")"; }

std::vector<CensusRecord> filter(const std::vector<CensusRecord>& in, const std::function<bool(const CensusRecord&)>& pred) {
  std::vector<CensusRecord> out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), pred);
  return out;
}

bool non_cyclic(const CensusRecord& r) { return !r.classification.is_cyclic; }
bool non_cyclic_transitive(const CensusRecord& r) {
  return !r.classification.is_cyclic && r.classification.is_transitive;
}

Json records_json(const std::vector<CensusRecord>& recs) {
  Json a = Json::array();
  for (const auto& r : recs) a.push_back(record_to_json(r));
  return a;
}

std::string match_detail(const std::vector<CensusRecord>& recs, const std::vector<BraidHom>& expected,
                         const CatalogMatch& m) {
  std::ostringstream os;
  os << recs.size() << " classes found, " << expected.size() << " expected";
  if (!m.unmatched_records.empty())
    os << "; unmatched found: " << recs[m.unmatched_records.front()].representative.to_string();
  if (!m.unmatched_expected.empty()) os << "; unmatched expected: " << expected[m.unmatched_expected.front()].to_string();
  return os.str();
}

std::vector<BraidHom> psi3_list(int n) {
  std::vector<BraidHom> out;
  for (int i = 1; i <= psi3_count(n); ++i) out.push_back(named_hom("psi3", {{"n", n}, {"i", i}}));
  return out;
}

// One census per (k, n), unfiltered and deduplicated, shared between suites.
class Runner {
 public:
  explicit Runner(int workers) : workers_(workers) {}

  const std::vector<CensusRecord>& census(int k, int n) {
    auto it = cache_.find({k, n});
    if (it != cache_.end()) return it->second;
    CensusQuery q;
    q.k = k;
    q.n = n;
    q.workers = workers_;
    return cache_.emplace(std::pair{k, n}, enumerate(q)).first->second;
  }

  // Non-cyclic records of the grid k = 5..7, k <= n <= 9.
  std::vector<std::pair<std::string, std::vector<CensusRecord>>> grid() {
    std::vector<std::pair<std::string, std::vector<CensusRecord>>> out;
    for (int k = 5; k <= 7; ++k)
      for (int n = k; n <= 9; ++n) out.emplace_back(hom_name(k, n), filter(census(k, n), non_cyclic));
    return out;
  }

  SuiteResult artin();
  SuiteResult small_census();
  SuiteResult cohomology();
  SuiteResult models();
  SuiteResult commutator();
  SuiteResult identities();
  SuiteResult special();
  SuiteResult permutations();

 private:
  int workers_;
  std::map<std::pair<int, int>, std::vector<CensusRecord>> cache_;
};

SuiteResult Runner::artin() {
  SuiteResult res{"artin", {}, Json::array()};
  const std::map<int, std::vector<std::string>> expected{
      {4, {"mu", "nu4_1", "nu4_2", "nu4_3"}}, {5, {"mu"}}, {6, {"mu", "nu6"}}, {7, {"mu"}}};
  for (const auto& [k, names] : expected) {
    auto recs = filter(census(k, k), k == 4 ? non_cyclic_transitive : non_cyclic);
    std::vector<BraidHom> homs;
    std::string label;
    for (const auto& nm : names) {
      homs.push_back(named_hom(nm, {{"k", k}}));
      label += (label.empty() ? "" : ", ") + (nm == "mu" ? "mu" + std::to_string(k) : nm);
    }
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(check(hom_name(k, k) + (k == 4 ? " transitive" : "") + " non-cyclic classes are {" + label + "}",
                               m.ok(), match_detail(recs, homs, m)));
    res.data.push_back(Json{{"k", k}, {"n", k}, {"transitive_only", k == 4}, {"records", records_json(recs)}});
  }
  return res;
}

SuiteResult Runner::small_census() {
  SuiteResult res{"small_census", {}, Json::array()};
  auto store = [&](int k, int n, const std::string& filter_name, const std::vector<CensusRecord>& recs) {
    res.data.push_back(Json{{"k", k}, {"n", n}, {"filter", filter_name}, {"records", records_json(recs)}});
  };
  const std::map<int, std::size_t> b3_counts{{4, 2}, {5, 1}, {6, 7}, {7, 3}};
  for (const auto& [n, count] : b3_counts) {
    auto recs = filter(census(3, n), non_cyclic_transitive);
    res.checks.push_back(check(hom_name(3, n) + " has " + std::to_string(count) + " non-cyclic transitive classes",
                               recs.size() == count, std::to_string(recs.size()) + " found"));
    const auto homs = psi3_list(n);
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(
        check(hom_name(3, n) + " non-cyclic transitive classes match the listed psi3 table", m.ok(), match_detail(recs, homs, m)));
    store(3, n, "non_cyclic transitive", recs);
  }
  {
    auto recs = filter(census(4, 5), non_cyclic_transitive);
    const std::vector<BraidHom> homs{named_hom("psi4_5")};
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(check("B4 -> S(5) non-cyclic transitive classes are {psi4_5}", m.ok(), match_detail(recs, homs, m)));
    const auto trans = filter(census(4, 5), [](const CensusRecord& r) { return r.classification.is_transitive; });
    const bool same = std::all_of(trans.begin(), trans.end(), [](const CensusRecord& r) {
      return r.representative.sigma(1) == r.representative.sigma(3);
    });
    res.checks.push_back(check("every transitive B4 -> S(5) has sigma_1 and sigma_3 with equal images", same,
                               std::to_string(trans.size()) + " transitive classes"));
    store(4, 5, "non_cyclic transitive", recs);
  }
  {
    auto recs = filter(census(4, 6), [](const CensusRecord& r) {
      return r.classification.is_transitive && r.representative.sigma(1) != r.representative.sigma(3);
    });
    std::vector<BraidHom> homs;
    for (int i = 1; i <= 4; ++i) homs.push_back(named_hom("psi4_6", {{"i", i}}));
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(check("B4 -> S(6) transitive classes with distinct sigma_1, sigma_3 images are {psi4_6 i=1..4}",
                               m.ok(), match_detail(recs, homs, m)));
    store(4, 6, "transitive sigma1 != sigma3", recs);
  }
  {
    auto recs = filter(census(5, 6), non_cyclic_transitive);
    const std::vector<BraidHom> homs{named_hom("psi5_6")};
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(check("B5 -> S(6) non-cyclic transitive classes are {psi5_6}", m.ok(), match_detail(recs, homs, m)));
    store(5, 6, "non_cyclic transitive", recs);
  }
  for (int k = 5; k <= 7; ++k) {
    Json counts = Json::array();
    std::string bad;
    for (int n = 2; n < k; ++n) {
      const auto& all = census(k, n);
      if (bad.empty() && std::any_of(all.begin(), all.end(), non_cyclic)) bad = hom_name(k, n);
      counts.push_back(Json{{"n", n}, {"classes", all.size()}});
    }
    res.checks.push_back(check("every B" + std::to_string(k) + " -> S(n) with n < " + std::to_string(k) + " is cyclic",
                               bad.empty(), bad.empty() ? "" : "non-cyclic class in " + bad));
    res.data.push_back(Json{{"k", k}, {"cyclic_class_counts", counts}});
  }
  for (auto [k, n] : std::vector<std::pair<int, int>>{{6, 7}, {7, 8}, {6, 8}, {6, 9}}) {
    auto recs = filter(census(k, n), non_cyclic_transitive);
    res.checks.push_back(check("every transitive " + hom_name(k, n) + " is cyclic", recs.empty(),
                               recs.empty() ? "" : "counterexample: " + recs.front().representative.to_string()));
    store(k, n, "non_cyclic transitive", recs);
  }
  {
    auto recs = filter(census(5, 7), non_cyclic);
    const BraidHom mu5 = named_hom("mu", {{"k", 5}});
    const std::vector<BraidHom> homs{
        disjoint_product(named_hom("psi5_6"), BraidHom::constant(5, Permutation::identity(1))),
        disjoint_product(mu5, BraidHom::constant(5, Permutation::transposition(2, 1, 2))),
        disjoint_product(mu5, BraidHom::constant(5, Permutation::identity(2)))};
    const auto m = verify_against_catalog(recs, homs);
    res.checks.push_back(check("B5 -> S(7) non-cyclic classes are psi5_6 + fixed point, mu5 + transposition, mu5 + two fixed points",
                               m.ok(), match_detail(recs, homs, m)));
    store(5, 7, "non_cyclic", recs);
  }
  {
    std::string bad;
    int count = 0;
    for (const auto& [label, recs] : grid())
      for (const auto& r : recs)
        if (r.classification.is_transitive) {
          ++count;
          if (!r.classification.is_primitive && bad.empty()) bad = label + ": " + r.representative.to_string();
        }
    res.checks.push_back(check("every transitive non-cyclic B_k -> S(n), 5 <= k <= 7, n <= 9, is primitive", bad.empty(),
                               bad.empty() ? std::to_string(count) + " transitive non-cyclic classes" : "counterexample: " + bad));
  }
  return res;
}

std::string factors_string(const AbelianInvariants& a) { return a.to_string(); }

SuiteResult Runner::cohomology() {
  SuiteResult res{"cohomology", {}, Json::object()};
  Json table = Json::array();
  auto family = [&](const std::string& title, const std::string& name, std::map<std::string, long long> params,
                    const std::function<std::vector<long long>(long long)>& expected) {
    std::string bad;
    for (long long m = 2; m <= 5; ++m) {
      params["m"] = m;
      const auto got = h1(family_action(name, params)).invariants;
      Json entry{{"omega", name}};
      for (const auto& [key, v] : params) entry[key] = v;
      entry["factors"] = invariants_to_json(got);
      table.push_back(entry);
      if (got.factors != expected(m) && bad.empty())
        bad = "m=" + std::to_string(m) + " gave " + factors_string(got);
    }
    res.checks.push_back(check(title, bad.empty(), bad));
  };
  for (long long n = 5; n <= 7; ++n)
    family("H1 over Z/m, m = 2..5, for Omega = mu" + std::to_string(n) + " is Z/m + Z/m", "mu", {{"n", n}},
           [](long long m) { return std::vector<long long>{m, m}; });
  family("H1 over Z/m for Omega = psi5_6 is Z/gcd(2,m) + Z/m", "psi56", {},
         [](long long m) { return m % 2 ? std::vector<long long>{m} : std::vector<long long>{2, m}; });
  family("H1 over Z/m for Omega = nu6 is Z/m", "nu6", {}, [](long long m) { return std::vector<long long>{m}; });
  for (long long q = 5; q <= 6; ++q)
    for (long long t = 1; t <= 6; ++t)
      family("H1 over Z/m for B" + std::to_string(q) + " acting through a " + std::to_string(t) + "-cycle is Z/m", "cyclic",
             {{"n", q}, {"t", t}}, [](long long m) { return std::vector<long long>{m}; });
  res.data["h1"] = table;

  // Canonical cocycles: cocycle, not a coboundary, and Phi_z gives z back.
  std::vector<std::pair<std::string, std::map<std::string, long long>>> fams;
  for (long long m = 2; m <= 5; ++m) {
    for (long long n = 4; n <= 7; ++n) fams.push_back({"mu", {{"n", n}, {"m", m}}});
    fams.push_back({"psi56", {{"m", m}}});
    for (long long y = 1; y < m; ++y) fams.push_back({"nu6", {{"m", m}, {"y", y}}});
    for (long long t = 2; t <= 6; ++t) fams.push_back({"cyclic", {{"n", 5}, {"t", t}, {"m", m}, {"a", 1}}});
  }
  std::string bad_cocycle, bad_class, bad_round;
  int cochains = 0;
  for (const auto& [name, params] : fams) {
    auto ap = params;
    ap.erase("y");
    ap.erase("a");
    const auto act = family_action(name, ap);
    for (const auto& z : canonical_cocycles(name, params)) {
      ++cochains;
      std::string tag = name;
      for (const auto& [k, v] : params) tag += " " + k + "=" + std::to_string(v);
      if (!cocycle_check(act, z).ok && bad_cocycle.empty()) bad_cocycle = tag;
      if (is_coboundary(act, z) && bad_class.empty()) bad_class = tag;
      const BraidHom phi = cocycle_to_hom(act, z);
      if ((!is_valid(phi) || hom_to_cocycle(act, phi) != z) && bad_round.empty()) bad_round = tag;
    }
  }
  const std::string count = std::to_string(cochains) + " cocycles";
  res.checks.push_back(check("canonical cocycles satisfy the cocycle equations", bad_cocycle.empty(), bad_cocycle.empty() ? count : bad_cocycle));
  res.checks.push_back(check("canonical cocycles represent nonzero classes", bad_class.empty(), bad_class.empty() ? count : bad_class));
  res.checks.push_back(check("z -> Phi_z -> z is the identity on canonical cocycles", bad_round.empty(), bad_round.empty() ? count : bad_round));

  // Omega = mu_4 on the blocks of S(8).
  const auto lifts = mu4_lift_census();
  const auto act = family_action("mu", {{"n", 4}, {"m", 2}});
  std::set<std::vector<Vec>> boundaries;
  for (int bits = 0; bits < 16; ++bits) {
    Vec h(4);
    for (int j = 0; j < 4; ++j) h[j] = (bits >> j) & 1;
    boundaries.insert(coboundary(act, h).h);
  }
  const long long h1_order = h1(act).invariants.order();
  const long long predicted = h1_order * static_cast<long long>(boundaries.size());
  res.checks.push_back(check("lifts of mu4 to S(8) number |H1| |B1|", static_cast<long long>(lifts.homs.size()) == predicted,
                             std::to_string(lifts.homs.size()) + " lifts, |H1| = " + std::to_string(h1_order) +
                                 ", |B1| = " + std::to_string(boundaries.size())));
  std::set<std::size_t> hit;
  bool all_found = true;
  for (int j = 0; j <= 3; ++j) {
    const BraidHom h = named_hom("mu_lift", {{"n", 4}, {"j", j}});
    const auto pos = std::find(lifts.homs.begin(), lifts.homs.end(), h);
    if (pos == lifts.homs.end()) {
      all_found = false;
      continue;
    }
    const std::size_t idx = static_cast<std::size_t>(pos - lifts.homs.begin());
    for (std::size_t c = 0; c < lifts.classes.size(); ++c)
      if (std::count(lifts.classes[c].begin(), lifts.classes[c].end(), idx)) hit.insert(c);
  }
  res.checks.push_back(check("lifts of mu4 to S(8) fall into four classes, one per mu_lift j=0..3",
                             all_found && lifts.classes.size() == 4 && hit.size() == 4,
                             std::to_string(lifts.classes.size()) + " classes, " + std::to_string(hit.size()) + " hit"));
  res.data["mu4_lifts"] = Json{{"homs", lifts.homs.size()}, {"classes", lifts.classes.size()},
                               {"coboundaries", boundaries.size()}, {"h1_order", h1_order}};
  return res;
}

// Retraction checks on every r-component of h; failures are appended.
void retraction_checks(const std::string& label, const BraidHom& h, std::vector<std::string>& failures, Json& data,
                       int& components, int& cyclic_omega) {
  std::set<int> lengths;
  for (const auto& c : h.sigma(1).cycles()) lengths.insert(static_cast<int>(c.size()));
  for (int r : lengths) {
    ++components;
    const auto nh = normalize(h, r);
    const auto rep = g_relations_check(nh);
    for (const auto& f : rep.failures) failures.push_back(label + " r=" + std::to_string(r) + ": " + f);
    const BraidHom om = omega(nh);
    const BraidHom ps = phi_sigma(nh);
    for (int i = 1; i < om.k(); ++i)
      if (pi(r, nh.t, ps.sigma(i)) != om.sigma(i))
        failures.push_back(label + " r=" + std::to_string(r) + ": pi o phi_Sigma != Omega at s" + std::to_string(i));
    const bool om_cyclic = classify(om).is_cyclic;
    if (om_cyclic) {
      ++cyclic_omega;
      if (!classify(ps).is_cyclic) failures.push_back(label + " r=" + std::to_string(r) + ": cyclic Omega, non-cyclic phi_Sigma");
    }
    Json omj = Json::array();
    for (const auto& s : om.images()) omj.push_back(s.to_string());
    data.push_back(Json{{"hom", label}, {"r", r}, {"t", nh.t}, {"omega", omj}, {"omega_cyclic", om_cyclic}});
  }
}

SuiteResult Runner::models() {
  SuiteResult res{"models", {}, Json::object()};
  Json models = Json::array();
  for (int k = 7; k <= 8; ++k) {
    std::vector<BraidHom> hs;
    std::string bad_shape, bad_cross;
    std::vector<int> lengths;
    for (int j = 1; j <= 3; ++j) {
      const BraidHom h = named_hom("model", {{"j", j}, {"k", k}});
      hs.push_back(h);
      if (!is_valid(h)) {
        bad_shape = "model j=" + std::to_string(j) + " invalid";
        continue;
      }
      const auto c = classify(h);
      if ((c.is_cyclic || !c.is_transitive || c.is_primitive) && bad_shape.empty())
        bad_shape = "model j=" + std::to_string(j);
      lengths.push_back(component_length(h, 2));
      if (j == 1) continue;
      const auto nh = normalize(h, 2);
      const auto rep = g_relations_check(nh);
      const BraidHom ps = phi_sigma(nh);
      const TwistedAction act(omega(nh), 2);
      const Cochain z = hom_to_cocycle(act, ps);
      const bool cross = rep.clean() && cocycle_check(act, z).ok && cocycle_to_hom(act, z) == ps;
      if (!cross && bad_cross.empty()) bad_cross = "model j=" + std::to_string(j);
      if (k == 7 && classify(ps).is_abelian && classify(omega(nh)).is_abelian && bad_cross.empty())
        bad_cross = "model j=" + std::to_string(j) + ": abelian phi_Sigma with abelian Omega";
      models.push_back(Json{{"j", j}, {"k", k}, {"t", nh.t}, {"cocycle", cochain_to_json(z)}});
    }
    const std::string ks = std::to_string(k);
    res.checks.push_back(check("model homomorphisms B" + ks + " -> S(" + std::to_string(2 * k) +
                                   ") are valid, non-cyclic, transitive and imprimitive",
                               bad_shape.empty(), bad_shape));
    bool distinct = true;
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = a + 1; b < hs.size(); ++b) distinct = distinct && !hom_conjugacy(hs[a], hs[b]);
    res.checks.push_back(check("model homomorphisms for k=" + ks + " are pairwise non-conjugate", distinct));
    const std::vector<int> want{0, k, k - 2};
    res.checks.push_back(check("model homomorphisms for k=" + ks + " have 2-components of lengths 0, k, k-2",
                               lengths == want, ""));
    res.checks.push_back(check("retraction and cocycle cross-checks hold on the model homomorphisms for k=" + ks,
                               bad_cross.empty(), bad_cross));
  }
  res.data["models"] = models;

  std::vector<std::string> failures;
  Json comps = Json::array();
  int components = 0, cyclic_omega = 0;
  for (const auto& [label, h] : catalog_instances())
    if (h.k() >= 4) retraction_checks(label, h, failures, comps, components, cyclic_omega);
  const int catalog_components = components;
  for (int k = 6; k <= 7; ++k)
    for (int n = k; n <= 9; ++n) {
      const auto recs = filter(census(k, n), non_cyclic);
      for (std::size_t i = 0; i < recs.size(); ++i)
        retraction_checks(hom_name(k, n) + " #" + std::to_string(i + 1), recs[i].representative, failures, comps,
                          components, cyclic_omega);
    }
  res.checks.push_back(check("Omega = Omega*, pi o phi_Sigma = Omega and the g-permutation tables are clean on catalog and census components",
                             failures.empty(),
                             failures.empty() ? std::to_string(catalog_components) + " catalog and " +
                                                    std::to_string(components - catalog_components) + " census components"
                                              : failures.front()));
  res.data["retraction"] = comps;
  res.data["cyclic_omega_components"] = cyclic_omega;
  return res;
}

std::optional<Permutation> bprime_conjugacy(const BPrimeHom& a, const BPrimeHom& b) {
  std::vector<int> im(a.k);
  std::iota(im.begin(), im.end(), 1);
  do {
    const Permutation g(im);
    if (a.conjugate_by(g) == b) return g;
  } while (std::next_permutation(im.begin(), im.end()));
  return std::nullopt;
}

SuiteResult Runner::commutator() {
  SuiteResult res{"commutator", {}, Json::object()};
  {
    bool ok = true;
    std::string detail;
    for (int k = 4; k <= 7; ++k) {
      const auto h = mu_prime(k);
      const auto order = static_cast<long long>(group_closure(k, h.images()).size());
      const bool even = std::all_of(h.c.begin(), h.c.end(), [](const Permutation& p) { return p.is_even(); });
      if (!validate_bprime(h).ok || order != factorial(k) / 2 || !even || restrict_to_commutator(named_hom("mu", {{"k", k}})) != h) {
        ok = false;
        detail = "k=" + std::to_string(k);
        break;
      }
    }
    res.checks.push_back(check("mu'_k, k = 4..7, satisfies the relations, equals the restriction of mu_k and has image A(k)", ok, detail));
  }
  {
    const auto h = nu6_prime();
    res.checks.push_back(check("nu'_6 satisfies the relations and equals the restriction of nu6",
                               validate_bprime(h).ok && restrict_to_commutator(named_hom("nu6")) == h));
    res.checks.push_back(check("nu'_6 has image A(6)", group_closure(6, h.images()).size() == 360));
  }
  {
    bool ok = true;
    for (int k = 5; k <= 7; ++k) {
      const auto cs = lambda_prime_images(k);
      for (int i = 0; i < k - 3; ++i) {
        ok = ok && perm_image(cs[i]) == Permutation::from_cycles(k, {{1, 2}, {i + 3, i + 4}});
        for (int j = i + 1; j < k - 3; ++j) {
          if (j == i + 1)
            ok = ok && words_equal(cs[i] * cs[j] * cs[i], cs[j] * cs[i] * cs[j]);
          else
            ok = ok && words_equal(cs[i] * cs[j], cs[j] * cs[i]);
        }
      }
    }
    res.checks.push_back(check("c_i = sigma_(i+2) sigma_1^-1 satisfy the braid relations of B_(k-2) and project to (1,2)(i+2,i+3), k = 5..7", ok));
  }
  {
    const auto m6 = is_tame(mu_prime(6));
    const auto m5 = is_tame(mu_prime(5));
    res.checks.push_back(check("mu'_6 and mu'_5 are tame with orbits {3,4,5,6} and {3,4,5}; nu'_6 is not tame",
                               m6 == std::vector<int>{3, 4, 5, 6} && m5 == std::vector<int>{3, 4, 5} && !is_tame(nu6_prime())));
  }
  for (int k = 5; k <= 6; ++k) {
    const auto recs = census_bprime(k, workers_);
    std::vector<BPrimeHom> expected{mu_prime(k)};
    if (k == 6) expected.push_back(nu6_prime());
    std::vector<bool> used(expected.size(), false);
    bool match = recs.size() == expected.size();
    for (const auto& r : recs) {
      bool found = false;
      for (std::size_t e = 0; e < expected.size() && !found; ++e)
        if (!used[e] && bprime_conjugacy(r.hom, expected[e])) used[e] = found = true;
      match = match && found;
    }
    const std::string ks = std::to_string(k);
    res.checks.push_back(check("nontrivial B'" + ks + " -> S(" + ks + ") classes are " + (k == 5 ? "{mu'5}" : "{mu'6, nu'6}"), match,
                               std::to_string(recs.size()) + " classes"));
    res.checks.push_back(check("every nontrivial B'" + ks + " -> S(" + ks + ") has image A(" + ks + ")",
                               std::all_of(recs.begin(), recs.end(), [](const BPrimeRecord& r) { return r.image_is_alternating; })));
    std::string bad;
    for (const auto& r : recs) {
      const auto& h = r.hom;
      const auto imgs = h.images();
      bool ok = std::all_of(imgs.begin(), imgs.end(), [](const Permutation& p) { return !p.is_identity() && p.is_even(); });
      for (int i = 2; i <= k - 3; ++i)
        for (int j = 2; j <= k - 3; ++j) ok = ok && h.u.commutes_with(h.ci(i) * h.ci(j).inverse());
      if ((h.ci(1) * h.ci(1)).is_identity())
        ok = ok && h.u.pow(3).is_identity() && h.v.pow(3).is_identity() && h.v == h.u.inverse();
      const auto ct = cycle_type(h.w);
      ok = ok && cycle_type(h.ci(1).inverse() * h.w) == ct;
      for (const auto& c : h.c) ok = ok && cycle_type(c) == ct;
      ok = ok && cycle_type(h.v) == cycle_type(h.u) && cycle_type(h.u.inverse() * h.v) == cycle_type(h.u);
      for (int q = 2; q <= k - 3; ++q) ok = ok && h.ci(1) != h.ci(q);
      if (k - 3 >= 3) ok = ok && h.ci(1).inverse() != h.ci(3);
      if (!ok && bad.empty()) bad = h.to_string();
    }
    res.checks.push_back(check("structural consequences of the relations hold on every B'" + ks + " -> S(" + ks + ") class", bad.empty(), bad));
    Json a = Json::array();
    for (const auto& r : recs) a.push_back(bprime_record_to_json(r));
    res.data["k" + ks] = a;
  }
  return res;
}

SuiteResult Runner::identities() {
  SuiteResult res{"identities", {}, Json::array()};
  for (int k = 3; k <= 7; ++k) {
    const auto ids = known_identities(k, 5);
    std::string bad;
    Json names = Json::array();
    for (const auto& id : ids) {
      names.push_back(id.name);
      if (!words_equal(id.lhs, id.rhs)) {
        if (bad.empty()) bad = id.name + ": word oracle";
      } else if (perm_image(id.lhs) != perm_image(id.rhs)) {
        if (bad.empty()) bad = id.name + ": permutation image";
      }
    }
    res.checks.push_back(check("braid identities for k=" + std::to_string(k) + " hold in B_k and under mu_k", bad.empty(),
                               bad.empty() ? std::to_string(ids.size()) + " identities" : bad));
    res.data.push_back(Json{{"k", k}, {"identities", names}});
  }
  return res;
}

SuiteResult Runner::special() {
  SuiteResult res{"special", {}, Json::object()};
  Json scan = Json::array();
  for (int k : {3, 5, 6, 7}) {
    const long long d = static_cast<long long>(k) * (k - 1);
    const long long starts[4] = {k, d, d + 1, static_cast<long long>(k - 1) * (k - 1)};
    std::string bad;
    Json members = Json::array();
    for (long long n = 1; n <= 60; ++n) {
      std::vector<int> want;
      for (int i = 0; i < 4; ++i)
        if (n >= starts[i] && (n - starts[i]) % d == 0) want.push_back(i + 1);
      const auto got = special_params(k, n);
      std::vector<int> cases;
      bool balanced = true;
      for (const auto& sp : got) {
        cases.push_back(sp.case_index);
        for (long long t = 1; t <= 7; ++t)
          if (!sp.t_coprime || std::gcd(t, d) == 1) balanced = balanced && sp.balanced(k, n, t);
      }
      if ((cases != want || !balanced) && bad.empty()) bad = "n=" + std::to_string(n);
      if (!cases.empty()) members.push_back(Json{{"n", n}, {"cases", cases}});
    }
    res.checks.push_back(check("special parameters for k=" + std::to_string(k) + ", n <= 60, follow the four progressions of difference k(k-1)",
                               bad.empty(), bad));
    scan.push_back(Json{{"k", k}, {"members", members}});
  }
  res.data["progressions"] = scan;

  Json cables = Json::array();
  for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    std::vector<BraidWord> vs{BraidWord::empty(m), BraidWord::sigma(m, 1), BraidWord::sigma(m, 1, -1),
                              BraidWord::sigma(m, 1).pow(3)};
    if (m == 3) {
      vs.push_back(BraidWord::sigma(3, 1) * BraidWord::sigma(3, 2, -1));
      vs.push_back(BraidWord::sigma(3, 2) * BraidWord::sigma(3, 1) * BraidWord::sigma(3, 2));
    }
    std::string bad;
    for (const auto& v : vs) {
      const auto img = cable_hom(k, m, v);
      for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k - 1; ++j) {
          const bool ok = j == i + 1 ? words_equal(img[i] * img[j] * img[i], img[j] * img[i] * img[j])
                                     : words_equal(img[i] * img[j], img[j] * img[i]);
          if (!ok && bad.empty()) bad = "v=" + v.to_string() + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
        }
    }
    res.checks.push_back(check("cabled images for k=" + std::to_string(k) + ", m=" + std::to_string(m) + " satisfy the braid relations",
                               bad.empty(), bad.empty() ? std::to_string(vs.size()) + " words v" : bad));
    cables.push_back(Json{{"k", k}, {"m", m}, {"words", vs.size()}});
  }
  res.data["cables"] = cables;
  return res;
}

SuiteResult Runner::permutations() {
  SuiteResult res{"permutations", {}, Json::array()};
  res.checks = permutation_fact_checks();
  std::vector<CensusRecord> cat;
  for (const auto& [label, h] : catalog_instances()) cat.push_back(CensusRecord{h, classify(h), std::nullopt, {}, {}});
  for (auto& c : census_diagnostic_checks(cat, "catalog")) res.checks.push_back(std::move(c));
  for (const auto& [label, recs] : grid())
    for (auto& c : census_diagnostic_checks(recs, label)) res.checks.push_back(std::move(c));
  for (const auto& c : res.checks) res.data.push_back(Json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return res;
}

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.ok; });
}

std::vector<std::pair<std::string, BraidHom>> catalog_instances() {
  std::vector<std::pair<std::string, BraidHom>> out;
  auto add = [&](const std::string& name, const Params& p = {}) {
    std::string label = name;
    for (const auto& [k, v] : p) label += " " + k + "=" + std::to_string(v);
    out.emplace_back(label, named_hom(name, p));
  };
  for (int k = 3; k <= 8; ++k) add("mu", {{"k", k}});
  for (const char* nm : {"nu6", "nu4_1", "nu4_2", "nu4_3", "psi4_5", "psi5_6", "kappa_mu6", "b6_s10"}) add(nm);
  for (int k = 4; k <= 6; ++k)
    for (int n = 2; n <= 6; ++n) add("constant", {{"k", k}, {"n", n}});
  for (int n = 4; n <= 7; ++n)
    for (int i = 1; i <= psi3_count(n); ++i) add("psi3", {{"n", n}, {"i", i}});
  for (int i = 1; i <= 4; ++i) add("psi4_6", {{"i", i}});
  for (int k = 4; k <= 8; ++k)
    for (int j = 1; j <= 3; ++j) add("model", {{"j", j}, {"k", k}});
  for (int n = 4; n <= 6; ++n)
    for (int j = 0; j <= 3; ++j) add("mu_lift", {{"n", n}, {"j", j}});
  for (int j = 0; j <= 3; ++j) add("psi56_lift", {{"j", j}});
  for (int y = 0; y <= 1; ++y) add("nu6_lift", {{"y", y}});
  for (int k = 4; k <= 6; ++k) {
    add("fixed_pair", {{"k", k}, {"n", k + 2}});
    add("doubled", {{"k", k}, {"n", 2 * k}});
  }
  for (auto [j, n] : std::vector<std::pair<int, int>>{{3, 5}, {4, 6}, {5, 6}, {6, 7}}) add("b4_extra", {{"j", j}, {"n", n}});
  return out;
}

LiftCensus mu4_lift_census() {
  const int n = 8;
  const Permutation blocks = component_product(2, 4);
  std::vector<std::vector<Permutation>> cand(3);
  std::vector<Permutation> translations;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do {
    const Permutation g(im);
    if (!g.commutes_with(blocks)) continue;
    const Permutation induced = pi(2, 4, g);
    if (induced.is_identity()) translations.push_back(g);
    for (int i = 1; i <= 3; ++i)
      if (induced == Permutation::transposition(4, i, i + 1)) cand[i - 1].push_back(g);
  } while (std::next_permutation(im.begin(), im.end()));

  LiftCensus out;
  for (const auto& a : cand[0])
    for (const auto& b : cand[1]) {
      if (a * b * a != b * a * b) continue;
      for (const auto& c : cand[2])
        if (b * c * b == c * b * c && a.commutes_with(c)) out.homs.emplace_back(4, n, std::vector<Permutation>{a, b, c});
    }
  std::sort(out.homs.begin(), out.homs.end());
  std::vector<bool> seen(out.homs.size(), false);
  for (std::size_t i = 0; i < out.homs.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& g : translations) {
      const auto pos = std::lower_bound(out.homs.begin(), out.homs.end(), out.homs[i].conjugate_by(g));
      const auto j = static_cast<std::size_t>(pos - out.homs.begin());
      orbit.insert(j);
      seen[j] = true;
    }
    out.classes.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"artin", "small_census", "cohomology", "models", "commutator", "identities", "special", "permutations"};
}

std::vector<SuiteResult> run_suite(const std::string& name, int workers) {
  Runner r(workers);
  const std::map<std::string, std::function<SuiteResult()>> suites{
      {"artin", [&] { return r.artin(); }},           {"small_census", [&] { return r.small_census(); }},
      {"cohomology", [&] { return r.cohomology(); }}, {"models", [&] { return r.models(); }},
      {"commutator", [&] { return r.commutator(); }}, {"identities", [&] { return r.identities(); }},
      {"special", [&] { return r.special(); }},       {"permutations", [&] { return r.permutations(); }}};
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(suites.at(s)());
    return out;
  }
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  out.push_back(it->second());
  return out;
}

}  // namespace braidperm
