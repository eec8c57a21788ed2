#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "braidperm/io.hpp"
#include "braidperm/retraction.hpp"
#include "braidperm/suites.hpp"

using namespace braidperm;
namespace fs = std::filesystem;

namespace {

#ifndef BRAIDPERM_DEFAULT_GOLDEN_DIR
#define BRAIDPERM_DEFAULT_GOLDEN_DIR "golden"
#endif

struct RunConfig {
  int workers = 1;
  int budget_n = 9;
  int budget_k = 9;
  std::string out;
  std::string golden_dir;
};

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return Json::parse(f);
}

std::map<std::string, int> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, int> out;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + s + "' is not key=value");
    out[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
  }
  return out;
}

std::string golden_root(const RunConfig& cfg) {
  if (!cfg.golden_dir.empty()) return cfg.golden_dir;
  if (const char* env = std::getenv("BRAIDPERM_GOLDEN_DIR")) return env;
  return BRAIDPERM_DEFAULT_GOLDEN_DIR;
}

fs::path golden_path(const RunConfig& cfg, const std::string& suite) {
  return fs::path(golden_root(cfg)) / ("v" + std::to_string(kSchemaVersion)) / (suite + ".json");
}

// Empty when the data matches; otherwise a description of the first mismatch.
std::string golden_mismatch(const fs::path& path, const std::string& suite, const Json& data) {
  if (!fs::exists(path)) return "no golden file " + path.string() + " (run verify --update-golden)";
  const Json g = load_json(path.string());
  if (!g.contains("schema_version") || g["schema_version"] != kSchemaVersion)
    return "schema drift in " + path.string() + ": golden schema_version " +
           (g.contains("schema_version") ? g["schema_version"].dump() : std::string("missing")) + ", expected " +
           std::to_string(kSchemaVersion);
  if (g.value("suite", "") != suite) return "golden file " + path.string() + " belongs to suite " + g.value("suite", "?");
  if (g["data"] == data) return "";
  const Json patch = Json::diff(g["data"], data);
  return "data drift in " + path.string() + " at " + patch.front()["path"].get<std::string>() + " (" +
         std::to_string(patch.size()) + " differences)";
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool update) {
  bool all_ok = true;
  for (const auto& res : run_suite(suite, cfg.workers)) {
    std::cout << "== suite " << res.suite << "\n";
    for (const auto& c : res.checks) {
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << "\n";
    }
    const fs::path path = golden_path(cfg, res.suite);
    if (update) {
      fs::create_directories(path.parent_path());
      std::ofstream f(path, std::ios::binary);
      f << Json{{"schema_version", kSchemaVersion}, {"suite", res.suite}, {"data", res.data}}.dump(1) << "\n";
      std::cout << "WROTE " << path.string() << "\n";
    } else {
      const std::string bad = golden_mismatch(path, res.suite, res.data);
      std::cout << (bad.empty() ? "PASS golden data matches " + path.string() : "FAIL " + bad) << "\n";
      all_ok = all_ok && bad.empty();
    }
    all_ok = all_ok && res.ok();
  }
  std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int cmd_census(const RunConfig& cfg, CensusQuery q) {
  q.workers = cfg.workers;
  q.max_n = cfg.budget_n;
  q.max_k = cfg.budget_k;
  const auto recs = enumerate(q);
  Json filters = Json::array();
  if (q.non_cyclic) filters.push_back("non_cyclic");
  if (q.transitive) filters.push_back("transitive");
  if (q.primitive) filters.push_back("primitive");
  if (q.even) filters.push_back("even");
  Json out{{"schema_version", kSchemaVersion},
           {"query", {{"k", q.k}, {"n", q.n}, {"filters", filters}, {"dedup", q.dedup}}},
           {"count", recs.size()},
           {"records", Json::array()}};
  for (const auto& r : recs) out["records"].push_back(record_to_json(r));
  emit(cfg, out);
  if (!cfg.out.empty()) std::cout << recs.size() << " records written to " << cfg.out << "\n";
  return 0;
}

int cmd_census_bprime(const RunConfig& cfg, int k) {
  const auto recs = census_bprime(k, cfg.workers);
  Json out{{"schema_version", kSchemaVersion}, {"k", k}, {"count", recs.size()}, {"records", Json::array()}};
  for (const auto& r : recs) out["records"].push_back(bprime_record_to_json(r));
  emit(cfg, out);
  if (!cfg.out.empty()) std::cout << recs.size() << " records written to " << cfg.out << "\n";
  return 0;
}

int cmd_cohomology(const RunConfig& cfg, const std::string& omega, int strands, int t, long long mod) {
  std::map<std::string, long long> params{{"m", mod}};
  if (omega == "mu" || omega == "trivial") params["n"] = strands;
  if (omega == "cyclic") {
    params["n"] = strands;
    params["t"] = t;
  }
  const TwistedAction act = family_action(omega, params);
  const H1Result res = h1(act);
  std::cout << "Omega = " << omega << " on B" << act.strands() << ", t = " << act.t() << ", A = "
            << (mod == 0 ? std::string("Z") : "Z/" + std::to_string(mod)) << "\n";
  std::cout << "H1 = " << res.invariants.to_string() << "\n";
  std::cout << "factors " << invariants_to_json(res.invariants).dump() << "\n";
  for (std::size_t c = 0; c < res.representatives.size(); ++c) {
    std::cout << "representative " << c + 1 << " (order " << res.invariants.factors[c] << ")\n";
    const auto& z = res.representatives[c];
    for (std::size_t i = 0; i < z.h.size(); ++i) {
      std::cout << "  z(s" << i + 1 << ") = (";
      for (std::size_t j = 0; j < z.h[i].size(); ++j) std::cout << (j ? ", " : "") << z.h[i][j];
      std::cout << ")\n";
    }
  }
  if (!cfg.out.empty()) {
    Json reps = Json::array();
    for (const auto& z : res.representatives) reps.push_back(cochain_to_json(z));
    emit(cfg, Json{{"schema_version", kSchemaVersion},
                 {"omega", omega},
                 {"strands", act.strands()},
                 {"t", act.t()},
                 {"modulus", mod},
                 {"factors", invariants_to_json(res.invariants)},
                 {"representatives", reps}});
  }
  return 0;
}

void print_images(const std::string& label, const BraidHom& h, const std::string& gen) {
  std::cout << label << ":\n";
  for (int i = 1; i < h.k(); ++i) std::cout << "  " << gen << i << " -> " << h.sigma(i).to_string() << "\n";
}

int cmd_retract(const RunConfig& cfg, const BraidHom& h, int r) {
  const auto nh = normalize(h, r);
  const BraidHom om = omega(nh), oms = omega_star(nh), ps = phi_sigma(nh);
  std::cout << "r = " << r << ", t = " << nh.t << "\n";
  std::cout << "conjugator " << nh.conjugator.to_string() << "\n";
  print_images("Omega", om, "s");
  print_images("Omega*", oms, "s");
  std::cout << "Omega == Omega*: " << (om == oms ? "yes" : "no") << "\n";
  print_images("phi_Sigma", ps, "s");
  const auto rep = g_relations_check(nh);
  std::cout << "g-permutation relations: " << rep.checked << " checked, " << rep.failures.size() << " failures\n";
  for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  if (!cfg.out.empty())
    emit(cfg, Json{{"schema_version", kSchemaVersion}, {"r", r}, {"t", nh.t}, {"omega", hom_to_json(om)},
                   {"omega_star", hom_to_json(oms)}, {"phi_sigma", hom_to_json(ps)}, {"clean", rep.clean()}});
  return rep.clean() && om == oms ? 0 : 1;
}

int cmd_hom_show(const RunConfig& cfg, const BraidHom& h) {
  std::cout << "B" << h.k() << " -> S(" << h.n() << ")\n";
  print_images("images", h, "sigma");
  const auto rep = validate(h);
  std::cout << "valid: " << (rep.ok ? "yes" : "no") << "\n";
  if (!rep.ok) return 1;
  const auto c = classify(h);
  std::cout << "cyclic: " << c.is_cyclic << "  transitive: " << c.is_transitive << "  primitive: " << c.is_primitive
            << "  even: " << c.is_even << "\n";
  std::cout << "ord alpha = " << c.ord_alpha << ", ord beta = " << c.ord_beta << ", fixed points of sigma_1 = "
            << c.fixed_point_count << ", cycle type " << c.sigma1_type.to_string() << "\n";
  if (!cfg.out.empty()) {
    Json j = hom_to_json(h);
    j["flags"] = classification_to_json(c);
    emit(cfg, Json{{"schema_version", kSchemaVersion}, {"hom", j}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphisms of braid groups into symmetric groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-n", cfg.budget_n, "largest degree n a census may use");
  app.add_option("--budget-k", cfg.budget_k, "largest strand count k a census may use");
  app.add_option("--out", cfg.out, "write JSON here");
  app.add_option("--golden-dir", cfg.golden_dir, "golden root (default $BRAIDPERM_GOLDEN_DIR or the source tree)");

  CensusQuery q;
  auto* census = app.add_subcommand("census", "homomorphisms B_k -> S(n) up to conjugation");
  census->add_option("--k", q.k)->required();
  census->add_option("--n", q.n)->required();
  census->add_flag("--non-cyclic", q.non_cyclic);
  census->add_flag("--transitive", q.transitive);
  census->add_flag("--primitive", q.primitive);
  census->add_flag("--even", q.even);
  census->add_flag("--dedup,!--no-dedup", q.dedup, "one record per class (default)");

  int bk = 5;
  auto* bprime = app.add_subcommand("census-bprime", "nontrivial B'_k -> S(k) up to conjugation, k = 5, 6");
  bprime->add_option("--k", bk)->required();

  std::string omega_name = "mu";
  int strands = 5, tcyc = 1;
  long long mod = 2;
  auto* coh = app.add_subcommand("cohomology", "H1 of B_q with twisted coefficients (Z/m)^t");
  coh->add_option("--omega", omega_name)->check(CLI::IsMember({"mu", "nu6", "psi56", "cyclic", "trivial"}));
  coh->add_option("--strands", strands);
  coh->add_option("--t", tcyc);
  coh->add_option("--mod", mod, "modulus m; 0 for Z");

  std::string hom_file, name;
  std::vector<std::string> kv;
  int r = 2;
  auto* retract = app.add_subcommand("retract", "retraction data of an r-component");
  retract->add_option("--hom", hom_file, "homomorphism JSON file");
  retract->add_option("--name", name, "catalog name instead of a file");
  retract->add_option("--param", kv, "catalog parameter key=value");
  retract->add_option("--r", r)->required();

  auto* hom = app.add_subcommand("hom", "catalog homomorphisms");
  hom->require_subcommand(1);
  auto* show = hom->add_subcommand("show", "print a catalog homomorphism");
  std::map<std::string, int> short_params;
  show->add_option("--name", name);
  show->add_option("--param", kv, "parameter key=value");
  for (const char* key : {"k", "n", "i", "j", "y"})
    show->add_option(std::string("--") + key, short_params[key], std::string("parameter ") + key);
  hom->add_subcommand("list", "list catalog names");
  show->add_option("--hom", hom_file, "homomorphism JSON file instead of a name");

  std::string suite = "all";
  bool update = false;
  auto* verify = app.add_subcommand("verify", "run verification suites against golden data");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"artin", "small_census", "cohomology", "models", "commutator",
                                                             "identities", "special", "permutations", "all"}));
  verify->add_flag("--update-golden", update, "rewrite golden files from this run");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*census) return cmd_census(cfg, q);
    if (*bprime) return cmd_census_bprime(cfg, bk);
    if (*coh) return cmd_cohomology(cfg, omega_name, strands, tcyc, mod);
    if (*retract) {
      const BraidHom h = hom_file.empty() ? named_hom(name, parse_params(kv)) : hom_from_json(load_json(hom_file));
      return cmd_retract(cfg, h, r);
    }
    if (*hom) {
      if (hom->got_subcommand("list")) {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return 0;
      }
      auto params = parse_params(kv);
      for (const auto& [key, v] : short_params)
        if (show->count("--" + key)) params[key] = v;
      const BraidHom h = hom_file.empty() ? named_hom(name, params) : hom_from_json(load_json(hom_file));
      return cmd_hom_show(cfg, h);
    }
    if (*verify) return cmd_verify(cfg, suite, update);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
