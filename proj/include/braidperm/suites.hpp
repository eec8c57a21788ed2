#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidperm/io.hpp"

namespace braidperm {

struct SuiteCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample or instance count
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  Json data;  // deterministic; compared against golden files

  bool ok() const;
};

// Named instances of every catalog family at the parameters used by the
// suites, labelled like "model j=2 k=7".
std::vector<std::pair<std::string, BraidHom>> catalog_instances();

// artin, small_census, cohomology, models, commutator, identities, special,
// permutations. "all" runs each in turn and shares census results between them.
std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suite(const std::string& name, int workers = 1);

// Pieces used by the suites and by the acceptance tests.

// Ω-homomorphisms B_4 -> S(8) over mu_4 on the blocks {2m-1, 2m}, found by
// trying all block-translation lifts of each generator.
struct LiftCensus {
  std::vector<BraidHom> homs;
  std::vector<std::vector<std::size_t>> classes;  // orbits under block translations
};
LiftCensus mu4_lift_census();

// Each permutation fact checked over its stated range, one check per fact.
std::vector<SuiteCheck> permutation_fact_checks();
// Arithmetic diagnostics on census records, one check per diagnostic kind.
std::vector<SuiteCheck> census_diagnostic_checks(const std::vector<CensusRecord>& records, const std::string& label);

}  // namespace braidperm
