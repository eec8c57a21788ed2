#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidperm/braid_hom.hpp"

namespace braidperm {

struct CensusQuery {
  int k = 3;
  int n = 3;
  bool non_cyclic = false;
  bool transitive = false;
  bool primitive = false;
  bool even = false;
  bool dedup = true;
  int workers = 1;
  int max_n = 9;
  int max_k = 9;
};

struct CensusRecord {
  BraidHom representative;
  HomClassification classification;
  std::optional<long long> class_size_hint;
  Permutation seed_sigma1;
  Permutation seed_alpha;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimated_pairs)
      : std::runtime_error(what), estimated_pairs_(estimated_pairs) {}
  double estimated_pairs() const { return estimated_pairs_; }

 private:
  double estimated_pairs_;
};

// Seed pairs (sigma_1 class representative, alpha) the search would visit.
double census_cost(int k, int n);

// Every homomorphism B_k -> S(n) passing the filters, one per conjugacy class
// when dedup is set. Records are sorted by (sigma_1, alpha) and do not depend
// on the worker count.
std::vector<CensusRecord> enumerate(const CensusQuery& q);

// The same search restricted to one sigma_1; the seeds returned are all alpha
// that complete sigma_1 to a homomorphism.
std::vector<Permutation> alpha_solutions(int k, const Permutation& sigma1);

// Least conjugate of h among those fixing h(sigma_1); used as the class key
// once h(sigma_1) is a class representative.
BraidHom canonical_under_centralizer(const BraidHom& h, long long* stabilizer_order = nullptr);

struct CatalogMatch {
  std::vector<std::size_t> unmatched_records;
  std::vector<std::size_t> unmatched_expected;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (record, expected)
  bool ok() const { return unmatched_records.empty() && unmatched_expected.empty(); }
};

CatalogMatch verify_against_catalog(const std::vector<CensusRecord>& records,
                                    const std::vector<BraidHom>& expected);

struct DiagnosticEntry {
  std::size_t record = 0;
  std::string check;
  bool applicable = false;
  bool holds = true;
};

struct DiagnosticsReport {
  std::vector<DiagnosticEntry> entries;
  bool ok() const;
  std::vector<DiagnosticEntry> violations() const;
};

// Arithmetic consequences for each record: k | ord alpha and (k-1) | ord beta
// for non-cyclic records with k != 4; the divisibility of ord h(alpha_ij); the
// fixed-point bound when a prime p > 2 with n/2 < p <= k-2 exists; the support
// bound for sigma_1 with pairwise distinct cycle lengths. Entries whose
// hypothesis fails are recorded as not applicable.
DiagnosticsReport diagnostics(const std::vector<CensusRecord>& records);

}  // namespace braidperm
