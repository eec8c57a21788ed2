#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidperm/braid_hom.hpp"

namespace braidperm {

// Images of the generators u, v, w, c_1..c_{k-3} of B'_k in S(k).
struct BPrimeHom {
  int k = 4;
  Permutation u, v, w;
  std::vector<Permutation> c;

  const Permutation& ci(int i) const { return c.at(i - 1); }
  bool is_trivial() const;
  std::vector<Permutation> images() const;  // u, v, w, c_1, ...
  BPrimeHom conjugate_by(const Permutation& g) const;
  std::string to_string() const;
  friend bool operator==(const BPrimeHom&, const BPrimeHom&) = default;
};

struct BPrimeReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// The eight relation families among u, v, w and the c_i:
//   u c1 u^-1 = w,  u w u^-1 = w^2 c1^-1 w,  v c1 v^-1 = c1^-1 w,
//   v w v^-1 = (c1^-1 w)^3 c1^-2 w,  u c_i = c_i v,  v c_i = c_i u^-1 v (i >= 2),
//   far c_i commute, adjacent c_i braid.
BPrimeReport validate_bprime(const BPrimeHom& h);

// Images of the words u, v, w, c_i under a homomorphism of B_k.
BPrimeHom restrict_to_commutator(const BraidHom& h);

// u -> (1,3,2), v -> (1,2,3), w -> (1,3)(2,4), c_i -> (1,2)(i+2,i+3).
BPrimeHom mu_prime(int k);
BPrimeHom nu6_prime();

// c_i = sigma_{i+2} sigma_1^-1 in B_k, i = 1..k-3.
std::vector<BraidWord> lambda_prime_images(int k);

struct BPrimeRecord {
  BPrimeHom hom;
  long long image_order = 0;
  bool image_is_alternating = false;
  std::optional<std::vector<int>> tame_orbit;
};

// Nontrivial homomorphisms B'_k -> S(k) up to conjugation, k in {5, 6}.
std::vector<BPrimeRecord> census_bprime(int k, int workers = 1);

// The orbit of length k-2 of the group generated by the c_i, if any. Throws
// for the trivial homomorphism.
std::optional<std::vector<int>> is_tame(const BPrimeHom& h);

}  // namespace braidperm
