#pragma once

#include <string>
#include <vector>

#include "braidperm/braid_hom.hpp"

namespace braidperm {

// A conjugate of a homomorphism whose sigma_1 has its r-cycles in standard
// position C_m = ((m-1)r+1, ..., mr), m = 1..t. Points outside the component
// follow in their original order.
struct NormalizedHom {
  BraidHom original;
  BraidHom base;            // original conjugated by `conjugator`
  Permutation conjugator;
  int r = 0;
  int t = 0;

  std::vector<int> support() const;  // 1..rt
  Permutation cycle(int m) const;    // C_m in S(n)
};

// Throws when sigma_1 has no r-cycle or r < 2.
NormalizedHom normalize(const BraidHom& h, int r);

// Number of r-cycles of sigma_1; the lengths of components used below.
int component_length(const BraidHom& h, int r);

// Component sequence helpers on S(rt).
Permutation component_cycle(int r, int t, int m);  // C_m in S(rt)
Permutation component_product(int r, int t);       // C_1 ... C_t
// rho(s)((m-1)r+q) = (s(m)-1)r+q.
Permutation rho(int r, int t, const Permutation& s);
// The permutation of {1..t} induced on the cycles C_m; throws unless g
// commutes with C_1 ... C_t.
Permutation pi(int r, int t, const Permutation& g);

// g^(q)_j: the permutation of the cycles C^(q)_m = alpha^(q-1) C_m alpha^-(q-1)
// of sigma_q induced by conjugation with sigma_j, j not in {q-1, q+1}.
Permutation g_perm(const NormalizedHom& nh, int q, int j);

// s_i -> g^(1)_{i+2}; a homomorphism B_{k-2} -> S(t).
BraidHom omega(const NormalizedHom& nh);
// s_i -> g^(k-1)_i, read from the r-cycles of sigma_{k-1}.
BraidHom omega_star(const NormalizedHom& nh);
// s_i -> sigma_{i+2} restricted to 1..rt.
BraidHom phi_sigma(const NormalizedHom& nh);

struct GRelationsReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool clean() const { return failures.empty(); }
};

// Checks g^(q)_j = g^(k-1)_{j-q-1} (1 <= q <= k-3, q+2 <= j <= k-1),
// g^(q)_j = g^(1)_{j+k-q+1} (3 <= q <= k-1, 1 <= j <= q-2), g^(k-1)_j = g^(1)_{j+2},
// pairwise conjugacy of every g^(q)_j, and that omega and omega_star validate.
GRelationsReport g_relations_check(const NormalizedHom& nh);

}  // namespace braidperm
