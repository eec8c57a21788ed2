#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidperm/braid_hom.hpp"
#include "braidperm/retraction.hpp"
#include "braidperm/snf.hpp"

namespace braidperm {

using Vec = std::vector<long long>;

// The left action T_b h = tau_{Omega(b)} h of B_q on A^t for A = Z/m, where
// (tau_s h)[s(j)] = h[j]. Modulus 0 stands for A = Z.
class TwistedAction {
 public:
  TwistedAction(BraidHom omega, long long modulus);

  const BraidHom& omega() const { return omega_; }
  int strands() const { return omega_.k(); }
  int t() const { return omega_.n(); }
  long long modulus() const { return m_; }

  Vec act(const Permutation& s, const Vec& h) const;
  Vec reduce(Vec h) const;
  long long reduce(long long a) const;
  // Size of the 2-torsion subgroup A_2.
  long long two_torsion_order() const;

 private:
  BraidHom omega_;
  long long m_;
};

// Values h_i = z(s_i), i = 1..q-1, each a vector of length t.
struct Cochain {
  std::vector<Vec> h;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const TwistedAction& act);

// z(w) through z(b1 b2) = z(b1) + T_{b1} z(b2) and z(b^-1) = -T_{b^-1} z(b).
Vec evaluate(const TwistedAction& act, const Cochain& z, const BraidWord& w);

struct CocycleCheck {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // (p, q) of each failed relation
};

CocycleCheck cocycle_check(const TwistedAction& act, const Cochain& z);

// s_p -> T_{s_p} h - h.
Cochain coboundary(const TwistedAction& act, const Vec& h);
bool is_coboundary(const TwistedAction& act, const Cochain& z);

// Invariant factors in divisibility order; 0 marks an infinite cyclic summand.
struct AbelianInvariants {
  std::vector<long long> factors;
  long long order() const;  // 0 when infinite
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct CocycleSpace {
  std::vector<Cochain> generators;
  AbelianInvariants invariants;
};

CocycleSpace cocycle_space(const TwistedAction& act);

struct H1Result {
  AbelianInvariants invariants;
  std::vector<Cochain> representatives;  // one per invariant factor
};

H1Result h1(const TwistedAction& act);

// Phi_z(s_i) = (C_1^{a^1} ... C_t^{a^t}) rho(Omega(s_i)) with (a^j) = z(s_i),
// a homomorphism B_q -> S(rt). Needs m = r.
BraidHom cocycle_to_hom(const TwistedAction& act, const Cochain& z);
// z(s_i) read off Phi(s_i) rho(Omega(s_i))^-1; throws unless pi o Phi = Omega.
Cochain hom_to_cocycle(const TwistedAction& act, const BraidHom& phi);

// The action on (Z/r) x (Z/n), point 1 + R + rN:
//   s_i(R,N) = (R+y, N)   for N not in {i-1, i}
//   s_i(R,N) = (R, N+1)   for N = i-1
//   s_i(R,N) = (R+x, N-1) for N = i
BraidHom build_phi_xy(int r, int n, long long x, long long y);

// Actions of the computed families, keyed by name with the modulus in "m":
//   mu {n}        Omega = mu_n on A^n
//   psi56         Omega = psi5_6 on A^6
//   nu6           Omega = nu6 on A^6
//   cyclic {n,t}  B_n acting through a single t-cycle
//   trivial {n}   B_n acting on A
TwistedAction family_action(const std::string& name, const std::map<std::string, long long>& params);

// Canonical cocycles of the same families:
//   mu {n, m}            z1(s_i) = e_{i+1}, z2(s_i) = sum of e_j over j not in {i, i+1}
//   mu_class {n, m, a, b} z(s_i) = (b,..,b, 0, a, b,..,b) with the 0 at i
//   psi56 {m, x, y}      the two-parameter shape, x in A_2
//   psi56 {m}            generators of the classes: x = m/2 (m even) and y = 1
//   nu6 {m, y}           the one-parameter shape
//   cyclic {n, t, m, a}  z(s_i) = (a, 0, .., 0)
std::vector<Cochain> canonical_cocycles(const std::string& name, const std::map<std::string, long long>& params);

}  // namespace braidperm
