#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidperm/perm.hpp"

namespace braidperm {

// A word in the Artin generators of B_k. Letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord empty(int strands) { return BraidWord(strands, {}); }
  static BraidWord sigma(int strands, int i, int e = 1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord pow(int e) const;
  BraidWord conjugate_by(const BraidWord& g) const;  // g * this * g^-1
  // The same letters read in B_n for some n >= strands, optionally shifted
  // so that sigma_i becomes sigma_{i+shift}.
  BraidWord embed(int n, int shift = 0) const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

// sigma_i sigma_{i+1} ... sigma_{j-1}; empty for i == j.
BraidWord alpha_ij(int k, int i, int j);
BraidWord beta_ij(int k, int i, int j);
BraidWord alpha(int k);
BraidWord beta(int k);
// The generator of the centre, alpha^k.
BraidWord full_twist(int k);
// Pure braid generators: s_{i,i+1} = sigma_i^2, s_{i,j+1} = sigma_j s_{i,j} sigma_j^-1.
BraidWord pure_generator(int k, int i, int j);
// R_t = s_{1,t} s_{2,t} ... s_{t-1,t}.
BraidWord r_word(int k, int t);

// Generators of the commutator subgroup.
BraidWord comm_u(int k);
BraidWord comm_v(int k);
BraidWord comm_w(int k);
BraidWord comm_c(int k, int i);

Permutation perm_image(const BraidWord& w);
int exponent_sum(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

// Dehornoy handle reduction. Returns the reduced word: empty iff w is trivial.
BraidWord handle_reduce(const BraidWord& w);
bool is_trivial(const BraidWord& w);
bool words_equal(const BraidWord& u, const BraidWord& v);

struct WordIdentity {
  std::string name;
  BraidWord lhs;
  BraidWord rhs;
};

// Conjugation identities for alpha and alpha_ij, alpha^k = beta^(k-1) and the
// rest of the two-generator presentation, the staircase identities for
// alpha_{1t} and R_t up to t <= max_t, and Gorin's relation when k >= 4.
std::vector<WordIdentity> known_identities(int k, int max_t = 5);

// Images sigma_i -> v_i u_i in B_{mk} for a word v in B_m.
std::vector<BraidWord> cable_hom(int k, int m, const BraidWord& v);
// The pieces of the cabling construction, for relation checks.
BraidWord cable_u(int k, int m, int i);
BraidWord cable_v(int k, int m, const BraidWord& v, int i);

struct Progression {
  int k = 0;
  int index = 0;  // 1..4
  long long initial = 0;
  long long difference = 0;

  bool contains(long long n) const {
    return n >= initial && (n - initial) % difference == 0;
  }
};

Progression progression(int k, int index);

// Images alpha -> x^p and beta -> conjugate of y^q, with x, y in {a, b} the
// special generators of B_n, and p, q linear in a free integer t.
struct SpecialParams {
  int case_index = 0;
  long long l = 0;
  long long p_per_t = 0;
  long long q_per_t = 0;
  bool alpha_to_a = true;   // x = a, else b
  bool beta_to_a = false;   // y = a, else b
  bool t_coprime = false;   // gcd(t, k(k-1)) = 1 required

  long long p(long long t) const { return p_per_t * t; }
  long long q(long long t) const { return q_per_t * t; }
  // k * deg(image of alpha) == (k-1) * deg(image of beta) with deg a = n-1,
  // deg b = n.
  bool balanced(int k, long long n, long long t) const;
};

// Empty when n lies in none of the four progressions. Throws for k == 4.
std::vector<SpecialParams> special_params(int k, long long n);

}  // namespace braidperm
