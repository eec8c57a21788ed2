#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidperm/braid_word.hpp"
#include "braidperm/perm.hpp"

namespace braidperm {

// A homomorphism B_k -> S(n), stored by the images of sigma_1..sigma_{k-1}.
class BraidHom {
 public:
  BraidHom() = default;
  BraidHom(int k, int n, std::vector<Permutation> sigma);

  // sigma_{i+1} = alpha sigma_i alpha^-1.
  static BraidHom from_sigma1_alpha(int k, const Permutation& sigma1, const Permutation& alpha);
  // sigma_1 = alpha^-1 beta.
  static BraidHom from_alpha_beta(int k, const Permutation& alpha, const Permutation& beta);
  // Every sigma_i sent to the same permutation.
  static BraidHom constant(int k, const Permutation& image);

  int k() const { return k_; }
  int n() const { return n_; }
  const Permutation& sigma(int i) const { return sigma_.at(i - 1); }
  const std::vector<Permutation>& images() const { return sigma_; }

  Permutation alpha() const;
  Permutation beta() const;
  Permutation image(const BraidWord& w) const;
  BraidHom conjugate_by(const Permutation& g) const;  // sigma_i -> g sigma_i g^-1

  std::string to_string() const;

  friend bool operator==(const BraidHom&, const BraidHom&) = default;
  friend auto operator<=>(const BraidHom& a, const BraidHom& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.sigma_ <=> b.sigma_;
  }

 private:
  int k_ = 2;
  int n_ = 1;
  std::vector<Permutation> sigma_;
};

struct RelationViolation {
  int i = 0;
  int j = 0;
  bool braid = false;  // braid relation for j = i+1, else far commutation
};

struct ValidationReport {
  bool ok = true;
  std::vector<RelationViolation> violations;
};

ValidationReport validate(const BraidHom& h);
bool is_valid(const BraidHom& h);

struct HomClassification {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_transitive = false;
  bool is_primitive = false;
  bool is_even = false;
  long long ord_alpha = 1;
  long long ord_beta = 1;
  int fixed_point_count = 0;
  CycleType sigma1_type;
};

// Throws for an invalid homomorphism.
HomClassification classify(const BraidHom& h);

// Order of the image group by explicit closure; small degrees only.
long long image_order(const BraidHom& h);

// g with g h1(sigma_i) g^-1 = h2(sigma_i) for every i, or none.
std::optional<Permutation> hom_conjugacy(const BraidHom& h1, const BraidHom& h2);

// Restriction to an invariant set, relabelled order-preservingly.
BraidHom reduction(const BraidHom& h, const std::vector<int>& points);
// h1 on 1..n1 and h2 shifted onto n1+1..n1+n2.
BraidHom disjoint_product(const BraidHom& h1, const BraidHom& h2);
// Each image pushed through a map of S(n).
template <class F>
BraidHom compose(const BraidHom& h, F&& f) {
  std::vector<Permutation> imgs;
  for (const auto& s : h.images()) imgs.push_back(f(s));
  const int n = imgs.front().degree();
  return BraidHom(h.k(), n, std::move(imgs));
}
// Precomposition with the epimorphism B_4 -> B_3: sigma_1, sigma_3 -> s_1, sigma_2 -> s_2.
BraidHom pull_back_to_b4(const BraidHom& h3);

// The outer automorphism of S(6) sending (i,i+1) to the ith generator image of nu6.
Permutation kappa(const Permutation& p);

// Catalog of named homomorphisms. Parameters are read from the map, and an
// unknown name or a missing or out-of-range parameter throws.
//   mu {k}                      sigma_i -> (i,i+1)
//   nu6, nu4_1, nu4_2, nu4_3    exceptional homomorphisms into S(k)
//   constant {k, n}             sigma_i -> (1,..,n)
//   psi3 {n, i}                 B_3 -> S(n), n = 4..7
//   psi4_5, psi4_6 {i}, psi5_6
//   kappa_mu6                   kappa composed with mu_6
//   model {j, k}                j = 1,2,3 into S(2k)
//   mu_lift {n, j}              j = 0..3, lifts of mu_n into S(2n)
//   psi56_lift {j}              j = 0..3, lifts of psi5_6 into S(12)
//   nu6_lift {y}                y = 0,1, lifts of nu6 into S(12)
//   fixed_pair {k, n}           sigma_i -> (1,2)(i+2,i+3), n >= k+2
//   doubled {k, n}              sigma_i -> (2i-1,2i+1)(2i,2i+2), n >= 2k
//   b4_extra {j, n}             j = 3..6, extra examples B_4 -> S(n)
//   b6_s10                      transitive non-cyclic B_6 -> S(10)
BraidHom named_hom(const std::string& name, const std::map<std::string, int>& params = {});
std::vector<std::string> catalog_names();

// The sigma_1 images listed alongside the (alpha, beta) data of psi3, in the
// same order; used to cross-check the derived column. None where no sigma_1
// is listed.
std::optional<Permutation> psi3_listed_sigma1(int n, int i);
int psi3_count(int n);

}  // namespace braidperm
