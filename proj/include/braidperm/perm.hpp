#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidperm {

// A bijection of {1..n}. Values are immutable; composition is
// (a * b)(x) = a(b(x)), so a word acts right-to-left on points and
// conjugation g a g^-1 relabels the cycles of a through g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Cycle notation such as "(1,2)(3,4,5)" or "()" for the identity.
  // The degree defaults to the largest point mentioned.
  static Permutation parse(std::string_view text, int n = 0);
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  Permutation conjugate_by(const Permutation& g) const;  // g * this * g^-1
  Permutation extend(int n) const;
  Permutation restrict_to(const std::vector<int>& points) const;

  // Nontrivial cycles, each rotated to start at its least point,
  // ordered by that least point.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> support() const;
  std::vector<int> fixed_points() const;
  bool is_identity() const;
  bool is_even() const;
  long long order() const;
  bool commutes_with(const Permutation& other) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct CycleType {
  std::vector<int> parts;  // lengths >= 2, descending

  bool empty() const { return parts.empty(); }
  long long lcm() const;
  std::string to_string() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

struct RComponent {
  int r = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<int> support;  // sorted

  int t() const { return static_cast<int>(cycles.size()); }
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

CycleType cycle_type(const Permutation& p);
RComponent r_component(const Permutation& p, int r);

// The containment relation between permutations: every nontrivial cycle
// of a is also a cycle of b.
bool cycles_contained(const Permutation& a, const Permutation& b);

// g with g a g^-1 = b, aligning cycles longest-first with ties broken by
// least point; none when the cycle types differ.
std::optional<Permutation> conjugacy_witness(const Permutation& a, const Permutation& b);

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens);
bool is_transitive(int n, const std::vector<Permutation>& gens);

// A nontrivial block system of least block size, or none when the group
// is primitive. Throws for intransitive input.
std::optional<std::vector<std::vector<int>>> minimal_blocks(int n,
                                                            const std::vector<Permutation>& gens);
bool is_block_system(const std::vector<std::vector<int>>& blocks,
                     const std::vector<Permutation>& gens);

// All r-element subsets fixed setwise by p.
std::vector<std::vector<int>> invariant_subsets(const Permutation& p, int r);

// Breadth-first closure; intended for small degrees only.
std::vector<Permutation> group_closure(int n, const std::vector<Permutation>& gens);

// Every element commuting with p, built from cycle rotations, permutations of
// equal-length cycles and the symmetric group on the fixed points.
std::vector<Permutation> centralizer_elements(const Permutation& p);
long long centralizer_order(const CycleType& ct, int n);
long long class_size(const CycleType& ct, int n);

// Partitions of n as cycle types (parts >= 2), including the identity.
std::vector<CycleType> all_cycle_types(int n);
// The lexicographically least permutation (in one-line notation) of the class.
Permutation class_min_representative(const CycleType& ct, int n);

// Point relabelling: the unique order-preserving bijection of the sorted
// points onto 1..|points|.
std::vector<int> relabel_map(int n, const std::vector<int>& points);

long long factorial(int n);

}  // namespace braidperm
