#pragma once

// Slow, independent reference implementations used only by the tests. None of
// them call the search, canonicalization or linear-algebra code they check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "braidperm/braid_hom.hpp"
#include "braidperm/braid_word.hpp"

namespace oracle {

using braidperm::BraidHom;
using braidperm::BraidWord;
using braidperm::Permutation;

inline std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

using Tuple = std::vector<Permutation>;

inline bool tuple_valid(const Tuple& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (j == i + 1) {
        if (s[i] * s[j] * s[i] != s[j] * s[i] * s[j]) return false;
      } else if (s[i] * s[j] != s[j] * s[i]) {
        return false;
      }
    }
  return true;
}

// Least diagonal conjugate over all of S(n).
inline Tuple tuple_canonical(const Tuple& s, const std::vector<Permutation>& group) {
  Tuple best = s;
  for (const auto& g : group) {
    Tuple c;
    for (const auto& p : s) c.push_back(g * p * g.inverse());
    if (c < best) best = c;
  }
  return best;
}

// Every tuple (s_1..s_{k-1}) in S(n) satisfying the braid relations, by
// backtracking one generator at a time; classes keyed by least conjugate.
inline std::set<Tuple> brute_force_classes(int k, int n) {
  const auto group = all_perms(n);
  std::set<Tuple> classes;
  Tuple cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k - 1) {
      classes.insert(tuple_canonical(cur, group));
      return;
    }
    for (const auto& p : group) {
      cur.push_back(p);
      if (tuple_valid(cur)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return classes;
}

inline std::optional<Permutation> brute_force_conjugacy(const BraidHom& a, const BraidHom& b) {
  for (const auto& g : all_perms(a.n())) {
    bool ok = true;
    for (int i = 1; i < a.k() && ok; ++i) ok = g * a.sigma(i) * g.inverse() == b.sigma(i);
    if (ok) return g;
  }
  return std::nullopt;
}

inline std::vector<int> type_of(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline Permutation brute_force_class_min(const Permutation& p) {
  const auto want = type_of(p);
  std::optional<Permutation> best;
  for (const auto& q : all_perms(p.degree()))
    if (type_of(q) == want && (!best || q < *best)) best = q;
  return *best;
}

// Words in the free group on x_1..x_k, letters +-i.
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Artin's action: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
inline FreeWord apply_letter(int letter, const FreeWord& w) {
  const int i = letter > 0 ? letter : -letter;
  FreeWord out;
  for (int x : w) {
    const int g = x > 0 ? x : -x;
    FreeWord img;
    if (g == i)
      img = letter > 0 ? FreeWord{i, i + 1, -i} : FreeWord{i + 1};
    else if (g == i + 1)
      img = letter > 0 ? FreeWord{i} : FreeWord{-(i + 1), i, i + 1};
    else
      img = {g};
    if (x < 0) img = free_inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(out);
}

inline std::vector<FreeWord> artin_action(const BraidWord& w) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= w.strands(); ++j) {
    FreeWord x{j};
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) x = apply_letter(*it, x);
    images.push_back(x);
  }
  return images;
}

inline bool artin_equal(const BraidWord& u, const BraidWord& v) { return artin_action(u) == artin_action(v); }

// Explicit cocycle equations on generator values h_i in (Z/m)^t for the
// action (T_s h)[s(j)] = h[j]:
//   far:   h_i + T_i h_j = h_j + T_j h_i
//   braid: h_i + T_i h_{i+1} + T_i T_{i+1} h_i = h_{i+1} + T_{i+1} h_i + T_{i+1} T_i h_{i+1}
using Vec = std::vector<long long>;

inline Vec act(const Permutation& s, const Vec& h) {
  Vec out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) out[s(static_cast<int>(j) + 1) - 1] = h[j];
  return out;
}

inline Vec add(const Vec& a, const Vec& b, long long m) {
  Vec out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    long long v = a[j] + b[j];
    if (m) v = ((v % m) + m) % m;
    out[j] = v;
  }
  return out;
}

inline bool cocycle_equations(const BraidHom& omega, long long m, const std::vector<Vec>& h) {
  const int q = omega.k();
  for (int i = 1; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      const Permutation& a = omega.sigma(i);
      const Permutation& b = omega.sigma(j);
      const Vec& hi = h[i - 1];
      const Vec& hj = h[j - 1];
      if (j >= i + 2) {
        if (add(hi, act(a, hj), m) != add(hj, act(b, hi), m)) return false;
      } else {
        const Vec lhs = add(add(hi, act(a, hj), m), act(a, act(b, hi)), m);
        const Vec rhs = add(add(hj, act(b, hi), m), act(b, act(a, hj)), m);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

// Progression membership straight from the table of initial terms.
inline std::vector<int> progression_cases(int k, long long n) {
  const long long d = static_cast<long long>(k) * (k - 1);
  const long long first[4] = {k, d, d + 1, static_cast<long long>(k - 1) * (k - 1)};
  std::vector<int> out;
  for (int i = 0; i < 4; ++i)
    if (n >= first[i] && (n - first[i]) % d == 0) out.push_back(i + 1);
  return out;
}

}  // namespace oracle
