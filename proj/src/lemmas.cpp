#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "braidperm/suites.hpp"

namespace braidperm {
namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> of_type(int n, const std::vector<int>& parts) {
  std::vector<Permutation> out;
  for (auto& p : all_perms(n))
    if (cycle_type(p).parts == parts) out.push_back(std::move(p));
  return out;
}

bool braid_like(const Permutation& g, const Permutation& h) {
  return !g.commutes_with(h) && g * h * g == h * g * h;
}

std::set<int> support_set(const Permutation& p) {
  const auto s = p.support();
  return {s.begin(), s.end()};
}

std::set<std::pair<int, int>> transpositions_of(const Permutation& p) {
  std::set<std::pair<int, int>> out;
  for (const auto& c : p.cycles())
    if (c.size() == 2) out.insert({c[0], c[1]});
  return out;
}

std::vector<int> common(const Permutation& a, const Permutation& b) {
  const auto sa = support_set(a), sb = support_set(b);
  std::vector<int> out;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

// Cyclic neighbours in the single nontrivial cycle of p.
bool neighbours(const Permutation& p, int x, int y) { return p(x) == y || p(y) == x; }

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void add(bool holds, const std::string& what) {
    ++instances_;
    if (!holds && first_.empty()) first_ = what;
    ok_ = ok_ && holds;
  }
  SuiteCheck done() const {
    std::ostringstream os;
    if (ok_)
      os << instances_ << " instances";
    else
      os << "counterexample: " << first_;
    return {name_, ok_ && instances_ > 0, instances_ ? os.str() : "no instances"};
  }

 private:
  std::string name_;
  long long instances_ = 0;
  bool ok_ = true;
  std::string first_;
};

SuiteCheck braid_like_power_bound() {
  Tally t("braid-like a, b with b braid-like to a^q give a^(nu(q-1)) = b^(nu(q-1)) = 1, nu = gcd(q+1,4), n <= 8");
  for (int n = 3; n <= 8; ++n) {
    const auto perms = all_perms(n);
    // a up to conjugacy; q over 2..2 ord(a)+1
    for (const auto& ct : all_cycle_types(n)) {
      const Permutation a = class_min_representative(ct, n);
      const long long ord = a.order();
      for (const auto& b : perms) {
        if (!braid_like(b, a)) continue;
        for (long long q = 2; q <= 2 * ord + 1; ++q) {
          if (!braid_like(b, a.pow(q))) continue;
          const long long e = std::gcd(q + 1, 4LL) * (q - 1);
          t.add(a.pow(e).is_identity() && b.pow(e).is_identity(),
                "a=" + a.to_string() + " b=" + b.to_string() + " q=" + std::to_string(q));
        }
      }
    }
  }
  return t.done();
}

SuiteCheck braid_like_power_sharpness() {
  const Permutation a = Permutation::parse("(1,2,3,4,5,6,7,8)");
  const Permutation b = Permutation::parse("(1,7,6,8,5,3,2,4)");
  const bool ok = braid_like(b, a) && braid_like(b, a.pow(3)) && a.order() == 8 && b.order() == 8;
  return {"power bound is attained: a=(1,..,8), b=(1,7,6,8,5,3,2,4), q=3 with ord a = ord b = 8", ok, ""};
}

std::vector<SuiteCheck> commuting_facts() {
  Tally supp("commuting a, b: b maps supp a onto itself, n <= 6");
  Tally single("commuting a, b with a single r-cycle C in a: b on supp C is a power of C, n <= 6");
  for (int n = 2; n <= 6; ++n) {
    const auto perms = all_perms(n);
    for (const auto& a : perms) {
      const auto sa = support_set(a);
      std::vector<std::vector<int>> lone;  // single r-cycles of a
      std::map<std::size_t, int> count;
      for (const auto& c : a.cycles()) ++count[c.size()];
      for (const auto& c : a.cycles())
        if (count[c.size()] == 1) lone.push_back(c);
      for (const auto& b : perms) {
        if (!a.commutes_with(b)) continue;
        std::set<int> img;
        for (int x : sa) img.insert(b(x));
        supp.add(img == sa, "a=" + a.to_string() + " b=" + b.to_string());
        for (const auto& c : lone) {
          const Permutation cp = Permutation::from_cycles(n, {c});
          bool found = false;
          for (std::size_t q = 0; q < c.size() && !found; ++q) {
            const Permutation cq = cp.pow(static_cast<long long>(q));
            found = std::all_of(c.begin(), c.end(), [&](int x) { return b(x) == cq(x); });
          }
          single.add(found, "a=" + a.to_string() + " b=" + b.to_string());
        }
      }
    }
  }
  return {supp.done(), single.done()};
}

std::vector<std::vector<int>> sorted_family(std::vector<std::vector<int>> f) {
  for (auto& s : f) std::sort(s.begin(), s.end());
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<SuiteCheck> single_invariant_set_facts() {
  Tally conj("a unique invariant r-set S of a moves to c(S) under conjugation by c, n <= 5");
  Tally comm("a unique invariant r-set S of a is fixed by everything commuting with a, n <= 5");
  Tally same("a unique invariant r-set of a is also the unique one of each commuting conjugate b, n <= 5");
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_perms(n);
    for (const auto& a : perms)
      for (int r = 1; r < n; ++r) {
        const auto inv = invariant_subsets(a, r);
        if (inv.size() != 1) continue;
        std::vector<int> s = inv.front();
        std::sort(s.begin(), s.end());
        const std::string tag = "a=" + a.to_string() + " r=" + std::to_string(r);
        for (const auto& c : perms) {
          std::vector<int> cs;
          for (int x : s) cs.push_back(c(x));
          std::sort(cs.begin(), cs.end());
          conj.add(sorted_family(invariant_subsets(a.conjugate_by(c), r)) == std::vector<std::vector<int>>{cs},
                   tag + " c=" + c.to_string());
          if (!a.commutes_with(c)) continue;
          comm.add(cs == s, tag + " b=" + c.to_string());
          if (cycle_type(c) == cycle_type(a))
            same.add(sorted_family(invariant_subsets(c, r)) == std::vector<std::vector<int>>{s}, tag + " b=" + c.to_string());
        }
      }
  }
  return {conj.done(), comm.done(), same.done()};
}

std::vector<SuiteCheck> three_cycle_facts() {
  Tally couple("braid-like 3-cycles share exactly two points, n = 7");
  Tally commuting("commuting 3-cycles with a common point: C = A or A^2, n = 7");
  const auto c7 = of_type(7, {3});
  for (const auto& a : c7)
    for (const auto& b : c7) {
      const std::string tag = "A=" + a.to_string() + " B=" + b.to_string();
      if (braid_like(a, b)) couple.add(common(a, b).size() == 2, tag);
      if (a.commutes_with(b) && !common(a, b).empty()) commuting.add(b == a || b == a.pow(2), tag);
    }
  Tally triple("3-cycles A, B, C with ABA = BAB, BCB = CBC, AC = CA: A = C, n = 6");
  const auto c6 = of_type(6, {3});
  for (const auto& a : c6)
    for (const auto& b : c6) {
      if (a * b * a != b * a * b) continue;
      for (const auto& c : c6)
        if (b * c * b == c * b * c && a.commutes_with(c))
          triple.add(a == c, "A=" + a.to_string() + " B=" + b.to_string() + " C=" + c.to_string());
    }
  Tally a3("3-cycles A, B: AB or A^-1 B is not a 3-cycle, n = 6");
  for (const auto& a : c6)
    for (const auto& b : c6) {
      const std::vector<int> three{3};
      a3.add(!(cycle_type(a * b).parts == three && cycle_type(a.inverse() * b).parts == three),
             "A=" + a.to_string() + " B=" + b.to_string());
    }
  Tally a5("5-cycles A, B in S(5): one of AB, A^-1 B, A^-2 B, B^2 A B is not a 5-cycle");
  const auto f5 = of_type(5, {5});
  for (const auto& a : f5)
    for (const auto& b : f5) {
      const std::vector<int> five{5};
      const auto is5 = [&](const Permutation& p) { return cycle_type(p).parts == five; };
      a5.add(!(is5(a * b) && is5(a.inverse() * b) && is5(a.pow(-2) * b) && is5(b * b * a * b)),
             "A=" + a.to_string() + " B=" + b.to_string());
    }
  return {couple.done(), commuting.done(), triple.done(), a3.done(), a5.done()};
}

// How many of the three shapes for the centralizer of two p-cycles D matches.
int p_cycle_shapes(const Permutation& a, const Permutation& d, int p) {
  const auto cyc = a.cycles();
  const auto& b = cyc[0];
  const auto& c = cyc[1];
  const int n = a.degree();
  const Permutation bp = Permutation::from_cycles(n, {b}), cp = Permutation::from_cycles(n, {c});
  int shapes = 0;
  bool first = false;
  for (int m = 0; m < p && !first; ++m)
    for (int k = 0; k < p && !first; ++k) first = d == bp.pow(m) * cp.pow(k);
  shapes += first;
  bool second = false;
  for (int r = 0; r < p && !second; ++r) {
    std::vector<std::vector<int>> ts;
    for (int i = 0; i < p; ++i) ts.push_back({b[i], c[(i + r) % p]});
    second = d == Permutation::from_cycles(n, ts);
  }
  shapes += second;
  bool third = false;
  for (int r = 0; r < p && !third; ++r)
    for (int s = 0; s < p && !third; ++s) {
      const int u = (r + s) % p;
      if (u == 0) continue;
      std::vector<int> cycle;
      for (int i = 0; i < p; ++i) {
        cycle.push_back(b[(i * u) % p]);
        cycle.push_back(c[(r + i * u) % p]);
      }
      if (d != Permutation::from_cycles(n, {cycle})) continue;
      int q = 1;
      while ((q * u) % p != 1) ++q;
      third = a == d.pow(2 * q);
    }
  shapes += third;
  return shapes;
}

SuiteCheck p_cycle_centralizer(int p) {
  std::ostringstream name;
  name << "every D commuting with two disjoint " << p << "-cycles has exactly one of the three shapes"
       << (p == 3 ? ", exhaustive over S(6)" : ", 200 random conjugates in S(10)");
  Tally t(name.str());
  auto run = [&](const Permutation& a) {
    for (const auto& d : centralizer_elements(a))
      t.add(p_cycle_shapes(a, d, p) == 1, "A=" + a.to_string() + " D=" + d.to_string());
  };
  if (p == 3) {
    const auto perms = all_perms(6);
    for (const auto& a : of_type(6, {3, 3}))
      for (const auto& d : perms)
        if (d.commutes_with(a)) t.add(p_cycle_shapes(a, d, p) == 1, "A=" + a.to_string() + " D=" + d.to_string());
  } else {
    std::mt19937 rng(20240601);
    const Permutation a0 = Permutation::parse("(1,2,3,4,5)(6,7,8,9,10)");
    std::vector<int> im(10);
    std::iota(im.begin(), im.end(), 1);
    for (int s = 0; s < 200; ++s) {
      std::shuffle(im.begin(), im.end(), rng);
      run(a0.conjugate_by(Permutation(im)));
    }
  }
  return t.done();
}

std::vector<SuiteCheck> small_type_facts() {
  Tally c22("commuting distinct [2,2] with common points: same support and no common transposition, or two common points forming a shared transposition, n = 8");
  Tally b22("braid-like [2,2]: three common points two of which form a shared transposition, or two common points forming a transposition of neither, n = 8");
  const auto t22 = of_type(8, {2, 2});
  for (const auto& a : t22)
    for (const auto& b : t22) {
      const auto cm = common(a, b);
      const auto ta = transpositions_of(a), tb = transpositions_of(b);
      std::vector<std::pair<int, int>> shared;
      std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(shared));
      const std::string tag = "A=" + a.to_string() + " B=" + b.to_string();
      if (a != b && a.commutes_with(b) && !cm.empty()) {
        const bool i = support_set(a) == support_set(b) && shared.empty();
        const bool ii = cm.size() == 2 && shared.size() == 1 && shared[0] == std::pair{cm[0], cm[1]};
        c22.add(i || ii, tag);
      }
      if (braid_like(a, b)) {
        bool i = false;
        if (cm.size() == 3)
          for (const auto& tr : shared)
            i = i || (std::count(cm.begin(), cm.end(), tr.first) && std::count(cm.begin(), cm.end(), tr.second));
        const bool ii = cm.size() == 2 && !ta.count({cm[0], cm[1]}) && !tb.count({cm[0], cm[1]});
        b22.add(i || ii, tag);
      }
    }
  Tally b4("braid-like 4-cycles: same support and B is A with two neighbouring symbols swapped, or two common symbols neighbouring in neither, n = 8");
  const auto t4 = of_type(8, {4});
  for (const auto& a : t4)
    for (const auto& b : t4) {
      if (!braid_like(a, b)) continue;
      const auto cm = common(a, b);
      bool i = false;
      if (support_set(a) == support_set(b)) {
        const auto cyc = a.cycles().front();
        for (int j = 0; j < 4 && !i; ++j) {
          auto sw = cyc;
          std::swap(sw[j], sw[(j + 1) % 4]);
          i = b == Permutation::from_cycles(8, {sw});
        }
      }
      const bool ii = cm.size() == 2 && !neighbours(a, cm[0], cm[1]) && !neighbours(b, cm[0], cm[1]);
      b4.add(i || ii, "A=" + a.to_string() + " B=" + b.to_string());
    }
  return {c22.done(), b22.done(), b4.done()};
}

SuiteCheck jordan_spot_check() {
  Tally t("transitive primitive groups containing a transposition are symmetric, n <= 7");
  std::mt19937 rng(7);
  for (int n = 3; n <= 7; ++n) {
    std::vector<Permutation> xs = all_perms(n);
    if (n == 7) {
      std::shuffle(xs.begin(), xs.end(), rng);
      xs.resize(300);
    }
    const Permutation tr = Permutation::transposition(n, 1, 2);
    for (const auto& x : xs) {
      const std::vector<Permutation> gens{tr, x};
      if (!is_transitive(n, gens) || minimal_blocks(n, gens)) continue;
      t.add(static_cast<long long>(group_closure(n, gens).size()) == factorial(n), "x=" + x.to_string());
    }
  }
  return t.done();
}

}  // namespace

std::vector<SuiteCheck> permutation_fact_checks() {
  std::vector<SuiteCheck> out{braid_like_power_bound(), braid_like_power_sharpness()};
  for (auto* f : {commuting_facts, single_invariant_set_facts, three_cycle_facts, small_type_facts})
    for (auto& c : f()) out.push_back(std::move(c));
  out.push_back(p_cycle_centralizer(3));
  out.push_back(p_cycle_centralizer(5));
  out.push_back(jordan_spot_check());
  return out;
}

std::vector<SuiteCheck> census_diagnostic_checks(const std::vector<CensusRecord>& records, const std::string& label) {
  std::map<std::string, std::pair<int, std::string>> applicable;  // count, first violation
  std::vector<std::string> order;
  const auto rep = diagnostics(records);
  for (const auto& e : rep.entries) {
    if (!applicable.count(e.check)) order.push_back(e.check);
    auto& slot = applicable[e.check];
    if (!e.applicable) continue;
    ++slot.first;
    if (!e.holds && slot.second.empty()) slot.second = records[e.record].representative.to_string();
  }
  std::vector<SuiteCheck> out;
  for (const auto& name : order) {
    const auto& [count, bad] = applicable[name];
    out.push_back({label + ": " + name, bad.empty(),
                   bad.empty() ? std::to_string(count) + " applicable records" : "counterexample: " + bad});
  }
  return out;
}

}  // namespace braidperm
