#include "braidperm/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

namespace braidperm {

namespace {

constexpr int kMaxDegree = 16;
using Fast = std::array<std::uint8_t, kMaxDegree>;  // 0-indexed images

Fast to_fast(const Permutation& p) {
  Fast f{};
  for (int x = 0; x < p.degree(); ++x) f[x] = static_cast<std::uint8_t>(p.images()[x] - 1);
  return f;
}

Permutation from_fast(const Fast& f, int n) {
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = f[x] + 1;
  return Permutation(std::move(im));
}

inline Fast mul(const Fast& a, const Fast& b, int n) {
  Fast c{};
  for (int x = 0; x < n; ++x) c[x] = a[b[x]];
  return c;
}

inline Fast inv(const Fast& a, int n) {
  Fast c{};
  for (int x = 0; x < n; ++x) c[a[x]] = static_cast<std::uint8_t>(x);
  return c;
}

inline bool equal(const Fast& a, const Fast& b, int n) {
  for (int x = 0; x < n; ++x)
    if (a[x] != b[x]) return false;
  return true;
}

inline bool less(const Fast& a, const Fast& b, int n) {
  for (int x = 0; x < n; ++x)
    if (a[x] != b[x]) return a[x] < b[x];
  return false;
}

// z a z^-1 without forming the inverse: (z a z^-1)(z(x)) = z(a(x)).
inline Fast conj(const Fast& a, const Fast& z, int n) {
  Fast c{};
  for (int x = 0; x < n; ++x) c[z[x]] = z[a[x]];
  return c;
}

// Checks the two-generator presentation for alpha and beta = alpha sigma_1.
class SpecialChecker {
 public:
  SpecialChecker(int k, int n) : k_(k), n_(n) {}

  bool operator()(const Fast& a, const Fast& s) {
    const int n = n_;
    const Fast b = mul(a, s, n);
    // alpha^k = beta^(k-1); powers of alpha up to k+1 are reused below.
    pa_[0] = identity();
    for (int e = 1; e <= k_ + 1; ++e) pa_[e] = mul(pa_[e - 1], a, n);
    Fast bp = b;
    for (int e = 2; e <= k_ - 1; ++e) bp = mul(bp, b, n);
    if (!equal(pa_[k_], bp, n)) return false;
    for (int i = 2; i <= k_ / 2; ++i) {
      const Fast lhs = mul(mul(b, pa_[i - 1], n), b, n);
      const Fast rhs = mul(mul(mul(mul(pa_[i], b, n), inv(pa_[i + 1], n), n), b, n), pa_[i], n);
      if (!equal(lhs, rhs, n)) return false;
    }
    return true;
  }

 private:
  Fast identity() const {
    Fast f{};
    for (int x = 0; x < n_; ++x) f[x] = static_cast<std::uint8_t>(x);
    return f;
  }
  int k_, n_;
  std::array<Fast, 32> pa_{};
};

struct ClassSeed {
  Permutation sigma1;
  Fast fast;
  std::vector<Fast> centralizer;
};

BraidHom hom_from_seed(int k, const Permutation& s, const Permutation& a) {
  BraidHom h = BraidHom::from_sigma1_alpha(k, s, a);
  if (!is_valid(h) || h.alpha() != a)
    throw std::logic_error("seed pair passed the presentation check but does not define a homomorphism");
  return h;
}

// Visits every alpha in S(n) whose one-line notation starts with the given
// prefix (0-indexed values).
template <class F>
void for_each_with_prefix(int n, const std::vector<std::uint8_t>& prefix, F&& f) {
  Fast a{};
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    a[i] = prefix[i];
    used[prefix[i]] = 1;
  }
  std::vector<std::uint8_t> rest;
  for (int v = 0; v < n; ++v)
    if (!used[v]) rest.push_back(static_cast<std::uint8_t>(v));
  do {
    for (std::size_t i = 0; i < rest.size(); ++i) a[prefix.size() + i] = rest[i];
    f(a);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<std::vector<std::uint8_t>> prefixes(int n) {
  std::vector<std::vector<std::uint8_t>> out;
  if (n < 3) {
    out.push_back({});
    return out;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) out.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)});
  return out;
}

bool passes(const CensusQuery& q, const HomClassification& c) {
  if (q.non_cyclic && c.is_cyclic) return false;
  if (q.transitive && !c.is_transitive) return false;
  if (q.primitive && !c.is_primitive) return false;
  if (q.even && !c.is_even) return false;
  return true;
}

}  // namespace

double census_cost(int k, int n) {
  (void)k;
  return static_cast<double>(all_cycle_types(n).size() - 1) * static_cast<double>(factorial(n));
}

std::vector<Permutation> alpha_solutions(int k, const Permutation& sigma1) {
  const int n = sigma1.degree();
  if (n > kMaxDegree) throw std::invalid_argument("degree too large for the census search");
  SpecialChecker check(k, n);
  const Fast s = to_fast(sigma1);
  std::vector<Permutation> out;
  for_each_with_prefix(n, {}, [&](const Fast& a) {
    if (check(a, s)) out.push_back(from_fast(a, n));
  });
  for (const auto& a : out) hom_from_seed(k, sigma1, a);
  return out;
}

BraidHom canonical_under_centralizer(const BraidHom& h, long long* stabilizer_order) {
  const int n = h.n();
  const Fast a = to_fast(h.alpha());
  Fast best = a;
  Permutation best_z = Permutation::identity(n);
  long long stab = 0;
  for (const auto& z : centralizer_elements(h.sigma(1))) {
    const Fast fz = to_fast(z);
    const Fast c = conj(a, fz, n);
    if (equal(c, a, n)) ++stab;
    if (less(c, best, n)) {
      best = c;
      best_z = z;
    }
  }
  if (stabilizer_order) *stabilizer_order = stab;
  return h.conjugate_by(best_z);
}

std::vector<CensusRecord> enumerate(const CensusQuery& q) {
  if (q.k < 2 || q.n < 1) throw std::invalid_argument("census needs k >= 2 and n >= 1");
  if (q.n > q.max_n || q.k > q.max_k || q.n > kMaxDegree)
    throw BudgetExceeded("census (k=" + std::to_string(q.k) + ", n=" + std::to_string(q.n) +
                             ") exceeds the budget; estimated seed pairs " +
                             std::to_string(static_cast<long long>(census_cost(q.k, q.n))),
                         census_cost(q.k, q.n));
  const int k = q.k, n = q.n;
  std::vector<CensusRecord> records;

  // Cyclic classes: one per cycle type of the common image.
  for (const auto& ct : all_cycle_types(n)) {
    const Permutation rep = class_min_representative(ct, n);
    BraidHom h = BraidHom::constant(k, rep);
    HomClassification c = classify(h);
    if (!passes(q, c)) continue;
    records.push_back({h, c, class_size(ct, n), rep, h.alpha()});
  }

  std::vector<ClassSeed> seeds;
  for (const auto& ct : all_cycle_types(n)) {
    if (ct.empty()) continue;
    ClassSeed cs{class_min_representative(ct, n), {}, {}};
    cs.fast = to_fast(cs.sigma1);
    if (q.dedup)
      for (const auto& z : centralizer_elements(cs.sigma1)) cs.centralizer.push_back(to_fast(z));
    seeds.push_back(std::move(cs));
  }
  const auto pre = prefixes(n);
  const std::size_t total = seeds.size() * pre.size();
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<CensusRecord> found;
  std::exception_ptr failure;

  auto worker = [&] {
    SpecialChecker check(k, n);
    std::vector<CensusRecord> local;
    try {
      for (std::size_t item; (item = next.fetch_add(1)) < total;) {
        const ClassSeed& cs = seeds[item / pre.size()];
        const Fast& s = cs.fast;
        for_each_with_prefix(n, pre[item % pre.size()], [&](const Fast& a) {
          // alpha commuting with sigma_1 forces sigma_2 = sigma_1: a cyclic class.
          if (equal(conj(s, a, n), s, n)) return;
          if (!check(a, s)) return;
          std::optional<long long> size_hint;
          if (q.dedup) {
            long long stab = 0;
            for (const auto& z : cs.centralizer) {
              const Fast c = conj(a, z, n);
              if (less(c, a, n)) return;
              if (equal(c, a, n)) ++stab;
            }
            size_hint = factorial(n) / stab;
          }
          const Permutation pa = from_fast(a, n);
          BraidHom h = hom_from_seed(k, cs.sigma1, pa);
          HomClassification c = classify(h);
          if (!passes(q, c)) return;
          local.push_back({std::move(h), c, size_hint, cs.sigma1, pa});
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = total;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& r : local) found.push_back(std::move(r));
  };

  const int nw = std::max(1, q.workers);
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& r : found) records.push_back(std::move(r));
  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.seed_sigma1 != b.seed_sigma1) return a.seed_sigma1 < b.seed_sigma1;
    return a.seed_alpha < b.seed_alpha;
  });
  return records;
}

CatalogMatch verify_against_catalog(const std::vector<CensusRecord>& records,
                                    const std::vector<BraidHom>& expected) {
  CatalogMatch m;
  std::vector<char> taken(expected.size(), 0);
  for (std::size_t r = 0; r < records.size(); ++r) {
    bool hit = false;
    for (std::size_t e = 0; e < expected.size() && !hit; ++e) {
      if (taken[e]) continue;
      const auto& h = records[r].representative;
      if (h.k() != expected[e].k() || h.n() != expected[e].n()) continue;
      if (hom_conjugacy(h, expected[e])) {
        taken[e] = 1;
        m.pairs.emplace_back(r, e);
        hit = true;
      }
    }
    if (!hit) m.unmatched_records.push_back(r);
  }
  for (std::size_t e = 0; e < expected.size(); ++e)
    if (!taken[e]) m.unmatched_expected.push_back(e);
  return m;
}

bool DiagnosticsReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const DiagnosticEntry& e) { return e.holds; });
}

std::vector<DiagnosticEntry> DiagnosticsReport::violations() const {
  std::vector<DiagnosticEntry> out;
  for (const auto& e : entries)
    if (!e.holds) out.push_back(e);
  return out;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

DiagnosticsReport diagnostics(const std::vector<CensusRecord>& records) {
  DiagnosticsReport rep;
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const auto& rec = records[idx];
    const BraidHom& h = rec.representative;
    const auto& c = rec.classification;
    const int k = h.k(), n = h.n();

    DiagnosticEntry orders{idx, "k | ord alpha and (k-1) | ord beta", !c.is_cyclic && k != 4, true};
    if (orders.applicable) orders.holds = c.ord_alpha % k == 0 && c.ord_beta % (k - 1) == 0;
    rep.entries.push_back(orders);

    DiagnosticEntry sub{idx, "(j-i+1) | ord alpha_ij", !c.is_cyclic, true};
    if (sub.applicable)
      for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j) {
          if (k == 4 && j - i != 2) continue;
          if (h.image(alpha_ij(k, i, j)).order() % (j - i + 1) != 0) sub.holds = false;
        }
    rep.entries.push_back(sub);

    bool prime_window = false;
    for (int p = 3; p <= k - 2; ++p)
      if (is_prime(p) && 2 * p > n) prime_window = true;
    DiagnosticEntry fix{idx, "at least k-2 fixed points of sigma_1",
                        k > 4 && prime_window && !c.is_cyclic && c.is_transitive, true};
    if (fix.applicable) fix.holds = c.fixed_point_count >= k - 2;
    rep.entries.push_back(fix);

    const auto& parts = c.sigma1_type.parts;
    bool distinct = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
    bool proper = std::all_of(parts.begin(), parts.end(), [n](int r) { return r < n; });
    DiagnosticEntry supp{idx, "support of sigma_1 at most n / floor(k/2)",
                         k > 4 && c.is_transitive && !parts.empty() && distinct && proper, true};
    if (supp.applicable)
      supp.holds = std::accumulate(parts.begin(), parts.end(), 0) * (k / 2) <= n;
    rep.entries.push_back(supp);
  }
  return rep;
}

}  // namespace braidperm
