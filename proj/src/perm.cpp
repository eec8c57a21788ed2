#include "braidperm/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace braidperm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      if (a < 1 || a > n) throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("cycles are not disjoint");
      used[a] = 1;
      im[a - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  int maxpt = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw std::invalid_argument("expected a point in cycle notation");
      int v = std::stoi(std::string(text.substr(i, j - i)));
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (n == 0) n = maxpt;
  if (maxpt > n) throw std::invalid_argument("cycle point exceeds degree");
  return from_cycles(n, cycles);
}

Permutation Permutation::transposition(int n, int a, int b) {
  return from_cycles(n, {{a, b}});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[rhs.images_[x] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x] - 1] = static_cast<int>(x) + 1;
  return out;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  Permutation acc = identity(degree());
  while (k) {
    if (k & 1ULL) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (degree() != g.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  Permutation out;
  out.images_.resize(images_.size());
  for (int x = 1; x <= degree(); ++x) out.images_[g(x) - 1] = g((*this)(x));
  return out;
}

Permutation Permutation::extend(int n) const {
  if (n < degree()) throw std::invalid_argument("cannot shrink a permutation by extension");
  Permutation out = *this;
  for (int x = degree() + 1; x <= n; ++x) out.images_.push_back(x);
  return out;
}

Permutation Permutation::restrict_to(const std::vector<int>& points) const {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  auto map = relabel_map(degree(), sorted);
  std::vector<int> im(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int img = (*this)(sorted[i]);
    if (map[img] == 0) throw std::invalid_argument("set is not invariant");
    im[i] = map[img];
  }
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int x = 1; x <= degree(); ++x) {
    if (seen[x] || (*this)(x) == x) continue;
    std::vector<int> c;
    for (int y = x; !seen[y]; y = (*this)(y)) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) != x) s.push_back(x);
  return s;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> s;
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) == x) s.push_back(x);
  return s;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

long long Permutation::order() const { return cycle_type(*this).lcm(); }

bool Permutation::commutes_with(const Permutation& other) const {
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(other(x)) != other((*this)(x))) return false;
  return true;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

long long CycleType::lcm() const {
  long long acc = 1;
  for (int p : parts) acc = std::lcm(acc, static_cast<long long>(p));
  return acc;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  for (const auto& c : p.cycles()) ct.parts.push_back(static_cast<int>(c.size()));
  std::sort(ct.parts.rbegin(), ct.parts.rend());
  return ct;
}

RComponent r_component(const Permutation& p, int r) {
  if (r < 2) throw std::invalid_argument("component length must be at least 2");
  RComponent rc;
  rc.r = r;
  for (auto& c : p.cycles()) {
    if (static_cast<int>(c.size()) != r) continue;
    rc.support.insert(rc.support.end(), c.begin(), c.end());
    rc.cycles.push_back(std::move(c));
  }
  std::sort(rc.support.begin(), rc.support.end());
  return rc;
}

bool cycles_contained(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  for (const auto& c : a.cycles())
    for (int x : c)
      if (b(x) != a(x)) return false;
  return true;
}

namespace {

// Cycles including fixed points as 1-cycles, sorted longest-first then by
// least point.
std::vector<std::vector<int>> aligned_cycles(const Permutation& p) {
  auto cs = p.cycles();
  for (int x : p.fixed_points()) cs.push_back({x});
  std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return cs;
}

}  // namespace

std::optional<Permutation> conjugacy_witness(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  if (cycle_type(a) != cycle_type(b)) return std::nullopt;
  auto ca = aligned_cycles(a);
  auto cb = aligned_cycles(b);
  std::vector<int> im(a.degree());
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca[i].size(); ++j) im[ca[i][j] - 1] = cb[i][j];
  Permutation g(std::move(im));
  if (a.conjugate_by(g) != b) throw std::logic_error("conjugacy witness failed to verify");
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
  std::map<int, std::vector<int>> by_root;
  for (int x = 1; x <= n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, pts] : by_root) out.push_back(std::move(pts));
  return out;
}

}  // namespace

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
    for (int x = 1; x <= n; ++x) uf.unite(x, g(x));
  }
  return classes_of(uf, n);
}

bool is_transitive(int n, const std::vector<Permutation>& gens) {
  return orbits(n, gens).size() == 1;
}

bool is_block_system(const std::vector<std::vector<int>>& blocks,
                     const std::vector<Permutation>& gens) {
  if (gens.empty()) return true;
  const int n = gens.front().degree();
  std::vector<int> block_of(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
  for (int x = 1; x <= n; ++x)
    if (block_of[x] < 0) return false;
  for (const auto& g : gens)
    for (const auto& blk : blocks) {
      int target = block_of[g(blk.front())];
      for (int x : blk)
        if (block_of[g(x)] != target) return false;
    }
  return true;
}

std::optional<std::vector<std::vector<int>>> minimal_blocks(int n,
                                                            const std::vector<Permutation>& gens) {
  if (!is_transitive(n, gens)) throw std::invalid_argument("group is intransitive");
  std::optional<std::vector<std::vector<int>>> best;
  std::size_t best_size = static_cast<std::size_t>(n);
  for (int b = 2; b <= n; ++b) {
    // Least block containing {1, b}: merge, then close the relation under
    // the generators.
    UnionFind uf(n);
    std::deque<std::pair<int, int>> queue{{1, b}};
    uf.unite(1, b);
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        int gx = g(x), gy = g(y);
        if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
      }
    }
    auto blocks = classes_of(uf, n);
    std::size_t size = blocks.front().size();
    if (blocks.size() > 1 && size < best_size) {
      best_size = size;
      best = std::move(blocks);
    }
  }
  return best;
}

std::vector<std::vector<int>> invariant_subsets(const Permutation& p, int r) {
  const int n = p.degree();
  if (r < 1 || r >= n) throw std::invalid_argument("subset size out of range");
  auto cs = p.cycles();
  std::vector<std::vector<int>> parts = cs;
  for (int x : p.fixed_points()) parts.push_back({x});
  std::vector<std::vector<int>> out;
  const std::size_t m = parts.size();
  std::vector<int> chosen;
  // Depth-first over unions of orbits of <p>.
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    if (size == r) {
      std::vector<int> s;
      for (int idx : chosen) s.insert(s.end(), parts[idx].begin(), parts[idx].end());
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    if (i == m) return;
    int len = static_cast<int>(parts[i].size());
    if (size + len <= r) {
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1, size + len);
      chosen.pop_back();
    }
    self(self, i + 1, size);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> group_closure(int n, const std::vector<Permutation>& gens) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> elems;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  elems.push_back(id);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = g * elems[i];
      if (seen.insert(h).second) elems.push_back(h);
    }
  }
  return elems;
}

std::vector<Permutation> centralizer_elements(const Permutation& p) {
  const int n = p.degree();
  std::map<int, std::vector<std::vector<int>>> by_len;
  for (auto& c : p.cycles()) by_len[static_cast<int>(c.size())].push_back(std::move(c));
  by_len[1];
  for (int x : p.fixed_points()) by_len[1].push_back({x});

  // Each factor lists partial image assignments on its own points.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> factors;
  for (auto& [len, cyc] : by_len) {
    std::vector<std::vector<std::pair<int, int>>> options;
    const int m = static_cast<int>(cyc.size());
    if (m == 0) continue;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> rot(m, 0);
      while (true) {
        std::vector<std::pair<int, int>> assign;
        for (int j = 0; j < m; ++j)
          for (int s = 0; s < len; ++s)
            assign.emplace_back(cyc[j][s], cyc[perm[j]][(s + rot[j]) % len]);
        options.push_back(std::move(assign));
        int j = 0;
        while (j < m && ++rot[j] == len) rot[j++] = 0;
        if (j == m) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    factors.push_back(std::move(options));
  }
  std::vector<Permutation> out;
  std::vector<int> im(n);
  auto rec = [&](auto&& self, std::size_t f) -> void {
    if (f == factors.size()) {
      out.emplace_back(im);
      return;
    }
    for (const auto& opt : factors[f]) {
      for (auto [x, y] : opt) im[x - 1] = y;
      self(self, f + 1);
    }
  };
  rec(rec, 0);
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long centralizer_order(const CycleType& ct, int n) {
  std::map<int, int> mult;
  int moved = 0;
  for (int p : ct.parts) {
    ++mult[p];
    moved += p;
  }
  mult[1] += n - moved;
  long long z = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= len;
    z *= factorial(m);
  }
  return z;
}

long long class_size(const CycleType& ct, int n) { return factorial(n) / centralizer_order(ct, n); }

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    CycleType ct{parts};
    out.push_back(ct);
    for (int p = std::min(maxpart, remaining); p >= 2; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation class_min_representative(const CycleType& ct, int n) {
  int moved = std::accumulate(ct.parts.begin(), ct.parts.end(), 0);
  if (moved > n) throw std::invalid_argument("cycle type exceeds degree");
  // Fixed points first, then cycles on consecutive points in ascending length.
  std::vector<int> lens(ct.parts.rbegin(), ct.parts.rend());
  std::vector<std::vector<int>> cycles;
  int next = n - moved + 1;
  for (int len : lens) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(n, cycles);
}

std::vector<int> relabel_map(int n, const std::vector<int>& points) {
  std::vector<int> map(n + 1, 0);
  int label = 0;
  for (int x : points) map[x] = ++label;
  return map;
}

}  // namespace braidperm
