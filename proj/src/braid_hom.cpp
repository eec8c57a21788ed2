#include "braidperm/braid_hom.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidperm {

BraidHom::BraidHom(int k, int n, std::vector<Permutation> sigma) : k_(k), n_(n), sigma_(std::move(sigma)) {
  if (k < 2) throw std::invalid_argument("braid group needs k >= 2");
  if (n < 1) throw std::invalid_argument("target degree must be positive");
  if (static_cast<int>(sigma_.size()) != k - 1) throw std::invalid_argument("need k-1 generator images");
  for (const auto& s : sigma_)
    if (s.degree() != n) throw std::invalid_argument("generator image has the wrong degree");
}

BraidHom BraidHom::from_sigma1_alpha(int k, const Permutation& sigma1, const Permutation& alpha) {
  std::vector<Permutation> imgs{sigma1};
  for (int i = 2; i < k; ++i) imgs.push_back(imgs.back().conjugate_by(alpha));
  return BraidHom(k, sigma1.degree(), std::move(imgs));
}

BraidHom BraidHom::from_alpha_beta(int k, const Permutation& alpha, const Permutation& beta) {
  return from_sigma1_alpha(k, alpha.inverse() * beta, alpha);
}

BraidHom BraidHom::constant(int k, const Permutation& image) {
  return BraidHom(k, image.degree(), std::vector<Permutation>(k - 1, image));
}

Permutation BraidHom::alpha() const {
  Permutation a = Permutation::identity(n_);
  for (const auto& s : sigma_) a = a * s;
  return a;
}

Permutation BraidHom::beta() const { return alpha() * sigma_.front(); }

Permutation BraidHom::image(const BraidWord& w) const {
  if (w.strands() != k_) throw std::invalid_argument("strand mismatch");
  Permutation out = Permutation::identity(n_);
  for (int x : w.letters()) {
    const Permutation& s = sigma_[std::abs(x) - 1];
    out = out * (x > 0 ? s : s.inverse());
  }
  return out;
}

BraidHom BraidHom::conjugate_by(const Permutation& g) const {
  std::vector<Permutation> imgs;
  for (const auto& s : sigma_) imgs.push_back(s.conjugate_by(g));
  return BraidHom(k_, n_, std::move(imgs));
}

std::string BraidHom::to_string() const {
  std::ostringstream os;
  for (int i = 1; i < k_; ++i) os << (i > 1 ? " " : "") << "s" << i << "=" << sigma(i).to_string();
  return os.str();
}

ValidationReport validate(const BraidHom& h) {
  ValidationReport rep;
  const int k = h.k();
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Permutation& a = h.sigma(i);
      const Permutation& b = h.sigma(j);
      bool ok = j == i + 1 ? a * b * a == b * a * b : a.commutes_with(b);
      if (!ok) rep.violations.push_back({i, j, j == i + 1});
    }
  rep.ok = rep.violations.empty();
  return rep;
}

bool is_valid(const BraidHom& h) { return validate(h).ok; }

HomClassification classify(const BraidHom& h) {
  if (!is_valid(h)) throw std::invalid_argument("cannot classify an invalid homomorphism");
  HomClassification c;
  const auto& imgs = h.images();
  c.is_cyclic = std::all_of(imgs.begin(), imgs.end(), [&](const Permutation& p) { return p == imgs.front(); });
  c.is_abelian = true;
  for (std::size_t i = 0; i < imgs.size() && c.is_abelian; ++i)
    for (std::size_t j = i + 1; j < imgs.size(); ++j)
      if (!imgs[i].commutes_with(imgs[j])) {
        c.is_abelian = false;
        break;
      }
  c.is_transitive = is_transitive(h.n(), imgs);
  c.is_primitive = c.is_transitive && !minimal_blocks(h.n(), imgs).has_value();
  c.is_even = std::all_of(imgs.begin(), imgs.end(), [](const Permutation& p) { return p.is_even(); });
  c.ord_alpha = h.alpha().order();
  c.ord_beta = h.beta().order();
  c.fixed_point_count = static_cast<int>(h.sigma(1).fixed_points().size());
  c.sigma1_type = cycle_type(h.sigma(1));
  return c;
}

long long image_order(const BraidHom& h) {
  return static_cast<long long>(group_closure(h.n(), h.images()).size());
}

std::optional<Permutation> hom_conjugacy(const BraidHom& h1, const BraidHom& h2) {
  if (h1.k() != h2.k() || h1.n() != h2.n()) throw std::invalid_argument("homomorphism shapes differ");
  const int n = h1.n();
  const int m = h1.k() - 1;
  for (int i = 1; i <= m; ++i)
    if (cycle_type(h1.sigma(i)) != cycle_type(h2.sigma(i))) return std::nullopt;
  if (h1 == h2) return Permutation::identity(n);

  std::vector<std::vector<int>> a(m), ai(m), b(m), bi(m), la(m), lb(m);
  for (int i = 0; i < m; ++i) {
    a[i] = h1.images()[i].images();
    b[i] = h2.images()[i].images();
    ai[i] = h1.images()[i].inverse().images();
    bi[i] = h2.images()[i].inverse().images();
    la[i].assign(n + 1, 1);
    lb[i].assign(n + 1, 1);
    for (const auto& c : h1.images()[i].cycles())
      for (int x : c) la[i][x] = static_cast<int>(c.size());
    for (const auto& c : h2.images()[i].cycles())
      for (int x : c) lb[i][x] = static_cast<int>(c.size());
  }
  const auto orbs = orbits(n, h1.images());
  std::vector<int> g(n + 1, 0), used(n + 1, 0);
  std::vector<int> trail;

  // Assign g(x) = y and close under the generators; false on contradiction.
  auto assign = [&](int x0, int y0) {
    std::vector<int> stack{x0};
    g[x0] = y0;
    used[y0] = 1;
    trail.push_back(x0);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int y = g[x];
      for (int i = 0; i < m; ++i) {
        if (la[i][x] != lb[i][y]) return false;
        for (int dir = 0; dir < 2; ++dir) {
          int x2 = dir ? ai[i][x - 1] : a[i][x - 1];
          int y2 = dir ? bi[i][y - 1] : b[i][y - 1];
          if (g[x2] == 0) {
            if (used[y2]) return false;
            g[x2] = y2;
            used[y2] = 1;
            trail.push_back(x2);
            stack.push_back(x2);
          } else if (g[x2] != y2) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[g[x]] = 0;
      g[x] = 0;
    }
  };
  auto search = [&](auto&& self, std::size_t o) -> bool {
    if (o == orbs.size()) return true;
    const int x = orbs[o].front();
    for (int y = 1; y <= n; ++y) {
      if (used[y]) continue;
      std::size_t mark = trail.size();
      if (assign(x, y) && self(self, o + 1)) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  Permutation w(std::vector<int>(g.begin() + 1, g.end()));
  if (h1.conjugate_by(w) != h2) throw std::logic_error("conjugating element failed to verify");
  return w;
}

BraidHom reduction(const BraidHom& h, const std::vector<int>& points) {
  std::vector<Permutation> imgs;
  for (const auto& s : h.images()) imgs.push_back(s.restrict_to(points));
  return BraidHom(h.k(), static_cast<int>(points.size()), std::move(imgs));
}

BraidHom disjoint_product(const BraidHom& h1, const BraidHom& h2) {
  if (h1.k() != h2.k()) throw std::invalid_argument("strand mismatch");
  const int n1 = h1.n();
  std::vector<Permutation> imgs;
  for (int i = 1; i < h1.k(); ++i) {
    std::vector<int> im = h1.sigma(i).images();
    for (int v : h2.sigma(i).images()) im.push_back(v + n1);
    imgs.emplace_back(std::move(im));
  }
  return BraidHom(h1.k(), n1 + h2.n(), std::move(imgs));
}

BraidHom pull_back_to_b4(const BraidHom& h3) {
  if (h3.k() != 3) throw std::invalid_argument("expected a homomorphism of B_3");
  return BraidHom(4, h3.n(), {h3.sigma(1), h3.sigma(2), h3.sigma(1)});
}

Permutation kappa(const Permutation& p) {
  if (p.degree() != 6) throw std::invalid_argument("kappa acts on S(6)");
  static const BraidHom nu6 = named_hom("nu6");
  // Bubble-sort p to the identity: p * t_{i1} * ... * t_{im} = 1.
  std::vector<int> im = p.images();
  std::vector<int> swaps;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < 6; ++i)
      if (im[i] > im[i + 1]) {
        std::swap(im[i], im[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
  }
  Permutation out = Permutation::identity(6);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) out = out * nu6.sigma(*it);
  return out;
}

}  // namespace braidperm
