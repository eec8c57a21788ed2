#include "braidperm/retraction.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace braidperm {

std::vector<int> NormalizedHom::support() const {
  std::vector<int> s(r * t);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

Permutation NormalizedHom::cycle(int m) const { return component_cycle(r, t, m).extend(base.n()); }

int component_length(const BraidHom& h, int r) { return r_component(h.sigma(1), r).t(); }

NormalizedHom normalize(const BraidHom& h, int r) {
  if (r < 2) throw std::invalid_argument("component length must be at least 2");
  const RComponent comp = r_component(h.sigma(1), r);
  if (comp.t() == 0) throw std::invalid_argument("sigma_1 has no " + std::to_string(r) + "-cycle");
  const int n = h.n();
  std::vector<int> g(n + 1, 0);
  int next = 1;
  for (const auto& c : comp.cycles)
    for (int x : c) g[x] = next++;
  for (int x = 1; x <= n; ++x)
    if (g[x] == 0) g[x] = next++;
  Permutation conj(std::vector<int>(g.begin() + 1, g.end()));
  NormalizedHom nh{h, h.conjugate_by(conj), conj, r, comp.t()};
  if (nh.base.sigma(1).restrict_to(nh.support()) != component_product(r, nh.t))
    throw std::logic_error("normalization failed to place the component");
  return nh;
}

Permutation component_cycle(int r, int t, int m) {
  if (m < 1 || m > t) throw std::out_of_range("cycle index out of range");
  std::vector<int> c(r);
  std::iota(c.begin(), c.end(), (m - 1) * r + 1);
  return Permutation::from_cycles(r * t, {c});
}

Permutation component_product(int r, int t) {
  std::vector<std::vector<int>> cs;
  for (int m = 1; m <= t; ++m) {
    std::vector<int> c(r);
    std::iota(c.begin(), c.end(), (m - 1) * r + 1);
    cs.push_back(std::move(c));
  }
  return Permutation::from_cycles(r * t, cs);
}

Permutation rho(int r, int t, const Permutation& s) {
  if (s.degree() != t) throw std::invalid_argument("rho expects a permutation of 1..t");
  std::vector<int> im(r * t);
  for (int m = 1; m <= t; ++m)
    for (int q = 1; q <= r; ++q) im[(m - 1) * r + q - 1] = (s(m) - 1) * r + q;
  return Permutation(std::move(im));
}

Permutation pi(int r, int t, const Permutation& g) {
  if (g.degree() != r * t) throw std::invalid_argument("pi expects a permutation of 1..rt");
  if (!g.commutes_with(component_product(r, t)))
    throw std::invalid_argument("permutation does not centralize the component");
  std::vector<int> im(t);
  for (int m = 1; m <= t; ++m) im[m - 1] = (g((m - 1) * r + 1) - 1) / r + 1;
  return Permutation(std::move(im));
}

Permutation g_perm(const NormalizedHom& nh, int q, int j) {
  const BraidHom& h = nh.base;
  const int k = h.k(), r = nh.r, t = nh.t;
  if (q < 1 || q > k - 1 || j < 1 || j > k - 1) throw std::out_of_range("generator index out of range");
  if (j == q - 1 || j == q + 1) throw std::invalid_argument("sigma_j must commute with sigma_q");
  const Permutation a = h.alpha().pow(q - 1);
  const Permutation ai = a.inverse();
  const Permutation& s = h.sigma(j);
  std::vector<int> im(t);
  for (int m = 1; m <= t; ++m) {
    const Permutation cq = nh.cycle(m).conjugate_by(a);
    const int y = ai(s(a((m - 1) * r + 1)));
    const int target = (y - 1) / r + 1;
    if (y > r * t || cq.conjugate_by(s) != nh.cycle(target).conjugate_by(a))
      throw std::invalid_argument("sigma_" + std::to_string(j) + " does not permute the r-cycles of sigma_" +
                                  std::to_string(q));
    im[m - 1] = target;
  }
  return Permutation(std::move(im));
}

namespace {

void require_strands(const NormalizedHom& nh) {
  if (nh.base.k() < 4) throw std::invalid_argument("retraction needs k >= 4");
}

}  // namespace

BraidHom omega(const NormalizedHom& nh) {
  require_strands(nh);
  const int k = nh.base.k();
  std::vector<Permutation> imgs;
  for (int i = 1; i <= k - 3; ++i) imgs.push_back(g_perm(nh, 1, i + 2));
  return BraidHom(k - 2, nh.t, std::move(imgs));
}

BraidHom omega_star(const NormalizedHom& nh) {
  require_strands(nh);
  const int k = nh.base.k();
  std::vector<Permutation> imgs;
  for (int i = 1; i <= k - 3; ++i) imgs.push_back(g_perm(nh, k - 1, i));
  return BraidHom(k - 2, nh.t, std::move(imgs));
}

BraidHom phi_sigma(const NormalizedHom& nh) {
  require_strands(nh);
  const int k = nh.base.k();
  const auto pts = nh.support();
  std::vector<Permutation> imgs;
  for (int i = 1; i <= k - 3; ++i) {
    const Permutation& s = nh.base.sigma(i + 2);
    for (int x : pts)
      if (s(x) > nh.r * nh.t) throw std::invalid_argument("sigma_i leaves the component support");
    imgs.push_back(s.restrict_to(pts));
  }
  return BraidHom(k - 2, nh.r * nh.t, std::move(imgs));
}

GRelationsReport g_relations_check(const NormalizedHom& nh) {
  require_strands(nh);
  GRelationsReport rep;
  const int k = nh.base.k();
  std::map<std::pair<int, int>, Permutation> g;
  for (int q = 1; q <= k - 1; ++q)
    for (int j = 1; j <= k - 1; ++j) {
      if (j == q - 1 || j == q || j == q + 1) continue;
      try {
        g.emplace(std::make_pair(q, j), g_perm(nh, q, j));
      } catch (const std::invalid_argument& e) {
        rep.failures.push_back(e.what());
      }
    }
  auto at = [&](int q, int j) -> const Permutation* {
    auto it = g.find({q, j});
    return it == g.end() ? nullptr : &it->second;
  };
  auto expect_equal = [&](int q1, int j1, int q2, int j2) {
    ++rep.checked;
    const Permutation* a = at(q1, j1);
    const Permutation* b = at(q2, j2);
    if (!a || !b || *a != *b)
      rep.failures.push_back("g(" + std::to_string(q1) + "," + std::to_string(j1) + ") != g(" +
                             std::to_string(q2) + "," + std::to_string(j2) + ")");
  };
  for (int q = 1; q <= k - 3; ++q)
    for (int j = q + 2; j <= k - 1; ++j)
      expect_equal(q, j, k - 1, j - q - 1);
  for (int q = 3; q <= k - 1; ++q)
    for (int j = 1; j <= q - 2; ++j) expect_equal(q, j, 1, j + k - q + 1);
  for (int j = 1; j <= k - 3; ++j) expect_equal(k - 1, j, 1, j + 2);

  if (!g.empty()) {
    const CycleType ct = cycle_type(g.begin()->second);
    for (const auto& [key, p] : g) {
      ++rep.checked;
      if (cycle_type(p) != ct)
        rep.failures.push_back("g(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                               ") is not conjugate to the others");
    }
  }
  if (rep.failures.empty()) {
    rep.checked += 3;
    const BraidHom om = omega(nh), os = omega_star(nh);
    if (!is_valid(om)) rep.failures.push_back("omega is not a homomorphism");
    if (!is_valid(os)) rep.failures.push_back("omega_star is not a homomorphism");
    if (om != os) rep.failures.push_back("omega differs from omega_star");
  }
  return rep;
}

}  // namespace braidperm
