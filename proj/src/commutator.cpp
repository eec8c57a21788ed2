#include "braidperm/commutator.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "braidperm/census.hpp"

namespace braidperm {

bool BPrimeHom::is_trivial() const {
  for (const auto& p : images())
    if (!p.is_identity()) return false;
  return true;
}

std::vector<Permutation> BPrimeHom::images() const {
  std::vector<Permutation> out{u, v, w};
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

BPrimeHom BPrimeHom::conjugate_by(const Permutation& g) const {
  BPrimeHom h{k, u.conjugate_by(g), v.conjugate_by(g), w.conjugate_by(g), {}};
  for (const auto& p : c) h.c.push_back(p.conjugate_by(g));
  return h;
}

std::string BPrimeHom::to_string() const {
  std::ostringstream os;
  os << "u=" << u.to_string() << " v=" << v.to_string() << " w=" << w.to_string();
  for (std::size_t i = 0; i < c.size(); ++i) os << " c" << i + 1 << "=" << c[i].to_string();
  return os.str();
}

BPrimeReport validate_bprime(const BPrimeHom& h) {
  BPrimeReport rep;
  if (h.k < 4 || static_cast<int>(h.c.size()) != h.k - 3) {
    rep.ok = false;
    rep.violations.push_back("need k >= 4 and k-3 images c_i");
    return rep;
  }
  const int n = h.u.degree();
  for (const auto& p : h.images())
    if (p.degree() != n) {
      rep.ok = false;
      rep.violations.push_back("images have different degrees");
      return rep;
    }
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) rep.violations.push_back(what);
  };
  const Permutation& u = h.u;
  const Permutation& v = h.v;
  const Permutation& w = h.w;
  const Permutation& c1 = h.ci(1);
  const Permutation c1i = c1.inverse();
  const Permutation x = c1i * w;
  check(u * c1 * u.inverse() == w, "u c1 u^-1 = w");
  check(u * w * u.inverse() == w * w * c1i * w, "u w u^-1 = w^2 c1^-1 w");
  check(v * c1 * v.inverse() == x, "v c1 v^-1 = c1^-1 w");
  check(v * w * v.inverse() == x * x * x * c1i * c1i * w, "v w v^-1 = (c1^-1 w)^3 c1^-2 w");
  for (int i = 2; i <= h.k - 3; ++i) {
    const Permutation& ci = h.ci(i);
    check(u * ci == ci * v, "u c" + std::to_string(i) + " = c" + std::to_string(i) + " v");
    check(v * ci == ci * u.inverse() * v, "v c" + std::to_string(i) + " = c" + std::to_string(i) + " u^-1 v");
  }
  for (int i = 1; i <= h.k - 3; ++i)
    for (int j = i + 2; j <= h.k - 3; ++j)
      check(h.ci(i).commutes_with(h.ci(j)), "c" + std::to_string(i) + " c" + std::to_string(j) + " commute");
  for (int i = 1; i + 1 <= h.k - 3; ++i) {
    const Permutation& a = h.ci(i);
    const Permutation& b = h.ci(i + 1);
    check(a * b * a == b * a * b, "c" + std::to_string(i) + " c" + std::to_string(i + 1) + " braid");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

BPrimeHom restrict_to_commutator(const BraidHom& h) {
  const int k = h.k();
  if (k < 4) throw std::invalid_argument("commutator presentation needs k >= 4");
  BPrimeHom out{k, h.image(comm_u(k)), h.image(comm_v(k)), h.image(comm_w(k)), {}};
  for (int i = 1; i <= k - 3; ++i) out.c.push_back(h.image(comm_c(k, i)));
  return out;
}

BPrimeHom mu_prime(int k) {
  if (k < 4) throw std::invalid_argument("mu_prime needs k >= 4");
  BPrimeHom h{k, Permutation::parse("(1,3,2)", k), Permutation::parse("(1,2,3)", k), Permutation::parse("(1,3)(2,4)", k), {}};
  for (int i = 1; i <= k - 3; ++i) h.c.push_back(Permutation::from_cycles(k, {{1, 2}, {i + 2, i + 3}}));
  return h;
}

BPrimeHom nu6_prime() {
  auto P = [](const char* s) { return Permutation::parse(s, 6); };
  return BPrimeHom{6, P("(1,3,6)(2,5,4)"), P("(1,6,3)(2,4,5)"), P("(2,3)(5,6)"),
                   {P("(1,4)(2,3)"), P("(3,6)(4,5)"), P("(1,3)(2,4)")}};
}

std::vector<BraidWord> lambda_prime_images(int k) {
  if (k < 4) throw std::invalid_argument("lambda_prime needs k >= 4");
  std::vector<BraidWord> out;
  for (int i = 1; i <= k - 3; ++i) out.push_back(comm_c(k, i));
  return out;
}

std::optional<std::vector<int>> is_tame(const BPrimeHom& h) {
  if (h.is_trivial()) throw std::invalid_argument("tameness is defined for nontrivial homomorphisms");
  for (const auto& orb : orbits(h.u.degree(), h.c))
    if (static_cast<int>(orb.size()) == h.k - 2) return orb;
  return std::nullopt;
}

std::vector<BPrimeRecord> census_bprime(int k, int workers) {
  if (k != 5 && k != 6) throw BudgetExceeded("commutator census is offered for k = 5, 6", census_cost(k - 2, k));
  CensusQuery q;
  q.k = k - 2;
  q.n = k;
  const auto classes = enumerate(q);
  std::vector<Permutation> all;
  {
    std::vector<int> im(k);
    for (int i = 0; i < k; ++i) im[i] = i + 1;
    do all.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<BPrimeRecord> out;
  auto worker = [&] {
    std::vector<BPrimeRecord> local;
    for (std::size_t idx; (idx = next.fetch_add(1)) < classes.size();) {
      const auto& c = classes[idx].representative.images();
      std::vector<Permutation> stab;
      for (const auto& z : all)
        if (std::all_of(c.begin(), c.end(), [&](const Permutation& p) { return p.commutes_with(z); }))
          stab.push_back(z);
      for (const auto& u : all) {
        const Permutation v = c[1].inverse() * u * c[1];
        BPrimeHom h{k, u, v, u * c[0] * u.inverse(), c};
        if (h.is_trivial() || !validate_bprime(h).ok) continue;
        bool least = true;
        for (const auto& z : stab)
          if (u.conjugate_by(z) < u) {
            least = false;
            break;
          }
        if (!least) continue;
        BPrimeRecord rec{h, 0, false, std::nullopt};
        const auto imgs = h.images();
        rec.image_order = static_cast<long long>(group_closure(k, imgs).size());
        rec.image_is_alternating = rec.image_order == factorial(k) / 2 &&
                                   std::all_of(imgs.begin(), imgs.end(), [](const Permutation& p) { return p.is_even(); });
        rec.tame_orbit = is_tame(h);
        local.push_back(std::move(rec));
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& r : local) out.push_back(std::move(r));
  };
  const int nw = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int i = 1; i < nw; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const BPrimeRecord& a, const BPrimeRecord& b) {
    return a.hom.images() < b.hom.images();
  });
  return out;
}

}  // namespace braidperm
