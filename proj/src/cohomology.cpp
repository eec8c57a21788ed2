#include "braidperm/cohomology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidperm {

TwistedAction::TwistedAction(BraidHom omega, long long modulus) : omega_(std::move(omega)), m_(modulus) {
  if (m_ < 0 || m_ == 1) throw std::invalid_argument("modulus must be 0 or at least 2");
  if (!is_valid(omega_)) throw std::invalid_argument("acting homomorphism is invalid");
}

long long TwistedAction::reduce(long long a) const {
  if (m_ == 0) return a;
  a %= m_;
  return a < 0 ? a + m_ : a;
}

Vec TwistedAction::reduce(Vec h) const {
  for (auto& a : h) a = reduce(a);
  return h;
}

Vec TwistedAction::act(const Permutation& s, const Vec& h) const {
  if (static_cast<int>(h.size()) != s.degree()) throw std::invalid_argument("vector length mismatch");
  Vec out(h.size());
  for (int j = 1; j <= s.degree(); ++j) out[s(j) - 1] = h[j - 1];
  return out;
}

long long TwistedAction::two_torsion_order() const { return m_ == 0 ? 1 : std::gcd(2LL, m_); }

Cochain zero_cochain(const TwistedAction& act) {
  return Cochain{std::vector<Vec>(act.strands() - 1, Vec(act.t(), 0))};
}

namespace {

void check_shape(const TwistedAction& act, const Cochain& z) {
  if (static_cast<int>(z.h.size()) != act.strands() - 1) throw std::invalid_argument("cochain has the wrong number of values");
  for (const auto& v : z.h)
    if (static_cast<int>(v.size()) != act.t()) throw std::invalid_argument("cochain value has the wrong length");
}

struct Relator {
  int p, q;
  BraidWord word;
};

std::vector<Relator> relators(int strands) {
  std::vector<Relator> out;
  for (int p = 1; p < strands; ++p)
    for (int q = p + 1; q < strands; ++q) {
      std::vector<int> w = q == p + 1 ? std::vector<int>{p, q, p, -q, -p, -q} : std::vector<int>{p, q, -p, -q};
      out.push_back({p, q, BraidWord(strands, w)});
    }
  return out;
}

// Coefficient matrix of z(w) in the unknowns a_i^j, column (i-1)t + (j-1).
IntMatrix word_matrix(const TwistedAction& act, const BraidWord& w) {
  const int t = act.t(), nv = (act.strands() - 1) * t;
  IntMatrix out(t, std::vector<BigInt>(nv, 0));
  Permutation prefix = Permutation::identity(t);
  for (int x : w.letters()) {
    const int i = std::abs(x);
    const Permutation& s = act.omega().sigma(i);
    const Permutation move = x > 0 ? prefix : prefix * s.inverse();
    for (int j = 1; j <= t; ++j) out[move(j) - 1][(i - 1) * t + j - 1] += x > 0 ? 1 : -1;
    prefix = prefix * (x > 0 ? s : s.inverse());
  }
  return out;
}

IntMatrix relation_matrix(const TwistedAction& act) {
  IntMatrix out;
  for (const auto& rel : relators(act.strands()))
    for (auto& row : word_matrix(act, rel.word)) out.push_back(std::move(row));
  return out;
}

// Columns: the coboundaries of the basis vectors e_1..e_t.
IntMatrix coboundary_matrix(const TwistedAction& act) {
  const int t = act.t(), nv = (act.strands() - 1) * t;
  IntMatrix out(nv, std::vector<BigInt>(t, 0));
  for (int p = 1; p < act.strands(); ++p) {
    const Permutation si = act.omega().sigma(p).inverse();
    for (int j = 1; j <= t; ++j) {
      out[(p - 1) * t + j - 1][si(j) - 1] += 1;
      out[(p - 1) * t + j - 1][j - 1] -= 1;
    }
  }
  return out;
}

Cochain from_flat(const TwistedAction& act, const std::vector<BigInt>& x) {
  const int t = act.t();
  Cochain z = zero_cochain(act);
  for (std::size_t v = 0; v < x.size(); ++v) {
    BigInt a = x[v];
    if (act.modulus() != 0) {
      a %= act.modulus();
      if (a < 0) a += act.modulus();
    }
    z.h[v / t][v % t] = static_cast<long long>(a);
  }
  return z;
}

std::vector<BigInt> to_flat(const Cochain& z) {
  std::vector<BigInt> x;
  for (const auto& v : z.h)
    for (long long a : v) x.emplace_back(a);
  return x;
}

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

AbelianInvariants to_invariants(const std::vector<BigInt>& orders) {
  AbelianInvariants inv;
  for (const auto& f : invariant_factors(orders)) inv.factors.push_back(static_cast<long long>(f));
  return inv;
}

// Lattice of integer vectors whose reduction is a cocycle, as basis columns,
// together with the data needed to read coordinates in that basis.
struct CocycleLattice {
  IntMatrix basis;             // nv x dim
  IntMatrix v_inv;             // nv x nv
  std::vector<BigInt> scale;   // per kept coordinate of v_inv
  std::vector<int> kept;       // coordinates of v_inv forming the basis
  std::vector<BigInt> orders;  // orders of the cyclic summands of Z^1
};

CocycleLattice cocycle_lattice(const TwistedAction& act) {
  const int nv = (act.strands() - 1) * act.t();
  const IntMatrix M = relation_matrix(act);
  const int ne = static_cast<int>(M.size());
  const SmithForm f = smith_normal_form(M, ne, nv);
  const BigInt m = act.modulus();
  CocycleLattice L;
  L.v_inv = f.V_inv;
  for (int i = 0; i < nv; ++i) {
    BigInt c = 1, ord = m;
    if (i < f.rank) {
      if (m == 0) continue;
      const BigInt g = gcd_big(f.diagonal[i], m);
      c = m / g;
      ord = g;
    }
    L.kept.push_back(i);
    L.scale.push_back(c);
    L.orders.push_back(ord);
  }
  L.basis.assign(nv, std::vector<BigInt>(L.kept.size(), 0));
  for (std::size_t col = 0; col < L.kept.size(); ++col)
    for (int r = 0; r < nv; ++r) L.basis[r][col] = f.V[r][L.kept[col]] * L.scale[col];
  return L;
}

std::vector<BigInt> lattice_coordinates(const CocycleLattice& L, const std::vector<BigInt>& x) {
  std::vector<BigInt> w(L.v_inv.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) w[i] += L.v_inv[i][j] * x[j];
  std::vector<BigInt> out;
  std::vector<char> is_kept(w.size(), 0);
  for (std::size_t c = 0; c < L.kept.size(); ++c) {
    is_kept[L.kept[c]] = 1;
    if (w[L.kept[c]] % L.scale[c] != 0) throw std::logic_error("vector is not in the cocycle lattice");
    out.push_back(w[L.kept[c]] / L.scale[c]);
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!is_kept[i] && w[i] != 0) throw std::logic_error("vector is not in the cocycle lattice");
  return out;
}

}  // namespace

Vec evaluate(const TwistedAction& act, const Cochain& z, const BraidWord& w) {
  check_shape(act, z);
  if (w.strands() != act.strands()) throw std::invalid_argument("word has the wrong strand count");
  const int t = act.t();
  Vec total(t, 0);
  Permutation prefix = Permutation::identity(t);
  for (int x : w.letters()) {
    const int i = std::abs(x);
    const Permutation& s = act.omega().sigma(i);
    const Permutation move = x > 0 ? prefix : prefix * s.inverse();
    for (int j = 1; j <= t; ++j) total[move(j) - 1] += (x > 0 ? 1 : -1) * z.h[i - 1][j - 1];
    prefix = prefix * (x > 0 ? s : s.inverse());
  }
  return act.reduce(std::move(total));
}

CocycleCheck cocycle_check(const TwistedAction& act, const Cochain& z) {
  CocycleCheck c;
  for (const auto& rel : relators(act.strands())) {
    const Vec v = evaluate(act, z, rel.word);
    for (long long a : v)
      if (a != 0) {
        c.violations.emplace_back(rel.p, rel.q);
        break;
      }
  }
  c.ok = c.violations.empty();
  return c;
}

Cochain coboundary(const TwistedAction& act, const Vec& h) {
  if (static_cast<int>(h.size()) != act.t()) throw std::invalid_argument("vector length mismatch");
  Cochain z;
  for (int p = 1; p < act.strands(); ++p) {
    Vec v = act.act(act.omega().sigma(p), h);
    for (int j = 0; j < act.t(); ++j) v[j] -= h[j];
    z.h.push_back(act.reduce(std::move(v)));
  }
  return z;
}

bool is_coboundary(const TwistedAction& act, const Cochain& z) {
  check_shape(act, z);
  const IntMatrix B = coboundary_matrix(act);
  const int nv = static_cast<int>(B.size()), t = act.t();
  const SmithForm f = smith_normal_form(B, nv, t);
  const std::vector<BigInt> x = to_flat(z);
  const BigInt m = act.modulus();
  for (int i = 0; i < nv; ++i) {
    BigInt ux = 0;
    for (int j = 0; j < nv; ++j) ux += f.U[i][j] * x[j];
    const BigInt d = i < f.rank ? f.diagonal[i] : BigInt(0);
    const BigInt g = m == 0 ? d : gcd_big(d, m);
    if (g == 0 ? ux != 0 : ux % g != 0) return false;
  }
  return true;
}

long long AbelianInvariants::order() const {
  long long o = 1;
  for (long long f : factors) {
    if (f == 0) return 0;
    o *= f;
  }
  return o;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << "]";
  return os.str();
}

CocycleSpace cocycle_space(const TwistedAction& act) {
  const CocycleLattice L = cocycle_lattice(act);
  CocycleSpace out;
  out.invariants = to_invariants(L.orders);
  for (std::size_t c = 0; c < L.kept.size(); ++c) {
    if (L.orders[c] == 1) continue;
    std::vector<BigInt> col;
    for (const auto& row : L.basis) col.push_back(row[c]);
    out.generators.push_back(from_flat(act, col));
  }
  return out;
}

H1Result h1(const TwistedAction& act) {
  const CocycleLattice L = cocycle_lattice(act);
  const int nv = static_cast<int>(L.basis.size());
  const int dim = static_cast<int>(L.kept.size());
  const IntMatrix B = coboundary_matrix(act);
  std::vector<std::vector<BigInt>> gens;
  for (int j = 0; j < act.t(); ++j) {
    std::vector<BigInt> col;
    for (int r = 0; r < nv; ++r) col.push_back(B[r][j]);
    gens.push_back(std::move(col));
  }
  if (act.modulus() != 0)
    for (int r = 0; r < nv; ++r) {
      std::vector<BigInt> col(nv, 0);
      col[r] = act.modulus();
      gens.push_back(std::move(col));
    }
  IntMatrix R(dim, std::vector<BigInt>(gens.size(), 0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto c = lattice_coordinates(L, gens[g]);
    for (int i = 0; i < dim; ++i) R[i][g] = c[i];
  }
  H1Result out;
  if (dim == 0) return out;
  const SmithForm f2 = smith_normal_form(R, dim, static_cast<int>(gens.size()));
  for (int i = 0; i < dim; ++i) {
    const BigInt d = i < f2.rank ? f2.diagonal[i] : BigInt(0);
    if (d == 1) continue;
    out.invariants.factors.push_back(static_cast<long long>(d));
    std::vector<BigInt> x(nv, 0);
    for (int r = 0; r < nv; ++r)
      for (int c = 0; c < dim; ++c) x[r] += L.basis[r][c] * f2.U_inv[c][i];
    out.representatives.push_back(from_flat(act, x));
  }
  return out;
}

namespace {

Permutation block_translation(int r, const Vec& a) {
  const int t = static_cast<int>(a.size());
  std::vector<int> im(r * t);
  for (int m = 0; m < t; ++m) {
    long long s = ((a[m] % r) + r) % r;
    for (int q = 0; q < r; ++q) im[m * r + q] = m * r + static_cast<int>((q + s) % r) + 1;
  }
  return Permutation(std::move(im));
}

int block_modulus(const TwistedAction& act) {
  if (act.modulus() < 2) throw std::invalid_argument("homomorphisms need coefficients Z/r with r >= 2");
  return static_cast<int>(act.modulus());
}

}  // namespace

BraidHom cocycle_to_hom(const TwistedAction& act, const Cochain& z) {
  check_shape(act, z);
  const int r = block_modulus(act), t = act.t();
  std::vector<Permutation> imgs;
  for (int i = 1; i < act.strands(); ++i)
    imgs.push_back(block_translation(r, z.h[i - 1]) * rho(r, t, act.omega().sigma(i)));
  BraidHom phi(act.strands(), r * t, std::move(imgs));
  if (!is_valid(phi)) throw std::invalid_argument("cochain is not a cocycle");
  return phi;
}

Cochain hom_to_cocycle(const TwistedAction& act, const BraidHom& phi) {
  const int r = block_modulus(act), t = act.t();
  if (phi.k() != act.strands() || phi.n() != r * t) throw std::invalid_argument("homomorphism has the wrong shape");
  Cochain z;
  for (int i = 1; i < act.strands(); ++i) {
    const Permutation h = phi.sigma(i) * rho(r, t, act.omega().sigma(i)).inverse();
    Vec a(t);
    for (int m = 0; m < t; ++m) {
      const int d = h(m * r + 1) - (m * r + 1);
      if (d < 0 || d >= r) throw std::invalid_argument("pi o Phi differs from Omega");
      a[m] = d;
    }
    if (block_translation(r, a) != h) throw std::invalid_argument("pi o Phi differs from Omega");
    z.h.push_back(std::move(a));
  }
  return z;
}

BraidHom build_phi_xy(int r, int n, long long x, long long y) {
  if (r < 2 || n < 3) throw std::invalid_argument("build_phi_xy needs r >= 2 and n >= 3");
  auto md = [r](long long v) { return static_cast<int>(((v % r) + r) % r); };
  std::vector<Permutation> imgs;
  for (int i = 1; i < n; ++i) {
    std::vector<int> im(r * n);
    for (int N = 0; N < n; ++N)
      for (int R = 0; R < r; ++R) {
        int R2 = R, N2 = N;
        if (N == i - 1) {
          N2 = N + 1;
        } else if (N == i) {
          R2 = md(R + x);
          N2 = N - 1;
        } else {
          R2 = md(R + y);
        }
        im[R + r * N] = 1 + R2 + r * N2;
      }
    imgs.emplace_back(std::move(im));
  }
  return BraidHom(n, r * n, std::move(imgs));
}

namespace {

long long get(const std::map<std::string, long long>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

long long get_or(const std::map<std::string, long long>& p, const std::string& key, long long fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

Permutation long_cycle(int t) {
  if (t == 1) return Permutation::identity(1);
  std::vector<int> c(t);
  std::iota(c.begin(), c.end(), 1);
  return Permutation::from_cycles(t, {c});
}

}  // namespace

TwistedAction family_action(const std::string& name, const std::map<std::string, long long>& params) {
  const long long m = get(params, "m");
  if (name == "mu") return TwistedAction(named_hom("mu", {{"k", static_cast<int>(get(params, "n"))}}), m);
  if (name == "psi56") return TwistedAction(named_hom("psi5_6"), m);
  if (name == "nu6") return TwistedAction(named_hom("nu6"), m);
  if (name == "cyclic")
    return TwistedAction(BraidHom::constant(static_cast<int>(get(params, "n")), long_cycle(static_cast<int>(get(params, "t")))), m);
  if (name == "trivial")
    return TwistedAction(BraidHom::constant(static_cast<int>(get(params, "n")), Permutation::identity(1)), m);
  throw std::invalid_argument("unknown action family '" + name + "'");
}

std::vector<Cochain> canonical_cocycles(const std::string& name, const std::map<std::string, long long>& params) {
  const long long m = get(params, "m");
  auto red = [m](Vec v) {
    if (m != 0)
      for (auto& a : v) a = ((a % m) + m) % m;
    return v;
  };
  if (name == "mu" || name == "mu_class") {
    const int n = static_cast<int>(get(params, "n"));
    auto build = [&](long long a, long long b) {
      Cochain z;
      for (int i = 1; i < n; ++i) {
        Vec v(n, b);
        v[i - 1] = 0;
        v[i] = a;
        z.h.push_back(red(v));
      }
      return z;
    };
    if (name == "mu_class") return {build(get(params, "a"), get(params, "b"))};
    return {build(1, 0), build(0, 1)};
  }
  if (name == "psi56") {
    auto build = [&](long long x, long long y) {
      if (m != 0 ? (2 * x) % m != 0 : x != 0) throw std::invalid_argument("x must lie in the 2-torsion subgroup");
      const long long u = x + 2 * y;
      return Cochain{{red({0, u, 0, u, 0, u}), red({0, 0, u, u, u, 0}), red({-y, -y, x + 3 * y, x + 3 * y, x, 2 * y}),
                      red({x, 2 * y, 2 * y, 2 * y, x, x})}};
    };
    if (params.count("x") || params.count("y")) return {build(get_or(params, "x", 0), get_or(params, "y", 0))};
    std::vector<Cochain> out;
    if (m != 0 && m % 2 == 0) out.push_back(build(m / 2, 0));
    out.push_back(build(0, 1));
    return out;
  }
  if (name == "nu6") {
    const long long y = get_or(params, "y", 1);
    return {Cochain{{red({0, 2 * y, 0, 2 * y, 0, 2 * y}), red({0, 0, 2 * y, 2 * y, 2 * y, 0}),
                     red({-y, -y, 3 * y, 3 * y, 0, 2 * y}), red({0, 2 * y, 2 * y, 2 * y, 0, 0}),
                     red({-2 * y, 0, 2 * y, 4 * y, 0, 2 * y})}}};
  }
  if (name == "cyclic") {
    const int n = static_cast<int>(get(params, "n")), t = static_cast<int>(get(params, "t"));
    Vec v(t, 0);
    v[0] = get_or(params, "a", 1);
    return {Cochain{std::vector<Vec>(n - 1, red(v))}};
  }
  throw std::invalid_argument("unknown cocycle family '" + name + "'");
}

}  // namespace braidperm
