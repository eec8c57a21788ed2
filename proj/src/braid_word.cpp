#include "braidperm/braid_word.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidperm {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("a braid word needs at least one strand");
  for (int x : letters_)
    if (x == 0 || std::abs(x) >= strands) throw std::invalid_argument("generator index out of range");
}

BraidWord BraidWord::sigma(int strands, int i, int e) {
  if (e == 0) return empty(strands);
  return BraidWord(strands, std::vector<int>(std::abs(e), e > 0 ? i : -i));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw std::invalid_argument("strand mismatch");
  BraidWord out = *this;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_, {});
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

BraidWord BraidWord::pow(int e) const {
  BraidWord base = e < 0 ? inverse() : *this;
  BraidWord out(strands_, {});
  for (int i = 0; i < std::abs(e); ++i)
    out.letters_.insert(out.letters_.end(), base.letters_.begin(), base.letters_.end());
  return out;
}

BraidWord BraidWord::conjugate_by(const BraidWord& g) const { return g * (*this) * g.inverse(); }

BraidWord BraidWord::embed(int n, int shift) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) out.push_back(x > 0 ? x + shift : x - shift);
  return BraidWord(n, std::move(out));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? "," : "") << letters_[i];
  os << ']';
  return os.str();
}

BraidWord alpha_ij(int k, int i, int j) {
  if (i < 1 || j > k || i > j) throw std::invalid_argument("alpha_ij needs 1 <= i <= j <= k");
  std::vector<int> l;
  for (int m = i; m < j; ++m) l.push_back(m);
  return BraidWord(k, std::move(l));
}

BraidWord beta_ij(int k, int i, int j) { return alpha_ij(k, i, j) * BraidWord::sigma(k, i); }
BraidWord alpha(int k) { return alpha_ij(k, 1, k); }
BraidWord beta(int k) { return beta_ij(k, 1, k); }
BraidWord full_twist(int k) { return alpha(k).pow(k); }

BraidWord pure_generator(int k, int i, int j) {
  if (i < 1 || i >= j || j > k) throw std::invalid_argument("pure generator needs 1 <= i < j <= k");
  BraidWord s = BraidWord::sigma(k, i, 2);
  for (int m = i + 1; m < j; ++m) s = s.conjugate_by(BraidWord::sigma(k, m));
  return s;
}

BraidWord r_word(int k, int t) {
  if (t < 2 || t > k) throw std::invalid_argument("R_t needs 2 <= t <= k");
  BraidWord r = BraidWord::empty(k);
  for (int i = 1; i < t; ++i) r = r * pure_generator(k, i, t);
  return r;
}

BraidWord comm_u(int k) { return BraidWord(k, {2, -1}); }
BraidWord comm_v(int k) { return BraidWord(k, {1, 2, -1, -1}); }
BraidWord comm_w(int k) { return BraidWord(k, {2, 3, -1, -2}); }
BraidWord comm_c(int k, int i) {
  if (i < 1 || i > k - 3) throw std::invalid_argument("c_i needs 1 <= i <= k-3");
  return BraidWord(k, {i + 2, -1});
}

Permutation perm_image(const BraidWord& w) {
  const int k = w.strands();
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 1);
  // Right-to-left action: apply the last letter first.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    int i = std::abs(*it);
    for (int& y : im) {
      if (y == i)
        y = i + 1;
      else if (y == i + 1)
        y = i;
    }
  }
  return Permutation(std::move(im));
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int x : w.letters()) s += x > 0 ? 1 : -1;
  return s;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  for (int x : w.letters()) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return BraidWord(w.strands(), std::move(out));
}

namespace {

constexpr std::size_t kMaxReducedLength = 1u << 22;

// Replaces the handle w[a..p] by its reduct; returns false when w has no handle.
bool reduce_first_handle(std::vector<int>& w, int strands) {
  std::vector<long> last(strands + 1, -1);
  const long len = static_cast<long>(w.size());
  for (long p = 0; p < len; ++p) {
    const int g = std::abs(w[p]);
    const long a = last[g];
    if (a >= 0 && w[a] == -w[p] && (g == 1 || last[g - 1] < a)) {
      const int e = w[a] > 0 ? 1 : -1;
      std::vector<int> out(w.begin(), w.begin() + a);
      for (long x = a + 1; x < p; ++x) {
        const int y = w[x];
        if (std::abs(y) == g + 1) {
          out.push_back(-e * (g + 1));
          out.push_back(y > 0 ? g : -g);
          out.push_back(e * (g + 1));
        } else {
          out.push_back(y);
        }
      }
      out.insert(out.end(), w.begin() + p + 1, w.end());
      if (out.size() > kMaxReducedLength) throw std::runtime_error("handle reduction exceeded the length guard");
      w = std::move(out);
      return true;
    }
    last[g] = p;
  }
  return false;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w) {
  std::vector<int> cur = free_reduce(w).letters();
  while (reduce_first_handle(cur, w.strands())) {
  }
  return BraidWord(w.strands(), std::move(cur));
}

bool is_trivial(const BraidWord& w) {
  if (exponent_sum(w) != 0) return false;
  if (!perm_image(w).is_identity()) return false;
  return handle_reduce(w).length() == 0;
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand mismatch");
  return is_trivial(u * v.inverse());
}

std::vector<WordIdentity> known_identities(int k, int max_t) {
  if (k < 2) throw std::invalid_argument("need k >= 2");
  std::vector<WordIdentity> out;
  auto add = [&](std::string name, BraidWord l, BraidWord r) {
    out.push_back({std::move(name), std::move(l), std::move(r)});
  };
  auto s = [k](int i) { return BraidWord::sigma(k, i); };
  const BraidWord a = alpha(k);
  const BraidWord b = beta(k);

  for (int i = 1; i + 1 <= k - 1; ++i)
    add("sigma" + std::to_string(i + 1) + " = alpha sigma" + std::to_string(i) + " alpha^-1", s(i + 1),
        s(i).conjugate_by(a));
  for (int i = 1; i <= k - 1; ++i)
    add("sigma" + std::to_string(i) + " = alpha^" + std::to_string(i - 1) + " sigma1 alpha^-" +
            std::to_string(i - 1),
        s(i), s(1).conjugate_by(a.pow(i - 1)));

  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const BraidWord aij = alpha_ij(k, i, j);
      const BraidWord bij = beta_ij(k, i, j);
      const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (int m = 1; m <= k - 1; ++m) {
        if (m < i - 1 || m > j)
          add("alpha" + tag + " commutes with sigma" + std::to_string(m), aij * s(m), s(m) * aij);
        for (int q = 1; i <= m && m + q <= j - 1; ++q)
          add("alpha" + tag + "^" + std::to_string(q) + " shifts sigma" + std::to_string(m),
              aij.pow(q) * s(m), s(m + q) * aij.pow(q));
      }
      add("alpha" + tag + "^" + std::to_string(j - i + 1) + " = beta" + tag + "^" + std::to_string(j - i),
          aij.pow(j - i + 1), bij.pow(j - i));
      for (int q = 0; q <= j - i - 1; ++q)
        add("sigma" + std::to_string(i + q) + " from alpha" + tag + " and beta" + tag, s(i + q),
            aij.pow(q - 1) * bij * aij.pow(-q));
    }

  add("alpha^k = beta^(k-1)", a.pow(k), b.pow(k - 1));
  for (int i = 2; i <= k / 2; ++i)
    add("two-generator relator " + std::to_string(i), b * a.pow(i - 1) * b,
        a.pow(i) * b * a.pow(-(i + 1)) * b * a.pow(i));

  for (int t = 2; t <= k - 1 && t <= max_t; ++t) {
    BraidWord desc = BraidWord::empty(k);
    for (int m = t; m >= 1; --m) desc = desc * s(m);
    add("alpha(1," + std::to_string(t) + ")^t staircase", alpha_ij(k, 1, t).pow(t) * desc,
        alpha_ij(k, 1, t + 1).pow(t));
  }
  BraidWord rprod = BraidWord::empty(k);
  for (int t = 2; t <= k && t <= max_t; ++t) {
    BraidWord mid = BraidWord::sigma(k, 1, 2);
    for (int m = 2; m <= t - 1; ++m) mid = s(m) * mid * s(m);
    add("R" + std::to_string(t) + " as a palindrome", r_word(k, t), mid);
    rprod = rprod * r_word(k, t);
    add("R2...R" + std::to_string(t) + " = alpha(1," + std::to_string(t) + ")^t", rprod,
        alpha_ij(k, 1, t).pow(t));
  }

  if (k >= 4) {
    const BraidWord g1(k, {3, -1});
    const BraidWord g2(k, {1, -2});
    const BraidWord comm = g1.inverse() * g2.inverse() * g1 * g2;
    const BraidWord s12(k, {1, 2});
    add("Gorin", g1, s12.inverse() * comm * s12);
  }
  return out;
}

BraidWord cable_u(int k, int m, int i) {
  if (i < 1 || i > k - 1) throw std::invalid_argument("cable index out of range");
  const int n = m * k;
  BraidWord u = BraidWord::empty(n);
  for (int r = 0; r < m; ++r) u = u * alpha_ij(n, i * m - r, (i + 1) * m - r);
  return u;
}

BraidWord cable_v(int k, int m, const BraidWord& v, int i) {
  if (v.strands() != m) throw std::invalid_argument("cable word must live in B_m");
  if (i < 1 || i > k) throw std::invalid_argument("cable index out of range");
  return v.embed(m * k, (i - 1) * m);
}

std::vector<BraidWord> cable_hom(int k, int m, const BraidWord& v) {
  if (k < 2 || m < 1) throw std::invalid_argument("cabling needs k >= 2 and m >= 1");
  std::vector<BraidWord> out;
  for (int i = 1; i <= k - 1; ++i) out.push_back(cable_v(k, m, v, i) * cable_u(k, m, i));
  return out;
}

Progression progression(int k, int index) {
  const long long d = static_cast<long long>(k) * (k - 1);
  Progression p{k, index, 0, d};
  switch (index) {
    case 1: p.initial = k; break;
    case 2: p.initial = d; break;
    case 3: p.initial = d + 1; break;
    case 4: p.initial = static_cast<long long>(k - 1) * (k - 1); break;
    default: throw std::invalid_argument("progression index must be 1..4");
  }
  return p;
}

bool SpecialParams::balanced(int k, long long n, long long t) const {
  const long long da = alpha_to_a ? n - 1 : n;
  const long long db = beta_to_a ? n - 1 : n;
  return k * p(t) * da == (k - 1) * q(t) * db;
}

std::vector<SpecialParams> special_params(int k, long long n) {
  if (k == 4) throw std::invalid_argument("special parameters are not defined for k = 4");
  if (k < 3 || n < 1) throw std::invalid_argument("need k >= 3 and n >= 1");
  const long long d = static_cast<long long>(k) * (k - 1);
  std::vector<SpecialParams> out;
  for (int idx = 1; idx <= 4; ++idx) {
    const Progression pr = progression(k, idx);
    if (!pr.contains(n)) continue;
    SpecialParams sp;
    sp.case_index = idx;
    const long long j = (n - pr.initial) / d;
    switch (idx) {
      case 1:
        sp.l = j;
        sp.p_per_t = sp.l * (k - 1) + 1;
        sp.q_per_t = sp.l * k + 1;
        sp.alpha_to_a = true;
        sp.beta_to_a = false;
        sp.t_coprime = true;
        break;
      case 2:
        sp.l = j + 1;
        sp.p_per_t = k - 1;
        sp.q_per_t = k;
        sp.alpha_to_a = true;
        sp.beta_to_a = true;
        break;
      case 3:
        sp.l = j + 1;
        sp.p_per_t = k - 1;
        sp.q_per_t = k;
        sp.alpha_to_a = false;
        sp.beta_to_a = false;
        break;
      case 4:
        sp.l = j + 1;
        sp.p_per_t = sp.l * (k - 1) - 1;
        sp.q_per_t = sp.l * k - 1;
        sp.alpha_to_a = false;
        sp.beta_to_a = true;
        sp.t_coprime = true;
        break;
    }
    out.push_back(sp);
  }
  return out;
}

}  // namespace braidperm
