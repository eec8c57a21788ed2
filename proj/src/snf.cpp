#include "braidperm/snf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braidperm {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class Reducer {
 public:
  Reducer(IntMatrix a, int rows, int cols)
      : A(std::move(a)), rows_(rows), cols_(cols), U(identity_matrix(rows)), Ui(identity_matrix(rows)),
        V(identity_matrix(cols)), Vi(identity_matrix(cols)) {}

  // row i += c * row j
  void add_row(int i, int j, const BigInt& c) {
    if (c == 0) return;
    for (int x = 0; x < cols_; ++x) A[i][x] += c * A[j][x];
    for (int x = 0; x < rows_; ++x) U[i][x] += c * U[j][x];
    for (int x = 0; x < rows_; ++x) Ui[x][j] -= c * Ui[x][i];
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
    for (int x = 0; x < rows_; ++x) std::swap(Ui[x][i], Ui[x][j]);
  }
  void negate_row(int i) {
    for (auto& v : A[i]) v = -v;
    for (auto& v : U[i]) v = -v;
    for (int x = 0; x < rows_; ++x) Ui[x][i] = -Ui[x][i];
  }
  // col i += c * col j
  void add_col(int i, int j, const BigInt& c) {
    if (c == 0) return;
    for (int x = 0; x < rows_; ++x) A[x][i] += c * A[x][j];
    for (int x = 0; x < cols_; ++x) V[x][i] += c * V[x][j];
    for (int x = 0; x < cols_; ++x) Vi[j][x] -= c * Vi[i][x];
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int x = 0; x < rows_; ++x) std::swap(A[x][i], A[x][j]);
    for (int x = 0; x < cols_; ++x) std::swap(V[x][i], V[x][j]);
    std::swap(Vi[i], Vi[j]);
  }

  void run() {
    const int lim = std::min(rows_, cols_);
    for (int t = 0; t < lim; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < rows_; ++i) {
          if (A[i][t] == 0) continue;
          add_row(i, t, -floor_div(A[i][t], A[t][t]));
          if (A[i][t] != 0) {
            clean = false;
            swap_rows(i, t);
          }
        }
        for (int j = t + 1; j < cols_; ++j) {
          if (A[t][j] == 0) continue;
          add_col(j, t, -floor_div(A[t][j], A[t][t]));
          if (A[t][j] != 0) {
            clean = false;
            swap_cols(j, t);
          }
        }
        if (!clean) continue;
        // The pivot must divide the rest of the matrix.
        bool divides = true;
        for (int i = t + 1; i < rows_ && divides; ++i)
          for (int j = t + 1; j < cols_; ++j)
            if (A[i][j] % A[t][t] != 0) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (A[t][t] < 0) negate_row(t);
      ++rank;
    }
  }

  IntMatrix A;
  int rows_, cols_;
  IntMatrix U, Ui, V, Vi;
  int rank = 0;

 private:
  // Moves an entry of least nonzero absolute value to (t,t).
  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    BigInt best = 0;
    for (int i = t; i < rows_; ++i)
      for (int j = t; j < cols_; ++j) {
        if (A[i][j] == 0) continue;
        BigInt v = abs(A[i][j]);
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, int rows, int cols) {
  if (static_cast<int>(a.size()) != rows) throw std::invalid_argument("row count mismatch");
  for (const auto& r : a)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("column count mismatch");
  Reducer red(a, rows, cols);
  red.run();
  SmithForm f;
  f.rank = red.rank;
  for (int i = 0; i < std::min(rows, cols); ++i) f.diagonal.push_back(red.A[i][i]);
  f.U = std::move(red.U);
  f.U_inv = std::move(red.Ui);
  f.V = std::move(red.V);
  f.V_inv = std::move(red.Vi);
  return f;
}

std::vector<BigInt> invariant_factors(const std::vector<BigInt>& orders) {
  std::map<long long, std::vector<long long>> powers;  // prime -> prime powers
  int free_rank = 0;
  for (const auto& o : orders) {
    if (o == 0) {
      ++free_rank;
      continue;
    }
    long long v = static_cast<long long>(abs(o));
    for (long long p = 2; p * p <= v; ++p) {
      if (v % p) continue;
      long long q = 1;
      while (v % p == 0) {
        v /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (v > 1) powers[v].push_back(v);
  }
  std::size_t len = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.rbegin(), qs.rend());
    len = std::max(len, qs.size());
  }
  std::vector<BigInt> out(len, 1);
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) out[len - 1 - i] *= qs[i];
  for (int i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

}  // namespace braidperm
