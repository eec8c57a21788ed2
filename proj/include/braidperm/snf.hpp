#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidperm {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// U * A * V = D with U, V unimodular and D diagonal, each nonzero diagonal
// entry positive and dividing the next. Inverses of both transforms are kept.
struct SmithForm {
  IntMatrix U, U_inv, V, V_inv;
  std::vector<BigInt> diagonal;  // length min(rows, cols)
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, int rows, int cols);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

// Invariant factors of the direct sum of cyclic groups of the given orders
// (0 meaning infinite cyclic), with factors of 1 dropped.
std::vector<BigInt> invariant_factors(const std::vector<BigInt>& orders);

}  // namespace braidperm
