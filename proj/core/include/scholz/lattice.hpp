#pragma once

#include <vector>

#include "scholz/integer.hpp"

namespace scholz {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Smith normal form of the row lattice of an r x n integer matrix.
struct SmithForm {
  /// Diagonal entries d_1 | d_2 | ... (length n; zero entries mean infinite cyclic factors).
  std::vector<Integer> diagonal;
  /// Column transform V and its inverse: the class of x in Z^n / rows(M) has coordinates x V mod d.
  IntMatrix V;
  IntMatrix V_inv;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix M, bool want_transform);

/// Invariant factors > 1 of Z^n / rows(M), or an empty optional-like flag through `full_rank`.
struct AbelianGroup {
  std::vector<Integer> invariant_factors;  // each > 1, d_i | d_{i+1}
  bool finite = true;
  Integer order() const;
};
AbelianGroup quotient_group(const IntMatrix& M, std::size_t columns);

/// LLL-reduce integer row vectors in place (delta = 0.99). Returns false if an intermediate
/// value overflowed 64 bits, in which case the basis is left in an unspecified state.
bool lll_reduce(std::vector<std::vector<i64>>& basis);

/// A basis of the integer left kernel {v : v M = 0} of an r x n matrix with small entries,
/// LLL-reduced; computed with a weighted MLLL embedding.
std::vector<std::vector<i64>> integer_kernel(const std::vector<std::vector<i64>>& M);

}  // namespace scholz
