#pragma once

#include "tilecoh/matrix.hpp"

#include <vector>

namespace tilecoh {

/// Smith normal form D = U * A * V with unimodular U, V. Inverses of the
/// transforms are tracked alongside, so callers can change coordinates in
/// both directions without re-solving.
struct SmithDecomposition {
  IntMatrix u;      // rows(A) x rows(A)
  IntMatrix d;      // diagonal, same shape as A, d_1 | d_2 | ...
  IntMatrix v;      // cols(A) x cols(A)
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;
  std::vector<Int> diagonal;  // min(rows, cols) entries, zeros trailing
};

/// Exact Smith normal form of an arbitrary integer matrix (empty and zero
/// shapes included). Pivot rule: smallest nonzero absolute value, ties
/// broken by lowest row, then lowest column. Deterministic: identical
/// inputs produce identical decompositions.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace tilecoh
