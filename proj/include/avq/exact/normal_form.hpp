#pragma once

#include "avq/exact/matrix.hpp"

#include <optional>

namespace avq {

/// Column Hermite normal form: `h == m * u` with `u` unimodular.
///
/// The first `rank` columns of `h` are nonzero; the pivot (first nonzero
/// entry) of column j lies strictly below the pivot of column j-1, pivots are
/// positive, and entries to the left of a pivot are reduced into [0, pivot).
/// Remaining columns are zero, and the matching columns of `u` span the
/// integer kernel of `m`.
struct HermiteResult {
  MatZ h;
  MatZ u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteResult hnf(const MatZ &m);

/// Smith normal form: `d == u * m * v`, `u` and `v` unimodular, `d` diagonal
/// with d_1 | d_2 | ... | d_r positive and zeros past the rank.
struct SmithResult {
  MatZ d;
  MatZ u;
  MatZ v;
  std::size_t rank = 0;
  /// The nonzero diagonal entries in order.
  std::vector<Int> diagonal;
};

SmithResult snf(const MatZ &m);

std::size_t rank(const MatQ &m);
std::size_t rank(const MatZ &m);
Rat determinant(const MatQ &m);
Int determinant(const MatZ &m);

/// Exact inverse over Q; throws when singular.
MatQ inverse(const MatQ &m);
/// Unimodular inverse; throws when |det| != 1.
MatZ inverse_unimodular(const MatZ &m);

/// One solution x of a * x = b over Q (b may have several columns).
std::optional<MatQ> solve(const MatQ &a, const MatQ &b);

/// Basis (as columns) of the integer kernel {x in Z^cols : m x = 0}. The
/// result is saturated and in column HNF.
MatZ integer_kernel(const MatZ &m);

/// Basis of the rational kernel, scaled to primitive integer columns.
MatZ rational_kernel(const MatZ &m);

}  // namespace avq
