#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thetalgr/matrix.hpp"
#include "thetalgr/subset.hpp"

namespace thetalgr {

/// Rank over ℚ by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);

/// Determinant by Bareiss elimination. det of a 0×0 matrix is 1.
Rational determinant(const Matrix& m);

/// Determinant of the submatrix on the given rows/columns (0-based),
/// both taken in increasing order. The empty minor is 1.
Rational minor(const Matrix& m, std::span<const std::size_t> row_set,
               std::span<const std::size_t> col_set);

/// E_1..E_n with det(λI + s) = Σ_k E_k λ^{n-k}; E_k is the sum of the
/// k×k principal minors. Computed by Faddeev–LeVerrier.
std::vector<Rational> char_poly_sums(const Matrix& s);

/// Exact PSD test: every E_k ≥ 0. Valid since symmetric rational matrices
/// have real spectra. Throws Error(kDomain) on non-symmetric input.
bool is_positive_semidefinite(const Matrix& s);

/// Sylvester's criterion on leading principal minors.
bool is_positive_definite(const Matrix& s);

/// s = L · diag(D) · Lᵗ with L unit lower triangular.
///
/// Pivots are taken in natural order. A zero pivot requires a zero residual
/// column; the corresponding column of L is then the unit column.
struct LdlFactorization {
  Matrix unit_lower;
  std::vector<Rational> diag;
  Subset support;  ///< { j : D_j > 0 }, 1-based

  Matrix reconstruct() const;
};

/// Throws Error(kDomain) when s is not PSD (negative pivot, or zero pivot
/// with a nonzero residual column).
LdlFactorization ldl(const Matrix& s);

/// A solution x of m·x = b (free variables set to zero).
/// Throws Error(kDomain) when the system is inconsistent.
Matrix solve(const Matrix& m, const Matrix& b);

/// Throws Error(kDomain) for non-square or singular input.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel, as columns (cols() == nullity).
Matrix kernel_basis(const Matrix& m);

/// Reduced row echelon form by ordinary rational Gauss–Jordan elimination.
/// pivots receives the pivot column of each nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

}  // namespace thetalgr
