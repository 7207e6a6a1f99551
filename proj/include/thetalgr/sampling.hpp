#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "thetalgr/lagrangian.hpp"
#include "thetalgr/matrix.hpp"
#include "thetalgr/subset.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/weyl.hpp"

namespace thetalgr {

/// Seeded source of small random rationals.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the
/// standard. The std distributions are not, so integers are drawn by
/// rejection sampling here to keep streams identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  long uniform_int(long lo, long hi);
  bool coin() { return (next() & 1u) != 0; }

  /// p/q with p ∈ [-box, box], q ∈ [1, max_den].
  Rational rational(long box = 5, long max_den = 3);
  Rational nonzero_rational(long box = 5, long max_den = 3);
  Rational positive_rational(long box = 5, long max_den = 3);

  /// Child stream for an independent sub-task.
  Rng split() { return Rng(next()); }

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long box = 5);
/// Random invertible n×n matrix; det > 0 when positive_det is set.
Matrix random_invertible(Rng& rng, std::size_t n, bool positive_det = true);
Matrix random_symmetric(Rng& rng, std::size_t n);
/// GᵗG for a random r×n matrix G of full row rank r.
Matrix random_psd(Rng& rng, std::size_t n, std::size_t rank);

SignedPermutation random_signed_permutation(Rng& rng, int n);

/// diag(g, g⁻ᵗ)·I_{k,l} for a random det-positive g, re-represented by a
/// random right factor.
LagrangianPoint sample_double(Rng& rng, int k, int l, int n);

/// A point [I; L·diag(D)·Lᵗ] of the cell with index K, with the parameters
/// that produced it. With square_pivots, every D_j is the square of a
/// rational so that L·diag(√D) is exact.
struct CellSample {
  LagrangianPoint point;
  Matrix unit_lower;
  std::vector<Rational> diag;
};
CellSample sample_cell(Rng& rng, const CosetIndex& k, int n, bool square_pivots = false);

/// A point of P_{>0}.
LagrangianPoint sample_interior(Rng& rng, int n);

/// A theta-nonnegative point from a random double coset or cell.
LagrangianPoint sample_nonnegative(Rng& rng, int n);

/// A Lagrangian point drawn from a mix of families, most of them outside
/// P_{≥0}: indefinite charts, sign-flipped nonnegative points, and random
/// symplectic words applied to nonnegative points.
LagrangianPoint sample_any(Rng& rng, int n);

/// Parameters with a_{n,q} > 0 and every other entry nonzero.
UStarParams random_ustar(Rng& rng, int n);

/// u⁻·ℓ·u⁺ with random PSD unipotent blocks and det-positive ℓ.
SymplecticElement random_monoid_element(Rng& rng, int n);

}  // namespace thetalgr
