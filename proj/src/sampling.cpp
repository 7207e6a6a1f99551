#include "thetalgr/sampling.hpp"

#include <limits>
#include <utility>

#include "thetalgr/error.hpp"
#include "thetalgr/linalg.hpp"

namespace thetalgr {

long Rng::uniform_int(long lo, long hi) {
  if (hi < lo) throw_domain("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Rng::rational(long box, long max_den) {
  const long p = uniform_int(-box, box);
  const long q = uniform_int(1, max_den);
  return make_rational(p, q);
}

Rational Rng::nonzero_rational(long box, long max_den) {
  Rational r;
  do {
    r = rational(box, max_den);
  } while (r == 0);
  return r;
}

Rational Rng::positive_rational(long box, long max_den) {
  const long p = uniform_int(1, box);
  const long q = uniform_int(1, max_den);
  return make_rational(p, q);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long box) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(box);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n, bool positive_det) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    const Rational d = determinant(m);
    if (d == 0) continue;
    if (positive_det && d < 0) {
      for (std::size_t i = 0; i < n; ++i) m(i, 0) = -m(i, 0);
    }
    return m;
  }
}

Matrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.rational();
  return m;
}

Matrix random_psd(Rng& rng, std::size_t n, std::size_t r) {
  for (;;) {
    const Matrix g = random_matrix(rng, r, n, 3);
    if (rank(g) == r) return g.transpose() * g;
  }
}

SignedPermutation random_signed_permutation(Rng& rng, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::swap(image[static_cast<std::size_t>(i)],
              image[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  for (auto& x : image)
    if (rng.coin()) x = -x;
  return SignedPermutation(std::move(image));
}

LagrangianPoint sample_double(Rng& rng, int k, int l, int n) {
  const LagrangianPoint base = base_point(k, l, n);
  const auto m = static_cast<std::size_t>(n);
  const Matrix g = random_invertible(rng, m);
  const LagrangianPoint moved = base.transform(levi_element(g));
  return moved.reparametrize(random_invertible(rng, m, false));
}

CellSample sample_cell(Rng& rng, const CosetIndex& k, int n, bool square_pivots) {
  if (n < 1) throw_domain("sample_cell: rank must be at least 1");
  if (!k.empty() && (k.elements().front() < 1 || k.max() > n)) {
    throw_domain("sample_cell: index outside {1..n}");
  }
  const auto m = static_cast<std::size_t>(n);
  Matrix lower = Matrix::identity(m);
  std::vector<Rational> diag(m);
  for (int j : k) {
    const auto c = static_cast<std::size_t>(j - 1);
    for (std::size_t i = c + 1; i < m; ++i) lower(i, c) = rng.rational();
    if (square_pivots) {
      const Rational r = rng.positive_rational(3, 2);
      diag[c] = r * r;
    } else {
      diag[c] = rng.positive_rational();
    }
  }
  const Matrix s = lower * Matrix::diagonal(diag) * lower.transpose();
  return {LagrangianPoint::from_chart(s), lower, diag};
}

LagrangianPoint sample_interior(Rng& rng, int n) { return sample_double(rng, 0, n, n); }

LagrangianPoint sample_nonnegative(Rng& rng, int n) {
  if (rng.coin()) {
    std::vector<int> k;
    for (int j = 1; j <= n; ++j)
      if (rng.coin()) k.push_back(j);
    return sample_cell(rng, CosetIndex(std::move(k)), n).point;
  }
  const int l = static_cast<int>(rng.uniform_int(0, n));
  const int k = static_cast<int>(rng.uniform_int(0, l));
  return sample_double(rng, k, l, n);
}

LagrangianPoint sample_any(Rng& rng, int n) {
  const auto m = static_cast<std::size_t>(n);
  switch (rng.uniform_int(0, 4)) {
    case 0:
      return LagrangianPoint::from_chart(random_symmetric(rng, m));
    case 3:
      return sample_interior(rng, n);
    case 1: {
      const LagrangianPoint p = sample_nonnegative(rng, n);
      return LagrangianPoint::from_blocks(p.a(), -p.c());
    }
    case 2: {
      // A random word in the pinning generators moves a nonnegative point
      // to an arbitrary cell of the Grassmannian.
      LagrangianPoint p = sample_nonnegative(rng, n);
      const long len = rng.uniform_int(1, 2 * n);
      for (long s = 0; s < len; ++s) {
        const int i = static_cast<int>(rng.uniform_int(1, n));
        const Rational a = rng.nonzero_rational(3, 2);
        switch (rng.uniform_int(0, 2)) {
          case 0: p = p.transform(gen_x(i, a, n)); break;
          case 1: p = p.transform(gen_y(i, a, n)); break;
          default: p = p.transform(simple_reflection_lift(i, n)); break;
        }
      }
      return p;
    }
    default:
      return sample_nonnegative(rng, n);
  }
}

UStarParams random_ustar(Rng& rng, int n) {
  UStarParams p(n);
  for (const auto& [a, b] : UStarParams::pattern(n)) {
    p.set(a, b, a == n ? rng.positive_rational() : rng.nonzero_rational());
  }
  return p;
}

SymplecticElement random_monoid_element(Rng& rng, int n) {
  const auto m = static_cast<std::size_t>(n);
  const auto r1 = static_cast<std::size_t>(rng.uniform_int(0, n));
  const auto r2 = static_cast<std::size_t>(rng.uniform_int(0, n));
  return lower_unipotent(random_psd(rng, m, r1)) * levi_element(random_invertible(rng, m)) *
         upper_unipotent(random_psd(rng, m, r2));
}

}  // namespace thetalgr
