#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "thetalgr/error.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/sampling.hpp"

using namespace thetalgr;

namespace {

std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK(to_string(parse_rational("-12")) == "-12");
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  for (const char* bad : {"", "1/0", "1.5", " 1", "1/", "/2", "--1", "1/-2", "abc"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(Matrix{{1, 0}, {0, 1}, {1, 1}, {1, 1}}) == 2);
  CHECK(rank(Matrix(0, 0)) == 0);
  CHECK(rank(Matrix(3, 2)) == 0);
}

TEST_CASE("determinant and minors") {
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK(minor(Matrix::identity(3), idx({0, 2}), idx({0, 2})) == 1);
  CHECK(minor(Matrix{{0, -6}, {2, 5}}, idx({0, 1}), idx({0, 1})) == 12);
  CHECK(minor(Matrix{{3, 1}, {4, 2}}, idx({}), idx({})) == 1);
  CHECK(determinant(Matrix{{Rational(1, 2), 1}, {1, Rational(1, 3)}}) == Rational(-5, 6));
  CHECK_THROWS_AS(minor(Matrix::identity(2), idx({0}), idx({0, 1})), Error);
  CHECK_THROWS_AS(minor(Matrix::identity(2), idx({2}), idx({0})), Error);
}

TEST_CASE("char_poly_sums") {
  CHECK(char_poly_sums(Matrix::identity(2)) == std::vector<Rational>{2, 1});
  CHECK(char_poly_sums(Matrix{{1, 1}, {1, 1}}) == std::vector<Rational>{2, 0});
  CHECK(char_poly_sums(Matrix(2, 2)) == std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(char_poly_sums(Matrix{{1, 2}, {0, 1}}), Error);
}

TEST_CASE("definiteness") {
  CHECK(is_positive_semidefinite(Matrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(is_positive_semidefinite(Matrix{{0, 1}, {1, 0}}));
  CHECK(is_positive_semidefinite(Matrix{{2, 1}, {1, 2}}));
  CHECK(is_positive_definite(Matrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(Matrix{{1, 1}, {1, 1}}));
  CHECK(is_positive_definite(Matrix::identity(4)));
  // Leading minors alone would accept this one: diag entries 0 then negative.
  CHECK_FALSE(is_positive_semidefinite(Matrix{{0, 0}, {0, -1}}));
  CHECK_THROWS_AS(is_positive_definite(Matrix{{1, 2}, {0, 1}}), Error);
}

TEST_CASE("ldl") {
  const auto f = ldl(Matrix{{1, 1}, {1, 1}});
  CHECK(f.unit_lower == Matrix{{1, 0}, {1, 1}});
  CHECK(f.diag == std::vector<Rational>{1, 0});
  CHECK(f.support == Subset{1});

  const auto id = ldl(Matrix::identity(3));
  CHECK(id.unit_lower == Matrix::identity(3));
  CHECK(id.support == Subset{1, 2, 3});

  const auto z = ldl(Matrix(3, 3));
  CHECK(z.unit_lower == Matrix::identity(3));
  CHECK(z.diag == std::vector<Rational>{0, 0, 0});
  CHECK(z.support.empty());

  // Zero pivot with a nonzero residual column.
  CHECK_THROWS_AS(ldl(Matrix{{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(ldl(Matrix{{-1}}), Error);
}

TEST_CASE("solve, inverse, kernel") {
  CHECK(inverse(Matrix{{2, 1}, {1, 2}}) == Matrix{{2, -1}, {-1, 2}} * Rational(1, 3));
  CHECK_THROWS_AS(inverse(Matrix{{1, 1}, {1, 1}}), Error);
  const Matrix k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(k(0, 0) != 0);
  const Matrix b{{3}, {Rational(-1, 2)}};
  CHECK(solve(Matrix::identity(2), b) == b);
  CHECK_THROWS_AS(solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}), Error);
}

TEST_CASE("property: ldl reconstructs random PSD matrices exactly") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const auto r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n)));
    const Matrix s = random_psd(rng, n, r);
    const auto f = ldl(s);
    CHECK(f.reconstruct() == s);
    CHECK(f.support.size() == r);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(f.diag[j] >= 0);
      if (f.diag[j] == 0)
        for (std::size_t i = j + 1; i < n; ++i) CHECK(f.unit_lower(i, j) == 0);
    }
    CHECK(is_positive_semidefinite(s));
    CHECK(is_positive_definite(s) == (r == n));
  }
}

TEST_CASE("property: PD implies PSD, exact tests agree with brute-force minors") {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const Matrix s = random_symmetric(rng, n);
    const bool pd = is_positive_definite(s);
    const bool psd = is_positive_semidefinite(s);
    CHECK((!pd || psd));
    CHECK(pd == oracle::pd(oracle::from(s)));
    CHECK(psd == oracle::psd(oracle::from(s)));
  }
}

TEST_CASE("property: rank agrees across pivot orders") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const auto c = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, 3));
    // Low-rank product so that rank deficiency actually occurs.
    const Matrix m = random_matrix(rng, r, k) * random_matrix(rng, k, c);
    std::vector<std::size_t> rows(r);
    for (std::size_t i = 0; i < r; ++i) rows[i] = r - 1 - i;
    const std::size_t a = rank(m);
    CHECK(a == rank(m.transpose()));
    CHECK(a == rank(m.select_rows(rows)));
    std::vector<std::size_t> piv;
    rref(m, &piv);
    CHECK(a == piv.size());
    CHECK(a <= k);
  }
}

TEST_CASE("property: exact PSD agrees with float eigenvalues on 1000 random 5x5") {
  Rng rng(14);
  int disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    Matrix s(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) s(i, j) = s(j, i) = Rational(rng.uniform_int(-10, 10));
    if (t % 2 == 0) s = s * s;  // half the cases are PSD
    const double lambda = oracle::min_eigenvalue(oracle::from(s));
    const bool exact = is_positive_semidefinite(s);
    if (lambda < -1e-9 && exact) ++disagreements;
    if (lambda > 1e-9 && !exact) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("property: minors equal the determinant of the extracted submatrix") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const Matrix m = random_matrix(rng, 6, 6);
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, 4));
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < 6; ++i) {
      if (rows.size() < k && rng.coin()) rows.push_back(i);
    }
    for (std::size_t i = 0; i < 6 && cols.size() < rows.size(); ++i) {
      if (rng.coin() || 6 - i == rows.size() - cols.size()) cols.push_back(i);
    }
    CHECK(minor(m, rows, cols) == oracle::minor(oracle::from(m), rows, cols));
  }
}
