#include "thetalgr/linalg.hpp"

#include <utility>

#include "thetalgr/error.hpp"

namespace thetalgr {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clears denominators row by row. scale receives ∏ of the row multipliers.
IntRows integer_rows(const Matrix& m, Integer* scale) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  Integer total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    total *= l;
  }
  if (scale) *scale = total;
  return out;
}

struct BareissOutcome {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  int swap_sign = 1;
};

// Fraction-free echelon reduction in place. Every intermediate entry is a
// minor of the input, so the divisions are exact.
BareissOutcome bareiss(IntRows& a, std::size_t cols) {
  BareissOutcome out;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

void require_symmetric(const Matrix& s, const char* op) {
  if (!s.is_symmetric()) throw_domain(std::string(op) + ": input is not symmetric");
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto rows = integer_rows(m, nullptr);
  return bareiss(rows, m.cols()).rank;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw_domain("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  Integer scale;
  auto rows = integer_rows(m, &scale);
  const auto out = bareiss(rows, m.cols());
  if (out.rank < m.rows()) return 0;
  Rational det(out.last_pivot * out.swap_sign, scale);
  det.canonicalize();
  return det;
}

Rational minor(const Matrix& m, std::span<const std::size_t> row_set,
               std::span<const std::size_t> col_set) {
  if (row_set.size() != col_set.size()) throw_domain("minor: index set sizes differ");
  return determinant(m.select(row_set, col_set));
}

std::vector<Rational> char_poly_sums(const Matrix& s) {
  require_symmetric(s, "char_poly_sums");
  const std::size_t n = s.rows();
  // det(λI - s) = λ^n + c_1 λ^{n-1} + ... + c_n, and E_k = (-1)^k c_k.
  std::vector<Rational> e(n);
  Matrix m = Matrix::zero(n, n);
  Rational c = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    m = s * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    c = -(s * m).trace() / Rational(static_cast<long>(k));
    e[k - 1] = (k % 2 == 0) ? c : Rational(-c);
  }
  return e;
}

bool is_positive_semidefinite(const Matrix& s) {
  for (const auto& ek : char_poly_sums(s)) {
    if (ek < 0) return false;
  }
  return true;
}

bool is_positive_definite(const Matrix& s) {
  require_symmetric(s, "is_positive_definite");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.rows(); ++k) {
    idx.push_back(k);
    if (minor(s, idx, idx) <= 0) return false;
  }
  return true;
}

Matrix LdlFactorization::reconstruct() const {
  return unit_lower * Matrix::diagonal(diag) * unit_lower.transpose();
}

LdlFactorization ldl(const Matrix& s) {
  require_symmetric(s, "ldl");
  const std::size_t n = s.rows();
  Matrix w = s;
  LdlFactorization f{Matrix::identity(n), std::vector<Rational>(n), {}};
  std::vector<int> support;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational pivot = w(j, j);
    if (pivot < 0) throw_domain("ldl: negative pivot, input is not PSD");
    if (pivot == 0) {
      for (std::size_t i = j + 1; i < n; ++i) {
        if (w(i, j) != 0) throw_domain("ldl: zero pivot with nonzero column, input is not PSD");
      }
      continue;
    }
    f.diag[j] = pivot;
    support.push_back(static_cast<int>(j + 1));
    for (std::size_t i = j + 1; i < n; ++i) f.unit_lower(i, j) = w(i, j) / pivot;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (w(i, j) == 0) continue;
      for (std::size_t m = j + 1; m < n; ++m) w(i, m) -= f.unit_lower(i, j) * w(j, m);
    }
  }
  f.support = Subset(std::move(support));
  return f;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

Matrix solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw_domain("solve: row count mismatch");
  std::vector<std::size_t> piv;
  const Matrix r = rref(Matrix::hstack(m, b), &piv);
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= m.cols()) throw_domain("solve: inconsistent system");
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = r(i, m.cols() + j);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw_domain("inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> piv;
  const Matrix r = rref(Matrix::hstack(m, Matrix::identity(n)), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) {
    throw_domain("inverse: matrix is singular");
  }
  return r.block(0, n, n, n);
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -r(i, free_cols[f]);
  }
  return k;
}

}  // namespace thetalgr
