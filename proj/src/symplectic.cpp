#include "thetalgr/symplectic.hpp"

#include <string>

#include "thetalgr/error.hpp"
#include "thetalgr/linalg.hpp"

namespace thetalgr {

namespace {

Matrix block_matrix(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  return Matrix::vstack(Matrix::hstack(a, b), Matrix::hstack(c, d));
}

void check_index(int i, int n) {
  if (n < 1) throw_domain("rank must be at least 1");
  if (i < 1 || i > n) {
    throw_domain("generator index " + std::to_string(i) + " out of range 1.." +
                 std::to_string(n));
  }
}

}  // namespace

Matrix omega(int n) {
  const auto m = static_cast<std::size_t>(n);
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = 1;
    w(m + i, i) = -1;
  }
  return w;
}

bool is_symplectic(const Matrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) return false;
  const Matrix w = omega(static_cast<int>(m.rows() / 2));
  return m.transpose() * w * m == w;
}

SymplecticElement::SymplecticElement(Matrix m) {
  if (!is_symplectic(m)) throw_invariant("matrix does not preserve the symplectic form");
  n_ = static_cast<int>(m.rows() / 2);
  m_ = std::move(m);
}

SymplecticElement SymplecticElement::identity(int n) {
  return SymplecticElement(Matrix::identity(2 * static_cast<std::size_t>(n)), n, Trusted{});
}

SymplecticElement SymplecticElement::inverse() const {
  // g⁻¹ = -Ω gᵗ Ω
  const Matrix w = omega(n_);
  return SymplecticElement(-(w * m_.transpose() * w), n_, Trusted{});
}

SymplecticElement operator*(const SymplecticElement& x, const SymplecticElement& y) {
  if (x.n_ != y.n_) throw_domain("symplectic product: rank mismatch");
  return SymplecticElement(x.m_ * y.m_, x.n_, SymplecticElement::Trusted{});
}

Matrix chevalley_e(int i, int n) {
  check_index(i, n);
  const auto m = static_cast<std::size_t>(n);
  const auto k = static_cast<std::size_t>(i - 1);
  Matrix e(2 * m, 2 * m);
  if (i == n) {
    e(m - 1, 2 * m - 1) = 1;
  } else {
    e(k, k + 1) = 1;
    e(m + k + 1, m + k) = -1;
  }
  return e;
}

Matrix nilpotent_exp(const Matrix& x) {
  if (!x.is_square()) throw_domain("nilpotent_exp: matrix is not square");
  Matrix sum = Matrix::identity(x.rows());
  Matrix term = Matrix::identity(x.rows());
  for (std::size_t k = 1; k <= x.rows(); ++k) {
    term = term * x;
    term *= Rational(1, static_cast<unsigned long>(k));
    if (term.is_zero()) return sum;
    sum += term;
  }
  if (!(term * x).is_zero()) throw_domain("nilpotent_exp: matrix is not nilpotent");
  return sum;
}

SymplecticElement gen_x(int i, const Rational& a, int n) {
  return SymplecticElement(nilpotent_exp(chevalley_e(i, n) * a));
}

SymplecticElement gen_y(int i, const Rational& a, int n) {
  return SymplecticElement(nilpotent_exp(chevalley_e(i, n).transpose() * a));
}

SymplecticElement simple_reflection_lift(int i, int n) {
  return gen_x(i, -1, n) * gen_y(i, 1, n) * gen_x(i, -1, n);
}

SymplecticElement torus(std::span<const Rational> diag) {
  if (diag.empty()) throw_domain("torus: empty diagonal");
  const std::size_t n = diag.size();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) throw_domain("torus: zero diagonal entry");
    m(i, i) = diag[i];
    m(n + i, n + i) = 1 / diag[i];
  }
  return SymplecticElement(std::move(m));
}

SymplecticElement levi_element(const Matrix& a) {
  const Matrix z = Matrix::zero(a.rows(), a.cols());
  return SymplecticElement(block_matrix(a, z, z, inverse(a).transpose()));
}

SymplecticElement lower_unipotent(const Matrix& c) {
  const auto n = c.rows();
  return SymplecticElement(block_matrix(Matrix::identity(n), Matrix::zero(n, n), c,
                                        Matrix::identity(n)));
}

SymplecticElement upper_unipotent(const Matrix& b) {
  const auto n = b.rows();
  return SymplecticElement(block_matrix(Matrix::identity(n), b, Matrix::zero(n, n),
                                        Matrix::identity(n)));
}

bool is_in_theta_monoid(const SymplecticElement& g) {
  const Matrix d = g.d();
  if (determinant(d) == 0) return false;
  const Matrix cdt = g.c() * d.transpose();
  const Matrix dtb = d.transpose() * g.b();
  if (!cdt.is_symmetric() || !dtb.is_symmetric()) return false;
  return is_positive_semidefinite(cdt) && is_positive_semidefinite(dtb);
}

ThetaFactorization theta_triple_factor(const SymplecticElement& g) {
  const Matrix a = g.a();
  const Rational det_a = determinant(a);
  if (det_a == 0) throw_domain("theta_triple_factor: block A is singular");
  if (det_a < 0) throw_domain("theta_triple_factor: det A < 0, Levi factor not in L_J°");
  const Matrix a_inv = inverse(a);
  const Matrix lower_block = g.c() * a_inv;
  const Matrix upper_block = a_inv * g.b();
  if (!lower_block.is_symmetric() || !is_positive_semidefinite(lower_block)) {
    throw_domain("theta_triple_factor: C·A⁻¹ is not symmetric PSD");
  }
  if (!upper_block.is_symmetric() || !is_positive_semidefinite(upper_block)) {
    throw_domain("theta_triple_factor: A⁻¹·B is not symmetric PSD");
  }
  return {lower_unipotent(lower_block), levi_element(a), upper_unipotent(upper_block)};
}

// ---------------------------------------------------------------------------

std::vector<UStarParams::Key> UStarParams::pattern(int n) {
  std::vector<Key> keys;
  for (int q = 1; q <= n; ++q) {
    for (int p = n + 1 - q; p <= n; ++p) keys.emplace_back(p, q);
  }
  return keys;
}

const Rational& UStarParams::at(int p, int q) const {
  auto it = a_.find({p, q});
  if (it == a_.end()) {
    throw_domain("missing parameter a_{" + std::to_string(p) + "," + std::to_string(q) + "}");
  }
  return it->second;
}

bool UStarParams::complete() const {
  if (n_ < 1) return false;
  for (const auto& key : pattern(n_)) {
    if (!a_.contains(key)) return false;
  }
  return true;
}

namespace {

SymplecticElement u_star_impl(const UStarParams& p, bool keep_long) {
  const int n = p.rank();
  if (!p.complete()) throw_domain("u_star_product: incomplete parameters");
  SymplecticElement u = SymplecticElement::identity(n);
  for (const auto& [row, col] : UStarParams::pattern(n)) {
    if (row == n && !keep_long) continue;
    u = u * gen_y(row, p.at(row, col), n);
  }
  return u;
}

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Closed forms, written with a_{n-i+j, i} for 1 ≤ j < i ≤ n.
Rational closed_form_c(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int q = 1; q <= k; ++q) r *= p.at(n, q);
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const Rational& a = p.at(n - i + j, i);
      if (j <= k && k < i) r *= a;
      if (i <= k) r *= a * a;
    }
  }
  return r;
}

Rational closed_form_a(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (j <= k && k < i) r *= p.at(n - i + j, i);
    }
  }
  return r;
}

Rational closed_form_gram(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int q = 1; q <= k; ++q) r *= p.at(n, q);
  for (int i = 2; i <= n; ++i) {
    for (int q = n + 1 - i; q < n; ++q) {
      if (q + i <= n + k) r *= power(p.at(q, i), 2);
    }
  }
  return r;
}

}  // namespace

SymplecticElement u_star_product(const UStarParams& p) { return u_star_impl(p, true); }

SymplecticElement u_star_levi_part(const UStarParams& p) { return u_star_impl(p, false); }

const char* to_string(MinorIdentity::Kind kind) {
  switch (kind) {
    case MinorIdentity::Kind::kC: return "C";
    case MinorIdentity::Kind::kA: return "A";
    case MinorIdentity::Kind::kGram: return "AtC";
  }
  return "?";
}

std::vector<MinorIdentity> minor_identity_report(const UStarParams& p) {
  const int n = p.rank();
  const SymplecticElement u = u_star_product(p);
  const Matrix a = u.a();
  const Matrix c = u.c();
  const Matrix gram = a.transpose() * c;
  std::vector<MinorIdentity> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::size_t> bottom_rows, leading;
    for (int r = n - k; r < n; ++r) bottom_rows.push_back(static_cast<std::size_t>(r));
    for (int r = 0; r < k; ++r) leading.push_back(static_cast<std::size_t>(r));
    out.push_back({MinorIdentity::Kind::kC, k, minor(c, bottom_rows, leading),
                   closed_form_c(p, k)});
    out.push_back({MinorIdentity::Kind::kA, k, minor(a, bottom_rows, leading),
                   closed_form_a(p, k)});
    out.push_back({MinorIdentity::Kind::kGram, k, minor(gram, leading, leading),
                   closed_form_gram(p, k)});
  }
  return out;
}

bool theorem_dense_check(const UStarParams& p) {
  const int n = p.rank();
  if (!p.complete()) throw_domain("theorem_dense_check: incomplete parameters");
  for (const auto& [key, v] : p.values()) {
    if (key.first == n && v <= 0) throw_domain("theorem_dense_check: a_{n,q} must be positive");
    if (v == 0) throw_domain("theorem_dense_check: parameters must be nonzero");
  }
  const SymplecticElement u = u_star_product(p);
  return is_positive_definite(u.a().transpose() * u.c());
}

}  // namespace thetalgr
