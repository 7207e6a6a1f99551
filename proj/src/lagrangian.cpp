#include "thetalgr/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thetalgr/error.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/weyl.hpp"

namespace thetalgr {

namespace {

std::vector<std::size_t> iota(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

void check_rank(int n) {
  if (n < 1) throw_domain("rank must be at least 1");
}

void check_pair(int k, int l, int n) {
  check_rank(n);
  if (k < 0 || l > n || k > l) {
    throw_domain("need 0 <= k <= l <= n, got k=" + std::to_string(k) +
                 ", l=" + std::to_string(l) + ", n=" + std::to_string(n));
  }
}

// diag(1^{ones}, 0^{n-ones}) or its trailing counterpart, scaled.
Matrix leading_diag(std::size_t n, std::size_t ones, const Rational& value = 1) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < ones; ++i) m(i, i) = value;
  return m;
}

Matrix trailing_diag(std::size_t n, std::size_t ones, const Rational& value = 1) {
  Matrix m(n, n);
  for (std::size_t i = n - ones; i < n; ++i) m(i, i) = value;
  return m;
}

}  // namespace

LagrangianPoint::LagrangianPoint(Matrix rep) {
  if (rep.rows() != 2 * rep.cols() || rep.cols() == 0) {
    throw_invariant("representative must be 2n x n with n >= 1");
  }
  const std::size_t n = rep.cols();
  if (thetalgr::rank(rep) != n) throw_invariant("representative does not have rank n");
  const Matrix g = rep.block(0, 0, n, n).transpose() * rep.block(n, 0, n, n);
  if (!g.is_symmetric()) throw_invariant("A^t C is not symmetric (not Lagrangian)");
  n_ = static_cast<int>(n);
  rep_ = std::move(rep);
}

LagrangianPoint LagrangianPoint::from_blocks(const Matrix& a, const Matrix& c) {
  return LagrangianPoint(Matrix::vstack(a, c));
}

LagrangianPoint LagrangianPoint::from_chart(const Matrix& s) {
  return from_blocks(Matrix::identity(s.rows()), s);
}

Matrix LagrangianPoint::a() const {
  const auto n = static_cast<std::size_t>(n_);
  return rep_.block(0, 0, n, n);
}

Matrix LagrangianPoint::c() const {
  const auto n = static_cast<std::size_t>(n_);
  return rep_.block(n, 0, n, n);
}

LagrangianPoint LagrangianPoint::reparametrize(const Matrix& g) const {
  if (determinant(g) == 0) throw_domain("reparametrize: matrix is singular");
  return LagrangianPoint(rep_ * g);
}

LagrangianPoint LagrangianPoint::transform(const SymplecticElement& g) const {
  if (g.rank() != n_) throw_domain("transform: rank mismatch");
  return LagrangianPoint(g.matrix() * rep_);
}

bool equivalent(const LagrangianPoint& p, const LagrangianPoint& q) {
  if (p.rank() != q.rank()) return false;
  return rank(Matrix::hstack(p.rep(), q.rep())) == static_cast<std::size_t>(p.rank());
}

Matrix gram(const LagrangianPoint& p) { return p.a().transpose() * p.c(); }

bool is_theta_nonnegative(const LagrangianPoint& p) {
  return is_positive_semidefinite(gram(p));
}

bool is_theta_positive(const LagrangianPoint& p) {
  const auto s = chart_matrix(p);
  return s && is_positive_definite(*s);
}

ThetaClass theta_class(const LagrangianPoint& p) {
  if (is_theta_positive(p)) return ThetaClass::kPositive;
  if (is_theta_nonnegative(p)) return ThetaClass::kNonnegative;
  return ThetaClass::kNone;
}

const char* to_string(ThetaClass c) {
  switch (c) {
    case ThetaClass::kPositive: return "positive";
    case ThetaClass::kNonnegative: return "nonnegative";
    case ThetaClass::kNone: return "none";
  }
  return "?";
}

LagrangianPoint base_point(int k, int l, int n) {
  check_pair(k, l, n);
  const auto m = static_cast<std::size_t>(n);
  return LagrangianPoint::from_blocks(leading_diag(m, m - static_cast<std::size_t>(k)),
                                      trailing_diag(m, static_cast<std::size_t>(l)));
}

DoubleCosetPair classify_double(const LagrangianPoint& p) {
  const int n = p.rank();
  return {n - static_cast<int>(rank(p.a())), static_cast<int>(rank(p.c()))};
}

std::vector<int> std_flag_profile(const LagrangianPoint& p) {
  const auto n = static_cast<std::size_t>(p.rank());
  std::vector<int> d;
  for (std::size_t j = 1; j <= n; ++j) {
    const auto rows = iota(j, 2 * n);
    d.push_back(static_cast<int>(n - rank(p.rep().select_rows(rows))));
  }
  return d;
}

std::vector<int> opp_flag_profile(const LagrangianPoint& p) {
  const auto n = static_cast<std::size_t>(p.rank());
  std::vector<int> d;
  for (std::size_t j = 1; j <= n; ++j) {
    auto rows = iota(0, n);
    for (std::size_t r = n + j; r < 2 * n; ++r) rows.push_back(r);
    d.push_back(static_cast<int>(n - rank(p.rep().select_rows(rows))));
  }
  return d;
}

namespace {

// Steps of a profile that starts at d(0) = 0. Throws unless every step is 0 or 1.
std::vector<int> profile_steps(const std::vector<int>& d) {
  std::vector<int> steps;
  int prev = 0;
  for (int x : d) {
    const int s = x - prev;
    if (s != 0 && s != 1) {
      throw_invariant("flag intersection profile matches no coset index");
    }
    steps.push_back(s);
    prev = x;
  }
  return steps;
}

}  // namespace

CosetIndex classify_schubert(const LagrangianPoint& p) {
  const auto steps = profile_steps(std_flag_profile(p));
  std::vector<int> k;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == 0) k.push_back(static_cast<int>(j + 1));
  }
  CosetIndex out(std::move(k));
  if (f_invariant(out, p.rank()) != std_flag_profile(p)) {
    throw_invariant("flag intersection profile matches no coset index");
  }
  return out;
}

CosetIndex classify_opposite_schubert(const LagrangianPoint& p) {
  const auto steps = profile_steps(opp_flag_profile(p));
  std::vector<int> k;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == 1) k.push_back(static_cast<int>(j + 1));
  }
  return CosetIndex(std::move(k));
}

StratumSignature classify(const LagrangianPoint& p) {
  const auto kl = classify_double(p);
  return {kl.k, kl.l, classify_schubert(p), classify_opposite_schubert(p)};
}

std::optional<Matrix> chart_matrix(const LagrangianPoint& p) {
  const Matrix a = p.a();
  if (determinant(a) == 0) return std::nullopt;
  return p.c() * inverse(a);
}

CosetIndex cell_index(const LagrangianPoint& p) {
  const auto s = chart_matrix(p);
  if (!s) throw_domain("cell_index: point is not of the form [I; S]");
  if (!is_positive_semidefinite(*s)) throw_domain("cell_index: S is not PSD");
  return ldl(*s).support;
}

LagrangianPoint approach_sequence(int k, int l, int n, int p) {
  check_pair(k, l, n);
  if (p < 1) throw_domain("approach_sequence: p must be positive");
  const auto m = static_cast<std::size_t>(n);
  const Rational eps(1, static_cast<unsigned long>(p));
  const auto uk = static_cast<std::size_t>(k);
  const auto ul = static_cast<std::size_t>(l);
  return LagrangianPoint::from_blocks(leading_diag(m, m - uk) + trailing_diag(m, uk, eps),
                                      trailing_diag(m, ul) + leading_diag(m, m - ul, eps));
}

LagrangianPoint orbit_deformation(int k, int l, int k_limit, int l_limit, int n, int p) {
  check_pair(k, l, n);
  if (!(k <= k_limit && k_limit <= l_limit && l_limit <= l)) {
    throw_domain("orbit_deformation: need k <= k' <= l' <= l");
  }
  if (p < 1) throw_domain("orbit_deformation: p must be positive");
  const auto m = static_cast<std::size_t>(n);
  const Rational eps(1, static_cast<unsigned long>(p));
  Matrix top(m, m), bottom(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto pos = static_cast<int>(i) + 1;
    if (pos <= n - k_limit) {
      top(i, i) = 1;
    } else if (pos <= n - k) {
      top(i, i) = eps;
    }
    if (pos > n - l_limit) {
      bottom(i, i) = 1;
    } else if (pos > n - l) {
      bottom(i, i) = eps;
    }
  }
  return LagrangianPoint::from_blocks(top, bottom);
}

std::vector<Subset> admissible_sets(int n) {
  std::vector<Subset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int j = 1; j <= n; ++j) v.push_back(mask & (1u << (j - 1)) ? j + n : j);
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int plucker_sign(const Subset& key, int n) {
  const auto& e = key.elements();
  auto d = [n](int k) { return k <= n ? k : k - n; };
  int inversions = 0;
  for (std::size_t p = 0; p < e.size(); ++p)
    for (std::size_t q = p + 1; q < e.size(); ++q)
      if (d(e[p]) > d(e[q])) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

PluckerVector plucker(const LagrangianPoint& p) {
  const int n = p.rank();
  PluckerVector v{n, {}};
  const auto cols = iota(0, static_cast<std::size_t>(n));
  for (const auto& key : admissible_sets(n)) {
    std::vector<std::size_t> rows;
    for (int r : key) rows.push_back(static_cast<std::size_t>(r - 1));
    v.coords.emplace(key, plucker_sign(key, n) * minor(p.rep(), rows, cols));
  }
  return v;
}

PluckerClass plucker_sign_class(const PluckerVector& v) {
  int lead = 0;
  for (const auto& [key, x] : v.coords) {
    if (x != 0) {
      lead = sign(x);
      break;
    }
  }
  if (lead == 0) return PluckerClass::kMixed;
  bool strict = true;
  for (const auto& [key, x] : v.coords) {
    const int s = sign(x) * lead;
    if (s < 0) return PluckerClass::kMixed;
    if (s == 0) strict = false;
  }
  return strict ? PluckerClass::kPositive : PluckerClass::kNonnegative;
}

PluckerClass plucker_sign_class(const LagrangianPoint& p) {
  return plucker_sign_class(plucker(p));
}

const char* to_string(PluckerClass c) {
  switch (c) {
    case PluckerClass::kPositive: return "positive";
    case PluckerClass::kNonnegative: return "nonnegative";
    case PluckerClass::kMixed: return "mixed";
  }
  return "?";
}

std::vector<Subset> gs_list(const LagrangianPoint& p) {
  std::vector<Subset> out;
  for (const auto& [key, x] : plucker(p).coords) {
    if (x != 0) out.push_back(key);
  }
  return out;
}

Matrix chart(const LagrangianPoint& p) {
  const Matrix sum = p.a() + p.c();
  if (determinant(sum) == 0) throw_domain("chart: A + C is singular, point outside chart domain");
  return ((p.a() - p.c()) * inverse(sum)).transpose();
}

LagrangianPoint unchart(const Matrix& b) {
  if (!b.is_square()) throw_domain("unchart: chart matrix must be square");
  const Matrix id = Matrix::identity(b.rows());
  const Matrix bt = b.transpose();
  return LagrangianPoint::from_blocks(id + bt, id - bt);
}

Matrix flow_matrix(const Rational& c, int n) {
  if (c <= 0) throw_domain("flow: c must be positive");
  const auto m = static_cast<std::size_t>(n);
  const Rational ch = (c + 1 / c) / 2;
  const Rational sh = (c - 1 / c) / 2;
  Matrix f(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    f(i, i) = ch;
    f(m + i, m + i) = ch;
    f(i, m + i) = sh;
    f(m + i, i) = sh;
  }
  return f;
}

LagrangianPoint flow(const Rational& c, const LagrangianPoint& p) {
  return LagrangianPoint(flow_matrix(c, p.rank()) * p.rep());
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

namespace {

double one_sided_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
  const Eigen::MatrixXd r = x - q * (q.transpose() * x);
  const double scale = x.norm();
  return scale == 0 ? r.norm() : r.norm() / scale;
}

}  // namespace

double span_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return std::max(one_sided_residual(x, y), one_sided_residual(y, x));
}

OrbitWitness orbit_witness(const LagrangianPoint& p, double tolerance) {
  if (!is_theta_nonnegative(p)) throw_domain("orbit_witness: point is not theta-nonnegative");
  const int n = p.rank();
  const auto [k, l] = classify_double(p);
  const auto un = static_cast<std::size_t>(n);
  const Matrix a = p.a();
  const Matrix c = p.c();

  // Coordinates (in the column space of rep) of F ∩ F_n^std, F ∩ F_n^opp,
  // and a complement of their sum.
  const Matrix ker_c = kernel_basis(c);  // n × (n-l)
  const Matrix ker_a = kernel_basis(a);  // n × k
  Matrix span = Matrix::hstack(ker_c, ker_a);
  std::vector<std::size_t> middle_cols;
  for (std::size_t j = 0; j < un && span.cols() < un; ++j) {
    Matrix e(un, 1);
    e(j, 0) = 1;
    Matrix trial = Matrix::hstack(span, e);
    if (rank(trial) == trial.cols()) {
      span = std::move(trial);
      middle_cols.push_back(j);
    }
  }
  const Matrix mid = span.block(0, ker_c.cols() + ker_a.cols(), un, middle_cols.size());

  // Congruence-normalize the middle Gram block: with G = L D Lᵗ, the
  // columns mid·L⁻ᵗ·D^{-1/2} pair to the identity.
  const Matrix mid_gram = (a * mid).transpose() * (c * mid);
  const LdlFactorization f = ldl(mid_gram);
  const std::size_t m = mid.cols();
  if (f.support.size() != m) throw_domain("orbit_witness: middle Gram block is singular");
  Eigen::MatrixXd scale = to_eigen(inverse(f.unit_lower).transpose());
  for (std::size_t j = 0; j < m; ++j) {
    scale.col(static_cast<Eigen::Index>(j)) /= std::sqrt(f.diag[j].get_d());
  }
  const Eigen::MatrixXd mid_f = to_eigen(mid) * scale;

  const Eigen::MatrixXd af = to_eigen(a);
  const Eigen::MatrixXd cf = to_eigen(c);
  const Eigen::Index nn = n;
  const Eigen::Index nl = n - l;
  const Eigen::Index nk = n - k;
  const Eigen::Index mm = static_cast<Eigen::Index>(m);

  // a_1..a_{n-k} (top parts) and c_{n-l+1}..c_n (bottom parts).
  Eigen::MatrixXd g(nn, nn);
  g.leftCols(nl) = af * to_eigen(ker_c);
  g.middleCols(nl, mm) = af * mid_f;
  Eigen::MatrixXd c_last(nn, l);
  c_last.leftCols(mm) = cf * mid_f;
  c_last.rightCols(k) = cf * to_eigen(ker_a);

  // Extend by a_i (i > n-k) with (a_i, c_j) = δ_ij on the last l indices.
  if (k > 0) {
    const Eigen::MatrixXd gram_c = c_last.transpose() * c_last;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(l, k);
    rhs.bottomRows(k) = Eigen::MatrixXd::Identity(k, k);
    g.rightCols(k) = c_last * gram_c.ldlt().solve(rhs);
  }
  // Negating a column of g keeps every column span involved.
  if (g.determinant() < 0) g.col(nn - 1) = -g.col(nn - 1);

  const Eigen::MatrixXd h = g.inverse().transpose();
  Eigen::MatrixXd image = Eigen::MatrixXd::Zero(2 * nn, nn);
  image.topLeftCorner(nn, nk) = g.leftCols(nk);
  image.bottomRightCorner(nn, l) = h.rightCols(l);

  OrbitWitness w{k, l, g, span_residual(image, to_eigen(p.rep()))};
  if (!(w.residual < tolerance)) {
    throw_domain("orbit_witness: residual " + std::to_string(w.residual) +
                 " exceeds tolerance");
  }
  return w;
}

int orbit_dimension(int k, int l, int n) {
  check_pair(k, l, n);
  const auto un = static_cast<std::size_t>(n);
  const Matrix rep = base_point(k, l, n).rep();
  // Rows of wt span the left kernel of rep, identifying ℚ^{2n}/F with ℚ^n.
  const Matrix wt = kernel_basis(rep.transpose()).transpose();
  Matrix jac(un * un, un * un);
  std::size_t row = 0;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j, ++row) {
      Matrix xi(2 * un, 2 * un);
      xi(i, j) = 1;
      xi(un + j, un + i) = -1;
      const Matrix t = wt * xi * rep;
      for (std::size_t a = 0; a < un; ++a)
        for (std::size_t b = 0; b < un; ++b) jac(row, a * un + b) = t(a, b);
    }
  }
  return static_cast<int>(rank(jac));
}

int orbit_dimension_formula(int k, int l, int n) {
  return n * l - l * (l - 1) / 2 - k * (k + 1) / 2;
}

int dim_R_KL(const CosetIndex& k, const CosetIndex& l, int n) {
  if (!bruhat_leq_cosets(k, l, n)) throw_domain("dim_R_KL: w_K is not below w_L");
  return (n + 1) * (static_cast<int>(l.size()) - static_cast<int>(k.size())) + k.sum() - l.sum();
}

}  // namespace thetalgr
