// Acceptance suite: one PASS/FAIL line per criterion. Counts, tolerances and
// time budgets are pinned below; exit status is nonzero if any line fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oracle.hpp"
#include "thetalgr/error.hpp"
#include "thetalgr/lagrangian.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/sampling.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/verify.hpp"
#include "thetalgr/weyl.hpp"

using namespace thetalgr;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kWitnessTolerance = 1e-9;
constexpr long kMinorSets = 500;
constexpr long kDenseSets = 500;
constexpr long kPluckerPoints = 1000;
constexpr long kChartSamples = 500;
constexpr long kFlowPoints = 1000;
constexpr long kWitnessInstances = 200;
constexpr long kLiftRandom = 200;

struct Outcome {
  bool ok = true;
  long checks = 0;
  std::string note;  // first failure, or a summary

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

// ---------------------------------------------------------------------------

oracle::Mat y_matrix(int i, const Rational& a, int n) {
  const auto size = static_cast<std::size_t>(2 * n);
  auto m = oracle::identity(size);
  const auto ui = static_cast<std::size_t>(i);
  const auto un = static_cast<std::size_t>(n);
  if (i < n) {
    m[ui][ui - 1] += a;
    m[un + ui - 1][un + ui] -= a;
  } else {
    m[2 * un - 1][un - 1] += a;
  }
  return m;
}

oracle::Mat ustar_oracle(const UStarParams& p) {
  const int n = p.rank();
  auto m = oracle::identity(static_cast<std::size_t>(2 * n));
  for (int q = 1; q <= n; ++q)
    for (int r = n + 1 - q; r <= n; ++r) m = oracle::mul(m, y_matrix(r, p.at(r, q), n));
  return m;
}

oracle::Mat block(const oracle::Mat& m, std::size_t r0, std::size_t c0, std::size_t n) {
  oracle::Mat b(n, std::vector<oracle::Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = m[r0 + i][c0 + j];
  return b;
}

Rational closed_c(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int q = 1; q <= k; ++q) r *= p.at(n, q);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= k && k < i; ++j) r *= p.at(n - i + j, i);
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j < i; ++j) r *= p.at(n - i + j, i) * p.at(n - i + j, i);
  return r;
}

Rational closed_a(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= k && k < i; ++j) r *= p.at(n - i + j, i);
  return r;
}

Rational closed_gram(const UStarParams& p, int k) {
  const int n = p.rank();
  Rational r = 1;
  for (int q = 1; q <= k; ++q) r *= p.at(n, q);
  for (int i = 2; i <= n; ++i)
    for (int q = n + 1 - i; q <= n - 1; ++q)
      if (q + i <= n + k) r *= p.at(q, i) * p.at(q, i);
  return r;
}

// Theta class from brute-force principal minors: 0 positive, 1 nonnegative, 2 none.
int oracle_theta(const LagrangianPoint& p) {
  const auto a = oracle::from(p.a());
  const auto g = oracle::mul(oracle::transpose(a), oracle::from(p.c()));
  if (oracle::det(a) != 0 && oracle::pd(g)) return 0;
  return oracle::psd(g) ? 1 : 2;
}

// Plücker class from cofactor minors: 0 strict sign, 1 weak sign, 2 mixed.
int oracle_plucker(const LagrangianPoint& p) {
  const int n = p.rank();
  const auto rep = oracle::from(p.rep());
  std::vector<std::size_t> cols;
  for (int j = 0; j < n; ++j) cols.push_back(static_cast<std::size_t>(j));
  int pos = 0, neg = 0, zero = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> key;
    for (int j = 1; j <= n; ++j) key.push_back(mask & (1u << (j - 1)) ? j + n : j);
    std::sort(key.begin(), key.end());
    std::vector<std::size_t> rows;
    int inv = 0;
    for (std::size_t a = 0; a < key.size(); ++a) {
      rows.push_back(static_cast<std::size_t>(key[a] - 1));
      for (std::size_t b = a + 1; b < key.size(); ++b) {
        const int da = (key[a] - 1) % n, db = (key[b] - 1) % n;
        if (da > db) ++inv;
      }
    }
    oracle::Q x = oracle::minor(rep, rows, cols);
    if (inv % 2) x = -x;
    (x > 0 ? pos : x < 0 ? neg : zero)++;
  }
  if (pos > 0 && neg > 0) return 2;
  return zero > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------

Outcome criterion_weyl() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const oracle::Group g(n);
    std::vector<oracle::Perm> parabolic;
    for (const auto& w : g.elems)
      if (g.in_parabolic(w)) parabolic.push_back(w);

    for (const auto& k : all_subsets(n)) {
      const auto wk = build_w_K(k, n).image();
      const std::string tag = "n=" + std::to_string(n) + " K={" + k.to_string() + "}";
      int min_len = 1 << 20, max_len = -1, at_min = 0;
      for (const auto& u : parabolic) {
        const int len = g.length(oracle::compose(wk, u));
        if (len < min_len) {
          min_len = len;
          at_min = 0;
        }
        if (len == min_len) ++at_min;
        max_len = std::max(max_len, len);
      }
      o.expect(g.length(wk) == min_len && at_min == 1, "w_K not the unique minimum: " + tag);
      o.expect(max_length_single(k, n) == max_len, "max_length_single: " + tag);
      std::vector<int> counted;
      for (int j = 1; j <= n; ++j) {
        int c = 0;
        for (int x : wk) c += x >= 1 && x <= j;
        counted.push_back(c);
      }
      o.expect(f_invariant(k, n) == counted, "f_invariant: " + tag);
      for (const auto& l : all_subsets(n)) {
        o.expect(bruhat_leq_cosets(k, l, n) == g.bruhat_leq(wk, build_w_K(l, n).image()),
                 "Bruhat order: " + tag + " L={" + l.to_string() + "}");
      }
    }
    for (int k = 0; k <= n; ++k) {
      const auto xk = build_x_k(k, n).image();
      std::set<oracle::Perm> dc;
      for (const auto& u : parabolic)
        for (const auto& v : parabolic) dc.insert(oracle::compose(oracle::compose(u, xk), v));
      int min_len = 1 << 20, max_len = -1, at_min = 0;
      for (const auto& w : dc) {
        const int len = g.length(w);
        if (len < min_len) {
          min_len = len;
          at_min = 0;
        }
        if (len == min_len) ++at_min;
        max_len = std::max(max_len, len);
      }
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.expect(g.length(xk) == min_len && at_min == 1, "x_k not the unique minimum: " + tag);
      o.expect(max_length_double(k, n) == max_len, "max_length_double: " + tag);
      o.expect(build_x_k(k, n) == build_w_K(Subset::interval(n - k + 1, n), n), "x_k = w_K: " + tag);
    }
  }
  return o;
}

Outcome criterion_lift() {
  Outcome o;
  {
    const int n = 2;
    const oracle::Group g(n);
    for (const auto& w : g.elems) {
      const int len = g.length(w);
      std::vector<Word> words;
      std::vector<int> digits(static_cast<std::size_t>(len), 1);
      // Every word of length ℓ(w) over {1, 2} that spells w.
      for (int code = 0; code < (1 << len); ++code) {
        Word word;
        for (int b = 0; b < len; ++b) word.push_back((code >> b & 1) + 1);
        if (oracle::from_word(word, n) == w) words.push_back(word);
      }
      const Matrix ref = lift_matrix(words.front(), n).matrix();
      o.expect(oracle::symplectic(oracle::from(ref)), "lift not symplectic at n=2");
      for (const auto& word : words) {
        o.expect(lift_matrix(word, n).matrix() == ref, "lift depends on the reduced word at n=2");
      }
    }
  }
  Rng rng(kSeed + 2);
  for (int n = 3; n <= 4; ++n) {
    const oracle::Group g(n);
    for (long t = 0; t < kLiftRandom; ++t) {
      const auto& w = g.elems[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<long>(g.elems.size()) - 1))];
      const Word bfs = g.word.at(w);
      const Matrix a = lift_matrix(bfs, n).matrix();
      o.expect(oracle::symplectic(oracle::from(a)), "lift not symplectic");
      o.expect(a == lift_matrix(reduced_word(SignedPermutation(w)), n).matrix(),
               "lift depends on the reduced word at n=" + std::to_string(n));
      o.expect(a == lift_matrix(reduced_word_right(SignedPermutation(w)), n).matrix(),
               "lift depends on the reduced word at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion_minors() {
  Outcome o;
  Rng rng(kSeed + 3);
  for (int n = 2; n <= 5; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (long t = 0; t < kMinorSets; ++t) {
      UStarParams p(n);
      for (const auto& [a, b] : UStarParams::pattern(n)) p.set(a, b, rng.nonzero_rational());
      const auto u = ustar_oracle(p);
      const auto a = block(u, 0, 0, un);
      const auto c = block(u, un, 0, un);
      const auto g = oracle::mul(oracle::transpose(a), c);
      for (int k = 1; k <= n; ++k) {
        std::vector<std::size_t> low, lead;
        for (int i = 0; i < k; ++i) {
          low.push_back(un - static_cast<std::size_t>(k) + static_cast<std::size_t>(i));
          lead.push_back(static_cast<std::size_t>(i));
        }
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        o.expect(oracle::minor(c, low, lead) == closed_c(p, k), "C minor: " + tag);
        o.expect(oracle::minor(a, low, lead) == closed_a(p, k), "A minor: " + tag);
        o.expect(oracle::minor(g, lead, lead) == closed_gram(p, k), "Gram minor: " + tag);
      }
      for (const auto& m : minor_identity_report(p)) {
        o.expect(m.computed == m.closed_form, "library report mismatch at n=" + std::to_string(n));
      }
      o.expect(oracle::from(u_star_product(p).matrix()) == u, "library product differs");
    }
  }
  return o;
}

Outcome criterion_dense() {
  Outcome o;
  Rng rng(kSeed + 4);
  for (int n = 2; n <= 5; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (long t = 0; t < kDenseSets; ++t) {
      const UStarParams p = random_ustar(rng, n);
      const auto u = ustar_oracle(p);
      const auto g = oracle::mul(oracle::transpose(block(u, 0, 0, un)), block(u, un, 0, un));
      o.expect(oracle::pd(g), "A^t C not positive definite at n=" + std::to_string(n));
      o.expect(theorem_dense_check(p), "library dense check false at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion_plucker() {
  Outcome o;
  Rng rng(kSeed + 5);
  long inside = 0, outside = 0;
  for (int n = 1; n <= 4; ++n) {
    for (long t = 0; t < kPluckerPoints; ++t) {
      const auto p = sample_any(rng, n);
      const int theta = oracle_theta(p);
      const int plk = oracle_plucker(p);
      (theta == 2 ? outside : inside)++;
      const std::string tag = "n=" + std::to_string(n);
      o.expect(theta == plk, "Plucker class differs from theta class: " + tag);
      o.expect(static_cast<int>(plucker_sign_class(p)) == plk, "library Plucker class: " + tag);
      o.expect(static_cast<int>(theta_class(p)) == theta, "library theta class: " + tag);
    }
  }
  o.expect(inside >= 1000 && outside >= 1000, "sample does not cover both sides of P>=0");
  if (o.ok) o.note = std::to_string(inside) + " inside / " + std::to_string(outside) + " outside";
  return o;
}

Outcome criterion_cells_orbits() {
  Outcome o;
  Rng rng(kSeed + 6);
  for (int n = 1; n <= 5; ++n) {
    const auto subsets = all_subsets(n);
    for (long t = 0; t < kChartSamples; ++t) {
      const auto& k =
          subsets[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(subsets.size()) - 1))];
      const auto s = sample_cell(rng, k, n);
      const auto ci = cell_index(s.point);
      o.expect(ci == k && classify_schubert(s.point) == ci,
               "classify_schubert != cell_index at n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l; ++k)
        o.expect(classify_double(base_point(k, l, n)) == DoubleCosetPair{k, l},
                 "classify_double(I_{k,l}) wrong");
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l; ++k)
        o.expect(orbit_dimension(k, l, n) == n * l - l * (l - 1) / 2 - k * (k + 1) / 2,
                 "orbit dimension at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " l=" + std::to_string(l));
  return o;
}

// Rank as the largest size of a nonzero minor.
int oracle_rank(const oracle::Mat& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(std::popcount(rm)) != r) continue;
      for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(std::popcount(cm)) != r) continue;
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < rows; ++i)
          if (rm >> i & 1) ri.push_back(i);
        for (std::size_t j = 0; j < cols; ++j)
          if (cm >> j & 1) ci.push_back(j);
        if (oracle::minor(m, ri, ci) != 0) return static_cast<int>(r);
      }
    }
  }
  return 0;
}

Outcome criterion_closure() {
  Outcome o;
  VerifyConfig cfg;
  cfg.n = 3;
  cfg.seed = kSeed + 7;
  const SuiteReport r = run_suite("closure", cfg);
  o.checks = r.checks;
  o.expect(r.passed, r.failed_property + " " + r.counterexample.dump());
  // On the nonnegative part the pair (k, l) is read off as (n - rank A, rank C).
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l; ++k)
        for (int kp = k; kp <= l; ++kp)
          for (int lp = kp; lp <= l; ++lp)
            for (int p = 1; p <= 20; ++p) {
              const auto x = orbit_deformation(k, l, kp, lp, n, p);
              const std::string tag = "n=" + std::to_string(n) + " (" + std::to_string(k) + "," +
                                      std::to_string(l) + ")->(" + std::to_string(kp) + "," +
                                      std::to_string(lp) + ") p=" + std::to_string(p);
              o.expect(oracle_theta(x) != 2, "deformation leaves P>=0: " + tag);
              o.expect(n - oracle_rank(oracle::from(x.a())) == k &&
                           oracle_rank(oracle::from(x.c())) == l,
                       "deformation rank profile: " + tag);
            }
  return o;
}

Outcome criterion_flow() {
  Outcome o;
  Rng rng(kSeed + 8);
  const std::vector<Rational> cs = {Rational(3, 2), Rational(2), Rational(10)};
  for (int n = 1; n <= 4; ++n) {
    for (long t = 0; t < kFlowPoints; ++t) {
      const auto p = sample_nonnegative(rng, n);
      const Matrix b = chart(p);
      for (const auto& c : cs) {
        const auto q = flow(c, p);
        const std::string tag = "n=" + std::to_string(n) + " c=" + to_string(c);
        o.expect(oracle_theta(q) == 0, "flow image not theta-positive: " + tag);
        const Matrix bq = chart(q);
        o.expect(bq == b * (Rational(1) / (c * c)), "chart conjugacy: " + tag);
        for (const auto& c2 : cs)
          o.expect(flow(c, flow(c2, p)).rep() == flow(c * c2, p).rep(), "semigroup law: " + tag);
        if (!b.is_zero()) o.expect(bq.frobenius_sq() < b.frobenius_sq(), "contraction: " + tag);
      }
    }
  }
  return o;
}

// ‖(I - P_y) Q_x‖₂ with orthonormal bases from an SVD.
double principal_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> sx(x, Eigen::ComputeThinU);
  const Eigen::JacobiSVD<Eigen::MatrixXd> sy(y, Eigen::ComputeThinU);
  const Eigen::MatrixXd qx = sx.matrixU();
  const Eigen::MatrixXd qy = sy.matrixU();
  const Eigen::MatrixXd r = qx - qy * (qy.transpose() * qx);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(r).singularValues()(0);
}

Outcome criterion_witness() {
  Outcome o;
  Rng rng(kSeed + 9);
  double worst = 0;
  double worst_independent = 0;
  for (int n = 1; n <= 4; ++n) {
    for (long t = 0; t < kWitnessInstances; ++t) {
      const int l = static_cast<int>(rng.uniform_int(0, n));
      const int k = static_cast<int>(rng.uniform_int(0, l));
      const auto p = sample_double(rng, k, l, n);
      try {
        const OrbitWitness w = orbit_witness(p, 1.0);
        worst = std::max(worst, w.residual);
        const auto un = static_cast<Eigen::Index>(n);
        const Eigen::MatrixXd base = to_eigen(base_point(k, l, n).rep());
        Eigen::MatrixXd image(2 * un, un);
        image.topRows(un) = w.g * base.topRows(un);
        image.bottomRows(un) = w.g.inverse().transpose() * base.bottomRows(un);
        const double ind = principal_residual(image, to_eigen(p.rep()));
        worst_independent = std::max(worst_independent, ind);
        std::ostringstream tag;
        tag << "n=" << n << " k=" << k << " l=" << l << " residual=" << w.residual
            << " independent=" << ind;
        o.expect(w.k == k && w.l == l && w.g.determinant() > 0, "witness stratum/orientation: " + tag.str());
        o.expect(w.residual < kWitnessTolerance && ind < kWitnessTolerance, "residual: " + tag.str());
      } catch (const Error& e) {
        o.expect(false, std::string("witness failed: ") + e.what());
      }
    }
  }
  if (o.ok) {
    std::ostringstream s;
    s << "max residual " << worst << ", independent " << worst_independent;
    o.note = s.str();
  }
  return o;
}

Outcome criterion_boundary() {
  Outcome o;
  Rng rng(kSeed + 10);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int k = 0; k <= l; ++k) {
        if (k == 0 && l == n) continue;
        const auto un = static_cast<std::size_t>(n);
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                " l=" + std::to_string(l);
        for (int variant = 0; variant < 2; ++variant) {
          // The base point itself, then a transported copy.
          const SymplecticElement h = variant == 0 ? SymplecticElement::identity(n)
                                                   : levi_element(random_invertible(rng, un));
          const auto limit = base_point(k, l, n).transform(h);
          o.expect(oracle_theta(limit) == 1, "not a boundary point: " + tag);
          const Matrix step = approach_sequence(k, l, n, 1).transform(h).rep() - limit.rep();
          for (int p = 1; p <= 20; ++p) {
            const auto x = approach_sequence(k, l, n, p).transform(h);
            o.expect(oracle_theta(x) == 0, "member not theta-positive: " + tag);
            o.expect(x.rep() - limit.rep() == step * Rational(1, p), "no 1/p convergence: " + tag);
          }
        }
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Weyl oracle concordance (n=2,3, exact)", 10, criterion_weyl},
      {2, "lift well-definedness (n=2 exhaustive, 200 random at n=3,4)", 30, criterion_lift},
      {3, "closed-form minor identities (500 sets, n=2..5)", 60, criterion_minors},
      {4, "dense theorem: A^tC positive definite (500 sets, n=2..5)", 60, criterion_dense},
      {5, "Plucker sign class = theta class (1000 points, n=1..4)", 60, criterion_plucker},
      {6, "orbit/cell coherence and orbit dimensions", 60, criterion_cells_orbits},
      {7, "closure suites (deformations, covering pairs, n<=3)", 30, criterion_closure},
      {8, "flow suite (1000 points, n<=4, c in {3/2,2,10})", 60, criterion_flow},
      {9, "orbit witness residual < 1e-9 (200 round trips, n<=4)", 30, criterion_witness},
      {10, "closure of P>0: approach sequences (all base points, n<=4)", 10, criterion_boundary},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("uncaught: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %s [%ld checks, %.2fs / %.0fs budget]%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.checks, secs, c.budget_seconds,
                o.note.empty() ? "" : " ", o.note.c_str());
    if (!in_time) std::printf("     over time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
