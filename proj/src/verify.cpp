#include "thetalgr/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <Eigen/Dense>

#include "thetalgr/brute_force.hpp"
#include "thetalgr/error.hpp"
#include "thetalgr/lagrangian.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/sampling.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/weyl.hpp"

namespace thetalgr {

namespace {

class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  // Records one check. The witness is only built for the first failure.
  bool expect(bool ok, const std::string& property, const std::function<Json()>& witness) {
    ++report_.checks;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.failed_property = property;
      report_.counterexample = witness();
    }
    return ok;
  }

  // Runs body and turns a library exception into a failed check.
  void guard(const std::string& property, const std::function<Json()>& witness,
             const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, property + " (threw: " + e.what() + ")", witness);
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

long cases(const VerifyConfig& c, long fallback) { return c.count > 0 ? c.count : fallback; }

std::uint64_t suite_seed(const VerifyConfig& c, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
  return c.seed ^ h;
}

Json point_json(const LagrangianPoint& p) { return to_json(p); }

Json ints(const std::vector<int>& v) { return v; }

// ---------------------------------------------------------------------------

void weyl_suite(const VerifyConfig& cfg, Checker& ck) {
  const int enum_max = std::min(cfg.n, 4);
  for (int n = 1; n <= enum_max; ++n) {
    const WeylTable table(n);
    for (const auto& w : table.elements()) {
      const auto wj = [&] { return Json{{"n", n}, {"w", to_json(w)}}; };
      ck.expect(length(w) == table.depth(w), "length equals BFS depth", wj);
      const Word r = reduced_word(w);
      ck.expect(static_cast<int>(r.size()) == length(w) && word_to_perm(r, n) == w,
                "reduced_word is reduced and spells w", wj);
      const Word rr = reduced_word_right(w);
      ck.expect(static_cast<int>(rr.size()) == length(w) && word_to_perm(rr, n) == w,
                "reduced_word_right is reduced and spells w", wj);
    }
    const SignedPermutation w0 = SignedPermutation::longest(n);
    ck.expect(length(w0) == n * n, "l(w0) = n^2", [&] { return Json{{"n", n}}; });

    for (const auto& k : all_subsets(n)) {
      const auto kj = [&] { return Json{{"n", n}, {"K", to_json(k)}}; };
      const SignedPermutation wk = build_w_K(k, n);
      ck.expect(coset_index_of(wk) == k, "coset_index_of(build_w_K(K)) = K", kj);
      const auto coset = table.left_coset(wk);
      int min_len = 1 << 20;
      int max_len = -1;
      bool same_index = true;
      for (const auto& u : coset) {
        min_len = std::min(min_len, table.depth(u));
        max_len = std::max(max_len, table.depth(u));
        same_index = same_index && coset_index_of(u) == k;
      }
      ck.expect(table.depth(wk) == min_len, "w_K is the minimal coset representative", kj);
      ck.expect(same_index, "coset_index_of is constant on w_K W_J", kj);
      ck.expect(max_length_single(k, n) == max_len, "max_length_single matches enumeration", kj);

      std::vector<int> counted;
      for (int j = 1; j <= n; ++j) {
        int c = 0;
        for (int i = 1; i <= n; ++i) c += (wk(i) >= 1 && wk(i) <= j) ? 1 : 0;
        counted.push_back(c);
      }
      ck.expect(f_invariant(k, n) == counted, "f_K matches the defining count", kj);
      ck.expect(coset_index_of(w0 * wk) == dual_index(k, n), "w0 w_K W_J = w_{K^v} W_J", kj);
    }

    for (int k = 0; k <= n; ++k) {
      const auto kj = [&] { return Json{{"n", n}, {"k", k}}; };
      const SignedPermutation xk = build_x_k(k, n);
      ck.expect(xk == build_w_K(Subset::interval(n - k + 1, n), n),
                "x_k = w_{n-k+1..n}", kj);
      const auto dc = table.double_coset(xk);
      int min_len = 1 << 20;
      int max_len = -1;
      bool same = true;
      for (const auto& u : dc) {
        min_len = std::min(min_len, table.depth(u));
        max_len = std::max(max_len, table.depth(u));
        same = same && double_coset_index(u) == k;
      }
      ck.expect(table.depth(xk) == min_len, "x_k is the minimal double coset representative", kj);
      ck.expect(max_length_double(k, n) == max_len, "max_length_double matches enumeration", kj);
      ck.expect(same, "double_coset_index is constant on W_J x_k W_J", kj);
      ck.expect(double_coset_index(w0 * xk) == n - k, "W_J w0 x_k W_J = W_J x_{n-k} W_J", kj);
    }

    if (n <= 3) {
      const BruhatOracle bruhat(table);
      for (const auto& k : all_subsets(n)) {
        for (const auto& l : all_subsets(n)) {
          ck.expect(bruhat_leq_cosets(k, l, n) == bruhat.leq(build_w_K(k, n), build_w_K(l, n)),
                    "bruhat_leq_cosets agrees with the reflection-chain Bruhat order", [&] {
                      return Json{{"n", n}, {"K", to_json(k)}, {"L", to_json(l)}};
                    });
        }
      }
    }
  }

  for (int n = 1; n <= std::min(cfg.n, 5); ++n) {
    for (const auto& k : all_subsets(n)) {
      const SignedPermutation wk = build_w_K(k, n);
      for (int i = 1; i <= n; ++i) {
        const LeftMultiplication pred = left_multiply(i, k, n);
        const SignedPermutation lhs = SignedPermutation::generator(i, n) * wk;
        const SignedPermutation rhs =
            pred.right_factor == 0 ? build_w_K(pred.k_prime, n)
                                   : wk * SignedPermutation::generator(pred.right_factor, n);
        ck.expect(lhs == rhs, "left multiplication lemma", [&] {
          return Json{{"n", n}, {"K", to_json(k)}, {"i", i}, {"lhs", to_json(lhs)},
                      {"predicted", to_json(rhs)}};
        });
      }
    }
  }

  // Reflection sequences of the words w = ∏ s_{n+1-i}⋯s_{n-1}t and w' (t deleted).
  for (int n = 1; n <= cfg.n; ++n) {
    Word w, wp;
    for (int i = 1; i <= n; ++i) {
      for (int g = n + 1 - i; g <= n; ++g) {
        w.push_back(g);
        if (g != n) wp.push_back(g);
      }
    }
    const auto nj = [&] { return Json{{"n", n}, {"word", ints(w)}}; };
    const auto beta = reflection_sequence(w, n);
    bool ok = beta.size() == static_cast<std::size_t>(n * (n + 1) / 2);
    for (int i = 1; ok && i <= n; ++i) {
      for (int j = 1; j <= i; ++j) {
        Coroot expected(static_cast<std::size_t>(n), 0);
        for (int m = j; m <= n; ++m) expected[static_cast<std::size_t>(m - 1)] = 1;
        if (j < i) {
          for (int m = i; m <= n; ++m) expected[static_cast<std::size_t>(m - 1)] = 2;
        } else {
          std::fill(expected.begin(), expected.end(), 0);
          for (int m = i; m <= n; ++m) expected[static_cast<std::size_t>(m - 1)] = 1;
        }
        ok = ok && beta[static_cast<std::size_t>(i * (i - 1) / 2 + j - 1)] == expected;
      }
    }
    ck.expect(ok, "reflection sequence of w matches the closed form", nj);
    if (n >= 2) {
      const auto gamma = reflection_sequence(wp, n);
      bool gok = gamma.size() == static_cast<std::size_t>(n * (n - 1) / 2);
      for (int i = 1; gok && i <= n - 1; ++i) {
        for (int j = 1; j <= i; ++j) {
          Coroot expected(static_cast<std::size_t>(n), 0);
          for (int m = j; m <= i; ++m) expected[static_cast<std::size_t>(m - 1)] = 1;
          gok = gok && gamma[static_cast<std::size_t>(i * (i - 1) / 2 + j - 1)] == expected;
        }
      }
      ck.expect(gok, "reflection sequence of w' matches the closed form",
                [&] { return Json{{"n", n}, {"word", ints(wp)}}; });
    }
  }
}

void lift_suite(const VerifyConfig& cfg, Checker& ck) {
  for (int n = 1; n <= std::min(cfg.n, 2); ++n) {
    const WeylTable table(n);
    for (const auto& w : table.elements()) {
      const auto words = all_reduced_words(w);
      const SymplecticElement ref = lift_matrix(words.front(), n);
      ck.expect(is_symplectic(ref.matrix()), "lift is symplectic",
                [&] { return Json{{"w", to_json(w)}}; });
      for (const auto& word : words) {
        ck.expect(lift_matrix(word, n) == ref, "lift is independent of the reduced word",
                  [&] { return Json{{"w", to_json(w)}, {"word", ints(word)}}; });
      }
    }
  }
  Rng rng(suite_seed(cfg, "lift"));
  for (int n = 3; n <= cfg.n; ++n) {
    for (long c = 0; c < cases(cfg, 200); ++c) {
      const SignedPermutation w = random_signed_permutation(rng, n);
      const auto wj = [&] { return Json{{"w", to_json(w)}}; };
      const SymplecticElement a = lift_matrix(reduced_word(w), n);
      const SymplecticElement b = lift_matrix(reduced_word_right(w), n);
      ck.expect(is_symplectic(a.matrix()), "lift is symplectic", wj);
      ck.expect(a == b, "lift is independent of the reduced word", wj);
    }
  }
}

void minors_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "minors"));
  for (int n = 1; n <= cfg.n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (long c = 0; c < cases(cfg, 500); ++c) {
      const UStarParams p = random_ustar(rng, n);
      const auto pj = [&] { return to_json(p); };
      const SymplecticElement u = u_star_product(p);
      ck.expect(is_symplectic(u.matrix()), "u* product is symplectic", pj);
      const Matrix cb = u.c();
      bool zero_ok = true;
      for (std::size_t r = 0; r < un; ++r)
        for (std::size_t q = 0; q < un; ++q)
          if (r + q + 2 < un + 1 && cb(r, q) != 0) zero_ok = false;
      ck.expect(zero_ok, "C_{p,q} = 0 for p + q < n + 1", pj);
      ck.expect(u.a() == u_star_levi_part(p).a(), "A block unchanged without y_n factors", pj);
      for (const auto& m : minor_identity_report(p)) {
        ck.expect(m.computed == m.closed_form,
                  std::string("minor identity for ") + to_string(m.kind), [&] {
                    return Json{{"params", to_json(p)}, {"k", m.k},
                                {"computed", to_string(m.computed)},
                                {"closed_form", to_string(m.closed_form)}};
                  });
      }
      ck.expect(theorem_dense_check(p), "A^t C positive definite on U*_{>0}", pj);
    }
  }
}

void factor_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "factor"));
  for (int n = 1; n <= cfg.n; ++n) {
    for (long c = 0; c < cases(cfg, 500); ++c) {
      const SymplecticElement g = random_monoid_element(rng, n);
      const auto gj = [&] { return to_json(g.matrix()); };
      ck.expect(is_in_theta_monoid(g), "sampled monoid element passes the monoid test", gj);
      ck.guard("triple factorization", gj, [&] {
        const ThetaFactorization f = theta_triple_factor(g);
        ck.expect(f.lower * f.levi * f.upper == g, "factors reassemble exactly", gj);
      });
    }
  }
}

Rational plucker_scale(const PluckerVector& a, const PluckerVector& b) {
  for (const auto& [key, x] : a.coords)
    if (x != 0) return b.coords.at(key) / x;
  return 0;
}

void plucker_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "plucker"));
  for (int n = 1; n <= cfg.n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (long c = 0; c < cases(cfg, 1000); ++c) {
      const LagrangianPoint p = sample_any(rng, n);
      const auto pj = [&] { return point_json(p); };
      const PluckerClass pc = plucker_sign_class(p);
      const bool pos = is_theta_positive(p);
      const bool nonneg = is_theta_nonnegative(p);
      ck.expect((pc == PluckerClass::kPositive) == pos, "Plucker positive iff theta-positive", pj);
      ck.expect((pc != PluckerClass::kMixed) == nonneg,
                "Plucker weakly signed iff theta-nonnegative", pj);

      const Matrix g = random_invertible(rng, un, false);
      const LagrangianPoint q = p.reparametrize(g);
      const PluckerVector vp = plucker(p);
      const PluckerVector vq = plucker(q);
      ck.expect(plucker_scale(vp, vq) == determinant(g), "plucker(p g) = det(g) plucker(p)", pj);
      bool scaled = true;
      for (const auto& [key, x] : vp.coords) scaled = scaled && vq.coords.at(key) == determinant(g) * x;
      ck.expect(scaled, "plucker(p g) = det(g) plucker(p) entrywise", pj);
      ck.expect(classify(q) == classify(p), "classification is representative independent", pj);
      ck.expect(plucker_sign_class(q) == pc && is_theta_nonnegative(q) == nonneg &&
                    gs_list(q) == gs_list(p),
                "sign classes are representative independent", pj);
    }
  }
}

void cells_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "cells"));
  for (int n = 1; n <= cfg.n; ++n) {
    const auto subsets = all_subsets(n);
    for (long c = 0; c < cases(cfg, 500); ++c) {
      const CosetIndex k =
          subsets[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(subsets.size()) - 1))];
      const CellSample s = sample_cell(rng, k, n);
      const auto pj = [&] { return Json{{"K", to_json(k)}, {"point", point_json(s.point)}}; };
      ck.guard("cell index", pj, [&] {
        ck.expect(cell_index(s.point) == k, "cell_index recovers the sampled K", pj);
        ck.expect(classify_schubert(s.point) == k, "classify_schubert = cell_index", pj);
        const LdlFactorization f = ldl(gram(s.point));
        ck.expect(f.reconstruct() == gram(s.point) && f.unit_lower == s.unit_lower &&
                      f.diag == s.diag,
                  "LDL reproduces the cell parameters", pj);
        ck.expect(determinant(s.point.a() + s.point.c()) != 0, "A + C invertible on P>=0", pj);
      });
    }
  }
}

void orbits_suite(const VerifyConfig& cfg, Checker& ck) {
  for (int n = 1; n <= cfg.n; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int k = 0; k <= l; ++k) {
        const auto kj = [&] { return Json{{"n", n}, {"k", k}, {"l", l}}; };
        const LagrangianPoint b = base_point(k, l, n);
        ck.expect(classify_double(b) == DoubleCosetPair{k, l}, "classify_double(I_{k,l}) = (k,l)",
                  kj);
        if (n <= 4) {
          ck.expect(orbit_dimension(k, l, n) == orbit_dimension_formula(k, l, n),
                    "orbit dimension matches the closed formula", kj);
        }
      }
    }
    ck.expect(dim_R_KL(Subset{}, Subset::full(n), n) == n * (n + 1) / 2 &&
                  (n > 4 || orbit_dimension(0, n, n) == n * (n + 1) / 2),
              "top stratum has dimension n(n+1)/2", [&] { return Json{{"n", n}}; });
  }

  Rng rng(suite_seed(cfg, "orbits"));
  for (int n = 1; n <= cfg.n; ++n) {
    for (long c = 0; c < cases(cfg, 500); ++c) {
      const int l = static_cast<int>(rng.uniform_int(0, n));
      const int k = static_cast<int>(rng.uniform_int(0, l));
      const LagrangianPoint p = sample_double(rng, k, l, n);
      const auto pj = [&] { return Json{{"k", k}, {"l", l}, {"point", point_json(p)}}; };
      ck.expect(is_theta_nonnegative(p), "orbit samples are theta-nonnegative", pj);
      const StratumSignature s = classify(p);
      ck.expect(s.k == k && s.l == l, "orbit samples classify back to (k,l)", pj);
      ck.expect(static_cast<int>(s.k_plus.size()) == l &&
                    static_cast<int>(s.k_minus.size()) == k &&
                    bruhat_leq_cosets(s.k_minus, s.k_plus, n),
                "Schubert indices are compatible with (k,l)", pj);

      const LagrangianPoint q = sample_any(rng, n);
      const auto g = to_eigen(gram(q));
      const double min_eig =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g, Eigen::EigenvaluesOnly)
              .eigenvalues()
              .minCoeff();
      const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
      if (min_eig < -1e-9 * scale) {
        ck.expect(!is_theta_nonnegative(q), "indefinite Gram is never theta-nonnegative",
                  [&] { return point_json(q); });
      } else if (min_eig > 1e-9 * scale) {
        ck.expect(is_theta_nonnegative(q), "definite Gram is theta-nonnegative",
                  [&] { return point_json(q); });
      }
    }
  }
}

void closure_suite(const VerifyConfig& cfg, Checker& ck) {
  const int nmax = std::min(cfg.n, 3);
  for (int n = 1; n <= nmax; ++n) {
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l; ++k)
        for (int kp = k; kp <= l; ++kp)
          for (int lp = kp; lp <= l; ++lp) {
            const auto qj = [&] {
              return Json{{"n", n}, {"k", k}, {"l", l}, {"k_limit", kp}, {"l_limit", lp}};
            };
            const Matrix limit = base_point(kp, lp, n).rep();
            const Matrix step = orbit_deformation(k, l, kp, lp, n, 1).rep() - limit;
            for (int p = 1; p <= 20; ++p) {
              const LagrangianPoint x = orbit_deformation(k, l, kp, lp, n, p);
              ck.expect(classify_double(x) == DoubleCosetPair{k, l} && is_theta_nonnegative(x),
                        "deformation stays in the nonnegative part of R~_{k,l}", qj);
              ck.expect(x.rep() - limit == step * Rational(1, p),
                        "deformation converges to I_{k',l'} at rate 1/p", qj);
            }
            ck.expect(classify_double(base_point(kp, lp, n)) == DoubleCosetPair{kp, lp},
                      "limit classifies to (k',l')", qj);
          }
  }

  Rng rng(suite_seed(cfg, "closure"));
  for (int n = 1; n <= nmax; ++n) {
    for (const auto& big : all_subsets(n)) {
      for (const auto& small : all_subsets(n)) {
        if (!bruhat_leq_cosets(small, big, n) || dim_R_KL(small, big, n) != 1) continue;
        const auto pj = [&] { return Json{{"n", n}, {"K", to_json(small)}, {"L", to_json(big)}}; };
        const auto un = static_cast<std::size_t>(n);
        // Either K = L \ {i}, or K = L \ {i} ∪ {i+1}.
        int removed = 0;
        int added = 0;
        for (int x : big)
          if (!small.contains(x)) removed = removed == 0 ? x : -1;
        for (int x : small)
          if (!big.contains(x)) added = added == 0 ? x : -1;
        const bool drop = removed > 0 && added == 0;
        const bool shift = removed > 0 && added == removed + 1;
        if (!ck.expect(drop || shift, "covering pair has one of the two shapes", pj)) continue;

        const CellSample s = sample_cell(rng, small, n, true);
        const Matrix limit = gram(s.point);
        const auto ui = static_cast<std::size_t>(removed - 1);
        Matrix first(un, un), second(un, un);
        if (drop) {
          first(ui, ui) = 1;
        } else {
          // A = L·diag(√D); column i+1 moves to column i, with 1/p on the diagonal.
          Matrix col(un, 1);
          const Rational root = [&] {
            const Rational d = s.diag[ui + 1];
            Rational r(Integer(sqrt(d.get_num())), Integer(sqrt(d.get_den())));
            r.canonicalize();
            return r;
          }();
          for (std::size_t r = 0; r < un; ++r) col(r, 0) = s.unit_lower(r, ui + 1) * root;
          Matrix ei(un, 1);
          ei(ui, 0) = 1;
          first = ei * col.transpose() + col * ei.transpose();
          second(ui, ui) = 1;
        }
        for (int p = 1; p <= 20; ++p) {
          const Rational eps(1, p);
          const Matrix sp = limit + first * eps + second * (eps * eps);
          ck.guard("cell degeneration", pj, [&] {
            ck.expect(cell_index(LagrangianPoint::from_chart(sp)) == big,
                      "sequence lies in the larger cell", pj);
          });
        }
        ck.expect(cell_index(s.point) == small, "limit lies in the smaller cell", pj);
      }
    }
  }
}

void flow_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "flow"));
  const std::vector<Rational> cs = {Rational(3, 2), Rational(2), Rational(10)};
  for (int n = 1; n <= cfg.n; ++n) {
    for (long c = 0; c < cases(cfg, 1000); ++c) {
      const LagrangianPoint p = sample_nonnegative(rng, n);
      const auto pj = [&] { return point_json(p); };
      ck.guard("flow", pj, [&] {
        const Matrix b = chart(p);
        ck.expect(b.is_symmetric(), "chart matrix is symmetric", pj);
        ck.expect(equivalent(unchart(b), p), "unchart(chart(p)) = p", pj);
        for (const auto& cv : cs) {
          const LagrangianPoint q = flow(cv, p);
          ck.expect(is_theta_positive(q), "flow with c > 1 lands in P>0", pj);
          const Matrix bq = chart(q);
          ck.expect(bq == b * (1 / (cv * cv)), "chart(flow(c,p)) = c^-2 chart(p)", pj);
          ck.expect(flow(cv, flow(cs[0], p)).rep() == flow(cv * cs[0], p).rep(),
                    "flow(c1, flow(c2, p)) = flow(c1 c2, p)", pj);
          if (!b.is_zero()) {
            ck.expect(bq.frobenius_sq() < b.frobenius_sq(), "flow contracts the chart norm", pj);
          }
        }
      });
    }
  }
}

void witness_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "witness"));
  for (int n = 1; n <= cfg.n; ++n) {
    for (long c = 0; c < cases(cfg, 200); ++c) {
      const LagrangianPoint p = rng.coin() ? sample_nonnegative(rng, n) : [&] {
        const int l = static_cast<int>(rng.uniform_int(0, n));
        return sample_double(rng, static_cast<int>(rng.uniform_int(0, l)), l, n);
      }();
      double residual = -1;
      const auto pj = [&] { return Json{{"point", point_json(p)}, {"residual", residual}}; };
      ck.guard("orbit witness", pj, [&] {
        const OrbitWitness w = orbit_witness(p, 1.0);
        residual = w.residual;
        ck.expect(w.residual < cfg.tolerance && w.g.determinant() > 0,
                  "witness residual below tolerance with det g > 0", pj);
      });
    }
  }
}

void boundary_suite(const VerifyConfig& cfg, Checker& ck) {
  Rng rng(suite_seed(cfg, "boundary"));
  for (int n = 1; n <= cfg.n; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int k = 0; k <= l; ++k) {
        if (k == 0 && l == n) continue;  // interior
        const auto un = static_cast<std::size_t>(n);
        const SymplecticElement h = levi_element(random_invertible(rng, un));
        const LagrangianPoint limit = base_point(k, l, n).transform(h);
        const auto kj = [&] { return Json{{"n", n}, {"k", k}, {"l", l}, {"point", point_json(limit)}}; };
        ck.expect(is_theta_nonnegative(limit) && !is_positive_definite(gram(limit)) &&
                      !is_theta_positive(limit),
                  "sampled point lies on the boundary", kj);
        const Matrix step = approach_sequence(k, l, n, 1).transform(h).rep() - limit.rep();
        for (int p = 1; p <= 20; ++p) {
          const LagrangianPoint x = approach_sequence(k, l, n, p).transform(h);
          ck.expect(is_theta_positive(x), "approach sequence is theta-positive", kj);
          ck.expect(x.rep() - limit.rep() == step * Rational(1, p),
                    "approach sequence converges entrywise at rate 1/p", kj);
        }
      }
    }
  }
}

const std::map<std::string, void (*)(const VerifyConfig&, Checker&)>& registry() {
  static const std::map<std::string, void (*)(const VerifyConfig&, Checker&)> r = {
      {"weyl", weyl_suite},       {"lift", lift_suite},       {"minors", minors_suite},
      {"factor", factor_suite},   {"plucker", plucker_suite}, {"cells", cells_suite},
      {"orbits", orbits_suite},   {"closure", closure_suite}, {"flow", flow_suite},
      {"witness", witness_suite}, {"boundary", boundary_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"weyl",  "lift",    "minors", "factor",
                                                 "plucker", "cells", "orbits", "closure",
                                                 "flow",  "witness", "boundary"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw_domain("unknown suite '" + name + "'");
  if (config.n < 1) throw_domain("verify: n must be at least 1");
  if (!(config.tolerance > 0)) throw_domain("verify: tolerance must be positive");
  Checker ck(name);
  try {
    it->second(config, ck);
  } catch (const Error& e) {
    ck.expect(false, std::string("unexpected error: ") + e.what(), [] { return Json(); });
  }
  return ck.take();
}

Json to_json(const SuiteReport& r) {
  Json j = {{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks}};
  if (!r.passed) {
    j["failed_property"] = r.failed_property;
    j["counterexample"] = r.counterexample;
  }
  return j;
}

}  // namespace thetalgr
