#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "thetalgr/matrix.hpp"
#include "thetalgr/subset.hpp"
#include "thetalgr/symplectic.hpp"

namespace thetalgr {

/// A point of the Lagrangian Grassmannian LG(n, 2n): the column span of a
/// rank-n 2n×n matrix [A; C] with AᵗC = CᵗA. Representatives related by a
/// right GL_n factor describe the same point.
class LagrangianPoint {
 public:
  /// Throws Error(kInvariant) when rep is not 2n×n of rank n or AᵗC is not
  /// symmetric.
  explicit LagrangianPoint(Matrix rep);

  /// [A; C] from the two blocks.
  static LagrangianPoint from_blocks(const Matrix& a, const Matrix& c);
  /// [I; S] for symmetric S.
  static LagrangianPoint from_chart(const Matrix& s);

  int rank() const { return n_; }
  const Matrix& rep() const { return rep_; }
  Matrix a() const;
  Matrix c() const;

  /// The same point with representative rep·g (g invertible).
  LagrangianPoint reparametrize(const Matrix& g) const;
  /// g · point for a symplectic g.
  LagrangianPoint transform(const SymplecticElement& g) const;

  /// Identical representatives (not the same as equivalent()).
  bool operator==(const LagrangianPoint&) const = default;

 private:
  int n_ = 0;
  Matrix rep_;
};

/// Same column span.
bool equivalent(const LagrangianPoint& p, const LagrangianPoint& q);

/// AᵗC of the stored representative.
Matrix gram(const LagrangianPoint& p);

bool is_theta_nonnegative(const LagrangianPoint& p);
bool is_theta_positive(const LagrangianPoint& p);

enum class ThetaClass { kPositive, kNonnegative, kNone };
ThetaClass theta_class(const LagrangianPoint& p);
const char* to_string(ThetaClass c);

/// I_{k,l} = [I⁺_{n-k}; I⁻_l]. Throws Error(kDomain) unless 0 ≤ k ≤ l ≤ n.
LagrangianPoint base_point(int k, int l, int n);

struct DoubleCosetPair {
  int k = 0;  ///< n - rank(A)
  int l = 0;  ///< rank(C)
  bool operator==(const DoubleCosetPair&) const = default;
};

DoubleCosetPair classify_double(const LagrangianPoint& p);

/// j ↦ dim(F ∩ span(e_1..e_j)), j = 1..n.
std::vector<int> std_flag_profile(const LagrangianPoint& p);
/// j ↦ dim(F ∩ span(e_{n+1}..e_{n+j})), j = 1..n.
std::vector<int> opp_flag_profile(const LagrangianPoint& p);

/// The K with f_K equal to the standard-flag profile: the Schubert cell
/// B⁺ẇ_K·P_J⁺ containing p. Throws Error(kInvariant) if no K matches.
CosetIndex classify_schubert(const LagrangianPoint& p);

/// The K with f_{K^∨} equal to the opposite-flag profile: the opposite
/// Schubert cell B⁻ẇ_K·P_J⁺ containing p.
CosetIndex classify_opposite_schubert(const LagrangianPoint& p);

struct StratumSignature {
  int k = 0;
  int l = 0;
  CosetIndex k_plus;
  CosetIndex k_minus;
  bool operator==(const StratumSignature&) const = default;
};

StratumSignature classify(const LagrangianPoint& p);

/// support(ldl(S)) for p = [I; S], S PSD. Throws Error(kDomain) when A is
/// singular or S is not PSD.
CosetIndex cell_index(const LagrangianPoint& p);

/// S = C·A⁻¹ when A is invertible.
std::optional<Matrix> chart_matrix(const LagrangianPoint& p);

/// I_{k,l,p}: top I⁺_{n-k} + (1/p)·I⁻_k, bottom I⁻_l + (1/p)·I⁺_{n-l}.
LagrangianPoint approach_sequence(int k, int l, int n, int p);

/// A point of R̃_{k,l} converging to I_{k',l'} as p → ∞, for
/// k ≤ k' ≤ l' ≤ l: top I_{n-k'} ⊕ (1/p)I_{k'-k} ⊕ 0_k,
/// bottom 0_{n-l} ⊕ (1/p)I_{l-l'} ⊕ I_{l'}.
LagrangianPoint orbit_deformation(int k, int l, int k_limit, int l_limit, int n, int p);

/// Signed maximal minors indexed by admissible n-subsets of {1..2n}.
struct PluckerVector {
  int n = 0;
  std::map<Subset, Rational> coords;  ///< lexicographic key order
};

/// Admissible keys: one index from each pair {j, j+n}.
std::vector<Subset> admissible_sets(int n);
/// (-1)^{#{p<q : d(k_p) > d(k_q)}} with d(k) = k mod n in 1..n.
int plucker_sign(const Subset& key, int n);

PluckerVector plucker(const LagrangianPoint& p);

enum class PluckerClass { kPositive, kNonnegative, kMixed };
PluckerClass plucker_sign_class(const LagrangianPoint& p);
PluckerClass plucker_sign_class(const PluckerVector& v);
const char* to_string(PluckerClass c);

/// Support of the Plücker vector (the Gelfand–Serganova list).
std::vector<Subset> gs_list(const LagrangianPoint& p);

/// B = ((A-C)(A+C)⁻¹)ᵗ. Throws Error(kDomain) if A + C is singular.
Matrix chart(const LagrangianPoint& p);
/// Inverse of chart: [I + Bᵗ; I - Bᵗ].
LagrangianPoint unchart(const Matrix& b);

/// exp(xτ)·p with c = eˣ: left multiplication by
/// [[(c+c⁻¹)/2·I, (c-c⁻¹)/2·I], [(c-c⁻¹)/2·I, (c+c⁻¹)/2·I]].
/// Throws Error(kDomain) for c ≤ 0.
LagrangianPoint flow(const Rational& c, const LagrangianPoint& p);
Matrix flow_matrix(const Rational& c, int n);

/// Result of orbit_witness. g is floating point: the congruence
/// normalization needs square roots.
struct OrbitWitness {
  int k = 0;
  int l = 0;
  Eigen::MatrixXd g;
  double residual = 0;
};

/// Finds g with det g > 0 and diag(g, g⁻ᵗ)·I_{k,l} spanning p, where
/// (k, l) = classify_double(p). The residual is the larger of the two
/// relative least-squares distances between the column spans. Throws
/// Error(kDomain) when p is not theta-nonnegative or the residual exceeds
/// tolerance.
OrbitWitness orbit_witness(const LagrangianPoint& p, double tolerance = 1e-9);

/// Relative residual between the column spans of two 2n×n float matrices.
double span_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

Eigen::MatrixXd to_eigen(const Matrix& m);

/// Rank of the linearized L_J action gl_n → T_{I_{k,l}} LG at the base point.
int orbit_dimension(int k, int l, int n);

/// nl - l(l-1)/2 - k(k+1)/2
int orbit_dimension_formula(int k, int l, int n);

/// (n+1)(#L - #K) + ΣK - ΣL. Throws Error(kDomain) unless w_K ≤ w_L.
int dim_R_KL(const CosetIndex& k, const CosetIndex& l, int n);

}  // namespace thetalgr
