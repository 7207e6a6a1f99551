#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "thetalgr/matrix.hpp"

namespace thetalgr {

/// Ω = [[0, I_n], [-I_n, 0]]
Matrix omega(int n);

/// MᵗΩM = Ω for a 2n×2n matrix.
bool is_symplectic(const Matrix& m);

/// A 2n×2n rational matrix preserving Ω. Construction checks the invariant
/// and throws Error(kInvariant) otherwise.
class SymplecticElement {
 public:
  explicit SymplecticElement(Matrix m);
  static SymplecticElement identity(int n);

  int rank() const { return n_; }
  const Matrix& matrix() const { return m_; }

  Matrix a() const { return m_.block(0, 0, n_, n_); }
  Matrix b() const { return m_.block(0, n_, n_, n_); }
  Matrix c() const { return m_.block(n_, 0, n_, n_); }
  Matrix d() const { return m_.block(n_, n_, n_, n_); }

  SymplecticElement inverse() const;

  friend SymplecticElement operator*(const SymplecticElement& x, const SymplecticElement& y);
  bool operator==(const SymplecticElement&) const = default;

 private:
  struct Trusted {};
  SymplecticElement(Matrix m, int n, Trusted) : n_(n), m_(std::move(m)) {}

  int n_ = 0;
  Matrix m_;
};

// The Chevalley generator e_i for i < n must be E(i,i+1) - E(n+i+1,n+i)
// (1-based) for exp(a·e_i) to be symplectic; this is the form whose
// transpose gives y_1(b) = I + b(E(2,1) - E(3,4)) at n = 2.
inline constexpr std::string_view kChevalleyGeneratorConvention =
    "e_i = E(i,i+1) - E(n+i+1,n+i) for 1 <= i < n; e_n = E(n,2n); f_i = e_i^t";

/// The nilpotent generator e_i (1 ≤ i ≤ n) as a 2n×2n matrix.
Matrix chevalley_e(int i, int n);

/// exp(X) for nilpotent X, summed exactly until the powers vanish.
/// Throws Error(kDomain) if X is not nilpotent.
Matrix nilpotent_exp(const Matrix& x);

/// x_i(a) = exp(a·e_i)
SymplecticElement gen_x(int i, const Rational& a, int n);
/// y_i(a) = exp(a·f_i) = x_i(a)ᵗ
SymplecticElement gen_y(int i, const Rational& a, int n);

/// ṡ_i = x_i(-1) y_i(1) x_i(-1)
SymplecticElement simple_reflection_lift(int i, int n);

/// diag(a_1..a_n, a_1⁻¹..a_n⁻¹). Throws Error(kDomain) on a zero entry.
SymplecticElement torus(std::span<const Rational> diag);

/// diag(A, A⁻ᵗ) for invertible A.
SymplecticElement levi_element(const Matrix& a);
/// [[I, 0], [C, I]] for symmetric C.
SymplecticElement lower_unipotent(const Matrix& c);
/// [[I, B], [0, I]] for symmetric B.
SymplecticElement upper_unipotent(const Matrix& b);

/// D invertible and CDᵗ, DᵗB positive semidefinite.
bool is_in_theta_monoid(const SymplecticElement& g);

struct ThetaFactorization {
  SymplecticElement lower;  ///< [[I,0],[CA⁻¹,I]]
  SymplecticElement levi;   ///< diag(A, A⁻ᵗ)
  SymplecticElement upper;  ///< [[I,A⁻¹B],[0,I]]
};

/// The A-anchored factorization g = u⁻ · ℓ · u⁺ of a theta-nonnegative
/// monoid element. Throws Error(kDomain) if A is singular, det A ≤ 0, or a
/// unipotent factor is not PSD.
ThetaFactorization theta_triple_factor(const SymplecticElement& g);

/// Parameters a_{p,q} of the product
///   ∏_{q=1..n} y_{n+1-q}(a_{n+1-q,q}) y_{n+2-q}(a_{n+2-q,q}) ⋯ y_n(a_{n,q}).
class UStarParams {
 public:
  using Key = std::pair<int, int>;  // (p, q)

  UStarParams() = default;
  explicit UStarParams(int n) : n_(n) {}
  UStarParams(int n, std::map<Key, Rational> values) : n_(n), a_(std::move(values)) {}

  /// The (p, q) index pattern in product order.
  static std::vector<Key> pattern(int n);

  int rank() const { return n_; }
  const std::map<Key, Rational>& values() const { return a_; }
  void set(int p, int q, const Rational& v) { a_[{p, q}] = v; }
  /// Throws Error(kDomain) if the entry is missing.
  const Rational& at(int p, int q) const;
  bool complete() const;

 private:
  int n_ = 0;
  std::map<Key, Rational> a_;
};

/// The full product. Throws Error(kDomain) on incomplete parameters.
SymplecticElement u_star_product(const UStarParams& p);

/// The same product with every y_n factor deleted.
SymplecticElement u_star_levi_part(const UStarParams& p);

struct MinorIdentity {
  enum class Kind { kC, kA, kGram };
  Kind kind;
  int k;
  Rational computed;
  Rational closed_form;
};

const char* to_string(MinorIdentity::Kind kind);

/// For k = 1..n: the minors Δ_{{n-k+1..n},{1..k}}(C), Δ_{{n-k+1..n},{1..k}}(A)
/// and Δ_{{1..k},{1..k}}(AᵗC) of u_star_product(p), each beside its
/// closed-form product of parameters.
std::vector<MinorIdentity> minor_identity_report(const UStarParams& p);

/// Whether AᵗC of u_star_product(p) is positive definite.
/// Requires a_{n,q} > 0 for all q and every other a_{p,q} ≠ 0; throws
/// Error(kDomain) otherwise.
bool theorem_dense_check(const UStarParams& p);

}  // namespace thetalgr
