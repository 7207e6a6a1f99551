#pragma once

#include <compare>
#include <vector>

#include "thetalgr/subset.hpp"
#include "thetalgr/symplectic.hpp"

namespace thetalgr {

/// An element of the Weyl group W(B_n) = W(C_n), as a signed permutation.
///
/// image()[i-1] = w(i) ∈ {±1..±n}; w(-i) = -w(i) is implied.
/// Products act right to left: (u * v)(i) = u(v(i)).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws Error(kInvariant) unless |image| is a permutation of {1..n}.
  explicit SignedPermutation(std::vector<int> image);

  static SignedPermutation identity(int n);
  /// s_i = (i, i+1) for 1 ≤ i < n; s_n = t flips the sign of n.
  static SignedPermutation generator(int i, int n);
  /// w₀ = -id, the longest element.
  static SignedPermutation longest(int n);

  int rank() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }

  /// w(i) for i ∈ {±1..±n}.
  int operator()(int i) const;

  SignedPermutation inverse() const;
  bool is_identity() const;

  friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);
  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Generator indices 1..n; index n stands for t.
using Word = std::vector<int>;

/// (u ∘ v)(i) = u(v(i)). Throws Error(kDomain) on rank mismatch.
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

/// g_1 g_2 ⋯ g_k for the word (g_1, ..., g_k).
SignedPermutation word_to_perm(const Word& w, int n);

/// Coxeter length, by the type-B inversion count.
int length(const SignedPermutation& w);

/// A reduced word, obtained by repeatedly stripping the smallest left descent.
Word reduced_word(const SignedPermutation& w);

/// A reduced word built from right descents instead; generally differs from
/// reduced_word(w), which makes it useful for well-definedness checks.
Word reduced_word_right(const SignedPermutation& w);

bool is_reduced(const Word& w, int n);

/// w_K = ∏_{k ∈ K, decreasing} s_k s_{k+1} ⋯ s_{n-1} t
SignedPermutation build_w_K(const CosetIndex& k, int n);

/// x_k = w_{{n-k+1, ..., n}}, the minimal double-coset representative.
SignedPermutation build_x_k(int k, int n);

/// K = { k : w(i) = -k for some i > 0 }; identifies the coset w W_J.
CosetIndex coset_index_of(const SignedPermutation& w);

/// The double coset W_J w W_J is W_J x_k W_J with k = #{ i > 0 : w(i) < 0 }.
int double_coset_index(const SignedPermutation& w);

/// f_K(j) = j - #K_{≤j}, j = 1..n.
std::vector<int> f_invariant(const CosetIndex& k, int n);

/// w_K ≤ w_L in Bruhat order, by #K_{≤j} ≤ #L_{≤j} for all j.
bool bruhat_leq_cosets(const CosetIndex& k, const CosetIndex& l, int n);

/// K^∨ = {1..n} \ K
CosetIndex dual_index(const CosetIndex& k, int n);

/// Length of the longest element of w_K W_J.
int max_length_single(const CosetIndex& k, int n);

/// Length of the longest element of W_J x_k W_J.
int max_length_double(int k, int n);

/// Predicted form of g·w_K for a generator g = s_i (t when i = n):
/// either another minimal representative w_{K'} (right_factor == 0), or
/// w_K·s_j with j = right_factor.
struct LeftMultiplication {
  CosetIndex k_prime;
  int right_factor = 0;
};

/// Case analysis of s_i·w_K. When i, i+1 ∈ K the index is
/// j = n-1-#(K ∩ {1..i-1}); when i, i+1 ∉ K it is j = i - #(K ∩ {1..i-1}).
LeftMultiplication left_multiply(int i, const CosetIndex& k, int n);

/// Coroot as integer coefficients over α₁^∨..α_n^∨.
using Coroot = std::vector<int>;

/// For a reduced word (i_1..i_m): β_j = s_{i_m} ⋯ s_{i_{j+1}} · α_{i_j}^∨, in
/// the coroot system of type B_n (α_n^∨ short). Throws Error(kDomain) on a
/// non-reduced word.
std::vector<Coroot> reflection_sequence(const Word& w, int n);

/// ẇ as a product of the ṡ_i along a reduced word.
SymplecticElement lift_matrix(const Word& reduced, int n);
SymplecticElement lift_matrix(const SignedPermutation& w);

}  // namespace thetalgr
