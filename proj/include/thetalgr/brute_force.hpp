#pragma once

#include <map>
#include <set>
#include <vector>

#include "thetalgr/weyl.hpp"

namespace thetalgr {

/// W(B_n) enumerated breadth-first from the identity under right
/// multiplication by generators. The BFS depth of an element is its length,
/// independently of the inversion formula used by length().
class WeylTable {
 public:
  explicit WeylTable(int n);

  int rank() const { return n_; }
  const std::vector<SignedPermutation>& elements() const { return elems_; }
  int depth(const SignedPermutation& w) const { return depth_.at(w); }

  /// All reflections w s_i w⁻¹.
  const std::vector<SignedPermutation>& reflections() const { return reflections_; }

  /// The left coset w W_J and the double coset W_J w W_J.
  std::vector<SignedPermutation> left_coset(const SignedPermutation& w) const;
  std::vector<SignedPermutation> double_coset(const SignedPermutation& w) const;

 private:
  int n_;
  std::vector<SignedPermutation> elems_;
  std::map<SignedPermutation, int> depth_;
  std::vector<SignedPermutation> reflections_;
  std::vector<SignedPermutation> parabolic_;
};

/// Bruhat order as the transitive closure of u → u·r with r a reflection
/// and ℓ(u·r) > ℓ(u).
class BruhatOracle {
 public:
  explicit BruhatOracle(const WeylTable& table);
  bool leq(const SignedPermutation& u, const SignedPermutation& w) const;

 private:
  std::map<SignedPermutation, std::set<SignedPermutation>> above_;
};

/// Every reduced word of w.
std::vector<Word> all_reduced_words(const SignedPermutation& w);

}  // namespace thetalgr
