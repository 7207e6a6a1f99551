#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace thetalgr {

/// A finite set of positive integers, stored sorted and without repeats.
///
/// Used for coset indices K ⊆ {1..n}, for the support of an LDL
/// factorization and for Plücker keys ı ⊆ {1..2n}. Elements are 1-based,
/// matching the combinatorics they index.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<int> elems);
  explicit Subset(std::vector<int> elems);

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static Subset interval(int lo, int hi);
  static Subset full(int n) { return interval(1, n); }

  bool contains(int x) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  /// #(K ∩ {1..j})
  int count_at_most(int j) const;

  /// {1..n} \ K
  Subset complement(int n) const;

  int sum() const;
  int max() const { return elems_.empty() ? 0 : elems_.back(); }

  Subset with(int x) const;
  Subset without(int x) const;

  const std::vector<int>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// "1,3,4"; the empty set renders as "".
  std::string to_string() const;
  static Subset parse(const std::string& text);

  auto operator<=>(const Subset&) const = default;
  bool operator==(const Subset&) const = default;

 private:
  std::vector<int> elems_;
};

/// All subsets of {1..n} in a fixed order (by bitmask).
std::vector<Subset> all_subsets(int n);

using CosetIndex = Subset;

}  // namespace thetalgr
