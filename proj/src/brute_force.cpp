#include "thetalgr/brute_force.hpp"

#include <deque>

namespace thetalgr {

WeylTable::WeylTable(int n) : n_(n) {
  std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
  depth_.emplace(queue.front(), 0);
  while (!queue.empty()) {
    const SignedPermutation w = queue.front();
    queue.pop_front();
    elems_.push_back(w);
    for (int i = 1; i <= n; ++i) {
      const SignedPermutation v = w * SignedPermutation::generator(i, n);
      if (depth_.emplace(v, depth_.at(w) + 1).second) queue.push_back(v);
    }
  }
  std::set<SignedPermutation> refl;
  for (const auto& w : elems_) {
    for (int i = 1; i <= n; ++i) refl.insert(w * SignedPermutation::generator(i, n) * w.inverse());
  }
  reflections_.assign(refl.begin(), refl.end());
  for (const auto& w : elems_) {
    bool positive = true;
    for (int x : w.image()) positive = positive && x > 0;
    if (positive) parabolic_.push_back(w);
  }
}

std::vector<SignedPermutation> WeylTable::left_coset(const SignedPermutation& w) const {
  std::vector<SignedPermutation> out;
  for (const auto& u : parabolic_) out.push_back(w * u);
  return out;
}

std::vector<SignedPermutation> WeylTable::double_coset(const SignedPermutation& w) const {
  std::set<SignedPermutation> out;
  for (const auto& u : parabolic_)
    for (const auto& v : parabolic_) out.insert(u * w * v);
  return {out.begin(), out.end()};
}

BruhatOracle::BruhatOracle(const WeylTable& table) {
  const auto& elems = table.elements();
  // Elements are in BFS (length) order, so processing in reverse sees every
  // longer element's up-set before it is needed.
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    std::set<SignedPermutation> up{*it};
    for (const auto& r : table.reflections()) {
      const SignedPermutation v = *it * r;
      if (table.depth(v) > table.depth(*it)) {
        const auto& sub = above_.at(v);
        up.insert(sub.begin(), sub.end());
      }
    }
    above_.emplace(*it, std::move(up));
  }
}

bool BruhatOracle::leq(const SignedPermutation& u, const SignedPermutation& w) const {
  return above_.at(u).contains(w);
}

std::vector<Word> all_reduced_words(const SignedPermutation& w) {
  if (w.is_identity()) return {Word{}};
  const int n = w.rank();
  const int len = length(w);
  std::vector<Word> out;
  for (int i = 1; i <= n; ++i) {
    const SignedPermutation v = w * SignedPermutation::generator(i, n);
    if (length(v) < len) {
      for (Word word : all_reduced_words(v)) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

}  // namespace thetalgr
