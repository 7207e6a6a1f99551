#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "thetalgr/error.hpp"
#include "thetalgr/linalg.hpp"
#include "thetalgr/sampling.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/weyl.hpp"

using namespace thetalgr;

namespace {

SignedPermutation sp(std::vector<int> v) { return SignedPermutation(std::move(v)); }
SignedPermutation from_oracle(const oracle::Perm& p) { return SignedPermutation(p); }

}  // namespace

TEST_CASE("signed permutation invariants") {
  CHECK_THROWS_AS(sp({1, 1}), Error);
  CHECK_THROWS_AS(sp({1, 3}), Error);
  CHECK_THROWS_AS(sp({0, 2}), Error);
  CHECK_THROWS_AS(compose(SignedPermutation::identity(2), SignedPermutation::identity(3)), Error);
}

TEST_CASE("compose and word_to_perm") {
  const auto t3 = SignedPermutation::generator(3, 3);
  const auto s2 = SignedPermutation::generator(2, 3);
  CHECK(compose(t3, t3).is_identity());
  CHECK(compose(s2, t3) == sp({1, 3, -2}));
  CHECK(compose(s2, t3).image() == oracle::compose(s2.image(), t3.image()));
  CHECK(word_to_perm({}, 4).is_identity());
  CHECK(word_to_perm({2, 3}, 3) == sp({1, 3, -2}));
  CHECK(word_to_perm({2, 1, 2}, 2) == from_oracle(oracle::from_word({2, 1, 2}, 2)));
}

TEST_CASE("length") {
  CHECK(length(SignedPermutation::identity(3)) == 0);
  CHECK(length(SignedPermutation::generator(2, 2)) == 1);
  CHECK(length(SignedPermutation::longest(2)) == 4);
  const oracle::Group g(2);
  int longest = 0;
  for (const auto& w : g.elems) longest = std::max(longest, g.length(w));
  CHECK(longest == 4);
}

TEST_CASE("coset representatives") {
  CHECK(build_w_K({}, 3).is_identity());
  CHECK(build_w_K({2}, 3) == sp({1, 3, -2}));
  CHECK(build_x_k(0, 3).is_identity());
  CHECK(build_x_k(1, 3) == SignedPermutation::generator(3, 3));
  CHECK(build_x_k(2, 2) == build_w_K({1, 2}, 2));
  CHECK(coset_index_of(build_w_K({1, 2}, 2)) == Subset{1, 2});
  CHECK(coset_index_of(SignedPermutation::identity(3)).empty());
  CHECK(coset_index_of(sp({1, 3, -2})) == Subset{2});
  for (int n = 1; n <= 5; ++n) CHECK(coset_index_of(SignedPermutation::generator(n, n)) == Subset{n});
  CHECK_THROWS_AS(build_w_K({4}, 3), Error);
}

TEST_CASE("f invariant, duality, Bruhat criterion") {
  CHECK(f_invariant({}, 3) == std::vector<int>{1, 2, 3});
  CHECK(f_invariant({2}, 3) == std::vector<int>{1, 1, 2});
  CHECK(f_invariant({1, 2}, 2) == std::vector<int>{0, 0});
  CHECK(f_invariant(Subset::full(4), 4) == std::vector<int>{0, 0, 0, 0});
  CHECK(dual_index({}, 3) == Subset{1, 2, 3});
  CHECK(dual_index({2}, 3) == Subset{1, 3});
  CHECK(coset_index_of(SignedPermutation::longest(3) * build_w_K({2}, 3)) == Subset{1, 3});
  CHECK(bruhat_leq_cosets({}, {2}, 3));
  CHECK(bruhat_leq_cosets({3}, {1}, 3));
  CHECK_FALSE(bruhat_leq_cosets({1}, {3}, 3));
}

TEST_CASE("maximal lengths") {
  CHECK(max_length_single({}, 2) == 1);
  CHECK(max_length_single({1}, 2) == 3);
  for (int n = 1; n <= 5; ++n) {
    CHECK(max_length_single(Subset::full(n), n) == n * n);
    CHECK(max_length_double(0, n) == n * (n - 1) / 2);
    CHECK(max_length_double(n, n) == n * n);
  }
  CHECK(max_length_double(1, 2) == 3);
}

TEST_CASE("reflection sequences") {
  CHECK(reflection_sequence({2}, 2) == std::vector<Coroot>{{0, 1}});
  CHECK(reflection_sequence({2, 1, 2}, 2) == std::vector<Coroot>{{1, 1}, {1, 2}, {0, 1}});
  // Word ∏ s_{n+1-i}⋯s_{n-1}t at n = 3; β at i(i+1)/2 is α_i + ... + α_n.
  const Word w{3, 2, 3, 1, 2, 3};
  const auto beta = reflection_sequence(w, 3);
  CHECK(beta[0] == Coroot{1, 1, 1});
  CHECK(beta[2] == Coroot{0, 1, 1});
  CHECK(beta[5] == Coroot{0, 0, 1});
  CHECK_THROWS_AS(reflection_sequence({1, 1}, 2), Error);
}

TEST_CASE("lifts") {
  CHECK(lift_matrix(SignedPermutation::identity(2)).matrix() == Matrix::identity(4));
  CHECK(lift_matrix(Word{1}, 1).matrix() == Matrix{{0, -1}, {1, 0}});
  const Matrix expected = gen_x(1, -1, 2).matrix() * gen_y(1, 1, 2).matrix() * gen_x(1, -1, 2).matrix();
  CHECK(lift_matrix(Word{1}, 2).matrix() == expected);
  CHECK_THROWS_AS(lift_matrix(Word{2, 2}, 2), Error);
}

TEST_CASE("property: round trips and defining counts, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : all_subsets(n)) {
      const auto wk = build_w_K(k, n);
      CHECK(coset_index_of(wk) == k);
      std::vector<int> counted;
      for (int j = 1; j <= n; ++j) {
        int c = 0;
        for (int i = 1; i <= n; ++i) c += wk(i) >= 1 && wk(i) <= j;
        counted.push_back(c);
      }
      CHECK(f_invariant(k, n) == counted);
    }
  }
}

TEST_CASE("property: lengths and reduced words against BFS, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const oracle::Group g(n);
    CHECK(g.elems.size() == static_cast<std::size_t>((1 << n) * (n == 4 ? 24 : n == 3 ? 6 : n)));
    for (const auto& p : g.elems) {
      const auto w = from_oracle(p);
      CHECK(length(w) == g.length(p));
      CHECK(word_to_perm(reduced_word(w), n) == w);
      CHECK(is_reduced(reduced_word_right(w), n));
      CHECK(word_to_perm(reduced_word_right(w), n) == w);
    }
  }
}

TEST_CASE("property: left multiplication lemma, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& k : all_subsets(n)) {
      const auto wk = build_w_K(k, n);
      for (int i = 1; i <= n; ++i) {
        const auto pred = left_multiply(i, k, n);
        const auto lhs = oracle::compose(oracle::gen(i, n), wk.image());
        if (pred.right_factor == 0) {
          CHECK(lhs == build_w_K(pred.k_prime, n).image());
        } else {
          CHECK(lhs == oracle::compose(wk.image(), oracle::gen(pred.right_factor, n)));
        }
      }
    }
  }
}

TEST_CASE("property: Bruhat order on cosets against subword criterion, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::Group g(n);
    for (const auto& k : all_subsets(n))
      for (const auto& l : all_subsets(n)) {
        CAPTURE(k.to_string());
        CAPTURE(l.to_string());
        CHECK(bruhat_leq_cosets(k, l, n) ==
              g.bruhat_leq(build_w_K(k, n).image(), build_w_K(l, n).image()));
      }
  }
}

TEST_CASE("property: reflection sequence against the euclidean action") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    const auto w = random_signed_permutation(rng, n);
    const Word word = reduced_word(w);
    const auto seq = reflection_sequence(word, n);
    CHECK(seq == oracle::reflection_sequence(word, n));
    // Positive and pairwise distinct.
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (int c : seq[i]) CHECK(c >= 0);
      for (std::size_t j = 0; j < i; ++j) CHECK(seq[i] != seq[j]);
    }
  }
}

TEST_CASE("property: lifts are symplectic and word independent") {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform_int(1, 4));
    const auto w = random_signed_permutation(rng, n);
    const auto a = lift_matrix(reduced_word(w), n);
    CHECK(oracle::symplectic(oracle::from(a.matrix())));
    CHECK(a == lift_matrix(reduced_word_right(w), n));
  }
}

TEST_CASE("property: dual double coset, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(double_coset_index(SignedPermutation::longest(n) * build_x_k(k, n)) == n - k);
}
