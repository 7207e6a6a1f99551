#include "thetalgr/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "thetalgr/error.hpp"

namespace thetalgr {

SignedPermutation::SignedPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw_invariant("not a signed permutation of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::generator(int i, int n) {
  if (i < 1 || i > n) throw_domain("generator index out of range");
  auto v = identity(n).image_;
  if (i == n) {
    v[static_cast<std::size_t>(n - 1)] = -n;
  } else {
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::longest(int n) {
  auto v = identity(n).image_;
  for (auto& x : v) x = -x;
  return SignedPermutation(std::move(v));
}

int SignedPermutation::operator()(int i) const {
  const int a = std::abs(i);
  if (a < 1 || a > rank()) throw_domain("signed permutation argument out of range");
  const int v = image_[static_cast<std::size_t>(a - 1)];
  return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const int v = image_[i];
    const int src = static_cast<int>(i) + 1;
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? src : -src;
  }
  return SignedPermutation(std::move(inv));
}

bool SignedPermutation::is_identity() const { return *this == identity(rank()); }

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  return compose(u, v);
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank() != v.rank()) throw_domain("compose: rank mismatch");
  std::vector<int> out(static_cast<std::size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return SignedPermutation(std::move(out));
}

SignedPermutation word_to_perm(const Word& w, int n) {
  SignedPermutation p = SignedPermutation::identity(n);
  for (int g : w) p = p * SignedPermutation::generator(g, n);
  return p;
}

int length(const SignedPermutation& w) {
  // Reverse positions and values so that t becomes the sign change at 1, then
  // use ℓ = inv + neg + nsp for that convention.
  const int n = w.rank();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int x = w(n + 1 - i);
    const int mag = n + 1 - std::abs(x);
    v[static_cast<std::size_t>(i - 1)] = x > 0 ? mag : -mag;
  }
  int len = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) ++len;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++len;
      if (v[i] + v[j] < 0) ++len;
    }
  }
  return len;
}

Word reduced_word(const SignedPermutation& w) {
  const int n = w.rank();
  Word word;
  SignedPermutation cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int g = 1; g <= n; ++g) {
      SignedPermutation next = SignedPermutation::generator(g, n) * cur;
      const int next_len = length(next);
      if (next_len < len) {
        word.push_back(g);
        cur = std::move(next);
        len = next_len;
        break;
      }
    }
  }
  return word;
}

Word reduced_word_right(const SignedPermutation& w) {
  const int n = w.rank();
  Word rev;
  SignedPermutation cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int g = n; g >= 1; --g) {
      SignedPermutation next = cur * SignedPermutation::generator(g, n);
      const int next_len = length(next);
      if (next_len < len) {
        rev.push_back(g);
        cur = std::move(next);
        len = next_len;
        break;
      }
    }
  }
  return Word(rev.rbegin(), rev.rend());
}

bool is_reduced(const Word& w, int n) {
  return length(word_to_perm(w, n)) == static_cast<int>(w.size());
}

SignedPermutation build_w_K(const CosetIndex& k, int n) {
  if (k.max() > n) throw_domain("coset index outside {1..n}");
  Word word;
  const auto& elems = k.elements();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    for (int g = *it; g <= n; ++g) word.push_back(g);
  }
  return word_to_perm(word, n);
}

SignedPermutation build_x_k(int k, int n) {
  if (k < 0 || k > n) throw_domain("double coset index outside 0..n");
  return build_w_K(Subset::interval(n - k + 1, n), n);
}

CosetIndex coset_index_of(const SignedPermutation& w) {
  std::vector<int> k;
  for (int v : w.image()) {
    if (v < 0) k.push_back(-v);
  }
  return Subset(std::move(k));
}

int double_coset_index(const SignedPermutation& w) {
  return static_cast<int>(std::count_if(w.image().begin(), w.image().end(),
                                        [](int v) { return v < 0; }));
}

std::vector<int> f_invariant(const CosetIndex& k, int n) {
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) f[static_cast<std::size_t>(j - 1)] = j - k.count_at_most(j);
  return f;
}

bool bruhat_leq_cosets(const CosetIndex& k, const CosetIndex& l, int n) {
  for (int j = 1; j <= n; ++j) {
    if (k.count_at_most(j) > l.count_at_most(j)) return false;
  }
  return true;
}

CosetIndex dual_index(const CosetIndex& k, int n) { return k.complement(n); }

int max_length_single(const CosetIndex& k, int n) {
  const int size = static_cast<int>(k.size());
  return (n + 1) * size - k.sum() + n * (n - 1) / 2;
}

int max_length_double(int k, int n) {
  return n * (n - 1) / 2 + k * (k + 1) / 2 + n * k - k * k;
}

namespace {

// ⟨α_j^∨, α_i⟩ for the root system C_n (1-based).
int pairing(int j, int i, int n) {
  if (i == j) return 2;
  if (std::abs(i - j) != 1) return 0;
  if (j == n - 1 && i == n) return -2;
  return -1;
}

Coroot reflect(const Coroot& c, int i, int n) {
  int s = 0;
  for (int j = 1; j <= n; ++j) s += c[static_cast<std::size_t>(j - 1)] * pairing(j, i, n);
  Coroot out = c;
  out[static_cast<std::size_t>(i - 1)] -= s;
  return out;
}

}  // namespace

std::vector<Coroot> reflection_sequence(const Word& w, int n) {
  for (int g : w) {
    if (g < 1 || g > n) throw_domain("word letter out of range");
  }
  if (!is_reduced(w, n)) throw_domain("reflection_sequence: word is not reduced");
  std::vector<Coroot> seq;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Coroot c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(w[j] - 1)] = 1;
    for (std::size_t m = j + 1; m < w.size(); ++m) c = reflect(c, w[m], n);
    seq.push_back(std::move(c));
  }
  return seq;
}

SymplecticElement lift_matrix(const Word& reduced, int n) {
  if (!is_reduced(reduced, n)) throw_domain("lift_matrix: word is not reduced");
  SymplecticElement g = SymplecticElement::identity(n);
  for (int letter : reduced) g = g * simple_reflection_lift(letter, n);
  return g;
}

SymplecticElement lift_matrix(const SignedPermutation& w) {
  return lift_matrix(reduced_word(w), w.rank());
}

LeftMultiplication left_multiply(int i, const CosetIndex& k, int n) {
  if (i < 1 || i > n) throw_domain("left_multiply: generator index out of range");
  if (i == n) return {k.contains(n) ? k.without(n) : k.with(n), 0};
  const bool in_i = k.contains(i);
  const bool in_next = k.contains(i + 1);
  if (!in_i && in_next) return {k.without(i + 1).with(i), 0};
  if (in_i && !in_next) return {k.without(i).with(i + 1), 0};
  const int below = k.count_at_most(i - 1);
  return {k, in_i ? n - 1 - below : i - below};
}

}  // namespace thetalgr
