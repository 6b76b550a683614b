#pragma once
// Permutations of {0,..,d-1} in one-line notation: w[k] = image of k.
//
// Composition is function composition, compose(u,v)[k] = u[v[k]], so that the
// right place-action on tuples, (i . w)_k = i[w[k]], satisfies
// (i . u) . v = i . compose(u, v).

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swl {

using Perm = std::vector<int>;

inline Perm perm_identity(int d) {
  Perm w(d);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

inline bool perm_is_identity(const Perm& w) {
  for (int k = 0; k < static_cast<int>(w.size()); ++k)
    if (w[k] != k) return false;
  return true;
}

inline Perm perm_compose(const Perm& u, const Perm& v) {
  assert(u.size() == v.size());
  Perm w(u.size());
  for (size_t k = 0; k < w.size(); ++k) w[k] = u[v[k]];
  return w;
}

inline Perm perm_inverse(const Perm& w) {
  Perm inv(w.size());
  for (int k = 0; k < static_cast<int>(w.size()); ++k) inv[w[k]] = k;
  return inv;
}

// Adjacent transposition swapping i <-> i+1 (0-based slot index i).
inline Perm perm_adjacent(int d, int i) {
  assert(0 <= i && i + 1 < d);
  Perm w = perm_identity(d);
  std::swap(w[i], w[i + 1]);
  return w;
}

inline Perm perm_transposition(int d, int a, int b) {
  Perm w = perm_identity(d);
  std::swap(w[a], w[b]);
  return w;
}

inline int perm_inversions(const Perm& w) {
  int inv = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

inline int perm_sign(const Perm& w) { return perm_inversions(w) % 2 == 0 ? 1 : -1; }

// Reduced word [b_1,...,b_m] of adjacent-transposition indices (0-based) with
// w = s_{b_1} o s_{b_2} o ... o s_{b_m} under perm_compose. Length = inversions.
inline std::vector<int> perm_reduced_word(Perm w) {
  std::vector<int> word;
  const int d = static_cast<int>(w.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < d; ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);  // w <- w o s_i
        word.push_back(i);
        changed = true;
      }
    }
  }
  // w o s_{i_1} o ... o s_{i_m} = id  =>  w = s_{i_m} o ... o s_{i_1}.
  std::reverse(word.begin(), word.end());
  return word;
}

// All permutations of {0,..,d-1} in lexicographic one-line order.
inline std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm w = perm_identity(d);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Right place-action on an arbitrary tuple: result[k] = tup[w[k]].
template <typename T>
inline std::vector<T> act_place(const std::vector<T>& tup, const Perm& w) {
  assert(tup.size() == w.size());
  std::vector<T> out(tup.size());
  for (size_t k = 0; k < tup.size(); ++k) out[k] = tup[w[k]];
  return out;
}

}  // namespace swl
