#pragma once
// Multi-indexes (tuples of boxes) and symmetric-group orbit bookkeeping for
// pairs of multi-indexes.

#include <swl/diagram.hpp>
#include <swl/permutation.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swl {

using MIndex = std::vector<int>;  // boxes, 1-based, length d
using BoxPair = std::pair<int, int>;

// Lexicographic rank of a multi-index within {1..N}^d.
inline int64_t mindex_encode(const MIndex& mi, int N) {
  int64_t idx = 0;
  for (int b : mi) idx = idx * N + (b - 1);
  return idx;
}

inline MIndex mindex_decode(int64_t idx, int N, int d) {
  MIndex mi(d);
  for (int k = d - 1; k >= 0; --k) {
    mi[k] = static_cast<int>(idx % N) + 1;
    idx /= N;
  }
  return mi;
}

// All multi-indexes of {1..N}^d in lexicographic (= encoding) order.
inline std::vector<MIndex> all_mindices(int N, int d) {
  std::vector<MIndex> out;
  MIndex mi(d, 1);
  while (true) {
    out.push_back(mi);
    int k = d - 1;
    while (k >= 0 && mi[k] == N) {
      mi[k] = 1;
      --k;
    }
    if (k < 0) break;
    ++mi[k];
  }
  if (d == 0) out.assign(1, MIndex{});
  return out;
}

// Slot-wise left/right moves; slot k is 0-based. Returns false if the
// neighbour is missing.
inline bool move_left(const Diagram& dg, MIndex& mi, int k) {
  int nb = dg.left(mi[k]);
  if (nb == 0) return false;
  mi[k] = nb;
  return true;
}

inline bool move_right(const Diagram& dg, MIndex& mi, int k) {
  int nb = dg.right(mi[k]);
  if (nb == 0) return false;
  mi[k] = nb;
  return true;
}

inline std::vector<int> col_vec(const Diagram& dg, const MIndex& mi) {
  std::vector<int> c(mi.size());
  for (size_t k = 0; k < mi.size(); ++k) c[k] = dg.col_of(mi[k]);
  return c;
}

inline int col_sum(const Diagram& dg, const MIndex& mi) {
  int s = 0;
  for (int b : mi) s += dg.col_of(b);
  return s;
}

// True when col(i_k) <= col(j_k) for every slot.
inline bool col_dominated(const Diagram& dg, const MIndex& i, const MIndex& j) {
  for (size_t k = 0; k < i.size(); ++k)
    if (dg.col_of(i[k]) > dg.col_of(j[k])) return false;
  return true;
}

// ---- simultaneous S_d-orbits of pairs (i, j) -------------------------------
//
// The slot sequence of a pair is ((i_1,j_1),...,(i_d,j_d)); the canonical
// orbit representative is the slot sequence sorted ascending (the
// lexicographically least orbit element in interleaved slot order).

inline std::vector<BoxPair> pair_slots(const MIndex& i, const MIndex& j) {
  std::vector<BoxPair> s(i.size());
  for (size_t k = 0; k < i.size(); ++k) s[k] = {i[k], j[k]};
  return s;
}

inline std::pair<MIndex, MIndex> pair_from_slots(const std::vector<BoxPair>& s) {
  MIndex i(s.size()), j(s.size());
  for (size_t k = 0; k < s.size(); ++k) {
    i[k] = s[k].first;
    j[k] = s[k].second;
  }
  return {i, j};
}

inline std::vector<BoxPair> canon_pair_slots(const MIndex& i, const MIndex& j) {
  auto s = pair_slots(i, j);
  std::sort(s.begin(), s.end());
  return s;
}

// Injective integer key of the canonical representative (fits in int64 for
// the sizes this library is used at; guarded).
inline int64_t pair_orbit_key(const MIndex& i, const MIndex& j, int N) {
  auto s = canon_pair_slots(i, j);
  const int64_t base = static_cast<int64_t>(N + 1) * (N + 1);
  int64_t key = 0;
  for (auto& [a, b] : s) {
    if (key > (INT64_MAX - base) / base) throw std::overflow_error("pair orbit key overflow");
    key = key * base + static_cast<int64_t>(a) * (N + 1) + b;
  }
  return key;
}

// All distinct arrangements (orbit elements) of a slot multiset.
inline std::vector<std::vector<BoxPair>> orbit_arrangements(std::vector<BoxPair> slots) {
  std::sort(slots.begin(), slots.end());
  std::vector<std::vector<BoxPair>> out;
  do {
    out.push_back(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

inline Int orbit_size(const std::vector<BoxPair>& slots) {
  // d! / prod (multiplicities!)
  Int sz = factorial(slots.size());
  size_t k = 0;
  while (k < slots.size()) {
    size_t m = k;
    while (m < slots.size() && slots[m] == slots[k]) ++m;
    sz /= factorial(m - k);
    k = m;
  }
  return sz;
}

// Multisets of size d over an alphabet of given size, as nondecreasing index
// tuples (combinations with repetition), lexicographic order.
inline std::vector<std::vector<int>> multisets(int alphabet, int d) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  if (alphabet == 0) return out;
  std::vector<int> pick(d, 0);
  while (true) {
    out.push_back(pick);
    int k = d - 1;
    while (k >= 0 && pick[k] == alphabet - 1) --k;
    if (k < 0) break;
    ++pick[k];
    for (int m = k + 1; m < d; ++m) pick[m] = pick[k];
  }
  return out;
}

// Canonical representatives of the simultaneous S_d-orbits on d-fold products
// of a pair alphabet (e.g. J^d / S_d), as slot lists sorted ascending.
inline std::vector<std::vector<BoxPair>> pair_orbit_reps(const std::vector<BoxPair>& alphabet,
                                                         int d) {
  std::vector<BoxPair> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<BoxPair>> reps;
  for (const auto& pick : multisets(static_cast<int>(sorted.size()), d)) {
    std::vector<BoxPair> slots;
    slots.reserve(d);
    for (int t : pick) slots.push_back(sorted[t]);
    reps.push_back(std::move(slots));
  }
  return reps;
}

}  // namespace swl
