#pragma once
// Tableaux on a diagram: one rational entry per box. Covers the membership
// classes (integral, column-strict, standard, idempotent, special), the
// swap-down partial order, multiplicity counts against divided-power spaces,
// and classical partition/standard-tableau utilities used by the module layer.

#include <swl/diagram.hpp>
#include <swl/multiindex.hpp>
#include <swl/rational.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace swl {

struct Tableau {
  const Diagram* dg = nullptr;
  std::vector<Rat> e;  // e[b-1] = entry of box b (box reading order)

  Tableau() = default;
  Tableau(const Diagram& d, std::vector<Rat> entries) : dg(&d), e(std::move(entries)) {
    if (static_cast<int>(e.size()) != d.N)
      throw std::invalid_argument("tableau entry count does not match diagram");
  }

  Rat at(int box) const { return e[box - 1]; }

  bool operator==(const Tableau& o) const { return dg == o.dg && e == o.e; }
  bool operator<(const Tableau& o) const { return e < o.e; }

  Tableau operator+(const Tableau& o) const {
    Tableau t = *this;
    for (size_t k = 0; k < e.size(); ++k) t.e[k] += o.e[k];
    return t;
  }
  Tableau operator-(const Tableau& o) const {
    Tableau t = *this;
    for (size_t k = 0; k < e.size(); ++k) t.e[k] -= o.e[k];
    return t;
  }

  // Column reading = entries in box order.
  const std::vector<Rat>& gamma() const { return e; }

  // Content multiset.
  std::vector<Rat> theta() const {
    auto s = e;
    std::sort(s.begin(), s.end());
    return s;
  }
};

// Ground tableau: box in row i gets 1 - i.
inline Tableau ground_tableau(const Diagram& dg) {
  std::vector<Rat> e(dg.N);
  for (int b = 1; b <= dg.N; ++b) e[b - 1] = Rat(1 - dg.row_of(b));
  return Tableau(dg, std::move(e));
}

// Shifted ground tableau: ground + c_j on column j.
inline Tableau shifted_ground_tableau(const Diagram& dg, const Origin& o) {
  Tableau t = ground_tableau(dg);
  for (int b = 1; b <= dg.N; ++b) t.e[b - 1] += o.c[dg.col_of(b) - 1];
  return t;
}

// ---- membership classes ----------------------------------------------------

inline bool is_nonneg_integral(const Tableau& t) {
  for (const Rat& v : t.e)
    if (!is_nonneg_integer(v)) return false;
  return true;
}

inline long entry_sum_int(const Tableau& t) {
  long s = 0;
  for (const Rat& v : t.e) s += to_long(v);
  return s;
}

// Member of Tab^d: nonnegative integer entries summing to d.
inline bool in_tab_d(const Tableau& t, int d) {
  return is_nonneg_integral(t) && entry_sum_int(t) == d;
}

// Column-strict: within each column, entries strictly increase from bottom to
// top through integer steps (equivalently: in box order, top-to-bottom, each
// consecutive difference is a positive integer).
inline bool is_column_strict(const Tableau& t) {
  const Diagram& dg = *t.dg;
  for (int b = 1; b < dg.N; ++b) {
    if (dg.col_of(b) != dg.col_of(b + 1)) continue;  // b+1 is directly below b
    Rat diff = t.at(b) - t.at(b + 1);
    if (!is_integer(diff) || diff <= 0) return false;
  }
  return true;
}

// Column entries lie in c_j + Z for their column.
inline bool columns_match_origin(const Tableau& t, const Origin& o) {
  const Diagram& dg = *t.dg;
  for (int b = 1; b <= dg.N; ++b)
    if (!is_integer(t.at(b) - o.c[dg.col_of(b) - 1])) return false;
  return true;
}

inline bool in_col_c(const Tableau& t, const Origin& o) {
  return is_column_strict(t) && columns_match_origin(t, o);
}

inline bool in_col_c_d(const Tableau& t, const Origin& o, int d) {
  if (!is_column_strict(t)) return false;
  Tableau diff = t - shifted_ground_tableau(*t.dg, o);
  return in_tab_d(diff, d);
}

// Standard: additionally, along each row no earlier entry exceeds a later one
// by a positive integer (rows non-decreasing left-to-right where comparable).
inline bool is_standard(const Tableau& t) {
  if (!is_column_strict(t)) return false;
  const Diagram& dg = *t.dg;
  for (int i = 1; i <= dg.n; ++i) {
    for (int j1 = 1; j1 <= dg.parts[i - 1]; ++j1)
      for (int j2 = j1 + 1; j2 <= dg.parts[i - 1]; ++j2) {
        Rat diff = t.at(dg.box_at(i, j1)) - t.at(dg.box_at(i, j2));
        if (is_integer(diff) && diff > 0) return false;
      }
  }
  return true;
}

inline bool in_std_c_d(const Tableau& t, const Origin& o, int d) {
  return in_col_c_d(t, o, d) && is_standard(t);
}

// Idempotent class: nonnegative integer entries, nonzero only on boxes that
// are rightmost in their row.
inline bool is_idempotent_tableau(const Tableau& t, int d) {
  if (!in_tab_d(t, d)) return false;
  const Diagram& dg = *t.dg;
  for (int b = 1; b <= dg.N; ++b)
    if (t.at(b) != 0 && dg.right(b) != 0) return false;
  return true;
}

// Special class: idempotent, all entries 0/1, nonzero only in the last column.
inline bool is_special_tableau(const Tableau& t, int d) {
  if (!is_idempotent_tableau(t, d)) return false;
  const Diagram& dg = *t.dg;
  for (int b = 1; b <= dg.N; ++b) {
    if (t.at(b) == 0) continue;
    if (t.at(b) != 1 || dg.col_of(b) != dg.l) return false;
  }
  return true;
}

struct TableauClass {
  bool tab_d = false;
  bool col_c = false;
  bool col_c_d = false;
  bool std_c_d = false;
  bool idem = false;
  bool special = false;
};

inline TableauClass classify(const Tableau& t, const Origin& o, int d) {
  TableauClass c;
  c.tab_d = in_tab_d(t, d);
  c.col_c = in_col_c(t, o);
  c.col_c_d = in_col_c_d(t, o, d);
  c.std_c_d = in_std_c_d(t, o, d);
  c.idem = is_idempotent_tableau(t, d);
  c.special = is_special_tableau(t, d);
  return c;
}

// ---- enumerations -----------------------------------------------------------

// All of Tab^d in lexicographic entry order.
inline std::vector<Tableau> enumerate_tab_d(const Diagram& dg, int d) {
  std::vector<Tableau> out;
  std::vector<Rat> e(dg.N, Rat(0));
  // Compositions of d into N parts, lexicographic.
  auto rec = [&](auto&& self, int box, int rest) -> void {
    if (box == dg.N) {
      if (rest == 0) out.push_back(Tableau(dg, e));
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      e[box] = Rat(v);
      self(self, box + 1, rest - v);
      e[box] = Rat(0);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline std::vector<Tableau> enumerate_idem_d(const Diagram& dg, int d) {
  std::vector<Tableau> out;
  for (const auto& t : enumerate_tab_d(dg, d))
    if (is_idempotent_tableau(t, d)) out.push_back(t);
  return out;
}

inline std::vector<Tableau> enumerate_col_c_d(const Diagram& dg, const Origin& o, int d) {
  std::vector<Tableau> out;
  Tableau base = shifted_ground_tableau(dg, o);
  for (const auto& t : enumerate_tab_d(dg, d)) {
    Tableau cand = base + t;
    if (is_column_strict(cand)) out.push_back(cand);
  }
  return out;
}

inline std::vector<Tableau> enumerate_std_c_d(const Diagram& dg, const Origin& o, int d) {
  std::vector<Tableau> out;
  for (const auto& t : enumerate_col_c_d(dg, o, d))
    if (is_standard(t)) out.push_back(t);
  return out;
}

// Multi-index (1^{a_1}, 2^{a_2}, ..., N^{a_N}) of an integral tableau.
inline MIndex index_of_tableau(const Tableau& t) {
  MIndex mi;
  for (int b = 1; b <= t.dg->N; ++b) {
    long a = to_long(t.at(b));
    for (long k = 0; k < a; ++k) mi.push_back(b);
  }
  return mi;
}

// The special tableau with d ones at the bottom of the last column.
inline Tableau special_tableau(const Diagram& dg, int d) {
  if (dg.q[dg.l - 1] < d)
    throw std::invalid_argument("last column too short for a special tableau");
  std::vector<Rat> e(dg.N, Rat(0));
  for (int b = dg.N - d + 1; b <= dg.N; ++b) e[b - 1] = 1;
  return Tableau(dg, std::move(e));
}

// ---- swap-down partial order ------------------------------------------------
//
// One step: swap an entry in some column with a strictly smaller comparable
// entry in a column strictly further right, then re-sort columns. Steps go
// strictly downward; B <= A iff B is reachable from A.

namespace detail {

// State = per-column sorted entry lists.
using ColState = std::vector<std::vector<Rat>>;

inline ColState tableau_col_state(const Tableau& t) {
  const Diagram& dg = *t.dg;
  ColState s(dg.l);
  for (int b = 1; b <= dg.N; ++b) s[dg.col_of(b) - 1].push_back(t.at(b));
  for (auto& col : s) std::sort(col.begin(), col.end());
  return s;
}

inline std::string col_state_key(const ColState& s) {
  std::string k;
  for (const auto& col : s) {
    for (const Rat& v : col) {
      k += rat_str(v);
      k += ',';
    }
    k += '|';
  }
  return k;
}

inline bool col_ok(const std::vector<Rat>& col) {
  for (size_t a = 0; a + 1 < col.size(); ++a) {
    Rat diff = col[a + 1] - col[a];
    if (!is_integer(diff) || diff <= 0) return false;
  }
  return true;
}

}  // namespace detail

// All states reachable downward from t (including t itself), as state keys.
inline std::set<std::string> swap_down_closure(const Tableau& t) {
  using detail::ColState;
  ColState start = detail::tableau_col_state(t);
  std::set<std::string> seen;
  std::deque<ColState> queue;
  seen.insert(detail::col_state_key(start));
  queue.push_back(start);
  while (!queue.empty()) {
    ColState s = queue.front();
    queue.pop_front();
    const int l = static_cast<int>(s.size());
    for (int j1 = 0; j1 < l; ++j1)
      for (int j2 = j1 + 1; j2 < l; ++j2)
        for (size_t a = 0; a < s[j1].size(); ++a)
          for (size_t b = 0; b < s[j2].size(); ++b) {
            Rat diff = s[j1][a] - s[j2][b];
            if (!is_integer(diff) || diff <= 0) continue;  // need smaller entry right
            ColState ns = s;
            std::swap(ns[j1][a], ns[j2][b]);
            std::sort(ns[j1].begin(), ns[j1].end());
            std::sort(ns[j2].begin(), ns[j2].end());
            if (!detail::col_ok(ns[j1]) || !detail::col_ok(ns[j2])) continue;
            std::string key = detail::col_state_key(ns);
            if (seen.insert(key).second) queue.push_back(ns);
          }
  }
  return seen;
}

// B <= A in the swap-down order (memoized per starting state).
inline bool swap_down_leq(const Tableau& B, const Tableau& A) {
  if (B.dg != A.dg) throw std::invalid_argument("order comparison across diagrams");
  if (B.theta() != A.theta()) return false;
  static std::map<std::string, std::set<std::string>> cache;
  std::string akey = detail::col_state_key(detail::tableau_col_state(A));
  auto it = cache.find(akey);
  if (it == cache.end()) it = cache.emplace(akey, swap_down_closure(A)).first;
  return it->second.count(detail::col_state_key(detail::tableau_col_state(B))) > 0;
}

// ---- classical partition utilities ------------------------------------------

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline Partition partition_from_rats(std::vector<Rat> vals) {
  Partition p;
  for (const Rat& v : vals) {
    if (!is_nonneg_integer(v)) throw std::invalid_argument("partition part not a nonnegative integer");
    long x = to_long(v);
    if (x > 0) p.push_back(static_cast<int>(x));
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline Int hook_length_dim(const Partition& p) {
  int m = partition_size(p);
  if (m == 0) return 1;
  std::vector<int> conj(p.empty() ? 0 : p[0], 0);
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) ++conj[c];
  Int num = factorial(m), den = 1;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) den *= (p[r] - c) + (conj[c] - r) - 1;
  return num / den;
}

// Standard tableaux of shape p with entries 1..|p|, rows/columns strictly
// increasing (English orientation). Each tableau is a row-major entry list.
inline std::vector<std::vector<std::vector<int>>> enumerate_syt(const Partition& p) {
  std::vector<std::vector<std::vector<int>>> out;
  int m = partition_size(p);
  std::vector<std::vector<int>> t(p.size());
  for (size_t r = 0; r < p.size(); ++r) t[r].assign(p[r], 0);
  std::vector<int> fill(p.size(), 0);  // next free cell per row
  auto rec = [&](auto&& self, int v) -> void {
    if (v > m) {
      out.push_back(t);
      return;
    }
    for (size_t r = 0; r < p.size(); ++r) {
      int c = fill[r];
      if (c >= p[r]) continue;
      if (r > 0 && fill[r - 1] <= c) continue;  // cell above must be filled
      t[r][c] = v;
      ++fill[r];
      self(self, v + 1);
      --fill[r];
      t[r][c] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// content(cell) = column - row (1-based); per-value content table of a
// standard tableau: content_of[v-1] for entry v.
inline std::vector<int> syt_contents(const std::vector<std::vector<int>>& t, int m) {
  std::vector<int> content(m, 0);
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c) content[t[r][c] - 1] = static_cast<int>(c) - static_cast<int>(r);
  return content;
}

// ---- multiplicity counts and Weyl dimensions ---------------------------------

enum class FillingVariant {
  RowsWeakColsStrict,  // rows weakly increase left-to-right, columns strictly increase downward
  RowsStrictColsWeak,  // transpose convention
};

// Number of multiplicity tuples (T^(1),...,T^(l)) for tableaux A (integral,
// entry a_i on box i) and B (column-strict, B - shifted_ground in Tab^d):
// T^(j) is a filling of the partition whose parts are column j of
// (B - shifted_ground), with entries drawn from {boxes i : col(i) >= j},
// each box i used exactly a_i times across the whole tuple. Entries are
// ordered by box number; the filling discipline is the chosen variant.
inline Int kostka_count(const Tableau& B, const Tableau& A, const Origin& o,
                        FillingVariant variant = FillingVariant::RowsWeakColsStrict) {
  const Diagram& dg = *A.dg;
  Tableau diff = B - shifted_ground_tableau(dg, o);
  if (!is_nonneg_integral(diff))
    throw std::invalid_argument("second tableau is not over the shifted ground tableau");
  // Shapes per column.
  std::vector<Partition> shapes(dg.l);
  for (int j = 1; j <= dg.l; ++j) {
    std::vector<Rat> colvals;
    for (int b = 1; b <= dg.N; ++b)
      if (dg.col_of(b) == j) colvals.push_back(diff.at(b));
    shapes[j - 1] = partition_from_rats(colvals);
  }
  // Remaining budget per box.
  std::vector<int> budget(dg.N + 1, 0);
  for (int b = 1; b <= dg.N; ++b) budget[b] = static_cast<int>(to_long(A.at(b)));

  const bool rows_weak = variant == FillingVariant::RowsWeakColsStrict;

  // Flatten all cells (shape-by-shape, row-major inside each shape) and fill
  // them in one backtracking pass over the shared budget.
  struct Cell {
    int shape, r, c;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<std::vector<int>>> cur(dg.l);
  for (int j = 0; j < dg.l; ++j) {
    cur[j].assign(shapes[j].size(), {});
    for (size_t r = 0; r < shapes[j].size(); ++r) {
      cur[j][r].assign(shapes[j][r], 0);
      for (int c = 0; c < shapes[j][r]; ++c) cells.push_back({j, static_cast<int>(r), c});
    }
  }

  Int total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      for (int b = 1; b <= dg.N; ++b)
        if (budget[b] != 0) return;
      total += 1;
      return;
    }
    const auto [j, r, c] = cells[idx];
    for (int v = 1; v <= dg.N; ++v) {
      if (budget[v] == 0) continue;
      if (dg.col_of(v) < j + 1) continue;  // alphabet: boxes in columns >= j+1 (1-based column)
      if (c > 0) {
        int left = cur[j][r][c - 1];
        if (rows_weak ? v < left : v <= left) continue;
      }
      if (r > 0) {
        int above = cur[j][r - 1][c];
        if (rows_weak ? v <= above : v < above) continue;
      }
      cur[j][r][c] = v;
      --budget[v];
      self(self, idx + 1);
      ++budget[v];
      cur[j][r][c] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

// Product over columns of the Weyl dimension formula applied to the column's
// (B - ground) entries read top-to-bottom (weakly decreasing for
// column-strict B; the formula uses only differences, so column origins
// cancel).
inline Int weyl_dim(const Tableau& B) {
  const Diagram& dg = *B.dg;
  Tableau diff = B - ground_tableau(dg);
  Rat dim(1);
  for (int j = 1; j <= dg.l; ++j) {
    std::vector<Rat> mu;
    for (int b = 1; b <= dg.N; ++b)
      if (dg.col_of(b) == j) mu.push_back(diff.at(b));  // box order = top-to-bottom
    const int m = static_cast<int>(mu.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        dim *= (mu[a] - mu[b] + Rat(b - a)) / Rat(b - a);
  }
  if (!is_integer(dim) || dim <= 0)
    throw std::logic_error("Weyl dimension did not evaluate to a positive integer");
  return dim.get_num();
}

}  // namespace swl
