#pragma once
// Bottom-justified column diagrams and their box combinatorics.
//
// A diagram is given by row lengths p_1 <= ... <= p_n (rows numbered
// top-to-bottom by increasing length). Column j (1 <= j <= l = p_n) has
// height q_j = #{i : p_i >= j}, occupying the bottom q_j rows. Boxes are
// numbered 1..N down columns, leftmost column first, top-to-bottom within
// each column.

#include <swl/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swl {

// Origin vector attached to the columns; validated so that entries whose
// difference is an integer are equal.
struct Origin {
  std::vector<Rat> c;

  Origin() = default;
  explicit Origin(std::vector<Rat> cc) : c(std::move(cc)) { validate(); }

  static Origin zeros(int l) { return Origin(std::vector<Rat>(l, Rat(0))); }

  void validate() const {
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (c[i] != c[j] && is_integer(c[i] - c[j]))
          throw std::invalid_argument("origin entries " + rat_str(c[i]) + " and " +
                                      rat_str(c[j]) + " differ by a nonzero integer");
  }
};

struct Diagram {
  std::vector<int> parts;           // p_1 <= ... <= p_n, all >= 1
  int n = 0;                        // number of rows
  int l = 0;                        // number of columns = p_n
  int N = 0;                        // number of boxes
  std::vector<int> q;               // q[j-1] = column height, j = 1..l
  std::vector<int> row_of_;         // 1-based box -> row (index 0 unused)
  std::vector<int> col_of_;         // 1-based box -> col
  std::vector<std::vector<int>> box_at_;  // [row][col] -> box or 0

  explicit Diagram(std::vector<int> raw) {
    std::sort(raw.begin(), raw.end());
    for (int p : raw) {
      if (p < 0) throw std::invalid_argument("negative part");
      if (p > 0) parts.push_back(p);
    }
    if (parts.empty()) throw std::invalid_argument("empty diagram");
    n = static_cast<int>(parts.size());
    l = parts.back();
    q.assign(l, 0);
    for (int j = 1; j <= l; ++j)
      for (int p : parts)
        if (p >= j) ++q[j - 1];
    N = 0;
    for (int h : q) N += h;
    row_of_.assign(N + 1, 0);
    col_of_.assign(N + 1, 0);
    box_at_.assign(n + 1, std::vector<int>(l + 1, 0));
    int b = 0;
    for (int j = 1; j <= l; ++j)
      for (int i = n - q[j - 1] + 1; i <= n; ++i) {
        ++b;
        row_of_[b] = i;
        col_of_[b] = j;
        box_at_[i][j] = b;
      }
  }

  int row_of(int box) const { return row_of_[box]; }
  int col_of(int box) const { return col_of_[box]; }
  int box_at(int row, int col) const {
    if (row < 1 || row > n || col < 1 || col > l) return 0;
    return box_at_[row][col];
  }

  // Horizontal neighbours; 0 means none.
  int left(int box) const {
    int c = col_of_[box];
    return c > 1 ? box_at_[row_of_[box]][c - 1] : 0;
  }
  int right(int box) const {
    int r = row_of_[box], c = col_of_[box];
    return c < parts[r - 1] ? box_at_[r][c + 1] : 0;
  }

  // t-fold left neighbour (t >= 0); requires existence.
  int left_pow(int box, int t) const {
    for (; t > 0; --t) {
      box = left(box);
      if (box == 0) throw std::logic_error("left walk fell off the diagram");
    }
    return box;
  }

  // Row shift: p_j - p_i for i <= j, else 0 (1-based row indices).
  int shift(int i, int j) const { return i <= j ? parts[j - 1] - parts[i - 1] : 0; }

  // Pairs (a, b) of boxes with col(a) <= col(b) and b rightmost in its row.
  std::vector<std::pair<int, int>> J_pairs() const {
    std::vector<std::pair<int, int>> J;
    for (int b = 1; b <= N; ++b) {
      if (right(b) != 0) continue;
      for (int a = 1; a <= N; ++a)
        if (col_of_[a] <= col_of_[b]) J.emplace_back(a, b);
    }
    std::sort(J.begin(), J.end());
    return J;
  }

  struct Triple {
    int i, j, r;
    auto operator<=>(const Triple&) const = default;
  };

  // Triples (i, j, r) with 1 <= i,j <= n and shift(i,j) <= r < p_j.
  std::vector<Triple> K_triples() const {
    std::vector<Triple> K;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = shift(i, j); r < parts[j - 1]; ++r) K.push_back({i, j, r});
    std::sort(K.begin(), K.end());
    return K;
  }

  // Box-pair (a,b) in J -> row/row/column-offset triple in K.
  Triple pair_to_triple(int a, int b) const {
    return {row_of_[a], row_of_[b], col_of_[b] - col_of_[a]};
  }

  // Inverse of pair_to_triple: (i, j, r) -> (a, b) with b rightmost in row j.
  std::pair<int, int> triple_to_pair(const Triple& t) const {
    int b = box_at_[t.j][parts[t.j - 1]];
    int a = box_at_[t.i][parts[t.j - 1] - t.r];
    if (a == 0 || b == 0) throw std::invalid_argument("triple outside index set");
    return {a, b};
  }

  // Entries of the one-box operator attached to a pair (a, b) with
  // col(a) <= col(b): the walk-left chain {(L^t a, L^t b) : 0 <= t < col(a)}.
  std::vector<std::pair<int, int>> walk_left_chain(int a, int b) const {
    std::vector<std::pair<int, int>> entries;
    int ca = col_of_[a];
    for (int t = 0; t < ca; ++t) entries.emplace_back(left_pow(a, t), left_pow(b, t));
    return entries;
  }

  // Column parameters Q_j = c_j + q_j - n.
  std::vector<Rat> column_params(const Origin& o) const {
    if (static_cast<int>(o.c.size()) != l)
      throw std::invalid_argument("origin length does not match column count");
    std::vector<Rat> Q(l);
    for (int j = 0; j < l; ++j) Q[j] = o.c[j] + Rat(q[j] - n);
    return Q;
  }

  // dim of the span of basis vectors living in columns <= j (1-based j).
  int column_prefix_dim(int j) const {
    int s = 0;
    for (int t = 0; t < j; ++t) s += q[t];
    return s;
  }

  // Degree of the basis vector at a box: l - col(box).
  int degree_of(int box) const { return l - col_of_[box]; }
};

}  // namespace swl
