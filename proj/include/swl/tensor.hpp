#pragma once
// The d-fold tensor power of the diagram's box space as a right module over
// the strand algebra, plus its graded (nilpotent) model, the one-box orbit
// operators, the faithfulness padding, and the row-removal comparison maps.
//
// Basis vectors are indexed by multi-indexes of boxes; matrices act on column
// coordinate vectors, and the right action v . (ab) = (v.a).b makes the
// matrix map an anti-homomorphism: mat(ab) = mat(b) * mat(a).

#include <swl/diagram.hpp>
#include <swl/hecke.hpp>
#include <swl/linalg.hpp>
#include <swl/multiindex.hpp>
#include <swl/tableau.hpp>

#include <stdexcept>
#include <vector>

namespace swl {

class TensorSpace {
 public:
  Diagram dg;  // by value: keeps the space self-contained and temporaries safe
  int d;
  Origin origin;
  std::vector<Rat> Q;  // column parameters c_j + q_j - n
  int64_t D;           // N^d

  TensorSpace(const Diagram& dg_, int d_, Origin o)
      : dg(dg_), d(d_), origin(std::move(o)), Q(dg_.column_params(origin)) {
    if (d < 0) throw std::invalid_argument("negative tensor degree");
    D = 1;
    for (int t = 0; t < d; ++t) {
      D *= dg.N;
      if (D > (int64_t{1} << 40)) throw std::invalid_argument("tensor space too large");
    }
  }

  int dim() const { return static_cast<int>(D); }

  int64_t encode(const MIndex& mi) const { return mindex_encode(mi, dg.N); }
  MIndex decode(int64_t idx) const { return mindex_decode(idx, dg.N, d); }

  HeckeAlg algebra() const { return HeckeAlg(d, Q); }

  // ---- generator actions -----------------------------------------------------

  // Place permutation: v_i . w = v_{i.w}.
  SparseMat act_perm(const Perm& w) const {
    SparseMat M(dim(), dim());
    for (int64_t idx = 0; idx < D; ++idx) {
      MIndex mi = decode(idx);
      M.add_to(static_cast<int>(encode(act_place(mi, w))), static_cast<int>(idx), rat(1));
    }
    return M;
  }

  // Polynomial generator in slot j (1-based):
  //   v_i . x_j = v_{L_j(i)}  +  Q_{col(i_j)} v_i
  //             + sum_{k<j, col(i_k) >= col(i_j)} v_{i.(k j)}
  //             - sum_{k>j, col(i_k) <  col(i_j)} v_{i.(j k)}
  // with a missing left neighbour contributing zero.
  SparseMat act_xj(int j) const {
    if (j < 1 || j > d) throw std::invalid_argument("slot out of range");
    SparseMat M(dim(), dim());
    for (int64_t idx = 0; idx < D; ++idx) {
      MIndex mi = decode(idx);
      const int cj = dg.col_of(mi[j - 1]);
      MIndex left = mi;
      if (move_left(dg, left, j - 1))
        M.add_to(static_cast<int>(encode(left)), static_cast<int>(idx), rat(1));
      M.add_to(static_cast<int>(idx), static_cast<int>(idx), Q[cj - 1]);
      for (int k = 1; k <= d; ++k) {
        if (k == j) continue;
        MIndex sw = mi;
        std::swap(sw[k - 1], sw[j - 1]);
        if (k < j && dg.col_of(mi[k - 1]) >= cj)
          M.add_to(static_cast<int>(encode(sw)), static_cast<int>(idx), rat(1));
        else if (k > j && dg.col_of(mi[k - 1]) < cj)
          M.add_to(static_cast<int>(encode(sw)), static_cast<int>(idx), rat(-1));
      }
    }
    return M;
  }

  // Graded model: strictly lowering slot operator v_i -> v_{L_j(i)}.
  SparseMat act_xj_graded(int j) const {
    if (j < 1 || j > d) throw std::invalid_argument("slot out of range");
    SparseMat M(dim(), dim());
    for (int64_t idx = 0; idx < D; ++idx) {
      MIndex left = decode(idx);
      if (move_left(dg, left, j - 1))
        M.add_to(static_cast<int>(encode(left)), static_cast<int>(idx), rat(1));
    }
    return M;
  }

  // ---- whole-element actions ---------------------------------------------------

  // Anti-homomorphism on the strand algebra: mat(ab) = mat(b) mat(a).
  SparseMat act(const HElt& e) const {
    ensure_generator_cache();
    SparseMat M(dim(), dim());
    for (const auto& [m, c] : e) {
      SparseMat term = act_perm(m.w);
      for (int j = d; j >= 1; --j)
        for (int t = 0; t < m.r[j - 1]; ++t) term = term * xj_cache_[j - 1];
      M = M + term.scaled(c);
    }
    return M;
  }

  // Image of a monomial under the graded model (exponents must be < l).
  SparseMat act_graded(const Mono& m) const {
    ensure_generator_cache();
    SparseMat M = act_perm(m.w);
    for (int j = d; j >= 1; --j)
      for (int t = 0; t < m.r[j - 1]; ++t) M = M * xj_graded_cache_[j - 1];
    return M;
  }

  // Filtration degree of a basis vector: sum over slots of (l - col).
  int degree_of(const MIndex& mi) const {
    int s = 0;
    for (int b : mi) s += dg.degree_of(b);
    return s;
  }

  // ---- one-box orbit operators ---------------------------------------------------

  // Operator of one slot pair (a, b): sum of matrix units along the walk-left
  // chain; tensor factors multiply, and the orbit operator sums over all
  // distinct arrangements of the slot multiset.
  SparseMat xi_operator(const std::vector<BoxPair>& slots) const {
    if (static_cast<int>(slots.size()) != d) throw std::invalid_argument("slot arity mismatch");
    SparseMat M(dim(), dim());
    if (d == 0) {
      M.add_to(0, 0, rat(1));
      return M;
    }
    for (const auto& arr : orbit_arrangements(slots)) {
      // chains per slot
      std::vector<std::vector<BoxPair>> chains;
      chains.reserve(d);
      for (const auto& [a, b] : arr) {
        if (dg.col_of(a) > dg.col_of(b)) throw std::invalid_argument("slot pair not col-dominated");
        chains.push_back(dg.walk_left_chain(a, b));
      }
      std::vector<size_t> t(d, 0);
      while (true) {
        MIndex p(d), q(d);
        for (int k = 0; k < d; ++k) {
          p[k] = chains[k][t[k]].first;
          q[k] = chains[k][t[k]].second;
        }
        M.add_to(static_cast<int>(encode(p)), static_cast<int>(encode(q)), rat(1));
        int k = d - 1;
        while (k >= 0 && t[k] + 1 == chains[k].size()) {
          t[k] = 0;
          --k;
        }
        if (k < 0) break;
        ++t[k];
      }
    }
    return M;
  }

 private:
  mutable std::vector<SparseMat> xj_cache_, xj_graded_cache_;
  void ensure_generator_cache() const {
    if (!xj_cache_.empty() || d == 0) return;
    for (int j = 1; j <= d; ++j) {
      xj_cache_.push_back(act_xj(j));
      xj_graded_cache_.push_back(act_xj_graded(j));
    }
  }
};

// Pad the diagram with d extra rows of full length; the column parameters are
// unchanged and the strand algebra acts faithfully on the padded tensor space.
inline Diagram pad_for_faithfulness(const Diagram& dg, int d) {
  std::vector<int> parts = dg.parts;
  for (int t = 0; t < d; ++t) parts.push_back(dg.l);
  return Diagram(parts);
}

// ---- row removal ---------------------------------------------------------------

// Keep the first kept_rows rows (the shortest ones); the quotient diagram has
// level p_{kept_rows} and the origin truncates to its columns.
struct RowRemoval {
  Diagram small;     // kept rows
  Origin small_origin;

  RowRemoval(const Diagram& big, const Origin& o, int kept_rows)
      : small(make_small(big, kept_rows)),
        small_origin(truncate(o, small.l)) {}

  static Diagram make_small(const Diagram& big, int kept_rows) {
    if (kept_rows < 1 || kept_rows > big.n) throw std::invalid_argument("kept row count out of range");
    std::vector<int> parts(big.parts.begin(), big.parts.begin() + kept_rows);
    return Diagram(parts);
  }

  static Origin truncate(const Origin& o, int l) {
    return Origin(std::vector<Rat>(o.c.begin(), o.c.begin() + l));
  }

  // Box of the big diagram at the same (row, col) position.
  static int embed_box(const Diagram& small, const Diagram& big, int box) {
    int b = big.box_at(small.row_of(box), small.col_of(box));
    if (b == 0) throw std::logic_error("row-removal embedding fell outside the diagram");
    return b;
  }

  // Matrix of the injection V_small^{(x)d} -> V_big^{(x)d}, v_i -> v_{i-hat}.
  static SparseMat embedding(const TensorSpace& small_sp, const TensorSpace& big_sp) {
    SparseMat A(big_sp.dim(), small_sp.dim());
    for (int64_t idx = 0; idx < small_sp.D; ++idx) {
      MIndex mi = small_sp.decode(idx);
      MIndex big(mi.size());
      for (size_t k = 0; k < mi.size(); ++k)
        big[k] = embed_box(small_sp.dg, big_sp.dg, mi[k]);
      A.add_to(static_cast<int>(big_sp.encode(big)), static_cast<int>(idx), rat(1));
    }
    return A;
  }
};

}  // namespace swl
