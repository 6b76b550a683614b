#pragma once
// The centralizer algebra of the strand action on tensor space, handled at
// the level of place-permutation orbits: every operator commuting with the
// action is constant on orbits of index pairs, so it is stored as a sparse
// vector over canonical pair-multiset keys.  This keeps the linear algebra in
// orbit coordinates instead of full matrix coordinates.

#include <swl/linalg.hpp>
#include <swl/multiindex.hpp>
#include <swl/tableau.hpp>
#include <swl/tensor.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swl {

// Dimension of the centralizer: multisets of d elements from the pair set J.
inline Int schur_dimension(const Diagram& dg, int d) {
  return binomial(static_cast<long>(dg.J_pairs().size()) + d - 1, d);
}

inline std::vector<std::vector<BoxPair>> xi_seeds(const Diagram& dg, int d) {
  return pair_orbit_reps(dg.J_pairs(), d);
}

// ---- triangular basis solver -------------------------------------------------

// Coefficient table of the unique equivariant operator commuting with the
// strand action whose value is 1 on a chosen orbit of rightmost-column pairs
// and 0 on every other such orbit.  Values on the remaining orbits are forced
// by a right-neighbour recursion that terminates because the column sum of the
// second index strictly increases.
class XiSolver {
 public:
  XiSolver(Diagram dg, int d, std::vector<Rat> Q, std::vector<BoxPair> seed)
      : dg_(std::move(dg)), d_(d), Q_(std::move(Q)), seed_(std::move(seed)) {
    std::sort(seed_.begin(), seed_.end());
  }

  Rat coefficient(std::vector<BoxPair> slots) {
    for (auto [a, b] : slots)
      if (dg_.col_of(a) > dg_.col_of(b)) return rat(0);  // domination is forced
    std::sort(slots.begin(), slots.end());
    auto it = memo_.find(slots);
    if (it != memo_.end()) return it->second;
    Rat val = compute(slots);
    memo_.emplace(std::move(slots), val);
    return val;
  }

 private:
  Diagram dg_;
  int d_;
  std::vector<Rat> Q_;
  std::vector<BoxPair> seed_;
  std::map<std::vector<BoxPair>, Rat> memo_;

  Rat compute(const std::vector<BoxPair>& slots) {
    int k = -1;
    for (int t = 0; t < d_; ++t)
      if (dg_.right(slots[t].second) != 0) {
        k = t;
        break;
      }
    if (k < 0) return slots == seed_ ? rat(1) : rat(0);
    const auto [ik, jk] = slots[k];
    const int jk2 = dg_.right(jk);
    Rat acc(0);
    if (int ik2 = dg_.right(ik); ik2 != 0) {
      auto s2 = slots;
      s2[k] = {ik2, jk2};
      acc += coefficient(std::move(s2));
    }
    {
      auto s2 = slots;
      s2[k] = {ik, jk2};
      Rat coef = Q_[dg_.col_of(ik) - 1] - Q_[dg_.col_of(jk2) - 1];
      acc += coef * coefficient(std::move(s2));
    }
    for (int h = 0; h < d_; ++h) {
      if (h == k) continue;
      const auto [ih, jh] = slots[h];
      bool plus = dg_.col_of(ih) <= dg_.col_of(ik) && dg_.col_of(jh) <= dg_.col_of(jk);
      bool minus = dg_.col_of(ih) > dg_.col_of(ik) && dg_.col_of(jh) > dg_.col_of(jk);
      if (!plus && !minus) continue;
      auto s2 = slots;
      s2[h] = {ik, jh};
      s2[k] = {ih, jk2};
      Rat term = coefficient(std::move(s2));
      acc += plus ? term : -term;
    }
    return acc;
  }
};

// ---- graded structure constants -----------------------------------------------

// Product expansion of two orbit operators in the graded model:
// entries compose slot by slot in (row, row, column shift) form, and each
// resulting arrangement class is divided by its orbit size.
inline std::map<std::vector<BoxPair>, Rat> graded_structure_constants(
    const Diagram& dg, const std::vector<BoxPair>& alpha, const std::vector<BoxPair>& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("arity mismatch");
  const int d = static_cast<int>(alpha.size());
  std::map<std::vector<BoxPair>, Int> total;
  for (const auto& x : orbit_arrangements(alpha)) {
    std::vector<Diagram::Triple> xt(d);
    for (int t = 0; t < d; ++t) xt[t] = dg.pair_to_triple(x[t].first, x[t].second);
    for (const auto& y : orbit_arrangements(beta)) {
      std::vector<BoxPair> z(d);
      bool ok = true;
      for (int t = 0; t < d && ok; ++t) {
        Diagram::Triple yt = dg.pair_to_triple(y[t].first, y[t].second);
        if (xt[t].j != yt.i) {
          ok = false;
          break;
        }
        Diagram::Triple zt{xt[t].i, yt.j, xt[t].r + yt.r};
        if (zt.r >= dg.parts[zt.j - 1]) {
          ok = false;  // walked past the left edge: composite vanishes
          break;
        }
        z[t] = dg.triple_to_pair(zt);
      }
      if (!ok) continue;
      std::sort(z.begin(), z.end());
      total[z] += 1;
    }
  }
  std::map<std::vector<BoxPair>, Rat> out;
  for (const auto& [gamma, tot] : total) {
    Rat c = Rat(tot) / Rat(orbit_size(gamma));
    if (c != 0) out.emplace(gamma, c);
  }
  return out;
}

// ---- orbit-coordinate context ---------------------------------------------------

class SchurContext {
 public:
  TensorSpace V;
  std::vector<std::vector<BoxPair>> orbit_reps;  // all pair multisets, canonical order
  std::map<std::vector<BoxPair>, int> orbit_index;
  std::vector<MIndex> mindex;  // decoded multi-indexes by encoding

  explicit SchurContext(TensorSpace v) : V(std::move(v)) {
    const Diagram& dg = V.dg;
    std::vector<BoxPair> alphabet;
    for (int a = 1; a <= dg.N; ++a)
      for (int b = 1; b <= dg.N; ++b) alphabet.push_back({a, b});
    orbit_reps = pair_orbit_reps(alphabet, V.d);
    for (int t = 0; t < static_cast<int>(orbit_reps.size()); ++t)
      orbit_index.emplace(orbit_reps[t], t);
    mindex.reserve(static_cast<size_t>(V.D));
    for (int64_t idx = 0; idx < V.D; ++idx) mindex.push_back(V.decode(idx));
  }

  int orbit_of(int i, int j) const {
    auto it = orbit_index.find(canon_pair_slots(mindex[i], mindex[j]));
    if (it == orbit_index.end()) throw std::logic_error("orbit key missing");
    return it->second;
  }

  // Orbit table of an equivariant matrix, read off at one representative per orbit.
  SparseVec matrix_orbit_table(const SparseMat& M) const {
    SparseVec out;
    for (int t = 0; t < static_cast<int>(orbit_reps.size()); ++t) {
      MIndex i(V.d), j(V.d);
      for (int s = 0; s < V.d; ++s) {
        i[s] = orbit_reps[t][s].first;
        j[s] = orbit_reps[t][s].second;
      }
      Rat a = M.entry(static_cast<int>(V.encode(i)), static_cast<int>(V.encode(j)));
      if (a != 0) out[t] = a;
    }
    return out;
  }

  // Matrix of an orbit table: the coefficient is repeated on every arrangement.
  SparseMat orbit_matrix(const SparseVec& tab) const {
    SparseMat M(V.dim(), V.dim());
    for (const auto& [key, a] : tab) {
      for (const auto& arr : orbit_arrangements(orbit_reps[static_cast<size_t>(key)])) {
        MIndex i(V.d), j(V.d);
        for (int s = 0; s < V.d; ++s) {
          i[s] = arr[s].first;
          j[s] = arr[s].second;
        }
        M.add_to(static_cast<int>(V.encode(i)), static_cast<int>(V.encode(j)), a);
      }
    }
    return M;
  }

  // Table of the triangular basis element attached to a rightmost-pair orbit.
  SparseVec xi_table(const std::vector<BoxPair>& seed) const {
    XiSolver solver(V.dg, V.d, V.Q, seed);
    SparseVec out;
    for (int t = 0; t < static_cast<int>(orbit_reps.size()); ++t) {
      bool dominated = true;
      for (auto [a, b] : orbit_reps[t])
        if (V.dg.col_of(a) > V.dg.col_of(b)) {
          dominated = false;
          break;
        }
      if (!dominated) continue;
      Rat a = solver.coefficient(orbit_reps[t]);
      if (a != 0) out[t] = a;
    }
    return out;
  }

  // Column-shift degree of an orbit key: total column difference across slots.
  int orbit_degree(int t) const {
    int s = 0;
    for (auto [a, b] : orbit_reps[static_cast<size_t>(t)])
      s += V.dg.col_of(b) - V.dg.col_of(a);
    return s;
  }

  // Equivariant commutant of the action in orbit coordinates: solutions of
  // [X, x_1] = 0 over orbit variables.  Orbit-constant matrices already
  // commute with the place permutations, and the remaining generators are
  // conjugates of the first one, so this single equation family suffices.
  std::vector<SparseVec> invariant_commutant(bool graded) const {
    if (V.d == 0) {
      LinearSystem sys(static_cast<int>(orbit_reps.size()));
      return sys.nullspace();
    }
    SparseMat Mx = graded ? V.act_xj_graded(1) : V.act_xj(1);
    SparseMat MxT = Mx.transpose();
    LinearSystem sys(static_cast<int>(orbit_reps.size()));
    for (int i = 0; i < V.dim(); ++i) {
      for (int j = 0; j < V.dim(); ++j) {
        SparseVec eq;
        for (const auto& [k, val] : MxT.rows[j]) axpy(eq, val, SparseVec{{orbit_of(i, k), rat(1)}});
        for (const auto& [k, val] : Mx.rows[i]) axpy(eq, -val, SparseVec{{orbit_of(k, j), rat(1)}});
        sys.add_equation(eq);
      }
    }
    return sys.nullspace();
  }

  // Restriction e_A . X or X . e_A in orbit coordinates: keep the orbits whose
  // first (resp. second) index has the given row multiset.
  SparseVec restrict_rows(const SparseVec& tab, const std::vector<int>& row_ms, bool first) const {
    SparseVec out;
    for (const auto& [key, a] : tab) {
      std::vector<int> rows;
      for (auto [p, q] : orbit_reps[static_cast<size_t>(key)])
        rows.push_back(V.dg.row_of(first ? p : q));
      std::sort(rows.begin(), rows.end());
      if (rows == row_ms) out[key] = a;
    }
    return out;
  }
};

// ---- weight idempotents ----------------------------------------------------------

// Multi-index listing each box with its tableau multiplicity, weakly increasing.
inline MIndex index_of_tableau_boxes(const Tableau& t) {
  MIndex mi;
  for (int b = 1; b <= t.dg->N; ++b) {
    long m = to_long(t.at(b));
    for (long u = 0; u < m; ++u) mi.push_back(b);
  }
  return mi;
}

inline std::vector<int> row_multiset(const Diagram& dg, const MIndex& mi) {
  std::vector<int> rows;
  rows.reserve(mi.size());
  for (int b : mi) rows.push_back(dg.row_of(b));
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Diagonal projector onto the multi-indexes with a fixed row multiset.
inline SparseMat weight_idempotent(const TensorSpace& V, const Tableau& A) {
  std::vector<int> target = row_multiset(V.dg, index_of_tableau_boxes(A));
  SparseMat M(V.dim(), V.dim());
  for (int64_t idx = 0; idx < V.D; ++idx)
    if (row_multiset(V.dg, V.decode(idx)) == target)
      M.add_to(static_cast<int>(idx), static_cast<int>(idx), rat(1));
  return M;
}

// Number of multi-indexes with the row multiset of an idempotent tableau:
// d!/(prod a_i!) times prod over boxes of (row length)^(a_i).
inline Int weight_space_dimension(const Diagram& dg, const Tableau& A) {
  long d = 0;
  Int num = 1, den = 1;
  for (int b = 1; b <= dg.N; ++b) {
    long a = to_long(A.at(b));
    d += a;
    num *= ipow(dg.parts[dg.row_of(b) - 1], static_cast<int>(a));
    den *= factorial(static_cast<int>(a));
  }
  num *= factorial(static_cast<int>(d));
  Rat q = Rat(num) / Rat(den);
  return Int(to_long(q));  // multinomial times row-length powers: always integral
}

// Dimension of the divided-power module attached to a tableau: product over
// boxes of multiset-coefficient choices from the column-prefix subspaces.
inline Int divided_power_dimension(const Diagram& dg, const Tableau& A) {
  Int dim = 1;
  for (int b = 1; b <= dg.N; ++b) {
    long a = to_long(A.at(b));
    if (a == 0) continue;
    dim *= binomial(dg.column_prefix_dim(dg.col_of(b)) + a - 1, a);
  }
  return dim;
}

// ---- verified commutant at matrix level ------------------------------------------

// Commutant of a whole list of operators, computed from a few random
// combinations and then verified exactly against every operator; failing
// operators are promoted into the generating set and the solve repeats.
inline std::vector<SparseMat> verified_commutant(const std::vector<SparseMat>& ops, int D,
                                                 std::mt19937& rng) {
  if (ops.empty()) throw std::invalid_argument("empty operator list");
  std::uniform_int_distribution<int> coef(1, 997);
  std::vector<SparseMat> gens;
  for (int t = 0; t < 2; ++t) {
    SparseMat g(D, D);
    for (const auto& op : ops) g = g + op.scaled(rat(coef(rng)));
    gens.push_back(g);
  }
  for (int round = 0; round < 6; ++round) {
    std::vector<SparseMat> cand = matrix_commutant(gens, D);
    bool ok = true;
    for (const auto& X : cand) {
      for (const auto& op : ops)
        if (!X.commutes_with(op)) {
          gens.push_back(op);
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return cand;
  }
  return matrix_commutant(ops, D);
}

}  // namespace swl
