#pragma once
// Exact sparse linear algebra over the rationals: matrices, incremental
// echelon spans (with optional coordinate tracking), nullspaces of sparse
// homogeneous systems, and minimal polynomials. No floating point anywhere.

#include <swl/rational.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace swl {

using SparseVec = std::map<int64_t, Rat>;  // key -> nonzero coefficient

inline void axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, Rat(0));
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

struct SparseMat {
  int nrows = 0, ncols = 0;
  std::vector<std::map<int, Rat>> rows;

  SparseMat() = default;
  SparseMat(int r, int c) : nrows(r), ncols(c), rows(r) {}

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
  }

  Rat entry(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? Rat(0) : it->second;
  }

  void set(int r, int c, const Rat& v) {
    if (v == 0)
      rows[r].erase(c);
    else
      rows[r][c] = v;
  }

  void add_to(int r, int c, const Rat& v) {
    auto [it, inserted] = rows[r].try_emplace(c, Rat(0));
    it->second += v;
    if (it->second == 0) rows[r].erase(it);
  }

  size_t nnz() const {
    size_t s = 0;
    for (const auto& row : rows) s += row.size();
    return s;
  }

  bool is_zero() const { return nnz() == 0; }

  bool operator==(const SparseMat& o) const {
    return nrows == o.nrows && ncols == o.ncols && rows == o.rows;
  }

  SparseMat operator+(const SparseMat& o) const {
    check_same_shape(o);
    SparseMat m = *this;
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : o.rows[r]) m.add_to(r, c, v);
    return m;
  }

  SparseMat operator-(const SparseMat& o) const {
    check_same_shape(o);
    SparseMat m = *this;
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : o.rows[r]) m.add_to(r, c, -v);
    return m;
  }

  SparseMat operator*(const SparseMat& o) const {
    if (ncols != o.nrows) throw std::invalid_argument("matrix product shape mismatch");
    SparseMat m(nrows, o.ncols);
    for (int r = 0; r < nrows; ++r)
      for (const auto& [k, a] : rows[r])
        for (const auto& [c, b] : o.rows[k]) m.add_to(r, c, a * b);
    return m;
  }

  SparseMat scaled(const Rat& a) const {
    SparseMat m(nrows, ncols);
    if (a == 0) return m;
    m = *this;
    for (auto& row : m.rows)
      for (auto& [c, v] : row) v *= a;
    return m;
  }

  SparseMat transpose() const {
    SparseMat m(ncols, nrows);
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : rows[r]) m.rows[c][r] = v;
    return m;
  }

  bool commutes_with(const SparseMat& o) const { return (*this) * o == o * (*this); }

  // Row-major flattening (key = r * ncols + c).
  SparseVec flat() const {
    SparseVec v;
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, val] : rows[r])
        v[static_cast<int64_t>(r) * ncols + c] = val;
    return v;
  }

  static SparseMat from_flat(const SparseVec& v, int nrows, int ncols) {
    SparseMat m(nrows, ncols);
    for (const auto& [k, val] : v)
      m.rows[static_cast<int>(k / ncols)][static_cast<int>(k % ncols)] = val;
    return m;
  }

 private:
  void check_same_shape(const SparseMat& o) const {
    if (nrows != o.nrows || ncols != o.ncols)
      throw std::invalid_argument("matrix shape mismatch");
  }
};

// Incremental echelon span. Rows are keyed by pivot (their least key), have
// pivot coefficient 1, and are reduced against all rows present at their
// insertion time; no back-reduction (rank/membership are unaffected).
struct Echelon {
  std::map<int64_t, SparseVec> rows;

  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto rit = rows.find(it->first);
      if (rit == rows.end()) {
        ++it;
        continue;
      }
      const int64_t k0 = it->first;
      const Rat c = it->second;
      axpy(v, -c, rit->second);
      it = v.upper_bound(k0);
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Returns false (and changes nothing) if v is already in the span.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const Rat lead = r.begin()->second;
    for (auto& [k, val] : r) val /= lead;
    const int64_t pivot = r.begin()->first;
    rows.emplace(pivot, std::move(r));
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }

  bool contains_span(const Echelon& other) const {
    for (const auto& [p, row] : other.rows)
      if (!contains(row)) return false;
    return true;
  }

  bool equal_span(const Echelon& other) const {
    return rank() == other.rank() && contains_span(other) && other.contains_span(*this);
  }
};

inline int span_rank(const std::vector<SparseVec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

// Echelon span with coordinate tracking: every row remembers its expression
// in terms of the inserted generators, so dependencies can be read off.
struct AugEchelon {
  struct Row {
    SparseVec v;
    std::map<int, Rat> coords;  // generator index -> coefficient
  };
  std::map<int64_t, Row> rows;
  int ngens = 0;

  // Reduces v, accumulating the expression of (v - residual) in generators.
  std::pair<SparseVec, std::map<int, Rat>> reduce_with_coords(SparseVec v) const {
    std::map<int, Rat> coords;
    auto it = v.begin();
    while (it != v.end()) {
      auto rit = rows.find(it->first);
      if (rit == rows.end()) {
        ++it;
        continue;
      }
      const int64_t k0 = it->first;
      const Rat c = it->second;
      axpy(v, -c, rit->second.v);
      for (const auto& [g, coef] : rit->second.coords) {
        auto [cit, ins] = coords.try_emplace(g, Rat(0));
        cit->second += c * coef;
        if (cit->second == 0) coords.erase(cit);
      }
      it = v.upper_bound(k0);
    }
    return {std::move(v), std::move(coords)};
  }

  // Inserts v as generator #index (ngens). Returns true if independent; if
  // dependent, *dependency (when non-null) receives coefficients expressing v
  // over the previously inserted generators.
  bool insert(const SparseVec& v, std::map<int, Rat>* dependency = nullptr) {
    auto [r, coords] = reduce_with_coords(v);
    const int idx = ngens++;
    if (r.empty()) {
      if (dependency) *dependency = std::move(coords);
      return false;
    }
    const Rat lead = r.begin()->second;
    for (auto& [k, val] : r) val /= lead;
    std::map<int, Rat> rowc;
    rowc[idx] = Rat(1) / lead;
    for (const auto& [g, coef] : coords) {
      Rat c = -coef / lead;
      if (c != 0) rowc[g] = c;
    }
    const int64_t pivot = r.begin()->first;
    rows.emplace(pivot, Row{std::move(r), std::move(rowc)});
    return true;
  }
};

// Nullspace of a homogeneous sparse system over variables 0..nvars-1.
// Returns one basis vector per free variable (var index -> coefficient).
struct LinearSystem {
  int nvars = 0;
  Echelon echelon;  // rows over variable-index keys

  explicit LinearSystem(int nv) : nvars(nv) {}

  void add_equation(const SparseVec& eq) { echelon.insert(eq); }

  int rank() const { return echelon.rank(); }

  std::vector<std::map<int64_t, Rat>> nullspace() const {
    std::vector<std::map<int64_t, Rat>> basis;
    const auto& rows = echelon.rows;
    std::vector<int64_t> pivots;
    pivots.reserve(rows.size());
    for (const auto& [p, row] : rows) pivots.push_back(p);
    // Free variables = non-pivots.
    size_t pi = 0;
    for (int64_t v = 0; v < nvars; ++v) {
      if (pi < pivots.size() && pivots[pi] == v) {
        ++pi;
        continue;
      }
      std::map<int64_t, Rat> z;
      z[v] = 1;
      // Solve pivot variables in decreasing order by back-substitution.
      for (auto rit = rows.rbegin(); rit != rows.rend(); ++rit) {
        const int64_t p = rit->first;
        if (p > v) continue;  // row only involves vars >= p > v where z = 0
        Rat s(0);
        for (const auto& [k, c] : rit->second) {
          if (k == p) continue;
          auto zit = z.find(k);
          if (zit != z.end()) s += c * zit->second;
        }
        if (s != 0) z[p] = -s;
      }
      basis.push_back(std::move(z));
    }
    return basis;
  }
};

// Basis of {X : X*G = G*X for every generator G}, solved on the D^2 matrix
// entries. Suitable for moderate D; larger problems use orbit variables at
// the call sites that know the symmetry.
inline std::vector<SparseMat> matrix_commutant(const std::vector<SparseMat>& gens, int D) {
  LinearSystem sys(static_cast<int64_t>(D) * D);
  for (const auto& G : gens) {
    if (G.nrows != D || G.ncols != D) throw std::invalid_argument("commutant generator shape");
    SparseMat Gt = G.transpose();  // Gt.rows[b] = column b of G
    for (int a = 0; a < D; ++a) {
      for (int b = 0; b < D; ++b) {
        SparseVec eq;
        for (const auto& [k, g] : Gt.rows[b]) {  // sum_k X[a,k] G[k,b]
          auto [it, ins] = eq.try_emplace(static_cast<int64_t>(a) * D + k, Rat(0));
          it->second += g;
          if (it->second == 0) eq.erase(it);
        }
        for (const auto& [k, g] : G.rows[a]) {  // - sum_k G[a,k] X[k,b]
          auto [it, ins] = eq.try_emplace(static_cast<int64_t>(k) * D + b, Rat(0));
          it->second -= g;
          if (it->second == 0) eq.erase(it);
        }
        if (!eq.empty()) sys.add_equation(eq);
      }
    }
  }
  std::vector<SparseMat> basis;
  for (const auto& z : sys.nullspace()) {
    SparseVec flat;
    for (const auto& [k, v] : z) flat[k] = v;
    basis.push_back(SparseMat::from_flat(flat, D, D));
  }
  return basis;
}

// ---- polynomials (dense coefficient vectors, ascending degree) -------------

using Poly = std::vector<Rat>;  // p[k] = coefficient of x^k; empty = 0

inline Poly poly_from_roots(const std::vector<Rat>& roots) {
  Poly p{Rat(1)};
  for (const Rat& r : roots) {
    Poly q(p.size() + 1, Rat(0));
    for (size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= r * p[k];
    }
    p = std::move(q);
  }
  return p;
}

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Human-readable form, highest degree first: "x^2 + x", "x^3 - 1/2*x + 3".
inline std::string poly_str(Poly p) {
  poly_trim(p);
  if (p.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (p[k] == 0) continue;
    Rat c = p[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string var = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0)
      out += rat_str(c);
    else if (c == 1)
      out += var;
    else
      out += rat_str(c) + "*" + var;
  }
  return out;
}

// Monic minimal polynomial of a square matrix, exact.
inline Poly minimal_polynomial(const SparseMat& M) {
  if (M.nrows != M.ncols) throw std::invalid_argument("minimal polynomial of non-square matrix");
  AugEchelon span;
  SparseMat P = SparseMat::identity(M.nrows);
  for (int k = 0;; ++k) {
    std::map<int, Rat> dep;
    if (!span.insert(P.flat(), &dep)) {
      Poly p(k + 1, Rat(0));
      p[k] = 1;
      for (const auto& [m, c] : dep) p[m] -= c;
      return p;
    }
    P = P * M;
  }
}

}  // namespace swl
