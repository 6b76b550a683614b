#pragma once
// Module constructions over the strand algebra: cyclic permutation modules cut
// out by polynomial-times-symmetrizer generators, induced seminormal modules
// built from one partition per diagram column, and the column-splitting
// comparison of represented dimensions.

#include <swl/hecke.hpp>
#include <swl/schur.hpp>
#include <swl/tableau.hpp>
#include <swl/tensor.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace swl {

// ---- coordinates in the monomial basis -------------------------------------------

struct MonomialCoords {
  std::vector<Mono> basis;
  std::map<Mono, int64_t> pos;

  explicit MonomialCoords(const HeckeAlg& H) : basis(H.basis_monomials()) {
    for (size_t t = 0; t < basis.size(); ++t) pos.emplace(basis[t], static_cast<int64_t>(t));
  }

  SparseVec vec(const HElt& e) const {
    SparseVec v;
    for (const auto& [m, c] : e) v[pos.at(m)] = c;
    return v;
  }
};

// ---- permutation-module generators -----------------------------------------------

// One block per box: the multiplicity of that box in the tableau.
inline std::vector<int> tableau_block_sizes(const Tableau& A) {
  std::vector<int> sizes;
  sizes.reserve(A.dg->N);
  for (int b = 1; b <= A.dg->N; ++b) sizes.push_back(static_cast<int>(to_long(A.at(b))));
  return sizes;
}

struct SpecialElements {
  HElt xA;   // product over strands of (x_t - Q_k) for the columns right of the box
  HElt wA;   // sum of the box-stabilizer subgroup
  HElt gen;  // xA * wA, the cyclic generator
};

inline SpecialElements special_elements(const HeckeAlg& H, const Diagram& dg, const Origin& o,
                                        const Tableau& A) {
  std::vector<Rat> Q = dg.column_params(o);
  MIndex boxes = index_of_tableau_boxes(A);
  if (static_cast<int>(boxes.size()) != H.d) throw std::invalid_argument("tableau degree mismatch");
  HElt xA = H.one();
  for (int t = 1; t <= H.d; ++t) {
    for (int k = dg.col_of(boxes[t - 1]) + 1; k <= dg.l; ++k) {
      HElt factor = H.x(t);
      hadd(factor, Mono{std::vector<int>(H.d, 0), perm_identity(H.d)}, -Q[k - 1]);
      xA = H.mul(xA, factor);
    }
  }
  HElt wA = H.zero();
  for (const Perm& w : young_subgroup(tableau_block_sizes(A)))
    hadd(wA, Mono{std::vector<int>(H.d, 0), w}, rat(1));
  return {xA, wA, H.mul(xA, wA)};
}

// d!/(prod a_i!) times prod of col(i)^{a_i}: the cyclic module dimension when
// the strand algebra acts faithfully.
inline Int permutation_module_formula(const Diagram& dg, const Tableau& A) {
  long d = 0;
  Int num = 1, den = 1;
  for (int b = 1; b <= dg.N; ++b) {
    long a = to_long(A.at(b));
    d += a;
    num *= ipow(dg.col_of(b), static_cast<int>(a));
    den *= factorial(static_cast<int>(a));
  }
  num *= factorial(static_cast<int>(d));
  return Int(to_long(Rat(num) / Rat(den)));
}

// Echelonized basis of the abstract left ideal generated by gen, in monomial
// coordinates.
inline std::vector<HElt> ideal_basis(const HeckeAlg& H, const HElt& gen) {
  MonomialCoords coords(H);
  Echelon ech;
  std::vector<HElt> basis;
  for (const auto& m : coords.basis) {
    HElt e = H.mul(H.monomial(m.r, m.w), gen);
    if (ech.insert(coords.vec(e))) basis.push_back(std::move(e));
  }
  return basis;
}

// Dimension of the module generated by gen inside the represented algebra on
// the tensor space (the image of the abstract left ideal under the action;
// the two agree exactly when the action is faithful).
inline long permutation_module_dimension(const TensorSpace& V, const HeckeAlg& H,
                                         const HElt& gen) {
  if (V.d != H.d) throw std::invalid_argument("strand count mismatch");
  std::vector<SparseVec> flats;
  for (const auto& b : ideal_basis(H, gen)) flats.push_back(V.act(b).flat());
  return span_rank(flats);
}

// Claimed spanning family in the faithful case: coset representatives of the
// box stabilizer times exponents below each box's column index, applied to gen.
inline std::vector<HElt> permutation_module_basis(const HeckeAlg& H, const Diagram& dg,
                                                  const Origin& o, const Tableau& A) {
  SpecialElements se = special_elements(H, dg, o, A);
  MIndex boxes = index_of_tableau_boxes(A);
  std::vector<int> sizes = tableau_block_sizes(A);
  std::vector<HElt> out;
  for (const Perm& rho : parabolic_coset_reps(H.d, sizes)) {
    std::vector<int> r(H.d, 0);
    while (true) {
      out.push_back(H.mul(H.group(rho), H.mul(H.monomial(r, perm_identity(H.d)), se.gen)));
      int t = H.d - 1;
      while (t >= 0 && r[t] + 1 >= dg.col_of(boxes[t])) {
        r[t] = 0;
        --t;
      }
      if (t < 0) break;
      ++r[t];
    }
    if (H.d == 0) break;
  }
  return out;
}

// ---- induced seminormal modules ---------------------------------------------------

// Right module attached to a column-strict tableau: one partition per column
// (read off the column entries of A minus the shifted ground tableau), the
// product of seminormal modules evaluated at the column parameters, induced
// from the column-block subalgebra to the whole strand algebra.
class SpechtModule {
 public:
  int d;
  std::vector<Rat> Q;                 // column parameters
  std::vector<Partition> mu;          // per column
  std::vector<int> sizes;             // |mu_i| per column
  std::vector<int> offset;            // first global slot (0-based) of each column block
  std::vector<std::vector<std::vector<std::vector<int>>>> tabs;  // per block: standard tableaux
  std::vector<std::vector<std::vector<int>>> contents;           // per block/tab: content by value
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cell_of;  // per block/tab: (row,col) by value
  std::vector<Perm> sigmas;           // coset representatives (heads of the decomposition)
  std::map<Perm, int> sigma_pos;
  int ntuples = 1;

  SpechtModule(const Diagram& dg, const Origin& o, const Tableau& A) {
    Tableau beta = A - shifted_ground_tableau(dg, o);
    if (!is_nonneg_integral(beta)) throw std::invalid_argument("tableau is not column-strict over the origin");
    d = static_cast<int>(entry_sum_int(beta));
    Q = dg.column_params(o);
    mu.resize(dg.l);
    for (int j = 1; j <= dg.l; ++j) {
      std::vector<Rat> col_entries;
      for (int b = 1; b <= dg.N; ++b)
        if (dg.col_of(b) == j && beta.at(b) != 0) col_entries.push_back(beta.at(b));
      mu[j - 1] = partition_from_rats(col_entries);
    }
    sizes.resize(dg.l);
    offset.resize(dg.l);
    int off = 0;
    for (int j = 0; j < dg.l; ++j) {
      sizes[j] = partition_size(mu[j]);
      offset[j] = off;
      off += sizes[j];
    }
    tabs.resize(dg.l);
    contents.resize(dg.l);
    cell_of.resize(dg.l);
    for (int j = 0; j < dg.l; ++j) {
      tabs[j] = enumerate_syt(mu[j]);
      for (const auto& t : tabs[j]) {
        contents[j].push_back(syt_contents(t, sizes[j]));
        std::vector<std::pair<int, int>> cells(sizes[j]);
        for (size_t r = 0; r < t.size(); ++r)
          for (size_t c = 0; c < t[r].size(); ++c) cells[t[r][c] - 1] = {static_cast<int>(r), static_cast<int>(c)};
        cell_of[j].push_back(std::move(cells));
      }
      ntuples *= static_cast<int>(tabs[j].size());
    }
    for (const Perm& rho : parabolic_coset_reps(d, sizes)) sigmas.push_back(perm_inverse(rho));
    std::sort(sigmas.begin(), sigmas.end());
    for (size_t t = 0; t < sigmas.size(); ++t) sigma_pos.emplace(sigmas[t], static_cast<int>(t));
  }

  int dim() const { return static_cast<int>(sigmas.size()) * ntuples; }

  Int formula_dim() const {
    Int out = factorial(d);
    for (int j = 0; j < static_cast<int>(mu.size()); ++j) {
      out /= factorial(sizes[j]);
      out *= hook_length_dim(mu[j]);
    }
    return out;
  }

  int block_of_slot(int a) const {  // 0-based global slot
    for (int j = static_cast<int>(offset.size()) - 1; j >= 0; --j)
      if (a >= offset[j] && a < offset[j] + sizes[j]) return j;
    throw std::logic_error("slot outside blocks");
  }

  // decode/encode tuple indexes (mixed radix, block-major)
  std::vector<int> decode_tuple(int idx) const {
    std::vector<int> t(tabs.size());
    for (int j = static_cast<int>(tabs.size()) - 1; j >= 0; --j) {
      int n = static_cast<int>(tabs[j].size());
      t[j] = idx % n;
      idx /= n;
    }
    return t;
  }
  int encode_tuple(const std::vector<int>& t) const {
    int idx = 0;
    for (size_t j = 0; j < tabs.size(); ++j) idx = idx * static_cast<int>(tabs[j].size()) + t[j];
    return idx;
  }

  // Apply the block transposition at global slot a (0-based, slots a and a+1
  // in one block) to a combination of tuples.
  std::map<int, Rat> apply_block_swap(int a, const std::map<int, Rat>& state) const {
    std::map<int, Rat> out;
    for (const auto& [tidx, c] : state) {
      std::vector<int> tup = decode_tuple(tidx);
      int j = block_of_slot(a);
      if (block_of_slot(a + 1) != j) throw std::logic_error("swap crosses blocks");
      int v = a - offset[j] + 1;  // 1-based value in the block tableau
      const auto& cells = cell_of[j][tup[j]];
      auto [r1, c1] = cells[v - 1];
      auto [r2, c2] = cells[v];
      if (r1 == r2) {
        out[tidx] += c;
      } else if (c1 == c2) {
        out[tidx] -= c;
      } else {
        const auto& cont = contents[j][tup[j]];
        Rat rho = rat(cont[v] - cont[v - 1]);
        // swapped tableau and its index
        auto grid = tabs[j][tup[j]];
        std::swap(grid[r1][c1], grid[r2][c2]);
        int swapped = -1;
        for (size_t t = 0; t < tabs[j].size(); ++t)
          if (tabs[j][t] == grid) {
            swapped = static_cast<int>(t);
            break;
          }
        if (swapped < 0) throw std::logic_error("swapped tableau not standard");
        std::vector<int> tup2 = tup;
        tup2[j] = swapped;
        int tidx2 = encode_tuple(tup2);
        out[tidx] += c / rho;
        // the unit coefficient goes with the member whose next value sits lower
        if (r2 > r1)
          out[tidx2] += c;
        else
          out[tidx2] += c * (rat(1) - rat(1) / (rho * rho));
      }
    }
    return out;
  }

  // Matrix of a strand-algebra element in the induced basis (column-vector,
  // right-action convention: columns are images of basis vectors).
  SparseMat operator_of(const HeckeAlg& H, const HElt& h) const {
    if (H.d != d) throw std::invalid_argument("strand count mismatch");
    SparseMat M(dim(), dim());
    for (size_t cidx = 0; cidx < sigmas.size(); ++cidx) {
      HElt he = H.mul(H.group(sigmas[cidx]), h);
      for (const auto& [mono, coeff] : he) {
        auto [rho_head, u] = coset_decompose(perm_inverse(mono.w), sizes);
        Perm sigma2 = perm_inverse(rho_head);
        Perm wj = perm_inverse(u);
        int c2 = sigma_pos.at(sigma2);
        std::vector<int> word = perm_reduced_word(wj);
        for (int tidx = 0; tidx < ntuples; ++tidx) {
          // diagonal polynomial part first
          Rat scal = coeff;
          std::vector<int> tup = decode_tuple(tidx);
          for (int a = 0; a < d; ++a) {
            if (mono.r[a] == 0) continue;
            int j = block_of_slot(a);
            int v = a - offset[j] + 1;
            Rat eig = Q[/* column index */ j] + rat(contents[j][tup[j]][v - 1]);
            for (int e = 0; e < mono.r[a]; ++e) scal *= eig;
          }
          if (scal == 0) continue;
          std::map<int, Rat> state{{tidx, scal}};
          for (int letter : word) state = apply_block_swap(letter, state);
          for (const auto& [t2, val] : state)
            if (val != 0)
              M.add_to(c2 * ntuples + t2, static_cast<int>(cidx) * ntuples + tidx, val);
        }
      }
    }
    return M;
  }
};

// ---- column splitting ---------------------------------------------------------------

// Restrictions of the diagram to the leftmost columns and the remaining ones,
// with the origin split the same way.
struct ColumnSplit {
  Diagram left, right;
  Origin left_origin, right_origin;
};

inline ColumnSplit split_columns(const Diagram& dg, const Origin& o, int l_left) {
  if (l_left < 1 || l_left >= dg.l) throw std::invalid_argument("split point out of range");
  std::vector<int> pl, pr;
  for (int r = 0; r < dg.n; ++r) {
    pl.push_back(std::min(dg.parts[r], l_left));
    if (dg.parts[r] > l_left) pr.push_back(dg.parts[r] - l_left);
  }
  return {Diagram(pl), Diagram(pr),
          Origin(std::vector<Rat>(o.c.begin(), o.c.begin() + l_left)),
          Origin(std::vector<Rat>(o.c.begin() + l_left, o.c.end()))};
}

// Rank of the represented strand algebra on the tensor space.
inline long image_rank(const Diagram& dg, const Origin& o, int d) {
  TensorSpace V(dg, d, o);
  HeckeAlg H = V.algebra();
  std::vector<SparseVec> flats;
  for (const auto& m : H.basis_monomials()) flats.push_back(V.act(H.monomial(m.r, m.w)).flat());
  return span_rank(flats);
}

// Split identity for represented dimensions: the two column groups interleave
// freely, strand counts distributing with squared binomial multiplicities.
inline Int split_rank_sum(const Diagram& dg, const Origin& o, int l_left, int d) {
  ColumnSplit cs = split_columns(dg, o, l_left);
  Int sum = 0;
  for (int dl = 0; dl <= d; ++dl) {
    Int b = binomial(d, dl);
    sum += b * b * Int(image_rank(cs.left, cs.left_origin, dl)) *
           Int(image_rank(cs.right, cs.right_origin, d - dl));
  }
  return sum;
}

}  // namespace swl
