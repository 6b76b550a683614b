#pragma once
// Named verification suites over a single (diagram, origin, strand-count)
// instance.  Each suite re-checks one layer of the construction — strand
// algebra basis, centralizer bases, module dimensions — with exact
// arithmetic, and reports pass/fail plus the measured quantities.  Size caps
// keep every suite at desk scale: a suite whose caps exclude the instance
// reports a skip with the reason instead of running.

#include <swl/modules.hpp>
#include <swl/schur.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swl {

// ---- caps, instances, results ------------------------------------------------

struct Caps {
  long max_tensor_dim = 1000;    // bound on N^d before building a tensor space
  long max_hecke_dim = 256;      // bound on l^d * d! before whole-algebra sweeps
  long max_commutant_dim = 512;  // bound on N^d before commutant-sized solves
  long max_matrix_flat = 600;    // bound on (N^d)^2 before reverse-commutant runs

  void validate() const {
    if (max_tensor_dim <= 0 || max_hecke_dim <= 0 || max_commutant_dim <= 0 ||
        max_matrix_flat <= 0)
      throw std::invalid_argument("caps must be positive");
  }
};

struct Instance {
  Diagram dg;
  Origin o;
  int d = 0;
  Caps caps;
  unsigned seed = 20260818;  // seed for the randomized multiply oracles
  int random_pairs = 10;     // random element pairs per multiply oracle

  Instance(Diagram diagram, Origin origin, int strands)
      : dg(std::move(diagram)), o(std::move(origin)), d(strands) {
    if (d < 0) throw std::invalid_argument("negative strand count");
    if (static_cast<int>(o.c.size()) != dg.l)
      throw std::invalid_argument("origin length " + std::to_string(o.c.size()) +
                                  " does not match the column count " + std::to_string(dg.l));
  }
};

struct SuiteResult {
  std::string suite;
  std::string status = "pass";      // pass | fail | skip
  std::string reason;               // populated for skips
  bool precondition_error = false;  // skip caused by a violated precondition, not a cap
  long checks = 0;
  std::vector<std::pair<std::string, std::string>> measurements;
  std::vector<std::vector<std::pair<std::string, std::string>>> details;
  std::vector<std::string> failures;
  double seconds = 0.0;

  void note(const std::string& key, std::string value) {
    measurements.emplace_back(key, std::move(value));
  }
  void note(const std::string& key, long value) { note(key, std::to_string(value)); }
  void note(const std::string& key, const Int& value) { note(key, value.get_str()); }
  void note_flag(const std::string& key, bool value) {
    note(key, std::string(value ? "true" : "false"));
  }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      status = "fail";
      failures.push_back(what);
    }
  }

  static SuiteResult skip(std::string name, std::string why, bool precondition = false) {
    SuiteResult r;
    r.suite = std::move(name);
    r.status = "skip";
    r.reason = std::move(why);
    r.precondition_error = precondition;
    return r;
  }
};

// ---- shared helpers ------------------------------------------------------------

inline Int pow_int(long base, int e) {
  Int p = 1;
  for (int k = 0; k < e; ++k) p *= base;
  return p;
}

inline Int tensor_cells(const Diagram& dg, int d) { return pow_int(dg.N, d); }
inline Int hecke_cells(const Diagram& dg, int d) { return pow_int(dg.l, d) * factorial(d); }

inline std::string cap_msg(const std::string& what, const Int& size, const std::string& cap_name,
                           long cap) {
  return what + " " + size.get_str() + " exceeds " + cap_name + " " + std::to_string(cap);
}

inline std::string parts_str(const std::vector<int>& parts) {
  std::string s = "(";
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts[k]);
  }
  return s + ")";
}

// Tableau entries as canonical num/den fractions, comma-joined (box order).
inline std::string rat_frac(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string tableau_str(const Tableau& t) {
  std::string s;
  for (size_t k = 0; k < t.e.size(); ++k) {
    if (k) s += ",";
    s += rat_frac(t.e[k]);
  }
  return s;
}

// Generators x_1..x_d, s_1..s_{d-1} as algebra elements / as matrices, in the
// same order so that the two lists can be zipped.
inline std::vector<HElt> algebra_generators(const HeckeAlg& H) {
  std::vector<HElt> g;
  for (int j = 1; j <= H.d; ++j) g.push_back(H.x(j));
  for (int i = 0; i + 1 < H.d; ++i) g.push_back(H.group(perm_adjacent(H.d, i)));
  return g;
}

inline std::vector<SparseMat> generator_matrices(const TensorSpace& V) {
  std::vector<SparseMat> gens;
  for (int j = 1; j <= V.d; ++j) gens.push_back(V.act_xj(j));
  for (int i = 0; i + 1 < V.d; ++i) gens.push_back(V.act_perm(perm_adjacent(V.d, i)));
  return gens;
}

inline HElt random_algebra_element(const HeckeAlg& H, std::mt19937& rng, int terms) {
  HElt e;
  std::uniform_int_distribution<int> expd(0, H.l - 1);
  std::uniform_int_distribution<int> coefn(-3, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> r(H.d);
    for (auto& x : r) x = expd(rng);
    Perm w = perm_identity(H.d);
    std::shuffle(w.begin(), w.end(), rng);
    int cn = coefn(rng);
    if (cn == 0) cn = 1;
    hadd(e, Mono{r, w}, rat(cn, 1 + (t % 2)));
  }
  return e;
}

inline SparseMat mat_sub(const SparseMat& a, const SparseMat& b) {
  return a + b.scaled(rat(-1));
}

// ---- hecke-basis ---------------------------------------------------------------
// Pads the diagram until the representation is faithful, then certifies that
// the l^d*d! normal-form monomials act independently and that symbolic
// multiplication matches matrix multiplication (the action is an
// anti-homomorphism: act(ab) = act(b)·act(a)).

inline SuiteResult suite_hecke_basis(const Instance& ins) {
  const std::string name = "hecke-basis";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  Diagram padded = pad_for_faithfulness(ins.dg, ins.d);
  Int cells = tensor_cells(padded, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("padded tensor space dimension", cells,
                                           "max_tensor_dim", ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  TensorSpace V(padded, ins.d, ins.o);
  HeckeAlg H = V.algebra();
  r.note("hecke_dim", hdim);
  r.note("padded_parts", parts_str(padded.parts));

  // padding preserves the column-parameter multiset
  std::vector<Rat> q_before = ins.dg.column_params(ins.o), q_after = V.Q;
  std::sort(q_before.begin(), q_before.end());
  std::sort(q_after.begin(), q_after.end());
  r.check(q_before == q_after, "padding changed the column-parameter multiset");

  std::vector<SparseVec> flats;
  for (const auto& m : H.basis_monomials())
    flats.push_back(V.act(H.monomial(m.r, m.w)).flat());
  long rank = span_rank(flats);
  r.note("image_rank", rank);
  r.check(Int(rank) == hdim,
          "monomial images are dependent on the padded space: rank " + std::to_string(rank) +
              " != " + hdim.get_str());

  auto gens = algebra_generators(H);
  std::vector<SparseMat> gm;
  gm.reserve(gens.size());
  for (const auto& g : gens) gm.push_back(V.act(g));
  long pairs = 0;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = 0; b < gens.size(); ++b) {
      ++pairs;
      r.check(V.act(H.mul(gens[a], gens[b])) == gm[b] * gm[a],
              "generator multiply oracle failed at pair (" + std::to_string(a) + "," +
                  std::to_string(b) + ")");
    }
  r.note("generator_pairs", pairs);
  std::mt19937 rng(ins.seed);
  for (int t = 0; t < ins.random_pairs; ++t) {
    HElt a = random_algebra_element(H, rng, 3);
    HElt b = random_algebra_element(H, rng, 2);
    r.check(V.act(H.mul(a, b)) == V.act(b) * V.act(a),
            "random multiply oracle failed at pair " + std::to_string(t));
  }
  r.note("random_pairs", static_cast<long>(ins.random_pairs));
  return r;
}

// ---- min-poly ------------------------------------------------------------------
// The minimal polynomial of the first polynomial generator's action must be
// exactly the product of (x - Q_j) over the columns — degree l, no proper
// divisor.

inline SuiteResult suite_min_poly(const Instance& ins) {
  const std::string name = "min-poly";
  if (ins.d == 0)
    return SuiteResult::skip(name, "requires at least one strand (d >= 1)", true);
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  TensorSpace V(ins.dg, ins.d, ins.o);
  Poly got = minimal_polynomial(V.act_xj(1));
  Poly want = poly_from_roots(V.Q);
  r.note("polynomial", poly_str(got));
  r.note("expected", poly_str(want));
  r.note("degree", static_cast<long>(got.size()) - 1);
  r.check(got == want, "minimal polynomial " + poly_str(got) +
                           " differs from the column-parameter product " + poly_str(want));
  return r;
}

// ---- double-centralizer (graded / filtered) --------------------------------------
// Forward: the commutant of the action has the predicted rank and equals the
// span of the operator basis.  Reverse: the commutant of that basis is exactly
// the image of the strand algebra (run only when the flattened matrix space
// stays small; the certificate uses random commutant candidates that are then
// verified exactly).

inline SuiteResult suite_double_centralizer(const Instance& ins, bool graded) {
  const std::string name =
      graded ? "double-centralizer-graded" : "double-centralizer-filtered";
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  if (cells > ins.caps.max_commutant_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_commutant_dim",
                                           ins.caps.max_commutant_dim));
  SuiteResult r;
  r.suite = name;
  SchurContext ctx{TensorSpace(ins.dg, ins.d, ins.o)};
  const TensorSpace& V = ctx.V;
  auto null = ctx.invariant_commutant(graded);
  Int want = schur_dimension(ins.dg, ins.d);
  r.note("commutant_rank", static_cast<long>(null.size()));
  r.note("predicted_rank", want);
  r.check(Int(static_cast<long>(null.size())) == want,
          "commutant rank " + std::to_string(null.size()) + " != predicted " + want.get_str());
  auto seeds = xi_seeds(ins.dg, ins.d);
  Echelon commutant_span, basis_span;
  for (const auto& v : null) commutant_span.insert(v);
  for (const auto& seed : seeds)
    basis_span.insert(graded ? ctx.matrix_orbit_table(V.xi_operator(seed))
                             : ctx.xi_table(seed));
  r.check(commutant_span.equal_span(basis_span),
          "commutant differs from the span of the operator basis");

  Int flat = cells * cells;
  if (flat > ins.caps.max_matrix_flat) {
    r.note("reverse", "skipped: " + cap_msg("flattened matrix dimension", flat,
                                            "max_matrix_flat", ins.caps.max_matrix_flat));
  } else {
    std::vector<SparseMat> ops;
    for (const auto& seed : seeds)
      ops.push_back(graded ? V.xi_operator(seed) : ctx.orbit_matrix(ctx.xi_table(seed)));
    std::mt19937 rng(ins.seed);
    std::vector<SparseMat> cand = verified_commutant(ops, V.dim(), rng);
    HeckeAlg H = V.algebra();
    Echelon image_span, cand_span;
    for (const auto& m : H.basis_monomials())
      image_span.insert(graded ? V.act_graded(m).flat() : V.act(H.monomial(m.r, m.w)).flat());
    for (const auto& X : cand) cand_span.insert(X.flat());
    r.note("image_rank", static_cast<long>(image_span.rank()));
    r.note("reverse", "ran");
    r.check(cand_span.equal_span(image_span),
            "double commutant differs from the represented algebra image");
  }
  return r;
}

// ---- xi-basis ------------------------------------------------------------------
// Certifies the triangular operator basis seed by seed: membership in the
// commutant, normalization on the orbit coordinates, integrality over an
// integral origin, and the top filtration layer matching the plain orbit
// operator in both directions.

inline SuiteResult suite_xi_basis(const Instance& ins) {
  const std::string name = "xi-basis";
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  if (cells > ins.caps.max_commutant_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_commutant_dim",
                                           ins.caps.max_commutant_dim));
  SuiteResult r;
  r.suite = name;
  bool integral = true;
  for (const Rat& x : ins.o.c) integral = integral && is_integer(x);
  SchurContext ctx{TensorSpace(ins.dg, ins.d, ins.o)};
  const TensorSpace& V = ctx.V;
  auto seeds = xi_seeds(ins.dg, ins.d);
  r.note("seed_count", static_cast<long>(seeds.size()));
  r.note("predicted_rank", schur_dimension(ins.dg, ins.d));
  r.note_flag("integral_origin", integral);
  r.check(Int(static_cast<long>(seeds.size())) == schur_dimension(ins.dg, ins.d),
          "seed count differs from the predicted dimension");
  std::map<int, size_t> jd_orbit_pos;
  for (size_t s = 0; s < seeds.size(); ++s) jd_orbit_pos[ctx.orbit_index.at(seeds[s])] = s;
  auto gens = generator_matrices(V);
  std::vector<SparseVec> tables;
  for (size_t s = 0; s < seeds.size(); ++s) {
    SparseVec tab = ctx.xi_table(seeds[s]);
    SparseMat M = ctx.orbit_matrix(tab);
    for (const auto& g : gens)
      r.check(M.commutes_with(g), "operator " + std::to_string(s) + " leaves the commutant");
    for (const auto& [oid, pos] : jd_orbit_pos) {
      auto it = tab.find(oid);
      Rat got = it == tab.end() ? rat(0) : it->second;
      r.check(got == (pos == s ? rat(1) : rat(0)),
              "orbit normalization broken at seed " + std::to_string(s));
    }
    if (integral)
      for (const auto& [key, val] : tab)
        r.check(is_integer(val), "non-integral coefficient over an integral origin at seed " +
                                     std::to_string(s));
    int deg = ctx.orbit_degree(ctx.orbit_index.at(seeds[s]));
    SparseVec top = ctx.matrix_orbit_table(V.xi_operator(seeds[s]));
    for (const auto& [key, val] : tab) {
      r.check(ctx.orbit_degree(key) <= deg,
              "coefficient above the leading filtration degree at seed " + std::to_string(s));
      if (ctx.orbit_degree(key) == deg) {
        auto it = top.find(key);
        r.check(it != top.end() && it->second == val,
                "leading layer differs from the graded operator at seed " + std::to_string(s));
      }
    }
    for (const auto& [key, val] : top) {
      auto it = tab.find(key);
      r.check(it != tab.end() && it->second == val,
              "graded operator has an orbit missing from the leading layer at seed " +
                  std::to_string(s));
    }
    tables.push_back(std::move(tab));
  }
  long rank = span_rank(tables);
  r.note("span_rank", rank);
  r.check(rank == static_cast<long>(seeds.size()), "operator tables are linearly dependent");
  return r;
}

// ---- symmetrizing-form -----------------------------------------------------------
// The trace form is symmetric on all basis-monomial pairs and its Gram matrix
// is nonsingular, so the form is symmetrizing and nondegenerate.

inline SuiteResult suite_symmetrizing_form(const Instance& ins) {
  const std::string name = "symmetrizing-form";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  SuiteResult r;
  r.suite = name;
  HeckeAlg H(ins.d, ins.dg.column_params(ins.o));
  auto G = H.gram_matrix();
  const size_t n = G.size();
  r.note("hecke_dim", hdim);
  long pairs = 0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      ++pairs;
      r.check(G[a][b] == G[b][a], "trace form is not symmetric at pair (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
    }
  r.note("symmetry_pairs", pairs);
  Echelon rows;
  for (size_t a = 0; a < n; ++a) {
    SparseVec v;
    for (size_t b = 0; b < n; ++b)
      if (G[a][b] != 0) v[static_cast<int64_t>(b)] = G[a][b];
    rows.insert(v);
  }
  r.note("gram_rank", static_cast<long>(rows.rank()));
  r.check(rows.rank() == static_cast<int>(n), "Gram matrix is singular: rank " +
                                                  std::to_string(rows.rank()) + " < " +
                                                  std::to_string(n));
  return r;
}

// ---- idempotents -----------------------------------------------------------------
// Weight idempotents are orthogonal, sum to the identity, commute with the
// action, and cutting the operator basis to a weight space leaves exactly the
// divided-power dimension.

inline SuiteResult suite_idempotents(const Instance& ins) {
  const std::string name = "idempotents";
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  if (cells > ins.caps.max_commutant_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_commutant_dim",
                                           ins.caps.max_commutant_dim));
  SuiteResult r;
  r.suite = name;
  SchurContext ctx{TensorSpace(ins.dg, ins.d, ins.o)};
  const TensorSpace& V = ctx.V;
  auto idem = enumerate_idem_d(ins.dg, ins.d);
  r.note("idempotent_count", static_cast<long>(idem.size()));
  auto gens = generator_matrices(V);
  std::vector<SparseVec> tables;
  for (const auto& seed : xi_seeds(ins.dg, ins.d)) tables.push_back(ctx.xi_table(seed));
  SparseMat sum(V.dim(), V.dim());
  std::vector<SparseMat> projectors;
  for (const auto& A : idem) {
    SparseMat eA = weight_idempotent(V, A);
    r.check(eA * eA == eA, "weight projector is not idempotent");
    for (const auto& g : gens)
      r.check(eA.commutes_with(g), "weight projector does not commute with the action");
    Int wdim = weight_space_dimension(ins.dg, A);
    r.check(Int(static_cast<long>(eA.nnz())) == wdim,
            "weight space dimension mismatch at tableau " + tableau_str(A));
    std::vector<int> rowms = row_multiset(ins.dg, index_of_tableau_boxes(A));
    std::vector<SparseVec> restricted;
    for (const auto& tab : tables) restricted.push_back(ctx.restrict_rows(tab, rowms, false));
    Int ddim = divided_power_dimension(ins.dg, A);
    long cut_rank = span_rank(restricted);
    r.check(Int(cut_rank) == ddim,
            "cut operator-basis rank mismatch at tableau " + tableau_str(A));
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("tableau", tableau_str(A));
    row.emplace_back("weight_dim", wdim.get_str());
    row.emplace_back("divided_power_rank", std::to_string(cut_rank));
    r.details.push_back(std::move(row));
    sum = sum + eA;
    projectors.push_back(std::move(eA));
  }
  r.check(sum == SparseMat::identity(V.dim()), "weight projectors do not sum to the identity");
  for (size_t a = 0; a < projectors.size(); ++a)
    for (size_t b = 0; b < projectors.size(); ++b)
      if (a != b)
        r.check((projectors[a] * projectors[b]).is_zero(),
                "weight projectors are not orthogonal");
  return r;
}

// ---- permutation ------------------------------------------------------------------
// Cyclic modules generated by the special elements: the generator pair
// commutes, the represented dimension matches the closed formula (with an
// explicit independent basis) whenever the representation is faithful, and on
// idempotent tableaux it matches the weight-space dimension.

inline SuiteResult suite_permutation(const Instance& ins) {
  const std::string name = "permutation";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  TensorSpace V(ins.dg, ins.d, ins.o);
  HeckeAlg H = V.algebra();
  MonomialCoords coords(H);
  bool faithful = ins.dg.q[ins.dg.l - 1] >= ins.d;
  r.note_flag("faithful_instance", faithful);
  auto tabs = enumerate_tab_d(ins.dg, ins.d);
  r.note("tableau_count", static_cast<long>(tabs.size()));
  for (const auto& A : tabs) {
    SpecialElements se = special_elements(H, ins.dg, ins.o, A);
    r.check(H.mul(se.xA, se.wA) == H.mul(se.wA, se.xA),
            "generator factors do not commute at tableau " + tableau_str(A));
    long realized = permutation_module_dimension(V, H, se.gen);
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("tableau", tableau_str(A));
    row.emplace_back("dim", std::to_string(realized));
    if (faithful) {
      Int formula = permutation_module_formula(ins.dg, A);
      row.emplace_back("formula_dim", formula.get_str());
      auto basis = permutation_module_basis(H, ins.dg, ins.o, A);
      r.check(Int(static_cast<long>(basis.size())) == formula,
              "explicit basis has the wrong size at tableau " + tableau_str(A));
      Echelon span;
      long rank = 0;
      for (const auto& b : basis)
        if (span.insert(coords.vec(b))) ++rank;
      r.check(rank == static_cast<long>(basis.size()),
              "explicit basis is dependent at tableau " + tableau_str(A));
      r.check(Int(realized) == formula,
              "module dimension differs from the formula at tableau " + tableau_str(A));
    }
    if (is_idempotent_tableau(A, ins.d)) {
      Int wdim = weight_space_dimension(ins.dg, A);
      row.emplace_back("weight_dim", wdim.get_str());
      r.check(Int(realized) == wdim,
              "module dimension differs from the weight space at tableau " + tableau_str(A));
    }
    r.details.push_back(std::move(row));
  }
  return r;
}

// ---- specht -----------------------------------------------------------------------
// Builds every induced seminormal module over the instance origin and runs the
// full relation suite on its operators: involutions, braid, commuting pairs,
// the mixed relation, and the defining polynomial of the first generator.
// Operators represent a right action, so act(ab) = act(b)·act(a).

inline SuiteResult suite_specht(const Instance& ins) {
  const std::string name = "specht";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  SuiteResult r;
  r.suite = name;
  HeckeAlg H(ins.d, ins.dg.column_params(ins.o));
  auto cols = enumerate_col_c_d(ins.dg, ins.o, ins.d);
  r.note("module_count", static_cast<long>(cols.size()));
  Int total = 0;
  for (const auto& B : cols) {
    SpechtModule sm(ins.dg, ins.o, B);
    long dim = sm.dim();
    Int want = sm.formula_dim();
    total += dim;
    r.check(Int(dim) == want, "dimension differs from the hook formula at tableau " +
                                  tableau_str(B));
    SparseMat I = SparseMat::identity(dim);
    r.check(sm.operator_of(H, H.one()) == I, "identity does not act as the identity at tableau " +
                                                 tableau_str(B));
    std::vector<SparseMat> X, S;
    for (int j = 1; j <= ins.d; ++j) X.push_back(sm.operator_of(H, H.x(j)));
    for (int i = 0; i + 1 < ins.d; ++i)
      S.push_back(sm.operator_of(H, H.group(perm_adjacent(ins.d, i))));
    const std::string at = " at tableau " + tableau_str(B);
    for (size_t i = 0; i < S.size(); ++i)
      r.check(S[i] * S[i] == I, "transposition is not an involution" + at);
    for (size_t i = 0; i + 1 < S.size(); ++i)
      r.check(S[i] * S[i + 1] * S[i] == S[i + 1] * S[i] * S[i + 1], "braid relation fails" + at);
    for (size_t i = 0; i < S.size(); ++i)
      for (size_t j = i + 2; j < S.size(); ++j)
        r.check(S[i] * S[j] == S[j] * S[i], "distant transpositions do not commute" + at);
    for (size_t a = 0; a < X.size(); ++a)
      for (size_t b = a + 1; b < X.size(); ++b)
        r.check(X[a] * X[b] == X[b] * X[a], "polynomial generators do not commute" + at);
    for (size_t i = 0; i < S.size(); ++i)
      for (size_t j = 0; j < X.size(); ++j) {
        if (j == i || j == i + 1) continue;
        r.check(S[i] * X[j] == X[j] * S[i],
                "distant transposition and polynomial generator do not commute" + at);
      }
    for (size_t i = 0; i < S.size(); ++i)
      r.check(X[i + 1] * S[i] == S[i] * X[i] + I, "mixed relation fails" + at);
    if (ins.d >= 1) {
      SparseMat prod = SparseMat::identity(dim);
      for (const Rat& q : H.Q) prod = prod * mat_sub(X[0], I.scaled(q));
      r.check(prod.is_zero(), "defining polynomial does not annihilate" + at);
    }
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("tableau", tableau_str(B));
    row.emplace_back("dim", std::to_string(dim));
    row.emplace_back("formula_dim", want.get_str());
    r.details.push_back(std::move(row));
  }
  r.note("total_dim", total);
  return r;
}

// ---- kostka-lemma-s ----------------------------------------------------------------
// For every weight tableau, the filling counts weighted by the per-column
// classical dimensions add up to the divided-power dimension.  Pure
// combinatorics; the only guard is on the enumeration size.

inline SuiteResult suite_kostka_lemma_s(const Instance& ins) {
  const std::string name = "kostka-lemma-s";
  Int tab_count = binomial(static_cast<unsigned long>(ins.dg.N + ins.d - 1),
                           static_cast<unsigned long>(ins.d));
  if (tab_count > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("weight tableau family size", tab_count,
                                           "max_tensor_dim", ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  auto cols = enumerate_col_c_d(ins.dg, ins.o, ins.d);
  auto tabs = enumerate_tab_d(ins.dg, ins.d);
  r.note("tableau_count", static_cast<long>(tabs.size()));
  r.note("column_strict_count", static_cast<long>(cols.size()));
  for (const auto& A : tabs) {
    Int sum = 0;
    for (const auto& B : cols) sum += kostka_count(B, A, ins.o) * weyl_dim(B);
    Int want = divided_power_dimension(ins.dg, A);
    r.check(sum == want, "weighted filling count " + sum.get_str() + " != divided-power dim " +
                             want.get_str() + " at tableau " + tableau_str(A));
  }
  return r;
}

// ---- specht-flag -------------------------------------------------------------------
// Dimension shadow of the module filtration: for every weight tableau the
// represented cyclic module dimension decomposes as the filling-count-weighted
// sum of the induced module dimensions.

inline SuiteResult suite_specht_flag(const Instance& ins) {
  const std::string name = "specht-flag";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  TensorSpace V(ins.dg, ins.d, ins.o);
  HeckeAlg H = V.algebra();
  auto cols = enumerate_col_c_d(ins.dg, ins.o, ins.d);
  std::vector<long> sdim;
  sdim.reserve(cols.size());
  for (const auto& B : cols) sdim.push_back(SpechtModule(ins.dg, ins.o, B).dim());
  auto tabs = enumerate_tab_d(ins.dg, ins.d);
  r.note("tableau_count", static_cast<long>(tabs.size()));
  r.note("module_count", static_cast<long>(cols.size()));
  for (const auto& A : tabs) {
    long realized = permutation_module_dimension(V, H, special_elements(H, ins.dg, ins.o, A).gen);
    Int sum = 0;
    for (size_t k = 0; k < cols.size(); ++k)
      sum += kostka_count(cols[k], A, ins.o) * Int(sdim[k]);
    r.check(Int(realized) == sum, "module dimension " + std::to_string(realized) +
                                      " != filtration sum " + sum.get_str() + " at tableau " +
                                      tableau_str(A));
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("tableau", tableau_str(A));
    row.emplace_back("dim", std::to_string(realized));
    row.emplace_back("flag_sum", sum.get_str());
    r.details.push_back(std::move(row));
  }
  return r;
}

// ---- dipper-mathas -----------------------------------------------------------------
// When the origin splits the columns into two groups with no integer
// difference across the cut, the represented algebra dimension factors as the
// binomially weighted product of the two groups' dimensions.

inline SuiteResult suite_dipper_mathas(const Instance& ins) {
  const std::string name = "dipper-mathas";
  const auto& c = ins.o.c;
  const int l = ins.dg.l;
  int split = 0;
  for (int k = 1; k < l && split == 0; ++k) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      for (int j = k + 1; j <= l && ok; ++j)
        if (is_integer(c[i - 1] - c[j - 1])) ok = false;
    if (ok) split = k;
  }
  if (split == 0) {
    if (l == 1)
      return SuiteResult::skip(name, "the origin has a single column; no split exists", true);
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j)
        if (is_integer(c[i - 1] - c[j - 1]))
          return SuiteResult::skip(
              name,
              "no column split: origin entries " + rat_str(c[i - 1]) + " (column " +
                  std::to_string(i) + ") and " + rat_str(c[j - 1]) + " (column " +
                  std::to_string(j) + ") differ by an integer",
              true);
    return SuiteResult::skip(name, "no contiguous column split exists", true);
  }
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  ColumnSplit cs = split_columns(ins.dg, ins.o, split);
  r.note("split_point", static_cast<long>(split));
  r.note("left_parts", parts_str(cs.left.parts));
  r.note("right_parts", parts_str(cs.right.parts));
  for (int dd = 0; dd <= ins.d; ++dd) {
    long lhs = image_rank(ins.dg, ins.o, dd);
    Int rhs = split_rank_sum(ins.dg, ins.o, split, dd);
    r.check(Int(lhs) == rhs, "represented dimension " + std::to_string(lhs) +
                                 " != split sum " + rhs.get_str() + " at " + std::to_string(dd) +
                                 " strands");
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("strands", std::to_string(dd));
    row.emplace_back("image_rank", std::to_string(lhs));
    row.emplace_back("split_sum", rhs.get_str());
    r.details.push_back(std::move(row));
  }
  return r;
}

// ---- row-removal -------------------------------------------------------------------
// For every truncation keeping the shortest rows: the box re-embedding
// intertwines all generator actions, the induced projector is idempotent, and
// compressing the big action recovers the small one monomial by monomial, so
// the induced map on represented algebras is surjective.

inline SuiteResult suite_row_removal(const Instance& ins) {
  const std::string name = "row-removal";
  Int hdim = hecke_cells(ins.dg, ins.d);
  if (hdim > ins.caps.max_hecke_dim)
    return SuiteResult::skip(
        name, cap_msg("strand algebra dimension", hdim, "max_hecke_dim", ins.caps.max_hecke_dim));
  Int cells = tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim)
    return SuiteResult::skip(name, cap_msg("tensor space dimension", cells, "max_tensor_dim",
                                           ins.caps.max_tensor_dim));
  SuiteResult r;
  r.suite = name;
  TensorSpace V(ins.dg, ins.d, ins.o);
  HeckeAlg H = V.algebra();
  auto gens_big = generator_matrices(V);
  auto monos = H.basis_monomials();
  std::vector<SparseMat> big_acts;
  big_acts.reserve(monos.size());
  Echelon big_span;
  for (const auto& m : monos) {
    big_acts.push_back(V.act(H.monomial(m.r, m.w)));
    big_span.insert(big_acts.back().flat());
  }
  long rank_big = big_span.rank();
  r.note("image_rank", rank_big);
  for (int kept = 1; kept <= ins.dg.n; ++kept) {
    RowRemoval rr(ins.dg, ins.o, kept);
    TensorSpace Vs(rr.small, ins.d, rr.small_origin);
    SparseMat E = RowRemoval::embedding(Vs, V);
    SparseMat P = E.transpose();
    SparseMat e = E * P;
    const std::string at = " at truncation " + parts_str(rr.small.parts);
    r.check(e * e == e, "re-embedding projector is not idempotent" + at);
    auto gens_small = generator_matrices(Vs);
    for (size_t g = 0; g < gens_small.size(); ++g)
      r.check(E * gens_small[g] == gens_big[g] * E,
              "embedding does not intertwine generator " + std::to_string(g) + at);
    Echelon small_span;
    for (size_t k = 0; k < monos.size(); ++k) {
      SparseMat Ms = Vs.act(H.monomial(monos[k].r, monos[k].w));
      r.check(P * big_acts[k] * E == Ms,
              "compressed action differs from the truncated action at monomial " +
                  std::to_string(k) + at);
      small_span.insert(Ms.flat());
    }
    long rank_small = small_span.rank();
    r.check(rank_small <= rank_big, "truncated image rank exceeds the full image rank" + at);
    std::vector<std::pair<std::string, std::string>> row;
    row.emplace_back("kept_rows", std::to_string(kept));
    row.emplace_back("small_parts", parts_str(rr.small.parts));
    row.emplace_back("small_rank", std::to_string(rank_small));
    r.details.push_back(std::move(row));
  }
  return r;
}

// ---- registry ----------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dipper-mathas",
                                                 "double-centralizer-filtered",
                                                 "double-centralizer-graded",
                                                 "hecke-basis",
                                                 "idempotents",
                                                 "kostka-lemma-s",
                                                 "min-poly",
                                                 "permutation",
                                                 "row-removal",
                                                 "specht",
                                                 "specht-flag",
                                                 "symmetrizing-form",
                                                 "xi-basis"};
  return names;
}

inline bool known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

inline SuiteResult run_suite(const std::string& name, const Instance& ins) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  if (name == "hecke-basis")
    r = suite_hecke_basis(ins);
  else if (name == "min-poly")
    r = suite_min_poly(ins);
  else if (name == "double-centralizer-graded")
    r = suite_double_centralizer(ins, true);
  else if (name == "double-centralizer-filtered")
    r = suite_double_centralizer(ins, false);
  else if (name == "xi-basis")
    r = suite_xi_basis(ins);
  else if (name == "symmetrizing-form")
    r = suite_symmetrizing_form(ins);
  else if (name == "idempotents")
    r = suite_idempotents(ins);
  else if (name == "permutation")
    r = suite_permutation(ins);
  else if (name == "specht")
    r = suite_specht(ins);
  else if (name == "kostka-lemma-s")
    r = suite_kostka_lemma_s(ins);
  else if (name == "specht-flag")
    r = suite_specht_flag(ins);
  else if (name == "dipper-mathas")
    r = suite_dipper_mathas(ins);
  else if (name == "row-removal")
    r = suite_row_removal(ins);
  else
    throw std::invalid_argument("unknown suite: " + name);
  auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

// All suites in name order; skipped entries carry their reasons.
inline std::vector<SuiteResult> run_all_suites(const Instance& ins) {
  std::vector<SuiteResult> out;
  out.reserve(suite_names().size());
  for (const auto& n : suite_names()) out.push_back(run_suite(n, ins));
  return out;
}

}  // namespace swl
