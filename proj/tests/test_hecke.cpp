// The level-l strand algebra: rewriting engine, trace form, parabolic helpers.
#include <catch2/catch_amalgamated.hpp>

#include <swl/hecke.hpp>

#include <random>
#include <set>

using namespace swl;

namespace {

HElt random_element(const HeckeAlg& H, std::mt19937& rng, int nterms = 3) {
  auto basis = H.basis_monomials();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  HElt e;
  for (int t = 0; t < nterms; ++t) hadd(e, basis[pick(rng)], rat(num(rng), den(rng)));
  return e;
}

void check_relations(const HeckeAlg& H) {
  const int d = H.d, l = H.l;
  INFO("d=" << d << " l=" << l);
  // Defining polynomial of x_1 vanishes.
  HElt cyc = H.one();
  for (const Rat& q : H.Q) cyc = H.mul(cyc, hdiff(H.x(1), H.scalar(q)));
  CHECK(cyc.empty());
  for (int i = 1; i < d; ++i) {
    CHECK(H.mul(H.s(i), H.s(i)) == H.one());
    // s_i x_{i+1} = x_i s_i + 1
    CHECK(H.mul(H.s(i), H.x(i + 1)) == hsum(H.mul(H.x(i), H.s(i)), H.one()));
    // x_{i+1} = s_i x_i s_i + s_i
    CHECK(H.x(i + 1) == hsum(H.mul(H.mul(H.s(i), H.x(i)), H.s(i)), H.s(i)));
    for (int j = 1; j <= d; ++j)
      if (j != i && j != i + 1) CHECK(H.mul(H.s(i), H.x(j)) == H.mul(H.x(j), H.s(i)));
    if (i + 2 < d + 1 && i + 1 < d)
      CHECK(H.mul(H.mul(H.s(i), H.s(i + 1)), H.s(i)) ==
            H.mul(H.mul(H.s(i + 1), H.s(i)), H.s(i + 1)));
    for (int j = i + 2; j < d; ++j) CHECK(H.mul(H.s(i), H.s(j)) == H.mul(H.s(j), H.s(i)));
  }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) CHECK(H.mul(H.x(i), H.x(j)) == H.mul(H.x(j), H.x(i)));
  // Everything stays in normal form.
  std::mt19937 rng(7 + d + 10 * l);
  for (int t = 0; t < 10; ++t) {
    HElt a = random_element(H, rng), b = random_element(H, rng);
    CHECK(H.is_normal(H.mul(a, b)));
  }
}

}  // namespace

TEST_CASE("defining relations across levels and strand counts") {
  check_relations(HeckeAlg(1, {rat(0)}));
  check_relations(HeckeAlg(2, {rat(0)}));
  check_relations(HeckeAlg(3, {rat(0)}));
  check_relations(HeckeAlg(1, {rat(0), rat(-1)}));
  check_relations(HeckeAlg(2, {rat(0), rat(-1)}));
  check_relations(HeckeAlg(3, {rat(0), rat(-1)}));
  check_relations(HeckeAlg(2, {rat(0), rat(-1, 2)}));
  check_relations(HeckeAlg(2, {rat(1, 3), rat(-2), rat(5)}));
  check_relations(HeckeAlg(3, {rat(1, 3), rat(-2), rat(5)}));
  check_relations(HeckeAlg(2, {rat(0), rat(0), rat(-1, 2), rat(-5, 2)}));
}

TEST_CASE("multiplication is associative (rewriting oracle)") {
  for (const HeckeAlg& H : {HeckeAlg(2, {rat(0), rat(-1)}), HeckeAlg(3, {rat(0), rat(-1)}),
                            HeckeAlg(2, {rat(1, 3), rat(-2), rat(5)}),
                            HeckeAlg(3, {rat(0), rat(-1, 2)})}) {
    std::mt19937 rng(99 + H.d + 7 * H.l);
    for (int t = 0; t < 15; ++t) {
      HElt a = random_element(H, rng), b = random_element(H, rng), c = random_element(H, rng);
      CHECK(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)));
    }
  }
}

TEST_CASE("pinned products at level two") {
  HeckeAlg H(2, {rat(0), rat(-1)});
  // x_1^2 = -x_1 when the defining roots are {0,-1}.
  CHECK(H.mul(H.x(1), H.x(1)) == hscale(H.x(1), rat(-1)));
  // s_1 x_1 s_1 = x_2 - s_1
  CHECK(H.mul(H.mul(H.s(1), H.x(1)), H.s(1)) == hdiff(H.x(2), H.s(1)));
  // Power reduction agrees between repeated products and direct normalization.
  HeckeAlg H3(2, {rat(1, 3), rat(-2), rat(5)});
  for (int j = 1; j <= 2; ++j)
    for (int k = 3; k <= 7; ++k) {
      std::vector<int> r(2, 0);
      r[j - 1] = k;
      CHECK(H3.monomial(r, perm_identity(2)) == H3.power(H3.x(j), k));
    }
}

TEST_CASE("trace form is symmetrizing with nonsingular Gram matrix") {
  HeckeAlg h21(1, {rat(0), rat(-1)});
  CHECK(h21.trace_form(h21.one()) == 0);
  CHECK(h21.trace_form(h21.x(1)) == 1);
  CHECK(h21.trace_form(h21.mul(h21.x(1), h21.x(1))) == -1);
  auto G = h21.gram_matrix();
  REQUIRE(G.size() == 2);
  CHECK(G[0][0] == 0);
  CHECK(G[0][1] == 1);
  CHECK(G[1][0] == 1);
  CHECK(G[1][1] == -1);

  for (const HeckeAlg& H :
       {HeckeAlg(2, {rat(0)}), HeckeAlg(1, {rat(0), rat(-1)}), HeckeAlg(2, {rat(0), rat(-1)}),
        HeckeAlg(2, {rat(0), rat(-1, 2)})}) {
    INFO("d=" << H.d << " l=" << H.l);
    auto basis = H.basis_monomials();
    CHECK(basis.size() == static_cast<size_t>(to_long(Int(ipow(H.l, H.d) * factorial(H.d)))));
    std::vector<HElt> be;
    for (const auto& m : basis) {
      HElt e;
      hadd(e, m, rat(1));
      be.push_back(e);
    }
    for (const auto& a : be)
      for (const auto& b : be) CHECK(H.trace_form(H.mul(a, b)) == H.trace_form(H.mul(b, a)));
    auto gram = H.gram_matrix();
    Echelon rows;
    for (const auto& row : gram) {
      SparseVec v;
      for (size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) v[static_cast<int64_t>(c)] = row[c];
      rows.insert(v);
    }
    CHECK(rows.rank() == static_cast<int>(basis.size()));
  }
}

TEST_CASE("top polynomial monomial is central") {
  for (const HeckeAlg& H : {HeckeAlg(2, {rat(0), rat(-1)}), HeckeAlg(2, {rat(1, 3), rat(-2), rat(5)}),
                            HeckeAlg(3, {rat(0), rat(-1, 2)})}) {
    HElt z = H.one();
    for (int j = 1; j <= H.d; ++j) z = H.mul(z, H.power(H.x(j), H.l - 1));
    for (int j = 1; j <= H.d; ++j) CHECK(H.mul(z, H.x(j)) == H.mul(H.x(j), z));
    for (int i = 1; i < H.d; ++i) CHECK(H.mul(z, H.s(i)) == H.mul(H.s(i), z));
  }
}

TEST_CASE("text grammar round-trips") {
  HeckeAlg H(3, {rat(0), rat(-1)});
  HElt e = hsum(hscale(H.mul(H.x(1), H.s(2)), rat(3, 2)), hscale(H.group(perm_adjacent(3, 0)), rat(-1, 4)));
  std::string s = H.to_string(e);
  CHECK(H.parse(s) == e);
  CHECK(H.to_string(H.parse(s)) == s);
  CHECK(H.parse("0").empty());
  CHECK(H.to_string(H.zero()) == "0");
  // A concrete literal parses to the expected monomial.
  HElt lit = H.parse("3/2*x1^1*x2^0*x3^0*[2,1,3]");
  HElt expect;
  hadd(expect, Mono{{1, 0, 0}, {1, 0, 2}}, rat(3, 2));
  CHECK(lit == expect);
  CHECK_THROWS_AS(H.parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(H.parse("1*x1^1*[2,1,3]"), std::invalid_argument);
  // Unnormalized exponents normalize on parse: x1^2 = -x1 at roots {0,-1}.
  CHECK(H.parse("1*x1^2*x2^0*x3^0*[1,2,3]") == hscale(H.x(1), rat(-1)));
}

TEST_CASE("parabolic subgroup and coset representatives") {
  auto sub = young_subgroup({2, 1});
  CHECK(sub.size() == 2);
  CHECK(young_subgroup({1, 1, 1}).size() == 1);
  CHECK(young_subgroup({3}).size() == 6);
  CHECK(young_subgroup({2, 0, 2}).size() == 4);

  auto reps = parabolic_coset_reps(3, {2, 1});
  CHECK(reps.size() == 3);
  for (const auto& w : reps) CHECK(w[0] < w[1]);  // sorted inside the first block

  // Every permutation decomposes uniquely as rep * block element.
  for (const std::vector<int>& sizes :
       {std::vector<int>{2, 1}, std::vector<int>{1, 2}, std::vector<int>{3}, std::vector<int>{1, 1, 1}}) {
    auto rr = parabolic_coset_reps(3, sizes);
    auto uu = young_subgroup(sizes);
    CHECK(rr.size() * uu.size() == 6);
    std::set<Perm> seen;
    for (const auto& sigma : rr)
      for (const auto& u : uu) seen.insert(perm_compose(sigma, u));
    CHECK(seen.size() == 6);
    for (const auto& tau : all_perms(3)) {
      auto [sigma, u] = coset_decompose(tau, sizes);
      CHECK(perm_compose(sigma, u) == tau);
      CHECK(preserves_blocks(u, sizes));
      CHECK(std::find(rr.begin(), rr.end(), sigma) != rr.end());
    }
  }
}

TEST_CASE("zero-strand edge cases") {
  HeckeAlg H(0, {rat(0), rat(-1)});
  CHECK(H.basis_monomials().size() == 1);
  CHECK(H.mul(H.one(), H.one()) == H.one());
  CHECK(H.trace_form(H.one()) == 1);  // the empty monomial is the top monomial
  CHECK(H.to_string(H.one()) == "1*[]");
}
