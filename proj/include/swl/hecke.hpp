#pragma once
// The finite-dimensional quotient H of the degenerate affine algebra on d
// strands at level l: generated by commuting x_1..x_d and the symmetric group
// s_1..s_{d-1} subject to
//   s_i x_j = x_j s_i          (j not in {i, i+1})
//   s_i x_{i+1} = x_i s_i + 1
//   prod_{m=1}^{l} (x_1 - Q_m) = 0.
// Elements are kept in normal form: sums of monomials x_1^{r_1}..x_d^{r_d} w
// with every r_k < l and w a permutation; these monomials are a basis of
// dimension l^d * d!.

#include <swl/linalg.hpp>
#include <swl/permutation.hpp>
#include <swl/rational.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swl {

struct Mono {
  std::vector<int> r;  // exponents, slot k holds power of x_{k+1}
  Perm w;
  auto operator<=>(const Mono&) const = default;
};

using HElt = std::map<Mono, Rat>;

inline void hadd(HElt& e, const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = e.try_emplace(m, Rat(0));
  it->second += c;
  if (it->second == 0) e.erase(it);
}

inline HElt hscale(const HElt& e, const Rat& c) {
  HElt out;
  if (c == 0) return out;
  for (const auto& [m, v] : e) out.emplace(m, v * c);
  return out;
}

inline HElt hsum(const HElt& a, const HElt& b) {
  HElt out = a;
  for (const auto& [m, v] : b) hadd(out, m, v);
  return out;
}

inline HElt hdiff(const HElt& a, const HElt& b) {
  HElt out = a;
  for (const auto& [m, v] : b) hadd(out, m, -v);
  return out;
}

class HeckeAlg {
 public:
  int d;               // strand count
  int l;               // level = degree of the polynomial relation on x_1
  std::vector<Rat> Q;  // roots of that relation
  Poly cyc;            // monic prod (x - Q_m), ascending coefficients

  HeckeAlg(int d_, std::vector<Rat> Q_) : d(d_), l(static_cast<int>(Q_.size())), Q(std::move(Q_)) {
    if (d < 0) throw std::invalid_argument("negative strand count");
    if (l < 1) throw std::invalid_argument("level must be at least 1");
    cyc = poly_from_roots(Q);
  }

  // ---- element constructors -------------------------------------------------

  HElt zero() const { return {}; }

  HElt one() const {
    HElt e;
    e.emplace(Mono{std::vector<int>(d, 0), perm_identity(d)}, Rat(1));
    return e;
  }

  HElt monomial(std::vector<int> r, Perm w, Rat c = Rat(1)) const {
    if (static_cast<int>(r.size()) != d || static_cast<int>(w.size()) != d)
      throw std::invalid_argument("monomial arity mismatch");
    HElt e;
    hadd(e, Mono{std::move(r), std::move(w)}, c);
    return normalize(e);
  }

  // x_j, 1-based.
  HElt x(int j) const {
    if (j < 1 || j > d) throw std::invalid_argument("polynomial generator out of range");
    std::vector<int> r(d, 0);
    r[j - 1] = 1;
    HElt e;
    hadd(e, Mono{std::move(r), perm_identity(d)}, Rat(1));
    return normalize(e);  // collapses to a scalar when l = 1
  }

  // s_i, 1-based, swaps strands i and i+1.
  HElt s(int i) const {
    if (i < 1 || i >= d) throw std::invalid_argument("transposition generator out of range");
    HElt e;
    hadd(e, Mono{std::vector<int>(d, 0), perm_adjacent(d, i - 1)}, Rat(1));
    return e;
  }

  HElt group(const Perm& w) const {
    HElt e;
    hadd(e, Mono{std::vector<int>(d, 0), w}, Rat(1));
    return e;
  }

  HElt scalar(const Rat& c) const { return hscale(one(), c); }

  // ---- products ---------------------------------------------------------------

  // Left product by s_i on one monomial, valid for arbitrary exponents:
  //   s_i x_i^p x_{i+1}^q = x_i^q x_{i+1}^p s_i
  //                       + sum_{a+b=q-1} x_i^a x_{i+1}^{b+p}
  //                       - sum_{a+b=p-1} x_i^a x_{i+1}^{b+q}.
  void lmul_s_term(int i, const Mono& m, const Rat& c, HElt& out) const {
    const int p = m.r[i - 1], q = m.r[i];
    Mono main = m;
    std::swap(main.r[i - 1], main.r[i]);
    main.w = perm_compose(perm_adjacent(d, i - 1), m.w);
    hadd(out, main, c);
    for (int a = 0; a <= q - 1; ++a) {
      Mono t = m;
      t.r[i - 1] = a;
      t.r[i] = (q - 1 - a) + p;
      hadd(out, t, c);
    }
    for (int a = 0; a <= p - 1; ++a) {
      Mono t = m;
      t.r[i - 1] = a;
      t.r[i] = (p - 1 - a) + q;
      hadd(out, t, -c);
    }
  }

  HElt lmul_s(int i, const HElt& e) const {
    HElt out;
    for (const auto& [m, c] : e) lmul_s_term(i, m, c, out);
    return out;
  }

  // Right product by s_i: (x^r w) s_i = x^r (w o s_i); no rewriting needed.
  HElt rmul_s(int i, const HElt& e) const {
    HElt out;
    const Perm si = perm_adjacent(d, i - 1);
    for (const auto& [m, c] : e) hadd(out, Mono{m.r, perm_compose(m.w, si)}, c);
    return out;
  }

  // Left product by a permutation (folded over a reduced word).
  HElt lmul_perm(const Perm& w, const HElt& e) const {
    auto word = perm_reduced_word(w);
    HElt cur = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = lmul_s(*it + 1, cur);
    return cur;
  }

  HElt mul(const HElt& a, const HElt& b) const {
    HElt raw;
    std::map<Perm, HElt> mid_cache;
    for (const auto& [ma, ca] : a) {
      auto it = mid_cache.find(ma.w);
      if (it == mid_cache.end()) it = mid_cache.emplace(ma.w, lmul_perm(ma.w, b)).first;
      for (const auto& [mm, cm] : it->second) {
        Mono nm = mm;
        for (int t = 0; t < d; ++t) nm.r[t] += ma.r[t];
        hadd(raw, nm, ca * cm);
      }
    }
    return normalize(raw);
  }

  HElt power(const HElt& a, int k) const {
    HElt p = one();
    for (int t = 0; t < k; ++t) p = mul(p, a);
    return p;
  }

  // ---- normal form ------------------------------------------------------------

  bool is_normal(const HElt& e) const {
    for (const auto& [m, c] : e)
      for (int t = 0; t < d; ++t)
        if (m.r[t] >= l) return false;
    return true;
  }

  HElt normalize(const HElt& raw) const {
    HElt out;
    std::vector<std::pair<Mono, Rat>> work(raw.begin(), raw.end());
    while (!work.empty()) {
      auto [m, c] = std::move(work.back());
      work.pop_back();
      if (c == 0) continue;
      int j = 0;  // 1-based first slot with overflow
      for (int t = 0; t < d; ++t)
        if (m.r[t] >= l) {
          j = t + 1;
          break;
        }
      if (j == 0) {
        hadd(out, m, c);
        continue;
      }
      const HElt& sub = reduce_power(j, m.r[j - 1]);
      for (const auto& [sm, sc] : sub) {
        Mono nm = sm;
        for (int t = 0; t < d; ++t)
          if (t != j - 1) nm.r[t] += m.r[t];
        nm.w = perm_compose(sm.w, m.w);
        work.emplace_back(std::move(nm), c * sc);
      }
    }
    return out;
  }

  // Normal form of the pure power x_j^k (memoized). All output exponents < l;
  // for k >= l the output's total degree is at most k-1, which grounds the
  // normalization recursion.
  const HElt& reduce_power(int j, int k) const {
    auto key = std::make_pair(j, k);
    auto it = power_cache_.find(key);
    if (it != power_cache_.end()) return it->second;
    HElt result;
    if (k < l) {
      std::vector<int> r(d, 0);
      r[j - 1] = k;
      hadd(result, Mono{std::move(r), perm_identity(d)}, Rat(1));
    } else if (j == 1) {
      // Polynomial division by the defining relation, in x_1 alone.
      std::vector<Rat> coeff(k + 1, Rat(0));
      coeff[k] = 1;
      for (int deg = k; deg >= l; --deg) {
        Rat c = coeff[deg];
        if (c == 0) continue;
        coeff[deg] = 0;
        for (int m = 0; m < l; ++m) coeff[deg - l + m] -= c * cyc[m];
      }
      for (int deg = 0; deg < l; ++deg) {
        if (coeff[deg] == 0) continue;
        std::vector<int> r(d, 0);
        r[0] = deg;
        hadd(result, Mono{std::move(r), perm_identity(d)}, coeff[deg]);
      }
    } else {
      // x_j^k = s_{j-1} x_{j-1}^k s_{j-1} + sum_{a+b=k-1} x_{j-1}^a x_j^b s_{j-1}
      const HElt inner = reduce_power(j - 1, k);  // copy: cache may rehash below
      HElt raw = rmul_s(j - 1, lmul_s(j - 1, inner));
      const Perm sj = perm_adjacent(d, j - 2);
      for (int a = 0; a <= k - 1; ++a) {
        std::vector<int> r(d, 0);
        r[j - 2] = a;
        r[j - 1] = k - 1 - a;
        hadd(raw, Mono{std::move(r), sj}, Rat(1));
      }
      result = normalize(raw);
    }
    return power_cache_.emplace(key, std::move(result)).first->second;
  }

  // ---- basis, trace form, Gram matrix ----------------------------------------

  // The l^d * d! normal monomials, exponent-major lexicographic order.
  std::vector<Mono> basis_monomials() const {
    std::vector<Mono> out;
    const auto perms = all_perms(d);
    std::vector<int> r(d, 0);
    while (true) {
      for (const Perm& w : perms) out.push_back(Mono{r, w});
      int t = d - 1;
      while (t >= 0 && r[t] == l - 1) {
        r[t] = 0;
        --t;
      }
      if (t < 0) break;
      ++r[t];
    }
    if (d == 0) out.assign(1, Mono{{}, {}});
    return out;
  }

  // Coefficient of x_1^{l-1}..x_d^{l-1} * identity in normal form.
  Rat trace_form(const HElt& e) const {
    Mono top{std::vector<int>(d, l - 1), perm_identity(d)};
    auto it = e.find(top);
    return it == e.end() ? Rat(0) : it->second;
  }

  std::vector<std::vector<Rat>> gram_matrix() const {
    auto basis = basis_monomials();
    const size_t n = basis.size();
    std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n));
    std::vector<HElt> be;
    be.reserve(n);
    for (const auto& m : basis) {
      HElt e;
      hadd(e, m, Rat(1));
      be.push_back(std::move(e));
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) G[a][b] = trace_form(mul(be[a], be[b]));
    return G;
  }

  // ---- text form ---------------------------------------------------------------
  // element := term (" + " term)* | "0"
  // term    := rat "*x1^" int "*x2^" int ... "*[" img1 "," ... ",imgd "]"
  // with the permutation written 1-based in one-line notation.

  std::string to_string(const HElt& e) const {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : e) {
      if (!out.empty()) out += " + ";
      out += rat_str(c);
      for (int t = 0; t < d; ++t)
        out += "*x" + std::to_string(t + 1) + "^" + std::to_string(m.r[t]);
      out += "*[";
      for (int t = 0; t < d; ++t) {
        if (t) out += ",";
        out += std::to_string(m.w[t] + 1);
      }
      out += "]";
    }
    return out;
  }

  HElt parse(const std::string& s) const {
    HElt out;
    if (s == "0") return out;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find(" + ", pos);
      std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
      pos = next == std::string::npos ? s.size() : next + 3;
      // coefficient
      size_t star = term.find('*');
      if (star == std::string::npos) {
        if (d != 0) throw std::invalid_argument("malformed term: " + term);
        star = term.size();
      }
      Rat c = parse_rat(term.substr(0, star));
      Mono m;
      m.r.assign(d, 0);
      size_t at = star;
      for (int t = 0; t < d; ++t) {
        std::string want = "*x" + std::to_string(t + 1) + "^";
        if (term.compare(at, want.size(), want) != 0)
          throw std::invalid_argument("malformed term: " + term);
        at += want.size();
        size_t end = at;
        while (end < term.size() && isdigit(term[end])) ++end;
        m.r[t] = std::stoi(term.substr(at, end - at));
        at = end;
      }
      if (d > 0) {
        if (term.compare(at, 2, "*[") != 0) throw std::invalid_argument("malformed term: " + term);
        at += 2;
        m.w.assign(d, 0);
        for (int t = 0; t < d; ++t) {
          size_t end = at;
          while (end < term.size() && isdigit(term[end])) ++end;
          m.w[t] = std::stoi(term.substr(at, end - at)) - 1;
          at = end;
          if (t + 1 < d) {
            if (at >= term.size() || term[at] != ',')
              throw std::invalid_argument("malformed term: " + term);
            ++at;
          }
        }
        if (at >= term.size() || term[at] != ']')
          throw std::invalid_argument("malformed term: " + term);
      }
      hadd(out, m, c);
    }
    return normalize(out);
  }

 private:
  mutable std::map<std::pair<int, int>, HElt> power_cache_;
};

// ---- parabolic (consecutive-block) subgroup machinery ------------------------

// Positions 1..d split into consecutive blocks of the given sizes (zeros allowed).
inline std::vector<std::pair<int, int>> block_ranges(const std::vector<int>& sizes) {
  std::vector<std::pair<int, int>> ranges;  // [start, end) 0-based
  int at = 0;
  for (int s : sizes) {
    ranges.emplace_back(at, at + s);
    at += s;
  }
  return ranges;
}

inline std::vector<Perm> young_subgroup(const std::vector<int>& sizes) {
  int d = 0;
  for (int s : sizes) d += s;
  std::vector<Perm> result{perm_identity(d)};
  int at = 0;
  for (int s : sizes) {
    if (s > 1) {
      std::vector<Perm> grown;
      for (const Perm& base : result) {
        Perm local(s);
        for (int t = 0; t < s; ++t) local[t] = t;
        do {
          Perm w = base;
          for (int t = 0; t < s; ++t) w[at + t] = base[at + local[t]];
          grown.push_back(w);
        } while (std::next_permutation(local.begin(), local.end()));
      }
      result = std::move(grown);
    }
    at += s;
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline bool preserves_blocks(const Perm& w, const std::vector<int>& sizes) {
  auto ranges = block_ranges(sizes);
  for (const auto& [lo, hi] : ranges)
    for (int t = lo; t < hi; ++t)
      if (w[t] < lo || w[t] >= hi) return false;
  return true;
}

// Minimal-length representatives of the left cosets w * (young subgroup):
// one-line values increase inside every block of positions.
inline std::vector<Perm> parabolic_coset_reps(int d, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) total += s;
  if (total != d) throw std::invalid_argument("block sizes do not sum to strand count");
  std::vector<Perm> reps;
  std::vector<int> values(d);
  for (int t = 0; t < d; ++t) values[t] = t;
  // Choose which values fall into each block; order within a block is forced.
  std::vector<int> assign(d, -1);
  auto rec = [&](auto&& self, int block, std::vector<int> remaining) -> void {
    if (block == static_cast<int>(sizes.size())) {
      auto ranges = block_ranges(sizes);
      Perm w(d);
      // assign[v] = block of value v; within a block values appear sorted
      std::vector<std::vector<int>> byblock(sizes.size());
      for (int v = 0; v < d; ++v) byblock[assign[v]].push_back(v);
      for (size_t bidx = 0; bidx < sizes.size(); ++bidx)
        for (int t = 0; t < sizes[bidx]; ++t) w[ranges[bidx].first + t] = byblock[bidx][t];
      reps.push_back(std::move(w));
      return;
    }
    // pick sizes[block] values from remaining
    const int need = sizes[block];
    std::vector<int> pick(need);
    auto choose = [&](auto&& chooser, int from, int got) -> void {
      if (got == need) {
        std::vector<int> rest;
        for (int v : remaining)
          if (std::find(pick.begin(), pick.end(), v) == pick.end()) rest.push_back(v);
        for (int v : pick) assign[v] = block;
        self(self, block + 1, rest);
        for (int v : pick) assign[v] = -1;
        return;
      }
      for (int idx = from; idx < static_cast<int>(remaining.size()); ++idx) {
        pick[got] = remaining[idx];
        chooser(chooser, idx + 1, got + 1);
      }
    };
    choose(choose, 0, 0);
  };
  std::vector<int> all(d);
  for (int t = 0; t < d; ++t) all[t] = t;
  rec(rec, 0, all);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// tau = sigma * u with sigma a minimal coset representative and u in the
// block subgroup: sigma sorts tau's one-line inside each block of positions.
inline std::pair<Perm, Perm> coset_decompose(const Perm& tau, const std::vector<int>& sizes) {
  Perm sigma = tau;
  for (const auto& [lo, hi] : block_ranges(sizes))
    std::sort(sigma.begin() + lo, sigma.begin() + hi);
  Perm u = perm_compose(perm_inverse(sigma), tau);
  if (!preserves_blocks(u, sizes)) throw std::logic_error("coset decomposition failed");
  return {sigma, u};
}

}  // namespace swl
