#pragma once
// Exact rational scalars and small integer combinatorics helpers.
//
// Scalars are GMP rationals (mpq_class): always stored in canonical reduced
// form with positive denominator, so equality is plain operator== and the
// type is totally ordered (usable as a map key).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swl {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "n", "-n", "n/d" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw std::invalid_argument("zero denominator: " + s);
  }
  mpq_canonicalize(q);
  Rat r(q);
  mpq_clear(q);
  return r;
}

// "num" when the denominator is 1, else "num/den".
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r.get_num() >= 0; }

// Requires an integer value that fits in long.
inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + rat_str(r));
  return r.get_num().get_si();
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int ipow(unsigned long base, unsigned long exp) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
  return p;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large: " + v.get_str());
  return v.get_si();
}

}  // namespace swl
