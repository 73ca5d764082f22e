#pragma once

// Exact rational scalars.  All coefficients in this library are Rat; no
// floating point is used anywhere in the computational core.  GMP keeps
// values in lowest terms with a positive denominator, which is also the
// canonical serialized form ("p" or "p/q").

#include <gmpxx.h>

#include <string>

#include "qgw/errors.hpp"

namespace qgw {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
  if (den == 0) throw error("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) throw error("rat_of: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// canonical string form: "p" when the denominator is 1, else "p/q"
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw error("rat_parse: bad rational '" + s + "'");
  if (r.get_den() == 0) throw error("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Int factorial_int(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Rat pow_rat(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0 && e < 0) throw error("pow_rat: zero base, negative exponent");
  Rat num, den;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_num_mpz_t(), x.get_num_mpz_t(), a);
  mpz_pow_ui(den.get_den_mpz_t(), x.get_den_mpz_t(), a);
  mpz_set(num.get_den_mpz_t(), den.get_den_mpz_t());
  mpz_set_ui(den.get_num_mpz_t(), 1);
  num.canonicalize();
  if (e < 0) return Rat(1) / num;
  return num;
}

// fixed-point decimal rendering (round half away from zero), used only for
// the opt-in --decimal output; the exact value always travels alongside it
inline std::string rat_decimal(const Rat& x, int digits) {
  if (digits < 0) throw error("rat_decimal: negative digit count");
  Int num = x.get_num(), den = x.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(num*scale/den)
  Int t = num * scale * 2 + den;  // adds 1/2 ulp before floor division
  Int q = t / (den * 2);
  Int whole = q / scale, frac = q % scale;
  std::string out = (neg && q != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace qgw
