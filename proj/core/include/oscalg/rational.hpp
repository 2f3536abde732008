#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscalg {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// library runs over this type; nothing is ever rounded.
using Rat = mpq_class;
using Int = mpz_class;

// Violation of a documented precondition (caller error).
class contract_error : public std::invalid_argument {
 public:
  explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// An internal identity that must hold by construction failed to hold.
// Seeing this means a bug or a genuinely false claim, never bad input.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat rat_from_long(long n, long d = 1) {
  if (d == 0) throw contract_error("zero denominator");
  Rat r(n, d);
  r.canonicalize();  // the raw two-integer constructor does not reduce
  return r;
}

// Canonical "p/q" (or plain "p" when the denominator is 1).
inline std::string rat_text(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw contract_error("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw contract_error("rational is not an integer: " + rat_text(r));
  if (!r.get_num().fits_slong_p()) throw contract_error("integer out of long range");
  return r.get_num().get_si();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  out.canonicalize();
  if (neg) {
    if (out == 0) throw contract_error("0 has no negative power");
    out = 1 / out;
  }
  return out;
}

// C(n, k) for integer n of either sign, k >= 0 (the generalized binomial
// used by power series of (1+x)^n).
inline Rat binomial(long n, long k) {
  if (k < 0) return Rat(0);
  Rat num(1);
  for (long j = 0; j < k; ++j) num *= Rat(n - j);
  Rat den(1);
  for (long j = 2; j <= k; ++j) den *= Rat(j);
  return num / den;
}

}  // namespace oscalg
