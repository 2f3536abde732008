#pragma once

#include <map>
#include <string>

#include "oscalg/upoly.hpp"

namespace oscalg {

// Rational function in one variable u over the rationals, kept in canonical
// form: numerator and denominator coprime, denominator monic. Laurent
// monomials u^-k are the special case denominator = u^k, so the type also
// serves as a ring of Laurent polynomials closed under division.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UPoly::constant(Rat(1))) {}
  RatFunc(UPoly num, UPoly den);

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return from_rat(Rat(1)); }
  static RatFunc from_rat(const Rat& c) {
    return RatFunc(UPoly::constant(c), UPoly::constant(Rat(1)));
  }
  // c * u^e with e of either sign
  static RatFunc monomial(const Rat& c, long e);
  static RatFunc from_upoly(UPoly p) { return RatFunc(std::move(p), UPoly::constant(Rat(1))); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  RatFunc scaled(const Rat& s) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  // True when the reduced denominator is a power of u, i.e. the value is a
  // Laurent polynomial in u.
  bool is_laurent() const;
  // Laurent expansion exponent -> coefficient; requires is_laurent().
  std::map<long, Rat> laurent_terms() const;

  // substitute u -> u^m (m >= 1)
  RatFunc stretch(long m) const;

  // evaluate at u = 1; denominator must not vanish there
  Rat eval_one() const;

  std::string text() const;

 private:
  void normalize();
  UPoly num_, den_;
};

}  // namespace oscalg
