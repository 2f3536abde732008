#pragma once

#include <string>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);
  static UPoly monomial(const Rat& c, long deg);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(long d) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rat& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // quotient and remainder; divisor must be nonzero
  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

  UPoly monic() const;

  // substitute the variable by its m-th power (m >= 1)
  UPoly stretch(long m) const;

  std::string text(const std::string& var) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly upoly_gcd(UPoly a, UPoly b);

}  // namespace oscalg
