#pragma once

#include <map>
#include <string>

#include "oscalg/mpoly.hpp"
#include "oscalg/partition.hpp"

namespace oscalg {

// Schur polynomial s_shape(x_1..x_nvars), summed over semistandard tableaux
// of the shape with entries in 1..nvars. Shapes with more rows than
// variables give the zero polynomial.
MPoly schur_poly(const Partition& shape, int nvars);

// Write a symmetric polynomial as a sum of Schur polynomials by repeatedly
// stripping the lex-leading term. Throws consistency_error if a leading
// exponent is not weakly decreasing (the input was not symmetric).
std::map<Partition, Rat> schur_expand(MPoly p);

// Element of the cohomology ring of the Grassmannian of n-dimensional
// quotients of an r-dimensional space: a combination of Schur classes
// s_lambda with lambda inside the n x (r-n) box (at most n rows, each part
// at most r-n). Products are computed through the finite-variable Schur
// polynomials and re-expanded; out-of-box terms are discarded.
class BoxClass {
 public:
  BoxClass(long r, long n);

  static BoxClass one(long r, long n);
  static BoxClass schur(long r, long n, const Partition& shape);

  long r() const { return r_; }
  long n() const { return n_; }
  long top_degree() const { return n_ * (r_ - n_); }
  bool fits_box(const Partition& shape) const;

  const std::map<Partition, Rat>& terms() const { return c_; }
  Rat coeff(const Partition& shape) const;
  void add_term(const Partition& shape, const Rat& c);
  bool is_zero() const { return c_.empty(); }

  BoxClass operator+(const BoxClass& o) const;
  BoxClass operator-(const BoxClass& o) const;
  BoxClass operator-() const;
  BoxClass operator*(const BoxClass& o) const;
  BoxClass scaled(const Rat& s) const;
  BoxClass pow(long k) const;
  bool operator==(const BoxClass& o) const;

  // Degree-k graded part (degree of s_lambda is |lambda|).
  BoxClass component(long k) const;

  // Multiplicative inverse of a class whose scalar term is nonzero.
  BoxClass inverse() const;

  std::string text() const;

 private:
  void check_compatible(const BoxClass& o) const;

  long r_, n_;
  std::map<Partition, Rat> c_;
};

// Evaluation against the fundamental class: the coefficient of the
// full-box Schur class. Throws if it is not an integer.
Int integrate(const BoxClass& x);

}  // namespace oscalg
