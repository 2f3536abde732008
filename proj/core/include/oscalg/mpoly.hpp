#pragma once

#include <map>
#include <string>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

// Polynomial in a fixed number of variables x1..xn over the rationals,
// exponent vectors of length nvars. Slow and simple on purpose: this type is
// the ground-truth oracle that symmetric-function and Schur computations are
// checked against.
class MPoly {
 public:
  explicit MPoly(int nvars) : n_(nvars) {
    if (nvars < 1) throw contract_error("polynomial needs at least one variable");
  }

  int nvars() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return c_; }

  static MPoly zero(int nvars) { return MPoly(nvars); }
  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int index, int power = 1);

  void add_term(const std::vector<int>& exps, const Rat& v);
  Rat coeff(const std::vector<int>& exps) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rat& s) const;
  bool operator==(const MPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

  // swap variables k and k+1 (0-based)
  MPoly transposed(int k) const;

  // Index of the first adjacent transposition that changes the polynomial,
  // or -1 when symmetric. Adjacent transpositions generate the full
  // symmetric group, so -1 certifies symmetry.
  int asymmetry_witness() const;

  // Exponent vector of the lexicographically greatest monomial.
  const std::vector<int>& lex_leading() const;

  std::string text() const;

 private:
  int n_;
  std::map<std::vector<int>, Rat> c_;
};

// p_i(x1..xn) = sum of i-th powers
MPoly power_sum_poly(int nvars, long i);

}  // namespace oscalg
