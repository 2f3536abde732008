#pragma once

#include <map>
#include <vector>

#include "oscalg/mpoly.hpp"
#include "oscalg/partition.hpp"

namespace oscalg {

// Finite rational combination of monomial symmetric functions m_lambda,
// possibly of mixed weight.
class SymFunc {
 public:
  SymFunc() = default;
  static SymFunc monomial_sym(const Partition& lambda, const Rat& c = Rat(1));

  bool is_zero() const { return c_.empty(); }
  const std::map<Partition, Rat>& terms() const { return c_; }
  Rat coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rat& v);

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const Rat& s) const;
  bool operator==(const SymFunc& o) const { return c_ == o.c_; }

  std::string text() const;

 private:
  std::map<Partition, Rat> c_;
};

// Multiplication by the power sum p_i in the monomial basis:
// p_i * m_mu = sum over lambda of a(lambda, mu) m_lambda with the
// add-a-part coefficients from the partitions module.
SymFunc mult_powersum(long i, const SymFunc& f);

// Expand into the given number of variables. Faithful (injective on the
// span of m_lambda with length(lambda) <= nvars).
MPoly to_polynomial(const SymFunc& f, int nvars);

// Inverse of to_polynomial on symmetric inputs. max_degree bounds the total
// degree of the input (a safety rail against truncated data). A
// non-symmetric input reports the violating adjacent transposition.
SymFunc from_polynomial(const MPoly& p, long max_degree);

// Entries 0..n of exp(sum_{i>=1} z^i P_i / ((-1)^(i-1) i)) applied to m_(),
// truncated at z^n; the k-th entry must come out as m_(1^k).
std::vector<SymFunc> elementary_chain(long n);

}  // namespace oscalg
