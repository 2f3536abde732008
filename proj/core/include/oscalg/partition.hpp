#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long weight() const { return weight_; }
  long length() const { return static_cast<long>(parts_.size()); }
  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  // part value -> multiplicity
  std::map<long, long> multiplicities() const;

  // multiplicity of a given part value (0 if absent)
  long multiplicity(long value) const;

  Partition conjugate() const;

  std::string text() const;  // e.g. "(3,1,1)", "()" for empty

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Total order: by weight, then reverse-lexicographic within a weight
  // (matching enumeration order).
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<long> parts_;
  long weight_ = 0;
};

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1^n). n = 0 yields just the empty partition.
std::vector<Partition> enumerate_partitions(long n);

// Partitions of n with every part <= max_part, same order.
std::vector<Partition> enumerate_partitions_capped(long n, long max_part);

// Coefficient of the operator rule p_i * m_mu = sum_lambda a(lambda,mu) m_lambda:
// nonzero exactly when lambda arises from mu by adding i to one part (a zero
// part counts as one extra addable slot) and re-sorting, in which case it is
// the number of parts of lambda equal to that increased value.
// Requires |lambda| = |mu| + i, i >= 1.
long add_part_coefficient(const Partition& lambda, const Partition& mu, long i);

// Locally closed stratum of the punctual locus: a pair (s, mu) with mu a
// partition of s. fiber_dim = r*s - length(mu); codim = 2*fiber_dim.
struct Stratum {
  long s = 0;
  Partition mu;
  long fiber_dim = 0;
  long codim = 0;
};

// All strata for rank r and second Chern class n: 0 <= s < n, mu a partition
// of s. Requires r >= 1, n >= 1.
std::vector<Stratum> strata(long r, long n);

// Moduli dimension 2*r*n - (r-1)*c1_sq - (r^2-1)*chi_O + h1_O. A negative
// value signals an empty moduli space; it is returned as-is.
long moduli_dim(long r, long n, long c1_sq, long chi_O, long h1_O);

// The n-independent constant a with moduli_dim = 2*r*n + a.
long moduli_dim_shift(long r, long c1_sq, long chi_O, long h1_O);

// Dimension of the punctual quot scheme: r*n - 1. Requires n >= 1.
long punctual_quot_dim(long r, long n);

}  // namespace oscalg
