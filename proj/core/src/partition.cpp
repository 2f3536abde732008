#include "oscalg/partition.hpp"

#include <algorithm>
#include <functional>

namespace oscalg {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw contract_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw contract_error("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

std::map<long, long> Partition::multiplicities() const {
  std::map<long, long> m;
  for (long p : parts_) ++m[p];
  return m;
}

long Partition::multiplicity(long value) const {
  long c = 0;
  for (long p : parts_)
    if (p == value) ++c;
  return c;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<long> out(static_cast<std::size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(out);
}

std::string Partition::text() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (weight_ != o.weight_) return weight_ <=> o.weight_;
  // reverse-lex: larger first part comes first
  std::size_t n = std::max(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    long a = part(i), b = o.part(i);
    if (a != b) return b <=> a;
  }
  return std::strong_ordering::equal;
}

std::vector<Partition> enumerate_partitions_capped(long n, long max_part) {
  if (n < 0) throw contract_error("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rem, long cap) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(rem, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, std::min(n, max_part));
  if (n == 0) return {Partition()};
  return out;
}

std::vector<Partition> enumerate_partitions(long n) {
  return enumerate_partitions_capped(n, n < 1 ? 1 : n);
}

long add_part_coefficient(const Partition& lambda, const Partition& mu, long i) {
  if (i < 1) throw contract_error("add_part_coefficient requires i >= 1");
  if (lambda.weight() != mu.weight() + i)
    throw contract_error("weight mismatch: |lambda| must equal |mu| + i");
  // Candidate source values: each distinct part of mu, plus the zero part.
  std::vector<long> candidates{0};
  for (const auto& vm : mu.multiplicities()) candidates.push_back(vm.first);
  for (long v : candidates) {
    std::vector<long> grown = mu.parts();
    if (v == 0) {
      grown.push_back(i);
    } else {
      auto it = std::find(grown.begin(), grown.end(), v);
      *it = v + i;
    }
    std::sort(grown.begin(), grown.end(), std::greater<long>());
    if (Partition(grown) == lambda) return lambda.multiplicity(v + i);
  }
  return 0;
}

std::vector<Stratum> strata(long r, long n) {
  if (r < 1 || n < 1) throw contract_error("strata requires r >= 1 and n >= 1");
  std::vector<Stratum> out;
  for (long s = 0; s < n; ++s) {
    for (auto& mu : enumerate_partitions(s)) {
      Stratum st;
      st.s = s;
      st.fiber_dim = r * s - mu.length();
      st.codim = 2 * st.fiber_dim;
      st.mu = std::move(mu);
      out.push_back(std::move(st));
    }
  }
  return out;
}

long moduli_dim(long r, long n, long c1_sq, long chi_O, long h1_O) {
  if (r < 1) throw contract_error("moduli_dim requires r >= 1");
  return 2 * r * n + moduli_dim_shift(r, c1_sq, chi_O, h1_O);
}

long moduli_dim_shift(long r, long c1_sq, long chi_O, long h1_O) {
  if (r < 1) throw contract_error("moduli_dim_shift requires r >= 1");
  return -(r - 1) * c1_sq - (r * r - 1) * chi_O + h1_O;
}

long punctual_quot_dim(long r, long n) {
  if (r < 1 || n < 1) throw contract_error("punctual_quot_dim requires r >= 1 and n >= 1");
  return r * n - 1;
}

}  // namespace oscalg
