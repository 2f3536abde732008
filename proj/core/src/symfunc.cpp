#include "oscalg/symfunc.hpp"

#include <algorithm>

namespace oscalg {

SymFunc SymFunc::monomial_sym(const Partition& lambda, const Rat& c) {
  SymFunc f;
  f.add_term(lambda, c);
  return f;
}

Rat SymFunc::coeff(const Partition& lambda) const {
  auto it = c_.find(lambda);
  return it == c_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rat& v) {
  if (v == 0) return;
  auto it = c_.find(lambda);
  if (it == c_.end()) {
    c_.emplace(lambda, v);
  } else {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  for (auto& [l, v] : o.c_) r.add_term(l, v);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  for (auto& [l, v] : o.c_) r.add_term(l, -v);
  return r;
}

SymFunc SymFunc::operator*(const Rat& s) const {
  SymFunc r;
  if (s == 0) return r;
  for (auto& [l, v] : c_) r.c_[l] = v * s;
  return r;
}

std::string SymFunc::text() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [l, v] : c_) {
    if (!s.empty()) s += " + ";
    s += rat_text(v) + "*m" + l.text();
  }
  return s;
}

SymFunc mult_powersum(long i, const SymFunc& f) {
  if (i < 1) throw contract_error("power sum index must be >= 1");
  SymFunc out;
  for (auto& [mu, c] : f.terms()) {
    for (auto& lambda : enumerate_partitions(mu.weight() + i)) {
      long a = add_part_coefficient(lambda, mu, i);
      if (a != 0) out.add_term(lambda, c * Rat(a));
    }
  }
  return out;
}

MPoly to_polynomial(const SymFunc& f, int nvars) {
  MPoly out(nvars);
  for (auto& [lambda, c] : f.terms()) {
    if (lambda.length() > nvars) continue;  // m_lambda vanishes in few variables
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (long k = 0; k < lambda.length(); ++k)
      e[static_cast<std::size_t>(k)] = static_cast<int>(lambda.part(static_cast<std::size_t>(k)));
    std::sort(e.begin(), e.end());
    // distinct permutations of the exponent multiset
    do {
      out.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

SymFunc from_polynomial(const MPoly& p, long max_degree) {
  for (auto& [e, v] : p.terms()) {
    long d = 0;
    for (int x : e) d += x;
    if (d > max_degree)
      throw contract_error("monomial degree exceeds the declared bound");
  }
  int k = p.asymmetry_witness();
  if (k >= 0)
    throw contract_error("polynomial is not symmetric: swapping x" + std::to_string(k + 1) +
                         " and x" + std::to_string(k + 2) + " changes it");
  SymFunc out;
  MPoly rest = p;
  while (!rest.is_zero()) {
    std::vector<int> lead = rest.lex_leading();
    Rat c = rest.coeff(lead);
    std::vector<long> parts;
    for (int x : lead)
      if (x != 0) parts.push_back(x);
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    Partition lambda(parts);
    out.add_term(lambda, c);
    rest = rest - to_polynomial(SymFunc::monomial_sym(lambda, c), p.nvars());
  }
  return out;
}

std::vector<SymFunc> elementary_chain(long n) {
  if (n < 0) throw contract_error("chain length must be >= 0");
  // exp applied term by term: entry k of the z-series.
  std::vector<SymFunc> acc(static_cast<std::size_t>(n) + 1);
  acc[0] = SymFunc::monomial_sym(Partition());
  std::vector<SymFunc> cur = acc;  // S^k/k! applied to the vacuum, k = 0 so far
  for (long k = 1; k <= n; ++k) {
    // cur <- (S * cur) / k, where S = sum_i z^i P_i / ((-1)^(i-1) i)
    std::vector<SymFunc> next(static_cast<std::size_t>(n) + 1);
    for (long d = 0; d <= n; ++d) {
      for (long i = 1; i <= d; ++i) {
        if (cur[static_cast<std::size_t>(d - i)].is_zero()) continue;
        Rat coef = Rat(((i - 1) % 2 == 0) ? 1 : -1) / Rat(i);
        next[static_cast<std::size_t>(d)] =
            next[static_cast<std::size_t>(d)] +
            mult_powersum(i, cur[static_cast<std::size_t>(d - i)]) * coef;
      }
    }
    bool any = false;
    for (long d = 0; d <= n; ++d) {
      next[static_cast<std::size_t>(d)] = next[static_cast<std::size_t>(d)] * (Rat(1) / Rat(k));
      if (!next[static_cast<std::size_t>(d)].is_zero()) any = true;
      acc[static_cast<std::size_t>(d)] = acc[static_cast<std::size_t>(d)] + next[static_cast<std::size_t>(d)];
    }
    cur = std::move(next);
    if (!any) break;
  }
  return acc;
}

}  // namespace oscalg
