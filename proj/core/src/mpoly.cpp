#include "oscalg/mpoly.hpp"

#include <algorithm>

namespace oscalg {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw contract_error("variable index out of range");
  MPoly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = power;
  p.add_term(e, Rat(1));
  return p;
}

void MPoly::add_term(const std::vector<int>& exps, const Rat& v) {
  if (static_cast<int>(exps.size()) != n_) throw contract_error("exponent vector length mismatch");
  if (v == 0) return;
  auto it = c_.find(exps);
  if (it == c_.end()) {
    c_.emplace(exps, v);
  } else {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

Rat MPoly::coeff(const std::vector<int>& exps) const {
  auto it = c_.find(exps);
  return it == c_.end() ? Rat(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (n_ != o.n_) throw contract_error("mixed variable counts");
  MPoly r = *this;
  for (auto& [e, v] : o.c_) r.add_term(e, v);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
  MPoly r(n_);
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (n_ != o.n_) throw contract_error("mixed variable counts");
  MPoly r(n_);
  std::vector<int> e(static_cast<std::size_t>(n_));
  for (auto& [e1, v1] : c_) {
    for (auto& [e2, v2] : o.c_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, v1 * v2);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rat& s) const {
  MPoly r(n_);
  if (s == 0) return r;
  for (auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

MPoly MPoly::transposed(int k) const {
  if (k < 0 || k + 1 >= n_) throw contract_error("transposition index out of range");
  MPoly r(n_);
  for (auto& [e, v] : c_) {
    std::vector<int> f = e;
    std::swap(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>(k) + 1]);
    r.add_term(f, v);
  }
  return r;
}

int MPoly::asymmetry_witness() const {
  for (int k = 0; k + 1 < n_; ++k)
    if (!(transposed(k) == *this)) return k;
  return -1;
}

const std::vector<int>& MPoly::lex_leading() const {
  if (c_.empty()) throw contract_error("zero polynomial has no leading monomial");
  return c_.rbegin()->first;
}

std::string MPoly::text() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [e, v] : c_) {
    if (!s.empty()) s += " + ";
    s += rat_text(v);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

MPoly power_sum_poly(int nvars, long i) {
  if (i < 1) throw contract_error("power sum index must be >= 1");
  MPoly p(nvars);
  for (int v = 0; v < nvars; ++v)
    p = p + MPoly::variable(nvars, v, static_cast<int>(i));
  return p;
}

}  // namespace oscalg
