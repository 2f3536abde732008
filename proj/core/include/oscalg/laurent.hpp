#pragma once

#include <map>
#include <string>
#include <utility>

#include "oscalg/rational.hpp"
#include "oscalg/ratfunc.hpp"

namespace oscalg {

// Laurent polynomial in a single variable t over the rationals.
class LaurentT {
 public:
  LaurentT() = default;
  static LaurentT zero() { return LaurentT(); }
  static LaurentT one() { return monomial(Rat(1), 0); }
  static LaurentT monomial(const Rat& c, long e) {
    LaurentT p;
    if (c != 0) p.c_[e] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<long, Rat>& terms() const { return c_; }
  Rat coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
  }
  long min_exp() const {
    if (is_zero()) throw contract_error("zero Laurent polynomial has no exponents");
    return c_.begin()->first;
  }
  long max_exp() const {
    if (is_zero()) throw contract_error("zero Laurent polynomial has no exponents");
    return c_.rbegin()->first;
  }

  LaurentT operator+(const LaurentT& o) const {
    LaurentT r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
  }
  LaurentT operator-(const LaurentT& o) const {
    LaurentT r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, -v);
    return r;
  }
  LaurentT operator-() const {
    LaurentT r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  LaurentT operator*(const LaurentT& o) const {
    LaurentT r;
    for (auto& [e1, v1] : c_)
      for (auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
    return r;
  }
  LaurentT scaled(const Rat& s) const {
    LaurentT r;
    if (s == 0) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
  }
  bool operator==(const LaurentT& o) const { return c_ == o.c_; }

  // only monomials are invertible here
  LaurentT inv() const {
    if (c_.size() != 1) throw contract_error("Laurent inverse requires a monomial: " + text());
    auto& [e, v] = *c_.begin();
    return monomial(1 / v, -e);
  }

  void add_term(long e, const Rat& v) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (v != 0) c_[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  Rat eval_one() const {
    Rat s(0);
    for (auto& [e, v] : c_) s += v;
    return s;
  }

  // Palindromic about a center c: coeff(c+k) == coeff(c-k) for all k.
  bool symmetric_about(long center) const {
    for (auto& [e, v] : c_)
      if (coeff(2 * center - e) != v) return false;
    return true;
  }

  // substitute t -> u^m as a rational function
  RatFunc to_ratfunc(long m = 1) const {
    RatFunc r;
    for (auto& [e, v] : c_) r = r + RatFunc::monomial(v, e * m);
    return r;
  }

  std::string text() const { return text_var("t"); }
  std::string text_var(const std::string& var) const;

 private:
  std::map<long, Rat> c_;
};

// Laurent polynomial in two variables x, y over the rationals.
class LaurentXY {
 public:
  LaurentXY() = default;
  static LaurentXY zero() { return LaurentXY(); }
  static LaurentXY one() { return monomial(Rat(1), 0, 0); }
  static LaurentXY monomial(const Rat& c, long ex, long ey) {
    LaurentXY p;
    if (c != 0) p.c_[{ex, ey}] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<long, long>, Rat>& terms() const { return c_; }
  Rat coeff(long ex, long ey) const {
    auto it = c_.find({ex, ey});
    return it == c_.end() ? Rat(0) : it->second;
  }

  LaurentXY operator+(const LaurentXY& o) const {
    LaurentXY r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e.first, e.second, v);
    return r;
  }
  LaurentXY operator-(const LaurentXY& o) const {
    LaurentXY r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e.first, e.second, -v);
    return r;
  }
  LaurentXY operator-() const {
    LaurentXY r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  LaurentXY operator*(const LaurentXY& o) const {
    LaurentXY r;
    for (auto& [e1, v1] : c_)
      for (auto& [e2, v2] : o.c_)
        r.add_term(e1.first + e2.first, e1.second + e2.second, v1 * v2);
    return r;
  }
  LaurentXY scaled(const Rat& s) const {
    LaurentXY r;
    if (s == 0) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
  }
  bool operator==(const LaurentXY& o) const { return c_ == o.c_; }

  LaurentXY inv() const {
    if (c_.size() != 1) throw contract_error("Laurent inverse requires a monomial");
    auto& [e, v] = *c_.begin();
    return monomial(1 / v, -e.first, -e.second);
  }

  void add_term(long ex, long ey, const Rat& v) {
    auto key = std::make_pair(ex, ey);
    auto it = c_.find(key);
    if (it == c_.end()) {
      if (v != 0) c_[key] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  // x = y = t
  LaurentT diagonal() const {
    LaurentT r;
    for (auto& [e, v] : c_) r.add_term(e.first + e.second, v);
    return r;
  }

  std::string text() const;

 private:
  std::map<std::pair<long, long>, Rat> c_;
};

namespace detail {
inline void append_term(std::string& s, const Rat& c, const std::string& vars) {
  Rat a = c > 0 ? Rat(c) : Rat(-c);
  if (s.empty()) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  bool unit = (a == 1) && !vars.empty();
  if (!unit) s += rat_text(a);
  if (!vars.empty()) {
    if (!unit) s += "*";
    s += vars;
  }
}
inline std::string power_text(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}
}  // namespace detail

inline std::string LaurentT::text_var(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [e, v] : c_) detail::append_term(s, v, detail::power_text(var, e));
  return s;
}

inline std::string LaurentXY::text() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [e, v] : c_) {
    std::string vars = detail::power_text("x", e.first);
    std::string ys = detail::power_text("y", e.second);
    if (!vars.empty() && !ys.empty()) vars += "*";
    vars += ys;
    detail::append_term(s, v, vars);
  }
  return s;
}

}  // namespace oscalg
