#pragma once

#include <map>
#include <numeric>
#include <string>

#include "oscalg/ring_traits.hpp"

namespace oscalg {

// Truncated series in q with exponents on the lattice (1/D)*Z and
// coefficients in an exact ring C. Exponents are stored as integers in
// lattice units; a series tracks every exponent strictly below its order.
// Order is propagated through arithmetic, so a coefficient can be read only
// when it is genuinely known; comparisons past the tracked order throw
// instead of silently passing.
template <class C>
class Series {
 public:
  using Traits = RingTraits<C>;

  Series() : den_(1), order_(0) {}
  Series(long lattice_den, long order_units) : den_(lattice_den), order_(order_units) {
    if (lattice_den < 1) throw contract_error("lattice denominator must be >= 1");
  }

  static Series monomial(long lattice_den, long order_units, long exp_units, C value) {
    Series s(lattice_den, order_units);
    s.add_term(exp_units, std::move(value));
    return s;
  }
  static Series constant(long lattice_den, long order_units, C value) {
    return monomial(lattice_den, order_units, 0, std::move(value));
  }
  static Series one(long lattice_den, long order_units) {
    return constant(lattice_den, order_units, Traits::one());
  }

  long lattice_den() const { return den_; }
  long order_units() const { return order_; }
  const std::map<long, C>& terms() const { return c_; }
  bool known_nonempty() const { return !c_.empty(); }

  // Coefficient at a lattice exponent; reading at or past the order throws.
  C coeff(long exp_units) const {
    if (exp_units >= order_)
      throw contract_error("coefficient at exponent " + std::to_string(exp_units) + "/" +
                           std::to_string(den_) + " is past the tracked order");
    auto it = c_.find(exp_units);
    return it == c_.end() ? Traits::zero() : it->second;
  }

  // Coefficient at an integer q-power (exponent n in q-units).
  C coeff_q(long n) const { return coeff(n * den_); }

  void add_term(long exp_units, const C& v) {
    if (exp_units >= order_) return;  // beyond truncation
    auto it = c_.find(exp_units);
    if (it == c_.end()) {
      if (!Traits::is_zero(v)) c_.emplace(exp_units, v);
    } else {
      it->second = it->second + v;
      if (Traits::is_zero(it->second)) c_.erase(it);
    }
  }

  // Lowest stored exponent; a series with no stored terms has valuation
  // equal to its order (it could still have a term there or beyond).
  long valuation_units() const { return c_.empty() ? order_ : c_.begin()->first; }

  // Re-express on a finer lattice (new_den a multiple of den).
  Series rescaled(long new_den) const {
    if (new_den % den_ != 0) throw contract_error("lattice refinement must be a multiple");
    long f = new_den / den_;
    Series out(new_den, order_ * f);
    for (auto& [e, v] : c_) out.c_[e * f] = v;
    return out;
  }

  // Drop the tracked order (never raises it).
  Series truncated(long order_units) const {
    if (order_units > order_)
      throw contract_error("cannot extend a truncated series without recomputing");
    Series out(den_, order_units);
    for (auto& [e, v] : c_) {
      if (e >= order_units) break;
      out.c_[e] = v;
    }
    return out;
  }

  Series operator-() const {
    Series out(den_, order_);
    for (auto& [e, v] : c_) out.c_[e] = -v;
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    auto [x, y] = aligned(a, b);
    Series out(x.den_, std::min(x.order_, y.order_));
    out.c_ = x.c_;
    for (auto& [e, v] : y.c_) out.add_term(e, v);
    prune(out);
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    auto [x, y] = aligned(a, b);
    // f = F + O(q^of), g = G + O(q^og): the product is known below
    // min(of + val(g), og + val(f)).
    long ord = std::min(x.order_ + y.valuation_units(), y.order_ + x.valuation_units());
    Series out(x.den_, ord);
    for (auto& [e1, v1] : x.c_) {
      if (e1 + y.valuation_units() >= ord) break;
      for (auto& [e2, v2] : y.c_) {
        if (e1 + e2 >= ord) break;
        out.add_term(e1 + e2, v1 * v2);
      }
    }
    return out;
  }

  Series scaled(const Rat& s) const {
    Series out(den_, order_);
    if (s == 0) return out;
    for (auto& [e, v] : c_) {
      C w = Traits::scale(v, s);
      if (!Traits::is_zero(w)) out.c_[e] = w;
    }
    return out;
  }

  Series coeff_scaled(const C& s) const {
    Series out(den_, order_);
    for (auto& [e, v] : c_) {
      C w = v * s;
      if (!Traits::is_zero(w)) out.c_[e] = w;
    }
    return out;
  }

  // Multiply by the exact monomial q^(shift/den); the tracked order moves
  // with the terms.
  Series shifted(long shift_units) const {
    Series out(den_, order_ + shift_units);
    for (auto& [e, v] : c_) out.c_[e + shift_units] = v;
    return out;
  }

  // Substitute q -> q^m (m >= 1). A series known mod q^ord becomes known
  // mod q^(m*ord).
  Series q_power_substituted(long m) const {
    if (m < 1) throw contract_error("q-power substitution requires m >= 1");
    Series out(den_, order_ * m);
    for (auto& [e, v] : c_) out.c_[e * m] = v;
    return out;
  }

  // Map coefficients into another ring.
  template <class C2, class F>
  Series<C2> mapped(F&& f) const {
    Series<C2> out(den_, order_);
    for (auto& [e, v] : c_) {
      C2 w = f(v);
      if (!RingTraits<C2>::is_zero(w)) out.add_term(e, w);
    }
    return out;
  }

  // Multiplicative inverse. The lowest tracked coefficient must be a unit of
  // C. If the valuation is v, the result is known to order ord - 2v.
  Series inverse() const {
    if (c_.empty()) throw contract_error("inverting a series with no known nonzero term");
    long v = valuation_units();
    C lead_inv = Traits::inv(c_.begin()->second);
    long unit_ord = order_ - v;  // order of q^-v * f
    // n = 1 - lead_inv * shift(f, -v): valuation >= 1 lattice unit
    Series n(den_, unit_ord);
    for (auto& [e, val] : c_) {
      if (e == v) continue;
      n.add_term(e - v, -(val * lead_inv));
    }
    Series acc = one(den_, unit_ord);  // sum of n^k
    Series p = n;
    while (p.known_nonempty()) {
      acc = acc + p;
      p = p * n;
      p = p.truncated(std::min(p.order_, unit_ord));
    }
    acc = acc.coeff_scaled(lead_inv);
    Series out = acc.shifted(-v);
    return out.truncated(order_ - 2 * v);
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  // Integer power; negative exponents go through the inverse.
  Series pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return one(den_, order_);
    Series acc = one(den_, order_);
    Series base = *this;
    long e = k;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  // exp of a series with positive valuation.
  Series exponential() const {
    if (valuation_units() <= 0 && known_nonempty())
      throw contract_error("series exp needs positive valuation");
    Series acc = one(den_, order_);
    Series p = one(den_, order_);
    long k = 1;
    while (true) {
      p = (p * *this).scaled(Rat(1) / Rat(k));  // p = (this)^k / k!
      p = p.truncated(std::min(p.order_, order_));
      if (!p.known_nonempty()) break;
      acc = acc + p;
      ++k;
    }
    return acc.truncated(order_);
  }

  // log of a series with constant coefficient exactly one.
  Series logarithm() const {
    Series h = *this - one(den_, order_);
    if (h.known_nonempty() && h.valuation_units() <= 0)
      throw contract_error("series log needs constant term 1");
    Series acc(den_, order_);
    Series p = one(den_, order_);
    long k = 1;
    while (true) {
      p = p * h;
      p = p.truncated(std::min(p.order_units(), order_));
      if (!p.known_nonempty()) break;
      Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
      acc = acc + p.scaled(sign / Rat(k));
      ++k;
    }
    return acc.truncated(order_);
  }

  bool operator==(const Series& o) const {
    return den_ == o.den_ && order_ == o.order_ && c_ == o.c_;
  }

 private:
  template <class>
  friend class Series;

  static std::pair<Series, Series> aligned(const Series& a, const Series& b) {
    long d = std::lcm(a.den_, b.den_);
    return {a.den_ == d ? a : a.rescaled(d), b.den_ == d ? b : b.rescaled(d)};
  }

  static void prune(Series& s) {
    auto it = s.c_.begin();
    while (it != s.c_.end()) {
      if (it->first >= s.order_)
        it = s.c_.erase(it);
      else
        ++it;
    }
  }

  long den_;
  long order_;
  std::map<long, C> c_;
};

// Exact equality of all coefficients with exponent < order_units (given on
// the common refined lattice). Both series must actually know that range.
template <class C>
bool equal_to_order(const Series<C>& a, const Series<C>& b, long den, long order_units) {
  long d = std::lcm(std::lcm(a.lattice_den(), b.lattice_den()), den);
  Series<C> x = a.rescaled(d);
  Series<C> y = b.rescaled(d);
  long ord = order_units * (d / den);
  if (x.order_units() < ord || y.order_units() < ord)
    throw contract_error("comparison requested past a tracked order");
  for (long e = std::min(x.valuation_units(), y.valuation_units()); e < ord; ++e)
    if (!(x.coeff(e) == y.coeff(e))) return false;
  return true;
}

// (1 + c*q^l)^m expanded by generalized binomials; m of either sign, l >= 1
// in lattice units of the result.
template <class C>
Series<C> binomial_factor(long lattice_den, long order_units, const C& c, long l, long m) {
  if (l < 1) throw contract_error("binomial factor needs a positive q-step");
  Series<C> out(lattice_den, order_units);
  C p = RingTraits<C>::one();
  for (long k = 0; k * l < order_units; ++k) {
    if (k > 0) p = p * c;
    C term = RingTraits<C>::scale(p, binomial(m, k));
    out.add_term(k * l, term);
  }
  return out;
}

}  // namespace oscalg
