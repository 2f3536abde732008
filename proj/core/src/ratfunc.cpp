#include "oscalg/ratfunc.hpp"

namespace oscalg {

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw contract_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly::constant(Rat(1));
    return;
  }
  UPoly g = upoly_gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly q, r;
    UPoly::divrem(num_, g, q, r);
    num_ = q;
    UPoly::divrem(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.lead();
  if (lead != 1) {
    Rat inv = 1 / lead;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

RatFunc RatFunc::monomial(const Rat& c, long e) {
  if (e >= 0) return RatFunc(UPoly::monomial(c, e), UPoly::constant(Rat(1)));
  return RatFunc(UPoly::constant(c), UPoly::monomial(Rat(1), -e));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw contract_error("inverting the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::scaled(const Rat& s) const {
  if (s == 0) return RatFunc();
  RatFunc r = *this;
  r.num_ = r.num_.scaled(s);
  return r;
}

bool RatFunc::is_laurent() const {
  if (num_.is_zero()) return true;
  for (long d = 0; d < den_.degree(); ++d)
    if (den_.coeff(d) != 0) return false;
  return true;  // denominator is monic u^k
}

std::map<long, Rat> RatFunc::laurent_terms() const {
  if (!is_laurent()) throw contract_error("not a Laurent polynomial: " + text());
  std::map<long, Rat> out;
  long shift = den_.degree();
  for (long d = 0; d <= num_.degree(); ++d)
    if (num_.coeff(d) != 0) out[d - shift] = num_.coeff(d);
  return out;
}

RatFunc RatFunc::stretch(long m) const { return RatFunc(num_.stretch(m), den_.stretch(m)); }

Rat RatFunc::eval_one() const {
  Rat n(0), d(0);
  for (long i = 0; i <= num_.degree(); ++i) n += num_.coeff(i);
  for (long i = 0; i <= den_.degree(); ++i) d += den_.coeff(i);
  if (d == 0) throw contract_error("denominator vanishes at u = 1");
  return n / d;
}

std::string RatFunc::text() const {
  if (den_ == UPoly::constant(Rat(1))) return num_.text("u");
  return "(" + num_.text("u") + ")/(" + den_.text("u") + ")";
}

}  // namespace oscalg
