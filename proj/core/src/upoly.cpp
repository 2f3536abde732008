#include "oscalg/upoly.hpp"

namespace oscalg {

namespace {
const Rat kZero(0);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) {
  UPoly p;
  if (c != 0) p.c_ = {c};
  return p;
}

UPoly UPoly::monomial(const Rat& c, long deg) {
  if (deg < 0) throw contract_error("monomial degree must be >= 0");
  UPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
    p.c_.back() = c;
  }
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UPoly::coeff(long d) const {
  if (d < 0 || d >= static_cast<long>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(d)];
}

const Rat& UPoly::lead() const {
  if (c_.empty()) throw contract_error("zero polynomial has no leading coefficient");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rat> out(c_);
  for (auto& x : out) x = -x;
  return UPoly(std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rat& s) const {
  if (s == 0) return UPoly();
  std::vector<Rat> out(c_);
  for (auto& x : out) x *= s;
  return UPoly(std::move(out));
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw contract_error("polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  long db = b.degree();
  std::vector<Rat> quot;
  if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  Rat invlead = 1 / b.lead();
  for (long d = a.degree(); d >= db; --d) {
    Rat& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    Rat f = top * invlead;
    quot[static_cast<std::size_t>(d - db)] = f;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(d - db + j)] -= f * b.coeff(j);
  }
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly UPoly::monic() const {
  if (is_zero()) return UPoly();
  return scaled(1 / lead());
}

UPoly UPoly::stretch(long m) const {
  if (m < 1) throw contract_error("stretch factor must be >= 1");
  if (is_zero() || m == 1) return *this;
  std::vector<Rat> out(static_cast<std::size_t>(degree() * m) + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(m)] = c_[i];
  return UPoly(std::move(out));
}

std::string UPoly::text(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (long d = 0; d <= degree(); ++d) {
    const Rat& c = coeff(d);
    if (c == 0) continue;
    Rat a = c > 0 ? Rat(c) : Rat(-c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = (a == 1) && d > 0;
    if (!unit) s += rat_text(a);
    if (d > 0) {
      if (!unit) s += "*";
      s += var;
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divrem(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? UPoly() : r.monic();
  }
  return a.is_zero() ? UPoly() : a.monic();
}

}  // namespace oscalg
