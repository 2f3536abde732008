#include "oscalg/boxring.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace oscalg {

namespace {

void fill_tableau(const std::vector<long>& shape, int nvars, std::size_t row, std::size_t col,
                  std::vector<std::vector<int>>& T, std::vector<int>& counts, MPoly& out) {
  if (row == shape.size()) {
    std::vector<int> e(counts.begin(), counts.end());
    out.add_term(e, Rat(1));
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    fill_tableau(shape, nvars, row + 1, 0, T, counts, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, T[row][col - 1]);                // rows weakly increase
  if (row > 0 && col < static_cast<std::size_t>(shape[row - 1]))
    lo = std::max(lo, T[row - 1][col] + 1);                       // columns strictly increase
  for (int v = lo; v <= nvars; ++v) {
    T[row][col] = v;
    ++counts[static_cast<std::size_t>(v - 1)];
    fill_tableau(shape, nvars, row, col + 1, T, counts, out);
    --counts[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

MPoly schur_poly(const Partition& shape, int nvars) {
  if (nvars < 1) throw contract_error("schur_poly needs at least one variable");
  static std::map<std::pair<Partition, int>, MPoly> cache;
  auto key = std::make_pair(shape, nvars);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MPoly out(nvars);
  const auto& parts = shape.parts();
  if (parts.size() <= static_cast<std::size_t>(nvars)) {
    if (parts.empty()) {
      out = MPoly::constant(nvars, Rat(1));
    } else {
      std::vector<std::vector<int>> T;
      for (long p : parts) T.emplace_back(static_cast<std::size_t>(p), 0);
      std::vector<int> counts(static_cast<std::size_t>(nvars), 0);
      fill_tableau(parts, nvars, 0, 0, T, counts, out);
    }
  }
  cache.emplace(std::move(key), out);
  return out;
}

std::map<Partition, Rat> schur_expand(MPoly p) {
  std::map<Partition, Rat> out;
  int nvars = p.nvars();
  while (!p.is_zero()) {
    std::vector<int> e = p.lex_leading();
    Rat c = p.coeff(e);
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] > e[i - 1])
        throw consistency_error("leading exponent not weakly decreasing: input not symmetric");
    std::vector<long> parts;
    for (int x : e)
      if (x > 0) parts.push_back(x);
    Partition shape(parts);
    out[shape] += c;
    p = p - schur_poly(shape, nvars).scaled(c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// Product of two box Schur classes, cached per (r, n, a, b). Coefficients
// (Littlewood-Richardson numbers) are checked to be nonnegative integers.
const std::map<Partition, Rat>& basis_product(long r, long n, Partition a, Partition b) {
  if (b < a) std::swap(a, b);
  static std::map<std::tuple<long, long, Partition, Partition>, std::map<Partition, Rat>> cache;
  auto key = std::make_tuple(r, n, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::map<Partition, Rat> result;
  if (a.parts().empty()) {
    result[b] = 1;
  } else {
    MPoly prod = schur_poly(a, static_cast<int>(n)) * schur_poly(b, static_cast<int>(n));
    for (auto& [shape, c] : schur_expand(std::move(prod))) {
      if (shape.part(0) > r - n) continue;  // box truncation
      if (!rat_is_integer(c) || c < 0)
        throw consistency_error("Schur structure constant is not a nonnegative integer");
      result[shape] = c;
    }
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

BoxClass::BoxClass(long r, long n) : r_(r), n_(n) {
  if (n < 0 || r < n) throw contract_error("box ring needs 0 <= n <= r");
}

BoxClass BoxClass::one(long r, long n) {
  BoxClass x(r, n);
  x.add_term(Partition(), Rat(1));
  return x;
}

BoxClass BoxClass::schur(long r, long n, const Partition& shape) {
  BoxClass x(r, n);
  x.add_term(shape, Rat(1));
  return x;
}

bool BoxClass::fits_box(const Partition& shape) const {
  return static_cast<long>(shape.parts().size()) <= n_ && shape.part(0) <= r_ - n_;
}

Rat BoxClass::coeff(const Partition& shape) const {
  auto it = c_.find(shape);
  return it == c_.end() ? Rat(0) : it->second;
}

void BoxClass::add_term(const Partition& shape, const Rat& c) {
  if (!fits_box(shape)) throw contract_error("partition " + shape.text() + " is outside the box");
  if (c == 0) return;
  auto it = c_.find(shape);
  if (it == c_.end()) {
    c_.emplace(shape, c);
  } else {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

void BoxClass::check_compatible(const BoxClass& o) const {
  if (r_ != o.r_ || n_ != o.n_) throw contract_error("mixed box rings");
}

BoxClass BoxClass::operator+(const BoxClass& o) const {
  check_compatible(o);
  BoxClass out = *this;
  for (auto& [s, c] : o.c_) out.add_term(s, c);
  return out;
}

BoxClass BoxClass::operator-(const BoxClass& o) const { return *this + (-o); }

BoxClass BoxClass::operator-() const {
  BoxClass out(r_, n_);
  for (auto& [s, c] : c_) out.c_.emplace(s, Rat(-c));
  return out;
}

BoxClass BoxClass::operator*(const BoxClass& o) const {
  check_compatible(o);
  BoxClass out(r_, n_);
  for (auto& [sa, ca] : c_)
    for (auto& [sb, cb] : o.c_) {
      Rat f = ca * cb;
      for (auto& [sc, k] : basis_product(r_, n_, sa, sb)) out.add_term(sc, Rat(f * k));
    }
  return out;
}

BoxClass BoxClass::scaled(const Rat& s) const {
  BoxClass out(r_, n_);
  if (s == 0) return out;
  for (auto& [sh, c] : c_) out.c_.emplace(sh, Rat(c * s));
  return out;
}

BoxClass BoxClass::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  BoxClass acc = one(r_, n_);
  for (long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool BoxClass::operator==(const BoxClass& o) const {
  return r_ == o.r_ && n_ == o.n_ && c_ == o.c_;
}

BoxClass BoxClass::component(long k) const {
  BoxClass out(r_, n_);
  for (auto& [s, c] : c_)
    if (s.weight() == k) out.c_.emplace(s, c);
  return out;
}

BoxClass BoxClass::inverse() const {
  Rat s0 = coeff(Partition());
  if (s0 == 0) throw contract_error("inverting a class with zero scalar term");
  Rat s0inv = Rat(1) / s0;
  long top = top_degree();
  std::vector<BoxClass> f, g;
  for (long k = 0; k <= top; ++k) f.push_back(component(k));
  g.push_back(one(r_, n_).scaled(s0inv));
  BoxClass out = g[0];
  for (long k = 1; k <= top; ++k) {
    BoxClass acc(r_, n_);
    for (long i = 1; i <= k; ++i) acc = acc + f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
    g.push_back(acc.scaled(Rat(-s0inv)));
    out = out + g.back();
  }
  return out;
}

std::string BoxClass::text() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [s, c] : c_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + rat_text(c) + ")*s" + s.text();
  }
  return out;
}

Int integrate(const BoxClass& x) {
  std::vector<long> full(static_cast<std::size_t>(x.n()), x.r() - x.n());
  while (!full.empty() && full.back() == 0) full.pop_back();
  Rat v = x.coeff(Partition(full));
  if (!rat_is_integer(v)) throw consistency_error("integral is not an integer");
  return v.get_num();
}

}  // namespace oscalg
