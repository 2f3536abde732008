#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oscalg/qseries.hpp"

using namespace oscalg;

namespace {

// ---- independent expander -------------------------------------------------
// q-truncated polynomials with Laurent coefficients, stored densely and
// multiplied by schoolbook convolution. Deliberately shares no code with
// the Series template.

using QPoly = std::vector<LaurentT>;  // index = q power, size = order

QPoly qp_one(long order) {
  QPoly p(order);
  p[0] = LaurentT::one();
  return p;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  long order = static_cast<long>(a.size());
  QPoly r(order);
  for (long i = 0; i < order; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; i + j < order; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

// (1 + c q^l)^b, b >= 0
QPoly qp_plus_factor(const LaurentT& c, long l, long b, long order) {
  QPoly p(order);
  LaurentT ck = LaurentT::one();
  for (long k = 0; k * l < order; ++k) {
    if (k > 0) ck = ck * c;
    if (k <= b) p[k * l] = ck.scaled(Rat(choose(b, k)));
  }
  return p;
}

// (1 - c q^l)^(-b), b >= 0
QPoly qp_minus_factor(const LaurentT& c, long l, long b, long order) {
  QPoly p(order);
  if (b == 0) return qp_one(order);
  LaurentT ck = LaurentT::one();
  for (long k = 0; k * l < order; ++k) {
    if (k > 0) ck = ck * c;
    p[k * l] = ck.scaled(Rat(choose(b - 1 + k, k)));
  }
  return p;
}

QPoly naive_hilbert_series(const SurfaceBetti& b, long order) {
  QPoly acc = qp_one(order);
  for (long l = 1; l < order; ++l) {
    acc = qp_mul(acc, qp_plus_factor(LaurentT::monomial(Rat(1), -1), l, b.b1, order));
    acc = qp_mul(acc, qp_plus_factor(LaurentT::monomial(Rat(1), 1), l, b.b3, order));
    acc = qp_mul(acc, qp_minus_factor(LaurentT::monomial(Rat(1), -2), l, b.b0, order));
    acc = qp_mul(acc, qp_minus_factor(LaurentT::monomial(Rat(1), 0), l, b.b2, order));
    acc = qp_mul(acc, qp_minus_factor(LaurentT::monomial(Rat(1), 2), l, b.b4, order));
  }
  return acc;
}

LaurentT poincare(const SurfaceBetti& b) {
  LaurentT p;
  long bs[5] = {b.b0, b.b1, b.b2, b.b3, b.b4};
  for (long d = 0; d < 5; ++d) p.add_term(d, Rat(bs[d]));
  return p;
}

// signs by degree parity, evaluated at t^m
LaurentT poincare_super(const SurfaceBetti& b, long m) {
  LaurentT p;
  long bs[5] = {b.b0, b.b1, b.b2, b.b3, b.b4};
  for (long d = 0; d < 5; ++d) p.add_term(d * m, Rat(d % 2 ? -bs[d] : bs[d]));
  return p;
}

LaurentT poincare_at(const SurfaceBetti& b, long m) {
  LaurentT p;
  long bs[5] = {b.b0, b.b1, b.b2, b.b3, b.b4};
  for (long d = 0; d < 5; ++d) p.add_term(d * m, Rat(bs[d]));
  return p;
}

// 3-colored partition count: coefficient of q^n in prod (1-q^l)^-e
long colored_partitions(long n, long colors) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (long l = 1; l <= n; ++l)
    for (long c = 0; c < colors; ++c)
      for (long m = l; m <= n; ++m) ways[m] += ways[m - l];
  return ways[n];
}

const SurfaceBetti kSurfaces[] = {betti_p2(), betti_k3(), betti_abelian()};

}  // namespace

TEST_CASE("Hilbert scheme series against a from-scratch expander") {
  const long order = 6;
  for (const auto& b : kSurfaces) {
    SeriesT s = goettsche_product(b, order);
    QPoly naive = naive_hilbert_series(b, order);
    for (long n = 0; n < order; ++n) CHECK(s.coeff_q(n) == naive[n]);
  }
}

TEST_CASE("Hilbert scheme coefficients: known small cases") {
  SeriesT p2 = goettsche_product(betti_p2(), 4);
  CHECK(p2.coeff_q(0) == LaurentT::one());
  // one point: the surface itself, recentered
  LaurentT h1 = p2.coeff_q(1);
  CHECK(h1.coeff(-2) == 1);
  CHECK(h1.coeff(0) == 1);
  CHECK(h1.coeff(2) == 1);
  CHECK(h1.eval_one() == 3);
  // two points on the plane: betti row 1,0,2,0,3,0,2,0,1
  LaurentT h2 = p2.coeff_q(2);
  CHECK(h2.coeff(-4) == 1);
  CHECK(h2.coeff(-2) == 2);
  CHECK(h2.coeff(0) == 3);
  CHECK(h2.eval_one() == 9);
  CHECK(h2.symmetric_about(0));

  SeriesT k3 = goettsche_product(betti_k3(), 3);
  LaurentT k1 = k3.coeff_q(1);
  CHECK(k1.coeff(0) == 22);
  CHECK(k1.coeff(-2) == 1);
  CHECK(k1.eval_one() == 24);
  // 24 colored pairs: 24 for a double point, C(24,2) + 24 = 300 for two simple
  CHECK(k3.coeff_q(2).eval_one() == 324);
}

TEST_CASE("every Hilbert coefficient is palindromic with odd rows matching") {
  for (const auto& b : kSurfaces) {
    SeriesT s = goettsche_product(b, 7);
    for (long n = 0; n < 7; ++n) {
      LaurentT c = s.coeff_q(n);
      CHECK(c.symmetric_about(0));
      // all exponents within the shifted range [-2n, 2n]
      if (!c.is_zero()) {
        CHECK(c.min_exp() >= -2 * n);
        CHECK(c.max_exp() <= 2 * n);
      }
    }
  }
}

TEST_CASE("symmetric powers match the cycle-index oracles") {
  for (const auto& b : kSurfaces) {
    SeriesT s = macdonald_sym_power(b, 4);
    CHECK(s.coeff_q(0) == LaurentT::one());
    CHECK(s.coeff_q(1) == poincare(b) * LaurentT::monomial(Rat(1), -2));

    // Sym^2: (P(t)^2 + P_super(t^2)) / 2, recentered by t^-4
    LaurentT sym2 = (poincare(b) * poincare(b) + poincare_super(b, 2)).scaled(Rat(1, 2));
    CHECK(s.coeff_q(2) == sym2 * LaurentT::monomial(Rat(1), -4));

    // Sym^3: (P^3 + 3 P * P_super(t^2) + 2 P(t^3)) / 6, recentered by t^-6
    LaurentT p = poincare(b);
    LaurentT sym3 =
        (p * p * p + (p * poincare_super(b, 2)).scaled(Rat(3)) + poincare_at(b, 3).scaled(Rat(2)))
            .scaled(Rat(1, 6));
    CHECK(s.coeff_q(3) == sym3 * LaurentT::monomial(Rat(1), -6));
  }
}

TEST_CASE("stratified sum reproduces the closed product") {
  for (const auto& b : kSurfaces) {
    SeriesT direct = goettsche_product(b, 8);
    SeriesT stratified = strata_sum(b, 8);
    CHECK(equal_to_order(direct, stratified, 1, 8));
  }
}

TEST_CASE("two-variable refinement collapses to the one-variable series") {
  struct Pair {
    HodgeTable h;
    SurfaceBetti b;
  } cases[] = {{hodge_p2(), betti_p2()}, {hodge_k3(), betti_k3()}, {hodge_abelian(), betti_abelian()}};
  for (const auto& c : cases) {
    CHECK(c.h.betti_row_sums().b2 == c.b.b2);
    SeriesXY two = hodge_product(c.h, 6);
    SeriesT diag = hodge_diagonal(two);
    CHECK(equal_to_order(diag, goettsche_product(c.b, 6), 1, 6));

    // first coefficient is the recentered Hodge polynomial of the surface
    LaurentXY h1 = two.coeff_q(1);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) CHECK(h1.coeff(p - 1, q - 1) == c.h.h[p][q]);
  }
}

TEST_CASE("t = 1 totals agree with the independent expander") {
  for (const auto& b : kSurfaces) {
    SeriesQ e = t_one_specialization(goettsche_product(b, 6));
    QPoly naive = naive_hilbert_series(b, 6);
    for (long n = 0; n < 6; ++n) CHECK(e.coeff_q(n) == naive[n].eval_one());
  }
}

TEST_CASE("without odd cohomology, t = 1 counts colored partitions") {
  for (const auto& b : {betti_p2(), betti_k3()}) {
    SeriesQ e = t_one_specialization(goettsche_product(b, 7));
    for (long n = 0; n < 7; ++n) CHECK(e.coeff_q(n) == colored_partitions(n, b.euler()));
  }
  // plane spot values
  SeriesQ e = t_one_specialization(goettsche_product(betti_p2(), 6));
  CHECK(e.coeff_q(0) == 1);
  CHECK(e.coeff_q(1) == 3);
  CHECK(e.coeff_q(2) == 9);
  CHECK(e.coeff_q(3) == 22);
  CHECK(e.coeff_q(4) == 51);
  CHECK(e.coeff_q(5) == 108);
}

TEST_CASE("series serialization is valid JSON with faithful terms") {
  SeriesT s = goettsche_product(betti_p2(), 4);
  auto j = nlohmann::json::parse(series_json(s));
  CHECK(j["D"] == 1);
  CHECK(j["order"] == "4");
  CHECK(j["coeffs"].is_array());
  CHECK(j["coeffs"].size() == s.terms().size());
  long prev = -1000000;
  for (auto& item : j["coeffs"]) {
    long e = item["q_num"].get<long>();
    CHECK(e > prev);
    prev = e;
    CHECK(item["value"].is_string());
  }

  SeriesQ r = t_one_specialization(s);
  auto jr = nlohmann::json::parse(series_json(r));
  CHECK(jr["coeffs"][1]["value"] == "3");

  // fractional order renders as a reduced fraction
  Series<Rat> half(8, 5);
  half.add_term(3, Rat(2));
  auto jh = nlohmann::json::parse(series_json(half));
  CHECK(jh["D"] == 8);
  CHECK(jh["order"] == "5/8");
  CHECK(jh["coeffs"][0]["q_num"] == 3);
}
