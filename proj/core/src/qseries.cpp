#include "oscalg/qseries.hpp"

#include "oscalg/partition.hpp"

namespace oscalg {

namespace {

// The five factor families share one shape: (1 + c * q^l)^m.
SeriesT surface_factor(const SurfaceBetti& b, long l, long order) {
  SeriesT f = SeriesT::one(1, order);
  auto mono = [](const Rat& c, long e) { return LaurentT::monomial(c, e); };
  if (b.b1) f = f * binomial_factor<LaurentT>(1, order, mono(Rat(1), -1), l, b.b1);
  if (b.b3) f = f * binomial_factor<LaurentT>(1, order, mono(Rat(1), 1), l, b.b3);
  f = f * binomial_factor<LaurentT>(1, order, mono(Rat(-1), -2), l, -b.b0);
  if (b.b2) f = f * binomial_factor<LaurentT>(1, order, mono(Rat(-1), 0), l, -b.b2);
  f = f * binomial_factor<LaurentT>(1, order, mono(Rat(-1), 2), l, -b.b4);
  return f;
}

}  // namespace

SeriesT goettsche_product(const SurfaceBetti& b, long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  SeriesT out = SeriesT::one(1, order);
  for (long l = 1; l < order; ++l) out = out * surface_factor(b, l, order);
  return out;
}

SeriesT macdonald_sym_power(const SurfaceBetti& b, long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  return surface_factor(b, 1, order);
}

SeriesT strata_sum(const SurfaceBetti& b, long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  SeriesT mac = macdonald_sym_power(b, order);
  SeriesT out(1, order);
  for (long s = 0; s < order; ++s) {
    LaurentT total;
    for (auto& mu : enumerate_partitions(s)) {
      LaurentT prod = LaurentT::one();
      for (auto& [value, mult] : mu.multiplicities()) {
        (void)value;
        prod = prod * mac.coeff_q(mult);
      }
      total = total + prod;
    }
    out.add_term(s, total);
  }
  return out;
}

SeriesXY hodge_product(const HodgeTable& h, long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  SeriesXY out = SeriesXY::one(1, order);
  for (long l = 1; l < order; ++l) {
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) {
        long hpq = h.h[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)];
        if (hpq == 0) continue;
        long sign = ((i + j + 1) % 2 == 0) ? 1 : -1;  // (-1)^(i+j+1)
        LaurentXY c = LaurentXY::monomial(Rat(sign), i, j);
        out = out * binomial_factor<LaurentXY>(1, order, c, l, sign * hpq);
      }
    }
  }
  return out;
}

SeriesT hodge_diagonal(const SeriesXY& s) {
  return s.mapped<LaurentT>([](const LaurentXY& v) { return v.diagonal(); });
}

SeriesQ t_one_specialization(const SeriesT& s) {
  return s.mapped<Rat>([](const LaurentT& v) { return v.eval_one(); });
}

}  // namespace oscalg
