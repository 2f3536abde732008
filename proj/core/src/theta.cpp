#include "oscalg/theta.hpp"

namespace oscalg {

namespace {

constexpr long kThetaDen = 8;

// sum over k >= 0 of c^k q^(l*k)
SeriesR geometric(long lattice_den, long order_units, const RatFunc& c, long l) {
  SeriesR out(lattice_den, order_units);
  RatFunc p = RatFunc::one();
  for (long k = 0; k * l < order_units; ++k) {
    if (k > 0) p = p * c;
    out.add_term(k * l, p);
  }
  return out;
}

// sum over b in Z of t^(-2b) q^(b^2) * expansion of 1/(1 - t^4 q^(2b-1)),
// with the negative-step factors rewritten to expand in positive q-powers.
// Computed on the integer lattice with u = t.
SeriesR numerator_b_sum(long order) {
  SeriesR out(1, order);
  long bound = 1;
  while (bound * bound < order) ++bound;  // terms at |b| > bound start past the order
  for (long b = -bound; b <= bound; ++b) {
    if (b * b >= order) continue;
    long step = 2 * b - 1;
    SeriesR factor(1, order);
    if (step > 0) {
      factor = geometric(1, order, RatFunc::monomial(Rat(1), 4), step);
    } else {
      // 1/(1 - t^4 q^step) = -t^-4 q^-step / (1 - t^-4 q^-step), step < 0
      factor = geometric(1, order, RatFunc::monomial(Rat(1), -4), -step)
                   .coeff_scaled(RatFunc::monomial(Rat(-1), -4))
                   .shifted(-step)
                   .truncated(order);
    }
    out = out + SeriesR::monomial(1, order, b * b, RatFunc::monomial(Rat(1), -2 * b)) * factor;
  }
  return out;
}

// sum over n in Z of t^(-2n) q^(n^2), integer lattice, u = t
SeriesR denominator_n_sum(long order) {
  SeriesR out(1, order);
  long bound = 1;
  while (bound * bound < order) ++bound;
  for (long n = -bound; n <= bound; ++n) {
    if (n * n >= order) continue;
    out.add_term(n * n, RatFunc::monomial(Rat(1), -2 * n));
  }
  return out;
}

}  // namespace

SeriesR theta(int mu, int nu, long order, long tau_mult, long z_mult) {
  if (mu != 0 && mu != 1) throw contract_error("theta characteristic mu must be 0 or 1");
  if (nu != 0 && nu != 1) throw contract_error("theta characteristic nu must be 0 or 1");
  if (tau_mult < 1 || z_mult < 1) throw contract_error("theta argument multipliers must be >= 1");
  long order_units = order * kThetaDen;
  SeriesR out(kThetaDen, order_units);
  // q-exponent tau_mult*(2n+mu)^2/8, t-exponent z_mult*(2n+mu)/2 = u-exponent
  // z_mult*(2n+mu) under t = u^2.
  for (long n = -(order + 2); n <= order + 2; ++n) {
    long m = 2 * n + mu;
    long e = tau_mult * m * m;
    if (e >= order_units) continue;
    Rat sign = (nu == 1 && (n % 2 != 0)) ? Rat(-1) : Rat(1);
    out.add_term(e, RatFunc::monomial(sign, z_mult * m));
  }
  // Terms beyond |n| = order+2 all exceed the order: (2n+mu)^2 >= 8*order.
  return out;
}

SeriesR theta_11_product(long order) {
  long order_units = order * kThetaDen;
  // q^(1/8) * (u - u^-1), with t = u^2
  SeriesR out = SeriesR::monomial(kThetaDen, order_units, 1,
                                  RatFunc::monomial(Rat(1), 1) + RatFunc::monomial(Rat(-1), -1));
  for (long l = 1; l * kThetaDen < order_units; ++l) {
    out = out * binomial_factor<RatFunc>(kThetaDen, order_units,
                                         RatFunc::monomial(Rat(-1), -2), l * kThetaDen, 1);
    out = out * binomial_factor<RatFunc>(kThetaDen, order_units,
                                         RatFunc::monomial(Rat(-1), 0), l * kThetaDen, 1);
    out = out * binomial_factor<RatFunc>(kThetaDen, order_units,
                                         RatFunc::monomial(Rat(-1), 2), l * kThetaDen, 1);
    out = out.truncated(std::min(out.order_units(), order_units + kThetaDen));
  }
  return out.truncated(order_units);
}

SeriesR yoshioka_series(long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  // slack for the division by the n-sum (constant term 1) and the global
  // normalizing factor
  long work = order + 1;
  SeriesR ratio = numerator_b_sum(work) / denominator_n_sum(work);

  // t^4 (t^2 - 1)
  RatFunc norm = RatFunc::monomial(Rat(1), 6) + RatFunc::monomial(Rat(-1), 4);
  SeriesR global = SeriesR::constant(1, work, norm);
  for (long l = 1; l < work; ++l) {
    for (long e : {-2L, 0L, 2L}) {
      global = global * binomial_factor<RatFunc>(1, work, RatFunc::monomial(Rat(-1), e), l, 2);
      global = global.truncated(std::min(global.order_units(), work));
    }
  }
  SeriesR out = (ratio * global.inverse()).truncated(order);

  for (auto& [e, v] : out.terms()) {
    if (!v.is_laurent())
      throw consistency_error("rank-two series coefficient of q^" + std::to_string(e) +
                              " is not a Laurent polynomial: " + v.text());
  }
  return out;
}

SeriesR to_theta_world(const SeriesR& s) {
  SeriesR fine = s.rescaled(s.lattice_den() * kThetaDen / std::gcd(s.lattice_den(), kThetaDen));
  return fine.mapped<RatFunc>([](const RatFunc& v) { return v.stretch(2); });
}

SeriesR yoshioka_theta_form(long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  long work = order + 2;
  long work_units = work * kThetaDen;
  SeriesR bsum = to_theta_world(numerator_b_sum(work));

  SeriesR th00 = theta(0, 0, work, 2, 2);
  SeriesR th11 = theta(1, 1, work, 1, 2);
  SeriesR den = th00 * th11 * th11;
  den = den.coeff_scaled(RatFunc::monomial(Rat(1), 10));  // t^5 = u^10

  // q^(1/4) (t - t^-1) = q^(2/8) (u^2 - u^-2)
  SeriesR scale = SeriesR::monomial(kThetaDen, work_units, 2,
                                    RatFunc::monomial(Rat(1), 2) + RatFunc::monomial(Rat(-1), -2));
  return (bsum * scale / den).truncated(order * kThetaDen);
}

SeriesR uhlenbeck_series_p2(long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  long work = order + 1;
  SeriesR y = yoshioka_series(work);
  SeriesT g = goettsche_product(betti_p2(), work);
  SeriesR gr = g.mapped<RatFunc>([](const LaurentT& v) { return v.to_ratfunc(); });
  return (y / gr).truncated(order);
}

SeriesR uhlenbeck_theta_form_p2(long order) {
  if (order < 1) throw contract_error("series order must be >= 1");
  long work = order + 2;
  long work_units = work * kThetaDen;
  SeriesR bsum = to_theta_world(numerator_b_sum(work));

  SeriesR th00 = theta(0, 0, work, 2, 2);
  SeriesR th11 = theta(1, 1, work, 1, 2);
  SeriesR den = (th00 * th11).coeff_scaled(RatFunc::monomial(Rat(1), 10));

  SeriesR scale = SeriesR::monomial(kThetaDen, work_units, 1, RatFunc::one());  // q^(1/8)
  return (bsum * scale / den).truncated(order * kThetaDen);
}

}  // namespace oscalg
