#pragma once

#include "oscalg/qseries.hpp"

namespace oscalg {

// Jacobi theta function with characteristics mu, nu in {0,1}:
//   sum over n in Z of (-1)^(n*nu) q^((n+mu/2)^2/2) t^(n+mu/2),
// expanded to the given q-order on the lattice (1/8)Z. The arguments may be
// rescaled: tau_mult doubles/replaces q -> q^tau_mult, z_mult replaces
// t -> t^z_mult. Coefficients are rational functions in u under the fixed
// substitution t = u^2, so half-integral t-powers stay polynomial.
SeriesR theta(int mu, int nu, long order, long tau_mult = 1, long z_mult = 1);

// Triple-product form of theta(1,1):
//   q^(1/8) (t^(1/2) - t^(-1/2)) prod_{l>=1} (1 - t^-1 q^l)(1 - q^l)(1 - t q^l),
// same lattice and coefficient conventions as theta().
SeriesR theta_11_product(long order);

// Rank-two series on the projective plane with an odd first Chern class:
//   [ sum_b t^(-2b) q^(b^2) / (1 - t^4 q^(2b-1)) ] / [ sum_n t^(-2n) q^(n^2) ]
//   * 1 / [ t^4 (t^2-1) prod_l ((1 - t^-2 q^l)(1 - q^l)(1 - t^2 q^l))^2 ].
// Factors with 2b - 1 < 0 are rewritten as -t^-4 q^(1-2b) / (1 - t^-4 q^(1-2b))
// so that every expansion runs in positive q-powers. Coefficients come out as
// rational functions in u = t; each q-coefficient must reduce to a Laurent
// polynomial, and a coefficient that does not throws consistency_error.
SeriesR yoshioka_series(long order);

// The same series rewritten through theta functions:
//   sum_b t^(-2b) q^(b^2)/(1 - t^4 q^(2b-1))
//   * q^(1/4) (t - t^-1) / [ t^5 theta(0,0)(2tau,2z) theta(1,1)(tau,2z)^2 ],
// expanded on the (1/8)Z lattice with t = u^2 coefficients.
SeriesR yoshioka_theta_form(long order);

// Quotient of yoshioka_series by the goettsche_product of the plane; the
// q^n coefficient tracks the coarse (Donaldson-side) moduli space.
SeriesR uhlenbeck_series_p2(long order);

// Closed theta expression for the same quotient:
//   sum_b t^(-2b) q^(b^2)/(1 - t^4 q^(2b-1))
//   * q^(1/8) / [ t^5 theta(0,0)(2tau,2z) theta(1,1)(tau,2z) ].
SeriesR uhlenbeck_theta_form_p2(long order);

// Lift a t-integral series (coefficients rational in u = t) onto the
// (1/8)Z lattice with u -> u^2, for comparison against theta expressions.
SeriesR to_theta_world(const SeriesR& s);

}  // namespace oscalg
