#pragma once

#include <string>

#include "oscalg/laurent.hpp"
#include "oscalg/series.hpp"
#include "oscalg/surface.hpp"

namespace oscalg {

using SeriesT = Series<LaurentT>;
using SeriesXY = Series<LaurentXY>;
using SeriesR = Series<RatFunc>;
using SeriesQ = Series<Rat>;

// Product over l >= 1 of
//   (1 + t^-1 q^l)^b1 (1 + t q^l)^b3
//   / [(1 - t^-2 q^l)^b0 (1 - q^l)^b2 (1 - t^2 q^l)^b4],
// expanded to q^order. Coefficient of q^n is the shifted Poincare polynomial
// of the n-point Hilbert scheme of a surface with these Betti numbers.
SeriesT goettsche_product(const SurfaceBetti& b, long order);

// The single l = 1 factor: coefficient of q^m is the shifted Poincare
// polynomial of the m-th symmetric power of the surface.
SeriesT macdonald_sym_power(const SurfaceBetti& b, long order);

// Same limit computed the stratified way: sum over pairs (s, mu) of
// q^s * prod over part values l of a_{m_l}(t), where a_m is the q^m
// coefficient of macdonald_sym_power and m_l the multiplicity of l in mu.
// Must agree with goettsche_product coefficientwise; the comparison is a
// cross-check, not an internal assertion.
SeriesT strata_sum(const SurfaceBetti& b, long order);

// Two-variable refinement: product over l >= 1 and -1 <= i,j <= 1 of
//   (1 + (-1)^(i+j+1) x^i y^j q^l)^((-1)^(i+j+1) h[i+1][j+1]).
// Specializing x = y = t must recover goettsche_product.
SeriesXY hodge_product(const HodgeTable& h, long order);

// x = y = t specialization.
SeriesT hodge_diagonal(const SeriesXY& s);

// Evaluate every Laurent coefficient at t = 1 (graded Euler numbers).
SeriesQ t_one_specialization(const SeriesT& s);

// Serialize a series to the flat JSON document
//   {"D": int, "order": "p/q", "coeffs": [{"q_num": int, "value": str}, ...]}
template <class C>
std::string series_json(const Series<C>& s) {
  Rat ord(s.order_units(), s.lattice_den());
  ord.canonicalize();
  std::string out = "{\"D\": " + std::to_string(s.lattice_den()) + ", \"order\": \"" +
                    rat_text(ord) + "\", \"coeffs\": [";
  bool first = true;
  for (auto& [e, v] : s.terms()) {
    if (!first) out += ", ";
    first = false;
    out += "{\"q_num\": " + std::to_string(e) + ", \"value\": \"" + RingTraits<C>::text(v) + "\"}";
  }
  return out + "]}";
}

}  // namespace oscalg
