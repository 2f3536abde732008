#pragma once

#include "oscalg/boxring.hpp"
#include "oscalg/qseries.hpp"

namespace oscalg {

// Total Chern class together with the rank of the bundle it describes.
struct ChernVector {
  long rank = 0;
  BoxClass total;
};

// Tautological rank-n quotient bundle: c_j = s_(1^j) (single-column
// convention; the single-row convention is the transpose of everything).
ChernVector chern_Q(long r, long n);

// Tautological sub: c(S) is the multiplicative inverse of c(Q). The
// components above rank r-n must vanish on their own; that is checked.
ChernVector chern_S(long r, long n);

// Dual bundle: degree-j part picks up (-1)^j.
ChernVector chern_dual(const ChernVector& a);

// Total Chern class of a tensor product via the universal splitting
// formula: with formal roots a_i, b_j, c(A ox B) = prod (1 + a_i + b_j),
// carried through power sums of the two root sets (Newton's identities in
// the box ring). Every output coefficient must come out an integer.
ChernVector chern_tensor(const ChernVector& a, const ChernVector& b);

// Obstruction bundle of the excess intersection of the two length-n
// degeneration cycles inside their common ambient moduli term, restricted
// to the Grassmannian where they meet:
//   c(V) = c(ambient) * c(T_Gr) / (c(cycle) * c(cycle'))
// with c(ambient) = (c(Q)c(Q*))^r, each cycle contributing c(Q)^r, and
// c(T_Gr) = c(S* ox Q). Must coincide with c(Q* ox S); tests compare the
// two routes. Rank bookkeeping: 2rn - rn - rn + n(r-n) = n(r-n); the
// common dimension shift of the ambient and cycle terms cancels here.
ChernVector excess_bundle(long r, long n);

// Intersection-number generating polynomial in z:
//   sum over n of z^(2n) * integrate(top excess class for (r, n)),
// raised to the pairing-th power (transversal meeting points multiply).
// Closed form (1 - (-1)^r z^2)^(r*pairing); the equality lives in tests.
SeriesQ quot_intersection_series(long r, long pairing);

}  // namespace oscalg
