#pragma once

#include <string>
#include <vector>

#include "oscalg/partition.hpp"
#include "oscalg/qmatrix.hpp"

namespace oscalg {

// Deterministic generator (splitmix64) so every random instance is
// reproducible from its recorded seed.
class SeededRng {
 public:
  explicit SeededRng(unsigned long long seed) : s_(seed) {}
  unsigned long long next_u64();
  long next_int(long lo, long hi);  // inclusive bounds
  Rat next_rat(long max_abs_num, long max_den);

 private:
  unsigned long long s_;
};

// Pair of commuting nilpotent operators on an exact-rational space.
struct NilpotentPair {
  long dim;
  QMat b1, b2;
  NilpotentPair(QMat b1_, QMat b2_);  // checks shape, commutation, nilpotency
};

// A pair plus a tuple of marked vectors whose closure under the pair is
// everything (the cyclicity that places the tuple in the free locus).
struct QuotPoint {
  NilpotentPair pair;
  std::vector<Vec> vectors;
  QuotPoint(NilpotentPair p, std::vector<Vec> vs);  // checks lengths and cyclicity
};

// Multiplication operators x (one step along a row) and y (one step down a
// column) on the monomial basis of a Young diagram; optionally conjugated
// by a seeded random invertible rational matrix.
NilpotentPair staircase_pair(const Partition& diagram, bool conjugate_by_random,
                             unsigned long long seed);

// Basis e_{i,j} (1 <= i <= k, 1 <= j <= mu_i, mu_1 >= ... >= mu_k) with
//  (a) B1 e_{i,j} = e_{i,j+1} for j < mu_i, and B1 e_{i,mu_i} = 0;
//  (b) B2 e_{i,1} in span{e_{k,1} : k >= i+1} + image(B1).
struct AdaptedBasis {
  Partition mu;
  std::vector<std::vector<Vec>> chains;  // chains[i][j] = e_{i+1, j+1}
  QMat matrix() const;                   // columns in (i, j) order
};

// Build an adapted basis: B1-kernel filtration, quotients across
// image(B1) shifts, then a strict triangularization of the operator B2
// induces on each quotient, picked off its own kernel chain.
AdaptedBasis adapted_basis(const NilpotentPair& p);

// Second operator of the straightened pair: on the adapted basis,
// e_{i,j} -> e_{i+1,j} when the target chain is long enough, else 0;
// w is e_{1,1}. Expressed back in the original coordinates.
struct Companion {
  QMat b2_prime;
  Vec w;
};
Companion companion(const NilpotentPair& p);

// Closure of span(vectors) under B1 and B2 reaches the whole space.
bool is_cyclic(const NilpotentPair& p, const std::vector<Vec>& vectors);

// The straight segment from the point to its straightened companion:
//   (B1, t B2' + (1-t) B2, t w + (1-t) v1, v2, ..., vr).
// Every t yields a commuting nilpotent pair; cyclicity holds for all but
// finitely many t, and construction throws where it fails.
QuotPoint deformation_path(const QuotPoint& x, const Rat& t);

// Simultaneous change of coordinates by an invertible g.
QuotPoint conjugated(const QuotPoint& x, const QMat& g);

// Dimension of {h : hB1 = B1h, hB2 = B2h, h v_i = 0 for all i}; zero means
// the only group element fixing the tuple is the identity.
long stabilizer_dimension(const NilpotentPair& p, const std::vector<Vec>& vectors);

// {"dim": d, "B1": [[..]], "B2": [[..]], "vectors": [[..]]} with exact
// "p/q" entries.
std::string quot_json(const QuotPoint& x);

}  // namespace oscalg
