#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscalg/qseries.hpp"
#include "oscalg/surface.hpp"

namespace oscalg {

// Cohomology-like input datum: a list of class degrees (0..4) and the exact
// intersection pairing between them. The pairing must vanish unless degrees
// sum to 4 and must be graded-symmetric:
// <a,b> = (-1)^(deg a * deg b) <b,a>.
class SurfaceDatum {
 public:
  SurfaceDatum(std::vector<int> degrees, std::vector<std::vector<Rat>> pairing);

  int class_count() const { return static_cast<int>(degree_.size()); }
  int degree(int cls) const { return degree_.at(static_cast<std::size_t>(cls)); }
  bool odd(int cls) const { return degree(cls) % 2 == 1; }
  const Rat& pairing(int a, int b) const {
    return pairing_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  SurfaceBetti betti() const;

  // Pairing as long long entries when every entry is an integer that fits.
  std::optional<std::vector<std::vector<long long>>> integral_pairing() const;

 private:
  std::vector<int> degree_;
  std::vector<std::vector<Rat>> pairing_;
};

SurfaceDatum datum_p2();
SurfaceDatum datum_k3();
// Full 16-class exterior-algebra datum of a two-dimensional complex torus,
// with its honest signs on the odd classes.
SurfaceDatum datum_abelian();
// Generic datum with the requested Betti numbers: deg-0/deg-4 and
// deg-1/deg-3 classes paired off in order, identity on the middle degree.
SurfaceDatum datum_from_betti(const SurfaceBetti& b);

// One oscillator mode: level >= 1 and a class index.
struct FockLabel {
  long level;
  int cls;
  auto operator<=>(const FockLabel&) const = default;
};

// Basis vector of the Fock module: a canonically ordered multiset of
// labels. Labels with odd classes may appear at most once (the constructor
// rejects duplicates; operator code treats such squares as zero).
class FockState {
 public:
  FockState() = default;
  FockState(std::vector<FockLabel> sorted_labels, const SurfaceDatum& S);

  const std::vector<FockLabel>& labels() const { return labels_; }
  long energy() const;
  long t_shift(const SurfaceDatum& S) const;  // sum of (deg - 2)
  bool operator==(const FockState& o) const { return labels_ == o.labels_; }
  auto operator<=>(const FockState& o) const { return labels_ <=> o.labels_; }
  std::string text() const;

 private:
  std::vector<FockLabel> labels_;
};

// Finite rational combination of basis states.
using FockVector = std::map<FockState, Rat>;

FockVector vacuum();
std::string fock_text(const FockVector& v);
void fock_add(FockVector& v, const FockState& s, const Rat& c);
bool fock_equal(const FockVector& a, const FockVector& b);
FockVector fock_scaled(const FockVector& v, const Rat& s);
FockVector fock_sum(const FockVector& a, const FockVector& b);

// Creation operator p^alpha_{-i}: prepend the label (i, alpha) and reorder
// into canonical form, picking up one minus sign for each odd label an odd
// newcomer crosses. i >= 1.
FockVector create(long i, int alpha, const FockVector& v, const SurfaceDatum& S);

// Annihilation operator p^alpha_i: walk the word left to right; every label
// (i, beta) contributes i * <alpha, beta> times the state with that label
// removed, times the crossing sign collected on the way. i >= 1.
FockVector annihilate(long i, int alpha, const FockVector& v, const SurfaceDatum& S);

// Signed generator: level > 0 annihilates, level < 0 creates at |level|.
FockVector apply_generator(long signed_level, int alpha, const FockVector& v,
                           const SurfaceDatum& S);

// Bilinear form making distinct basis states orthogonal, computed as a sum
// over level-preserving matchings with Koszul signs and one factor
// i * <alpha, beta> per matched label pair. Independent of the operator
// code; used to certify that annihilate is the graded adjoint of create.
Rat fock_inner(const FockState& a, const FockState& b, const SurfaceDatum& S);
Rat fock_inner(const FockVector& a, const FockVector& b, const SurfaceDatum& S);

struct RelationFailure {
  std::string relation;
  std::string state;
  std::string expected;
  std::string got;
};

struct RelationReport {
  long long pairs = 0;       // generator pairs checked
  long long states = 0;      // basis states in play
  long long evaluations = 0; // commutator evaluations performed
  std::vector<RelationFailure> failures;  // capped; see failure_cap
  long long failure_count = 0;
  bool pass() const { return failure_count == 0; }
  static constexpr std::size_t failure_cap = 32;
};

// Verify the graded commutation relations
//   [p^alpha_i, p^beta_j] = i delta_{i+j,0} <alpha,beta> Id
// (anticommutator when both classes are odd) for all signed generator pairs
// with 1 <= |i|,|j| <= max_energy, applied to every basis state of energy
// <= max_energy. rank = r checks the rescaled form: the creation side is
// multiplied by (-1)^(r*i-1)*r and the expected constant becomes
// (-1)^(r*i-1)*r*i*<alpha,beta>.
RelationReport check_relations(const SurfaceDatum& S, long max_energy, long rank = 0);

// All basis states with energy <= max_energy, canonically ordered.
std::vector<FockState> enumerate_states(const SurfaceDatum& S, long max_energy);

// Graded dimension sum over all basis states of q^energy t^(t_shift), by
// explicit enumeration (no product formula involved). Must reproduce
// goettsche_product of the datum's Betti numbers; the comparison lives in
// tests. vacuum_dim scales the whole series (an opaque tensor factor).
SeriesT character(const SurfaceDatum& S, long order, long vacuum_dim = 1);

// c_n = n^2/pairing * [z^(2n)] log((1 - (-1)^r z^2)^(r*pairing)),
// for n = 1..count. Must equal (-1)^(r*n-1)*r*n independently of pairing.
std::vector<Rat> recover_constants(long r, long pairing, long count);

}  // namespace oscalg
