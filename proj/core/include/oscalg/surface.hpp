#pragma once

#include <array>

#include "oscalg/rational.hpp"

namespace oscalg {

// Betti numbers b0..b4 of a smooth projective surface; duality forces
// b0 = b4 and b1 = b3.
struct SurfaceBetti {
  long b0 = 1, b1 = 0, b2 = 1, b3 = 0, b4 = 1;

  SurfaceBetti() = default;
  SurfaceBetti(long b0_, long b1_, long b2_, long b3_, long b4_)
      : b0(b0_), b1(b1_), b2(b2_), b3(b3_), b4(b4_) {
    if (b0 < 0 || b1 < 0 || b2 < 0 || b3 < 0 || b4 < 0)
      throw contract_error("Betti numbers must be nonnegative");
    if (b0 != b4 || b1 != b3)
      throw contract_error("Betti numbers must satisfy b0 = b4 and b1 = b3");
  }

  long euler() const { return b0 - b1 + b2 - b3 + b4; }
};

inline SurfaceBetti betti_p2() { return {1, 0, 1, 0, 1}; }
inline SurfaceBetti betti_k3() { return {1, 0, 22, 0, 1}; }
inline SurfaceBetti betti_abelian() { return {1, 4, 6, 4, 1}; }

// Hodge numbers h[p][q], 0 <= p,q <= 2, symmetric in (p,q).
struct HodgeTable {
  std::array<std::array<long, 3>, 3> h{};

  HodgeTable() = default;
  explicit HodgeTable(const std::array<std::array<long, 3>, 3>& table) : h(table) {
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        if (h[p][q] < 0) throw contract_error("Hodge numbers must be nonnegative");
        if (h[p][q] != h[q][p]) throw contract_error("Hodge table must be symmetric");
      }
  }

  long betti(int i) const {
    long b = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        if (p + q == i) b += h[p][q];
    return b;
  }

  SurfaceBetti betti_row_sums() const { return {betti(0), betti(1), betti(2), betti(3), betti(4)}; }
};

inline HodgeTable hodge_p2() { return HodgeTable{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
inline HodgeTable hodge_k3() { return HodgeTable{{{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}}}; }
inline HodgeTable hodge_abelian() { return HodgeTable{{{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}}}; }

}  // namespace oscalg
