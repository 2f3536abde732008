#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "oscalg/partition.hpp"

using namespace oscalg;

namespace {

// Independent partition counter: classic DP over largest allowed part.
// Kept separate from the enumeration code on purpose.
long count_partitions(long n) {
  std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
  for (long cap = 0; cap <= n; ++cap) p[0][cap] = 1;
  for (long m = 1; m <= n; ++m)
    for (long cap = 1; cap <= n; ++cap) {
      p[m][cap] = p[m][cap - 1];
      if (m >= cap) p[m][cap] += p[m - cap][cap];
    }
  return p[n][n];
}

}  // namespace

TEST_CASE("partition construction and validation") {
  Partition mu({4, 2, 2, 1});
  CHECK(mu.weight() == 9);
  CHECK(mu.length() == 4);
  CHECK(mu.part(0) == 4);
  CHECK(mu.part(7) == 0);
  CHECK(mu.multiplicity(2) == 2);
  CHECK(mu.multiplicity(3) == 0);
  CHECK(mu.text() == "(4,2,2,1)");

  Partition empty;
  CHECK(empty.weight() == 0);
  CHECK(empty.empty());
  CHECK(empty.text() == "()");

  CHECK_THROWS_AS(Partition({2, 3}), contract_error);
  CHECK_THROWS_AS(Partition({1, 0}), contract_error);
  CHECK_THROWS_AS(Partition({-1}), contract_error);
}

TEST_CASE("enumeration matches an independent count") {
  for (long n = 0; n <= 12; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(static_cast<long>(all.size()) == count_partitions(n));
    for (auto& mu : all) CHECK(mu.weight() == n);
    // reverse-lexicographic, no duplicates
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  }
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(6).front() == Partition({6}));
  CHECK(enumerate_partitions(6).back() == Partition({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("capped enumeration") {
  auto capped = enumerate_partitions_capped(6, 2);
  CHECK(capped.size() == 4);  // (2,2,2), (2,2,1,1), (2,1^4), (1^6)
  for (auto& mu : capped)
    for (long p : mu.parts()) CHECK(p <= 2);
}

TEST_CASE("conjugation is an involution and flips shape") {
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  for (long n = 0; n <= 8; ++n)
    for (auto& mu : enumerate_partitions(n)) {
      CHECK(mu.conjugate().conjugate() == mu);
      CHECK(mu.conjugate().weight() == n);
      CHECK(mu.conjugate().length() == mu.part(0));
    }
}

TEST_CASE("multiplicities sum back to the partition") {
  for (auto& mu : enumerate_partitions(9)) {
    long total = 0, count = 0;
    for (auto& [v, m] : mu.multiplicities()) {
      total += v * m;
      count += m;
    }
    CHECK(total == mu.weight());
    CHECK(count == mu.length());
  }
}

TEST_CASE("add-a-part coefficients") {
  // adding 2 to the single available slot of (1,1)
  CHECK(add_part_coefficient(Partition({3, 1}), Partition({1, 1}), 2) == 1);
  // (2) -> (2,2): the new part lands next to an equal one, so the count is 2
  CHECK(add_part_coefficient(Partition({2, 2}), Partition({2}), 2) == 2);
  CHECK(add_part_coefficient(Partition({2, 1, 1}), Partition({1, 1, 1}), 1) == 1);
  CHECK(add_part_coefficient(Partition({1, 1, 1, 1}), Partition({1, 1, 1}), 1) == 4);
  // not reachable by adding 3 to one slot of (2,2)
  CHECK(add_part_coefficient(Partition({4, 2, 1}), Partition({2, 2}), 3) == 0);
  CHECK_THROWS_AS(add_part_coefficient(Partition({3}), Partition({1}), 1), contract_error);

  // exhaustive small check against a slot-bump oracle: lambda must arise
  // from mu by adding i to one part (or as a brand-new part), and the
  // coefficient is then the multiplicity in lambda of the grown value,
  // recovered here from the multiset difference lambda \ mu.
  for (long w = 0; w <= 5; ++w)
    for (auto& mu : enumerate_partitions(w))
      for (long i = 1; i <= 3; ++i)
        for (auto& lam : enumerate_partitions(w + i)) {
          long c = add_part_coefficient(lam, mu, i);
          bool reachable = false;
          std::vector<long> slots = mu.parts();
          slots.push_back(0);
          for (std::size_t k = 0; k < slots.size(); ++k) {
            std::vector<long> bumped = slots;
            bumped[k] += i;
            std::sort(bumped.begin(), bumped.end(), std::greater<long>());
            while (!bumped.empty() && bumped.back() == 0) bumped.pop_back();
            if (Partition(bumped) == lam) reachable = true;
          }
          CHECK((c != 0) == reachable);
          if (c != 0) {
            long grown = 0;
            for (auto& [v, m] : lam.multiplicities())
              if (m > mu.multiplicity(v)) grown = v;
            CHECK(c == lam.multiplicity(grown));
          }
        }
}

TEST_CASE("strata inventory") {
  for (long r = 1; r <= 3; ++r)
    for (long n = 1; n <= 6; ++n) {
      auto st = strata(r, n);
      long expect = 0;
      for (long s = 0; s < n; ++s) expect += count_partitions(s);
      CHECK(static_cast<long>(st.size()) == expect);
      for (auto& x : st) {
        CHECK(x.mu.weight() == x.s);
        CHECK(x.s < n);
        CHECK(x.codim == 2 * x.fiber_dim);
        // independent route: the fiber over a stratum is a product of
        // punctual pieces, one per part
        long total = 0;
        for (long p : x.mu.parts()) total += punctual_quot_dim(r, p);
        CHECK(x.fiber_dim == total);
      }
    }
  // rank one: codimension steps by 2*(s - length), the familiar
  // Hilbert-to-symmetric-product pattern
  for (auto& x : strata(1, 5)) CHECK(x.codim == 2 * (x.s - x.mu.length()));
}

TEST_CASE("moduli dimension bookkeeping") {
  // plane-like invariants
  CHECK(moduli_dim(2, 3, 0, 1, 0) == 9);
  CHECK(moduli_dim(1, 4, 0, 1, 0) == 8);
  // abelian-like invariants
  CHECK(moduli_dim(2, 2, 0, 0, 2) == 10);
  for (long r = 1; r <= 4; ++r)
    for (long n = 1; n <= 5; ++n) {
      CHECK(moduli_dim(r, n, -1, 1, 0) == 2 * r * n + moduli_dim_shift(r, -1, 1, 0));
      CHECK(moduli_dim(r, n, 0, 2, 0) == 2 * r * n + moduli_dim_shift(r, 0, 2, 0));
    }
}

TEST_CASE("punctual fiber dimension") {
  CHECK(punctual_quot_dim(1, 1) == 0);
  CHECK(punctual_quot_dim(1, 4) == 3);
  CHECK(punctual_quot_dim(2, 3) == 5);
  CHECK(punctual_quot_dim(5, 2) == 9);
  CHECK_THROWS_AS(punctual_quot_dim(2, 0), contract_error);
}
