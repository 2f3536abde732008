#include <vector>

#include "doctest.h"
#include "oscalg/symfunc.hpp"

using namespace oscalg;

namespace {

SymFunc msym(std::initializer_list<long> parts, long num = 1, long den = 1) {
  return SymFunc::monomial_sym(Partition(std::vector<long>(parts)), Rat(num, den));
}

}  // namespace

TEST_CASE("monomial symmetric expansion in variables") {
  // m_(2,1) in 3 variables: all distinct exponent arrangements of (2,1,0)
  MPoly p = to_polynomial(msym({2, 1}), 3);
  CHECK(p.coeff({2, 1, 0}) == 1);
  CHECK(p.coeff({0, 1, 2}) == 1);
  CHECK(p.coeff({1, 1, 1}) == 0);
  CHECK(p.terms().size() == 6);
  CHECK(p.asymmetry_witness() == -1);

  // m_(1,1) in 2 variables has the single monomial x1 x2
  MPoly q = to_polynomial(msym({1, 1}), 2);
  CHECK(q.coeff({1, 1}) == 1);
  CHECK(q.terms().size() == 1);

  // too few variables: a length-3 partition vanishes in 2 variables
  CHECK(to_polynomial(msym({1, 1, 1}), 2).is_zero());
}

TEST_CASE("round trip through polynomials") {
  SymFunc f = msym({3, 1}) + msym({2, 2}, -5, 3) + msym({1}, 7);
  CHECK(from_polynomial(to_polynomial(f, 4), 4) == f);
  CHECK(from_polynomial(to_polynomial(f, 6), 4) == f);

  MPoly bad = MPoly::variable(2, 0);  // x1 alone is not symmetric
  CHECK(bad.asymmetry_witness() == 0);
  CHECK_THROWS_AS(from_polynomial(bad, 1), contract_error);
}

TEST_CASE("power sum action against plain polynomial multiplication") {
  // exhaustive on small weights: enough variables to keep the expansion
  // faithful on both sides
  for (long w = 0; w <= 6; ++w)
    for (auto& mu : enumerate_partitions(w))
      for (long i = 1; i <= 4; ++i) {
        SymFunc f = SymFunc::monomial_sym(mu);
        SymFunc lhs = mult_powersum(i, f);
        int nvars = static_cast<int>(w + i);
        MPoly rhs = to_polynomial(f, nvars) * power_sum_poly(nvars, i);
        CHECK(to_polynomial(lhs, nvars) == rhs);
      }
}

TEST_CASE("power sum action, linearity and spot values") {
  // p_1 * m_(1) = 2 m_(1,1) + m_(2)
  SymFunc r = mult_powersum(1, msym({1}));
  CHECK(r.coeff(Partition({1, 1})) == 2);
  CHECK(r.coeff(Partition({2})) == 1);
  // p_2 * m_() = m_(2)
  CHECK(mult_powersum(2, SymFunc::monomial_sym(Partition())) == msym({2}));
  // linearity with rational coefficients
  SymFunc f = msym({2}, 1, 2) + msym({1, 1}, -3);
  SymFunc lhs = mult_powersum(3, f);
  SymFunc rhs = mult_powersum(3, msym({2}, 1, 2)) + mult_powersum(3, msym({1, 1}, -3));
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(mult_powersum(0, f), contract_error);
}

TEST_CASE("exponentiated alternating power sums produce elementary rows") {
  auto chain = elementary_chain(7);
  CHECK(chain.size() == 8);
  CHECK(chain[0] == SymFunc::monomial_sym(Partition()));
  for (long k = 1; k <= 7; ++k) {
    std::vector<long> ones(static_cast<std::size_t>(k), 1);
    CHECK(chain[static_cast<std::size_t>(k)] == SymFunc::monomial_sym(Partition(ones)));
  }
}

TEST_CASE("elementary rows expand to elementary polynomials") {
  // e_k in n variables: sum of all squarefree degree-k monomials
  auto chain = elementary_chain(4);
  MPoly e3 = to_polynomial(chain[3], 5);
  CHECK(e3.coeff({1, 1, 1, 0, 0}) == 1);
  CHECK(e3.coeff({1, 0, 1, 0, 1}) == 1);
  CHECK(e3.coeff({2, 1, 0, 0, 0}) == 0);
  CHECK(e3.terms().size() == 10);
}

TEST_CASE("symmetric function arithmetic bookkeeping") {
  SymFunc f = msym({2, 1}) + msym({2, 1}, -1);
  CHECK(f.is_zero());
  SymFunc g = msym({3}) - msym({3}, 1, 2);
  CHECK(g.coeff(Partition({3})) == Rat(1, 2));
  CHECK(g.text() == "1/2*m(3)");
  CHECK((g * Rat(4)).coeff(Partition({3})) == 2);
  SymFunc h;
  h.add_term(Partition({1}), Rat(1, 3));
  h.add_term(Partition({1}), Rat(-1, 3));
  CHECK(h.is_zero());
}
