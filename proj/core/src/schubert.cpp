#include "oscalg/schubert.hpp"

namespace oscalg {

ChernVector chern_Q(long r, long n) {
  if (n < 0 || r < n) throw contract_error("need 0 <= n <= r");
  BoxClass total = BoxClass::one(r, n);
  for (long j = 1; j <= n; ++j) {
    std::vector<long> col(static_cast<std::size_t>(j), 1);
    Partition shape(col);
    if (!total.fits_box(shape)) break;  // r = n: no column fits
    total.add_term(shape, Rat(1));
  }
  return {n, total};
}

ChernVector chern_S(long r, long n) {
  ChernVector q = chern_Q(r, n);
  BoxClass total = q.total.inverse();
  for (long j = r - n + 1; j <= total.top_degree(); ++j)
    if (!total.component(j).is_zero())
      throw consistency_error("sub-bundle Chern class does not vanish above its rank");
  return {r - n, total};
}

ChernVector chern_dual(const ChernVector& a) {
  BoxClass total(a.total.r(), a.total.n());
  for (long k = 0; k <= a.total.top_degree(); ++k) {
    BoxClass part = a.total.component(k);
    total = total + (k % 2 == 0 ? part : -part);
  }
  return {a.rank, total};
}

ChernVector chern_tensor(const ChernVector& a, const ChernVector& b) {
  const BoxClass& ta = a.total;
  const BoxClass& tb = b.total;
  if (ta.r() != tb.r() || ta.n() != tb.n()) throw contract_error("mixed box rings");
  long r = ta.r(), n = ta.n();
  long top = ta.top_degree();
  if (ta.component(0) != BoxClass::one(r, n) || tb.component(0) != BoxClass::one(r, n))
    throw contract_error("total Chern classes must start at 1");

  // Power sums of each root set from its elementary symmetric functions.
  auto powersums = [&](const BoxClass& total, long rank) {
    std::vector<BoxClass> e, p;
    for (long k = 0; k <= top; ++k) e.push_back(total.component(k));
    p.push_back(BoxClass::one(r, n).scaled(Rat(rank)));
    for (long k = 1; k <= top; ++k) {
      BoxClass acc = e[static_cast<std::size_t>(k)].scaled(Rat((k % 2 == 0) ? -k : k));
      for (long i = 1; i < k; ++i) {
        BoxClass term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
        acc = acc + (i % 2 == 0 ? -term : term);
      }
      p.push_back(acc);
    }
    return p;
  };
  std::vector<BoxClass> pa = powersums(ta, a.rank);
  std::vector<BoxClass> pb = powersums(tb, b.rank);

  // Roots of the product are all sums a_i + b_j.
  std::vector<BoxClass> q;
  for (long k = 0; k <= top; ++k) {
    BoxClass acc(r, n);
    for (long m = 0; m <= k; ++m)
      acc = acc + (pa[static_cast<std::size_t>(m)] * pb[static_cast<std::size_t>(k - m)])
                      .scaled(binomial(k, m));
    q.push_back(acc);
  }

  // Back to elementary symmetric functions: k e_k = sum (-1)^(i-1) p_i e_(k-i).
  std::vector<BoxClass> f;
  f.push_back(BoxClass::one(r, n));
  BoxClass total = f[0];
  for (long k = 1; k <= top; ++k) {
    BoxClass acc(r, n);
    for (long i = 1; i <= k; ++i) {
      BoxClass term = q[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(k - i)];
      acc = acc + (i % 2 == 0 ? -term : term);
    }
    f.push_back(acc.scaled(Rat(1) / Rat(k)));
    total = total + f.back();
  }
  for (auto& [shape, c] : total.terms())
    if (!rat_is_integer(c))
      throw consistency_error("tensor Chern class has a non-integer coefficient");
  return {a.rank * b.rank, total};
}

ChernVector excess_bundle(long r, long n) {
  if (n < 1 || r < n) throw contract_error("need 1 <= n <= r");
  ChernVector q = chern_Q(r, n);
  ChernVector s = chern_S(r, n);
  ChernVector qd = chern_dual(q);
  ChernVector sd = chern_dual(s);
  BoxClass ambient = (q.total * qd.total).pow(r);
  BoxClass tangent = chern_tensor(sd, q).total;
  BoxClass cycles = q.total.pow(2 * r);
  BoxClass v = ambient * tangent * cycles.inverse();
  long rank = 2 * r * n - 2 * (r * n) + n * (r - n);
  return {rank, v};
}

SeriesQ quot_intersection_series(long r, long pairing) {
  if (r < 1) throw contract_error("rank must be >= 1");
  if (pairing < 1) throw contract_error("pairing must be >= 1");
  long ord = 2 * r * pairing + 1;
  SeriesQ base = SeriesQ::one(1, ord);
  for (long n = 1; n <= r; ++n)
    base.add_term(2 * n, Rat(integrate(excess_bundle(r, n).total)));
  return base.pow(pairing);
}

}  // namespace oscalg
