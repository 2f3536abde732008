#include "oscalg/quotlab.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace oscalg {

unsigned long long SeededRng::next_u64() {
  s_ += 0x9E3779B97F4A7C15ull;
  unsigned long long z = s_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

long SeededRng::next_int(long lo, long hi) {
  if (hi < lo) throw contract_error("empty range");
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<long>(next_u64() % span);
}

Rat SeededRng::next_rat(long max_abs_num, long max_den) {
  Rat r(next_int(-max_abs_num, max_abs_num), next_int(1, max_den));
  r.canonicalize();
  return r;
}

NilpotentPair::NilpotentPair(QMat b1_, QMat b2_)
    : dim(b1_.rows()), b1(std::move(b1_)), b2(std::move(b2_)) {
  if (b1.rows() != b1.cols() || b2.rows() != b2.cols() || b1.rows() != b2.rows())
    throw contract_error("operators must be square and of equal size");
  if (dim < 1) throw contract_error("dimension must be positive");
  if (!(b1 * b2 == b2 * b1)) throw contract_error("operators must commute");
  if (!b1.power(dim).is_zero() || !b2.power(dim).is_zero())
    throw contract_error("operators must be nilpotent");
}

QuotPoint::QuotPoint(NilpotentPair p, std::vector<Vec> vs)
    : pair(std::move(p)), vectors(std::move(vs)) {
  if (vectors.empty()) throw contract_error("need at least one marked vector");
  for (const Vec& v : vectors)
    if (static_cast<long>(v.size()) != pair.dim) throw contract_error("vector length mismatch");
  if (!is_cyclic(pair, vectors))
    throw contract_error("marked vectors do not generate under the pair");
}

NilpotentPair staircase_pair(const Partition& diagram, bool conjugate_by_random,
                             unsigned long long seed) {
  if (diagram.weight() < 1) throw contract_error("diagram must be nonempty");
  long d = diagram.weight();
  const auto& rows = diagram.parts();
  std::map<std::pair<long, long>, long> index;
  long at = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < rows[i]; ++j) index[{static_cast<long>(i), j}] = at++;
  QMat b1(d, d), b2(d, d);
  for (auto& [box, idx] : index) {
    auto [i, j] = box;
    auto right = index.find({i, j + 1});
    if (right != index.end()) b1.at(right->second, idx) = 1;
    auto below = index.find({i + 1, j});
    if (below != index.end()) b2.at(below->second, idx) = 1;
  }
  if (!conjugate_by_random) return NilpotentPair(b1, b2);

  SeededRng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    QMat g(d, d);
    for (long r = 0; r < d; ++r)
      for (long c = 0; c < d; ++c) g.at(r, c) = Rat(rng.next_int(-3, 3));
    if (g.rank() != d) continue;
    QMat gi = g.inverse();
    return NilpotentPair(g * b1 * gi, g * b2 * gi);
  }
  throw consistency_error("no invertible conjugator found");
}

namespace {

// Vectors of `cands` that extend span(fixed); returned as given (not
// reduced). Their classes form a basis of span(fixed+cands)/span(fixed).
std::vector<Vec> complement_basis(long dim, const std::vector<Vec>& fixed,
                                  const std::vector<Vec>& cands) {
  RowSpan span(dim);
  for (const Vec& v : fixed) span.insert(v);
  std::vector<Vec> out;
  for (const Vec& v : cands)
    if (span.insert(v)) out.push_back(v);
  return out;
}

}  // namespace

QMat AdaptedBasis::matrix() const {
  std::vector<Vec> cols;
  for (const auto& chain : chains)
    for (const Vec& e : chain) cols.push_back(e);
  return QMat::from_columns(cols.empty() ? 0 : static_cast<long>(cols.front().size()), cols);
}

AdaptedBasis adapted_basis(const NilpotentPair& p) {
  long d = p.dim;
  std::vector<QMat> pw;  // powers of B1
  pw.push_back(QMat::identity(d));
  for (long k = 1; k <= d; ++k) pw.push_back(pw.back() * p.b1);

  // filt[i] = basis of ker(B1^(d-i)), so filt[0] is everything and the
  // spaces shrink as i grows.
  std::vector<std::vector<Vec>> filt;
  for (long i = 0; i <= d; ++i) filt.push_back(kernel_basis(pw[static_cast<std::size_t>(d - i)]));

  std::vector<Vec> heads;
  std::vector<long> lengths;
  for (long i = 0; i < d; ++i) {
    // Heads at this level head chains of length d-i. They complement
    // B1*(previous level) + (next level) inside the current level.
    std::vector<Vec> denom;
    if (i == 0) {
      for (long c = 0; c < d; ++c) denom.push_back(p.b1.column(c));
    } else {
      for (const Vec& v : filt[static_cast<std::size_t>(i - 1)]) denom.push_back(p.b1.apply(v));
    }
    for (const Vec& v : filt[static_cast<std::size_t>(i + 1)]) denom.push_back(v);
    std::vector<Vec> lifts = complement_basis(d, denom, filt[static_cast<std::size_t>(i)]);
    if (lifts.empty()) continue;
    long s = static_cast<long>(lifts.size());

    // Operator B2 induces on the quotient, in the lift coordinates.
    std::vector<Vec> cols = lifts;
    cols.insert(cols.end(), denom.begin(), denom.end());
    QMat frame = QMat::from_columns(d, cols);
    QMat induced(s, s);
    for (long c = 0; c < s; ++c) {
      auto x = solve_linear(frame, p.b2.apply(lifts[static_cast<std::size_t>(c)]));
      if (!x) throw consistency_error("second operator does not preserve the filtration");
      for (long r = 0; r < s; ++r) induced.at(r, c) = (*x)[static_cast<std::size_t>(r)];
    }

    // Kernel chain of the induced nilpotent, deepest level first, makes it
    // strictly triangular toward later heads.
    std::vector<std::vector<Vec>> kchain;  // kchain[j] = basis of ker(induced^(j+1))
    long m = 0;
    while (true) {
      std::vector<Vec> k = kernel_basis(induced.power(m + 1));
      kchain.push_back(k);
      ++m;
      if (static_cast<long>(k.size()) == s) break;
      if (m > s) throw consistency_error("induced operator is not nilpotent");
    }
    std::vector<Vec> ordered;
    for (long j = m - 1; j >= 0; --j) {
      std::vector<Vec> lower = (j == 0) ? std::vector<Vec>{} : kchain[static_cast<std::size_t>(j - 1)];
      for (Vec& g : complement_basis(s, lower, kchain[static_cast<std::size_t>(j)]))
        ordered.push_back(std::move(g));
    }
    if (static_cast<long>(ordered.size()) != s)
      throw consistency_error("kernel chain does not exhaust the quotient");

    for (const Vec& coords : ordered) {
      Vec head(static_cast<std::size_t>(d), Rat(0));
      for (long k = 0; k < s; ++k) {
        const Rat& c = coords[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (long rr = 0; rr < d; ++rr)
          head[static_cast<std::size_t>(rr)] += c * lifts[static_cast<std::size_t>(k)][static_cast<std::size_t>(rr)];
      }
      heads.push_back(std::move(head));
      lengths.push_back(d - i);
    }
  }

  AdaptedBasis out;
  out.mu = Partition(lengths);
  for (std::size_t h = 0; h < heads.size(); ++h) {
    std::vector<Vec> chain;
    chain.push_back(heads[h]);
    for (long j = 1; j < lengths[h]; ++j) chain.push_back(p.b1.apply(chain.back()));
    for (const Rat& x : p.b1.apply(chain.back()))
      if (x != 0) throw consistency_error("chain does not terminate at its recorded length");
    out.chains.push_back(std::move(chain));
  }
  if (out.matrix().rank() != d) throw consistency_error("adapted vectors do not form a basis");
  return out;
}

Companion companion(const NilpotentPair& p) {
  AdaptedBasis ab = adapted_basis(p);
  long d = p.dim;
  long k = static_cast<long>(ab.chains.size());
  std::vector<long> offset(static_cast<std::size_t>(k), 0);
  for (long i = 1; i < k; ++i)
    offset[static_cast<std::size_t>(i)] =
        offset[static_cast<std::size_t>(i - 1)] + static_cast<long>(ab.chains[static_cast<std::size_t>(i - 1)].size());
  QMat c(d, d);
  for (long i = 0; i + 1 < k; ++i) {
    long next_len = static_cast<long>(ab.chains[static_cast<std::size_t>(i + 1)].size());
    long len = static_cast<long>(ab.chains[static_cast<std::size_t>(i)].size());
    for (long j = 0; j < len && j < next_len; ++j)
      c.at(offset[static_cast<std::size_t>(i + 1)] + j, offset[static_cast<std::size_t>(i)] + j) = 1;
  }
  QMat e = ab.matrix();
  QMat b2p = e * c * e.inverse();
  return {b2p, ab.chains.front().front()};
}

bool is_cyclic(const NilpotentPair& p, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors)
    if (static_cast<long>(v.size()) != p.dim) throw contract_error("vector length mismatch");
  RowSpan span(p.dim);
  std::vector<Vec> work;
  for (const Vec& v : vectors)
    if (span.insert(v)) work.push_back(v);
  while (!work.empty() && span.rank() < p.dim) {
    Vec v = std::move(work.back());
    work.pop_back();
    Vec w1 = p.b1.apply(v);
    if (span.insert(w1)) work.push_back(std::move(w1));
    Vec w2 = p.b2.apply(v);
    if (span.insert(w2)) work.push_back(std::move(w2));
  }
  return span.rank() == p.dim;
}

QuotPoint deformation_path(const QuotPoint& x, const Rat& t) {
  Companion c = companion(x.pair);
  QMat nb2 = c.b2_prime.scaled(t) + x.pair.b2.scaled(Rat(1) - t);
  std::vector<Vec> vs = x.vectors;
  for (std::size_t i = 0; i < vs[0].size(); ++i)
    vs[0][i] = t * c.w[i] + (Rat(1) - t) * x.vectors[0][i];
  return QuotPoint(NilpotentPair(x.pair.b1, nb2), vs);
}

QuotPoint conjugated(const QuotPoint& x, const QMat& g) {
  QMat gi = g.inverse();
  std::vector<Vec> vs;
  for (const Vec& v : x.vectors) vs.push_back(g.apply(v));
  return QuotPoint(NilpotentPair(g * x.pair.b1 * gi, g * x.pair.b2 * gi), vs);
}

long stabilizer_dimension(const NilpotentPair& p, const std::vector<Vec>& vectors) {
  long d = p.dim;
  long nv = static_cast<long>(vectors.size());
  QMat sys(2 * d * d + nv * d, d * d);
  auto var = [d](long r, long c) { return r * d + c; };
  long row = 0;
  // (h B)_{ab} - (B h)_{ab} = 0 for B = b1, b2
  for (const QMat* B : {&p.b1, &p.b2}) {
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        for (long k = 0; k < d; ++k) {
          sys.at(row, var(a, k)) += B->at(k, b);
          sys.at(row, var(k, b)) -= B->at(a, k);
        }
        ++row;
      }
  }
  // h v = 0 for each marked vector
  for (const Vec& v : vectors) {
    for (long a = 0; a < d; ++a) {
      for (long c = 0; c < d; ++c) sys.at(row, var(a, c)) += v[static_cast<std::size_t>(c)];
      ++row;
    }
  }
  return d * d - sys.rank();
}

namespace {

std::string vec_json(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + rat_text(v[i]) + "\"";
  }
  return out + "]";
}

std::string mat_json(const QMat& m) {
  std::string out = "[";
  for (long r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    Vec row(static_cast<std::size_t>(m.cols()));
    for (long c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m.at(r, c);
    out += vec_json(row);
  }
  return out + "]";
}

}  // namespace

std::string quot_json(const QuotPoint& x) {
  std::string out = "{\"dim\": " + std::to_string(x.pair.dim);
  out += ", \"B1\": " + mat_json(x.pair.b1);
  out += ", \"B2\": " + mat_json(x.pair.b2);
  out += ", \"vectors\": [";
  for (std::size_t i = 0; i < x.vectors.size(); ++i) {
    if (i) out += ", ";
    out += vec_json(x.vectors[i]);
  }
  return out + "]}";
}

}  // namespace oscalg
