#include "oscalg/qmatrix.hpp"

#include <algorithm>

namespace oscalg {

QMat::QMat(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw contract_error("matrix dimensions must be nonnegative");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

QMat QMat::identity(long n) {
  QMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_columns(long rows, const std::vector<Vec>& cols) {
  QMat m(rows, static_cast<long>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<long>(cols[c].size()) != rows) throw contract_error("column length mismatch");
    for (long r = 0; r < rows; ++r) m.at(r, static_cast<long>(c)) = cols[c][static_cast<std::size_t>(r)];
  }
  return m;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("matrix shape mismatch");
  QMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("matrix shape mismatch");
  QMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw contract_error("matrix shape mismatch");
  QMat m(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) m.at(i, j) += x * y;
      }
    }
  return m;
}

QMat QMat::scaled(const Rat& s) const {
  QMat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Vec QMat::apply(const Vec& v) const {
  if (static_cast<long>(v.size()) != cols_) throw contract_error("vector length mismatch");
  Vec out(static_cast<std::size_t>(rows_), Rat(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x != 0) out[static_cast<std::size_t>(i)] += x * v[static_cast<std::size_t>(j)];
    }
  return out;
}

Vec QMat::column(long c) const {
  Vec out(static_cast<std::size_t>(rows_), Rat(0));
  for (long r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

QMat QMat::power(long k) const {
  if (rows_ != cols_) throw contract_error("powers need a square matrix");
  if (k < 0) throw contract_error("negative matrix power");
  QMat acc = identity(rows_);
  QMat base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<long> rref(QMat& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long p = -1;
    for (long r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (long c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (long c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (long r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Rat f = m.at(r, col);
      if (f == 0) continue;
      for (long c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

constexpr unsigned long long kRankPrime = 2305843009213693951ull;  // 2^61 - 1

unsigned long long mulmod_p(unsigned long long a, unsigned long long b) {
  return static_cast<unsigned long long>(
      static_cast<unsigned __int128>(a) * b % kRankPrime);
}

unsigned long long powmod_p(unsigned long long b, unsigned long long e) {
  unsigned long long acc = 1;
  while (e) {
    if (e & 1) acc = mulmod_p(acc, b);
    b = mulmod_p(b, b);
    e >>= 1;
  }
  return acc;
}

// Rank of the matrix reduced mod a fixed large prime. Always a lower bound
// for the rational rank (a nonzero minor mod p is nonzero over Q), so a
// full-rank answer is exact. Returns -1 when some denominator reduces to
// zero and the shortcut does not apply.
long rank_mod_p(const QMat& m) {
  long rows = m.rows(), cols = m.cols();
  std::vector<unsigned long long> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      const Rat& x = m.at(r, c);
      unsigned long long den = mpz_fdiv_ui(x.get_den().get_mpz_t(), kRankPrime);
      if (den == 0) return -1;
      unsigned long long num = mpz_fdiv_ui(x.get_num().get_mpz_t(), kRankPrime);
      a[static_cast<std::size_t>(r * cols + c)] = mulmod_p(num, powmod_p(den, kRankPrime - 2));
    }
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long p = -1;
    for (long r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r * cols + col)] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (long c = col; c < cols; ++c)
        std::swap(a[static_cast<std::size_t>(p * cols + c)], a[static_cast<std::size_t>(rank * cols + c)]);
    unsigned long long inv = powmod_p(a[static_cast<std::size_t>(rank * cols + col)], kRankPrime - 2);
    for (long r = rank + 1; r < rows; ++r) {
      unsigned long long f = a[static_cast<std::size_t>(r * cols + col)];
      if (f == 0) continue;
      f = mulmod_p(f, inv);
      for (long c = col; c < cols; ++c) {
        unsigned long long sub = mulmod_p(f, a[static_cast<std::size_t>(rank * cols + c)]);
        unsigned long long& cell = a[static_cast<std::size_t>(r * cols + c)];
        cell = (cell >= sub) ? cell - sub : cell + kRankPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long QMat::rank() const {
  // Full rank mod p certifies full rank exactly; anything less falls back
  // to exact elimination, so the result is never probabilistic.
  if (rows_ > 0 && cols_ > 0) {
    long lower = rank_mod_p(*this);
    if (lower == std::min(rows_, cols_)) return lower;
  }
  QMat m = *this;
  return static_cast<long>(rref(m).size());
}

QMat QMat::inverse() const {
  if (rows_ != cols_) throw contract_error("inverse needs a square matrix");
  QMat wide = hstack(*this, identity(rows_));
  auto pivots = rref(wide);
  // the identity block keeps [A|I] at full row rank even when A is
  // singular; invertibility means every pivot lands in the A block
  if (static_cast<long>(pivots.size()) != rows_ || (!pivots.empty() && pivots.back() >= cols_))
    throw contract_error("matrix is singular");
  QMat out(rows_, cols_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) out.at(r, c) = wide.at(r, c + cols_);
  return out;
}

std::string QMat::text() const {
  std::string out = "[";
  for (long r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : " [";
    for (long c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += rat_text(at(r, c));
    }
    out += "]";
    if (r + 1 < rows_) out += "\n";
  }
  return out + "]";
}

QMat hstack(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw contract_error("row counts differ");
  QMat m(a.rows(), a.cols() + b.cols());
  for (long r = 0; r < a.rows(); ++r) {
    for (long c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (long c = 0; c < b.cols(); ++c) m.at(r, c + a.cols()) = b.at(r, c);
  }
  return m;
}

std::vector<Vec> kernel_basis(const QMat& a) {
  QMat m = a;
  std::vector<long> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (long p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> out;
  for (long free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(a.cols()), Rat(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<long>(r), free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve_linear(const QMat& a, const Vec& b) {
  if (static_cast<long>(b.size()) != a.rows()) throw contract_error("vector length mismatch");
  QMat rhs(a.rows(), 1);
  for (long r = 0; r < a.rows(); ++r) rhs.at(r, 0) = b[static_cast<std::size_t>(r)];
  QMat wide = hstack(a, rhs);
  std::vector<long> pivots = rref(wide);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x(static_cast<std::size_t>(a.cols()), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = wide.at(static_cast<long>(r), a.cols());
  return x;
}

bool RowSpan::insert(Vec v) {
  if (static_cast<long>(v.size()) != dim_) throw contract_error("vector length mismatch");
  for (auto& [pivot, row] : rows_) {
    const Rat& f = v[pivot];
    if (f == 0) continue;
    Rat g = f;  // row is normalized to 1 at its pivot
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= g * row[i];
  }
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;
  Rat inv = Rat(1) / v[pivot];
  for (std::size_t i = pivot; i < v.size(); ++i) v[i] *= inv;
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

}  // namespace oscalg
