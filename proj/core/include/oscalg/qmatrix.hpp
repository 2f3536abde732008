#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

using Vec = std::vector<Rat>;

// Dense exact-rational matrix.
class QMat {
 public:
  QMat(long rows, long cols);
  static QMat identity(long n);
  static QMat from_columns(long rows, const std::vector<Vec>& cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rat& at(long r, long c) { return a_[idx(r, c)]; }
  const Rat& at(long r, long c) const { return a_[idx(r, c)]; }

  bool is_zero() const;
  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat scaled(const Rat& s) const;

  Vec apply(const Vec& v) const;
  Vec column(long c) const;
  QMat power(long k) const;  // square matrices, k >= 0
  long rank() const;
  QMat inverse() const;  // throws contract_error when singular

  std::string text() const;

 private:
  std::size_t idx(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw contract_error("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  long rows_, cols_;
  std::vector<Rat> a_;
};

QMat hstack(const QMat& a, const QMat& b);

// Basis of the right null space {x : Ax = 0}.
std::vector<Vec> kernel_basis(const QMat& a);

// One solution of Ax = b, free coordinates set to zero; nullopt when
// inconsistent.
std::optional<Vec> solve_linear(const QMat& a, const Vec& b);

// Incrementally maintained row space for rank-closure loops.
class RowSpan {
 public:
  explicit RowSpan(long dim) : dim_(dim) {}
  // Reduce v against the stored rows; store the remainder if nonzero.
  // Returns true when the rank grew.
  bool insert(Vec v);
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  long dim_;
  std::vector<std::pair<std::size_t, Vec>> rows_;  // (pivot index, reduced row)
};

}  // namespace oscalg
