#include "finred/matrix.hpp"

#include <sstream>

namespace finred {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(long rows, const std::vector<Vec>& cols) {
  IntMatrix m(rows, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<long>(cols[j].size()) != rows)
      throw ValidationError("from_columns: column length mismatch");
    for (long i = 0; i < rows; ++i) m.at(i, static_cast<long>(j)) = cols[j][static_cast<size_t>(i)];
  }
  return m;
}

Vec IntMatrix::row(long i) const {
  Vec v(static_cast<size_t>(cols_));
  for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

Vec IntMatrix::col(long j) const {
  Vec v(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (long i = 0; i < a.rows_; ++i)
    for (long k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix sum: shape mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = a.a_[t] + b.a_[t];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix difference: shape mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = a.a_[t] - b.a_[t];
  return c;
}

IntMatrix operator*(const Int& k, const IntMatrix& a) {
  IntMatrix c(a.rows_, a.cols_);
  for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = k * a.a_[t];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec IntMatrix::apply(const Vec& v) const {
  if (static_cast<long>(v.size()) != cols_)
    throw ValidationError("matrix apply: vector length mismatch");
  Vec out(static_cast<size_t>(rows_), Int(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

long IntMatrix::multiplicative_order(long cap) const {
  if (rows_ != cols_) throw ValidationError("multiplicative_order: square matrices only");
  IntMatrix p = *this;
  for (long e = 1; e <= cap; ++e) {
    if (p.is_identity()) return e;
    p = p * (*this);
  }
  throw CapExceeded("multiplicative_order: no power up to the cap is the identity");
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw ValidationError("det: square matrices only");
  long n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;  // Bareiss fraction-free elimination on a working copy
  Int sign = 1, prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (long j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

std::string IntMatrix::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (size_t t = 0; t < a_.size(); ++t) {
    if (t) os << ",";
    os << a_[t];
  }
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

}  // namespace finred
