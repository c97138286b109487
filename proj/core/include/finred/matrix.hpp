#pragma once

// Dense matrices over Z with exact arbitrary-precision entries, row-major.
// Vectors are columns; matrices act on the left.

#include "finred/basics.hpp"

#include <string>
#include <vector>

namespace finred {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Int(0)) {
    if (rows < 0 || cols < 0) throw ValidationError("IntMatrix: negative dimension");
  }

  static IntMatrix identity(long n);
  // Matrix with the given columns.
  static IntMatrix from_columns(long rows, const std::vector<Vec>& cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

  Vec row(long i) const;
  Vec col(long j) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  Vec apply(const Vec& v) const;  // matrix * column vector

  // Smallest e >= 1 with M^e = I, or throws CapExceeded beyond the cap.
  long multiplicative_order(long cap = 4096) const;

  // Exact determinant by fraction-free (Bareiss) elimination; square only.
  Int det() const;

  std::string str() const;  // human-readable, for diagnostics
  std::string key() const;  // canonical serialization, usable as a map key

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Stack B's columns to the right of A's (equal row counts).
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

}  // namespace finred
