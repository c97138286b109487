#pragma once

// Elements of Q/Z as reduced fractions num/den with 0 <= num < den.
// Addition reduces mod 1. The multiplicative order of x in Q/Z is its
// reduced denominator.

#include "finred/basics.hpp"

#include <compare>
#include <string>
#include <vector>

namespace finred {

struct QZ {
  Int num = 0;  // 0 <= num < den after normalization
  Int den = 1;  // >= 1

  QZ() = default;
  QZ(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) throw ValidationError("QZ: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    num = mod_euclid(num, den);
    Int g = gcd_int(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  // Order as an element of Q/Z.
  const Int& order() const { return den; }

  friend QZ operator+(const QZ& a, const QZ& b) {
    return QZ(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend QZ operator-(const QZ& a, const QZ& b) {
    return QZ(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  QZ operator-() const { return QZ(-num, den); }
  friend QZ operator*(const Int& k, const QZ& x) { return QZ(k * x.num, x.den); }

  friend bool operator==(const QZ& a, const QZ& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const QZ& a, const QZ& b) { return !(a == b); }
  // Total order by rational value (well-defined on [0,1) representatives).
  friend bool operator<(const QZ& a, const QZ& b) {
    return a.num * b.den < b.num * a.den;
  }

  std::string str() const;  // "c/d", e.g. "0/1", "3/8"
};

QZ qz_parse(const std::string& s);

using QZVec = std::vector<QZ>;

bool qzvec_eq(const QZVec& a, const QZVec& b);
bool qzvec_less(const QZVec& a, const QZVec& b);  // lexicographic
std::string qzvec_to_string(const QZVec& v, char sep = ';');
QZVec qzvec_parse(const std::string& s, char sep = ';');

}  // namespace finred
