#pragma once

// Shared scalar types and the error taxonomy used across the library.
//
// All arithmetic is exact: integers are arbitrary-precision (q^d terms
// overflow 64 bits already for moderate d) and there is no floating point
// anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace finred {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

// ---- error taxonomy ------------------------------------------------------
//
// Three bases, matching the CLI exit codes:
//   ValidationError -> exit 2 (bad input, unmet precondition)
//   UnsupportedError -> exit 3 (configured caps exceeded, unmodeled cases)
//   InternalError   -> exit 4 (invariant violation; always a bug)

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& m) : std::runtime_error(m) {}
};
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

struct InfiniteCokernel : ValidationError {
  explicit InfiniteCokernel(const std::string& m) : ValidationError(m) {}
};
struct NotContained : ValidationError {
  explicit NotContained(const std::string& m) : ValidationError(m) {}
};
struct InvalidCartan : ValidationError {
  explicit InvalidCartan(const std::string& m) : ValidationError(m) {}
};
struct NonCrystallographic : ValidationError {
  explicit NonCrystallographic(const std::string& m) : ValidationError(m) {}
};
struct TwistNotLiftable : ValidationError {
  explicit TwistNotLiftable(const std::string& m) : ValidationError(m) {}
};
struct NotComparable : ValidationError {
  explicit NotComparable(const std::string& m) : ValidationError(m) {}
};
struct NotInInterval : ValidationError {
  explicit NotInInterval(const std::string& m) : ValidationError(m) {}
};
struct CharacterDomainMismatch : ValidationError {
  explicit CharacterDomainMismatch(const std::string& m) : ValidationError(m) {}
};
struct InvalidLeviTwist : ValidationError {
  explicit InvalidLeviTwist(const std::string& m) : ValidationError(m) {}
};
struct UnknownType : ValidationError {
  explicit UnknownType(const std::string& m) : ValidationError(m) {}
};
struct CapExceeded : UnsupportedError {
  explicit CapExceeded(const std::string& m) : UnsupportedError(m) {}
};

// Require an internal invariant; failure is always a library bug.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("internal invariant violated: ") + what);
}

// ---- small integer helpers ------------------------------------------------

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd_int(a, b);
  Int l = (a / g) * b;
  return l < 0 ? -l : l;
}

// Euclidean remainder in [0, m) for m > 0.
inline Int mod_euclid(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int pow_int(const Int& base, long e) {
  Int r = 1, b = base;
  for (long k = 0; k < e; ++k) r *= b;
  return r;
}

inline bool is_prime_int(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors, ascending (trial division; desk-scale inputs).
std::vector<Int> prime_factors(Int n);

std::string vec_to_string(const Vec& v);

}  // namespace finred
