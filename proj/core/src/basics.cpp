#include "finred/basics.hpp"

#include <sstream>

namespace finred {

std::vector<Int> prime_factors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace finred
