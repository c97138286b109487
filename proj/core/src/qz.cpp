#include "finred/qz.hpp"

#include <sstream>

namespace finred {

std::string QZ::str() const {
  std::ostringstream os;
  os << num << "/" << den;
  return os.str();
}

QZ qz_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw ValidationError("QZ: expected 'num/den', got '" + s + "'");
  try {
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    return QZ(n, d);
  } catch (const std::runtime_error&) {
    throw ValidationError("QZ: malformed fraction '" + s + "'");
  }
}

bool qzvec_eq(const QZVec& a, const QZVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool qzvec_less(const QZVec& a, const QZVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string qzvec_to_string(const QZVec& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

QZVec qzvec_parse(const std::string& s, char sep) {
  QZVec out;
  if (s.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t end = s.find(sep, start);
    out.push_back(qz_parse(s.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace finred
