#include "finred/seq.hpp"

#include <sstream>

namespace finred {

void validate_seq(const RootDatum& rd, const SeqBarS& w) {
  for (long e : w)
    if (e < 0 || e > rd.num_simple())
      throw ValidationError("sequence entry out of range");
}

long seq_length(const SeqBarS& w) {
  long n = 0;
  for (long e : w)
    if (e != 0) ++n;
  return n;
}

bool seq_leq(const SeqBarS& v, const SeqBarS& w) {
  if (v.size() != w.size())
    throw ValidationError("seq_leq: sequences must have equal length");
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && v[i] != w[i]) return false;
  return true;
}

std::vector<long> seq_diff_positions(const SeqBarS& w, const SeqBarS& v) {
  if (!seq_leq(v, w)) throw NotComparable("seq_diff_positions requires v <= w");
  std::vector<long> out;
  for (size_t i = 0; i < w.size(); ++i)
    if (v[i] != w[i]) out.push_back(static_cast<long>(i));
  return out;
}

IntMatrix seq_product_y(const RootDatum& rd, const SeqBarS& w) {
  validate_seq(rd, w);
  IntMatrix m = IntMatrix::identity(rd.rank);
  for (long e : w)
    if (e != 0) m = m * rd.simple_reflection_y(e - 1);
  return m;
}

long seq_product_index(const WeylGroup& wg, const SeqBarS& w) {
  long k = wg.index_of(seq_product_y(wg.datum(), w));
  internal_check(k >= 0, "sequence product missing from the Weyl group");
  return k;
}

std::vector<SeqBarS> seq_interval(const SeqBarS& v, const SeqBarS& w) {
  auto diff = seq_diff_positions(w, v);
  std::vector<SeqBarS> out;
  size_t k = diff.size();
  if (k >= 30) throw CapExceeded("interval enumeration too large");
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    SeqBarS y = v;
    for (size_t t = 0; t < k; ++t)
      if (mask & (size_t{1} << t)) y[static_cast<size_t>(diff[t])] = w[static_cast<size_t>(diff[t])];
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<SeqBarS> seqs_below(const SeqBarS& w) {
  return seq_interval(SeqBarS(w.size(), 0), w);
}

std::vector<SeqBarS> all_seqs(const RootDatum& rd, long r) {
  long m = rd.num_simple();
  double total = 1;
  for (long t = 0; t < r; ++t) total *= static_cast<double>(m + 1);
  if (total > 1e6) throw CapExceeded("sequence enumeration too large");
  std::vector<SeqBarS> out;
  SeqBarS cur(static_cast<size_t>(r), 0);
  while (true) {
    out.push_back(cur);
    long i = r;
    while (i > 0) {
      --i;
      cur[static_cast<size_t>(i)] += 1;
      if (cur[static_cast<size_t>(i)] <= m) break;
      cur[static_cast<size_t>(i)] = 0;
      if (i == 0) return out;
    }
    if (r == 0) return out;
  }
}

std::string seq_to_string(const SeqBarS& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    if (w[i] == 0)
      os << "1";
    else
      os << "s" << w[i];
  }
  return os.str();
}

SeqBarS seq_parse(const std::string& s) {
  SeqBarS out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(',', start);
    std::string tok = s.substr(start, end - start);
    if (tok == "1") {
      out.push_back(0);
    } else if (tok.size() >= 2 && tok[0] == 's') {
      long k = 0;
      try {
        k = std::stol(tok.substr(1));
      } catch (const std::exception&) {
        throw ValidationError("bad sequence entry '" + tok + "'");
      }
      if (k < 1) throw ValidationError("bad sequence entry '" + tok + "'");
      out.push_back(k);
    } else {
      throw ValidationError("bad sequence entry '" + tok + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace finred
