#include "finred/strata.hpp"

#include <algorithm>
#include <string>

namespace finred {

namespace {

// C(n, 0), ..., C(n, n) by the Pascal recurrence.
std::vector<Int> binomial_row(long n) {
  std::vector<Int> row{1};
  for (long r = 1; r <= n; ++r) {
    std::vector<Int> next(static_cast<size_t>(r) + 1, Int(0));
    for (long j = 0; j <= r; ++j) {
      if (j > 0) next[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
      if (j < r) next[static_cast<size_t>(j)] += row[static_cast<size_t>(j)];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

long StratumPoset::index_of(const SeqBarS& v) const {
  for (size_t k = 0; k < strata.size(); ++k)
    if (strata[k] == v) return static_cast<long>(k);
  return -1;
}

long StratumPoset::codim(const SeqBarS& v) const {
  if (index_of(v) < 0)
    throw NotInInterval("codim: not a stratum of this compactification");
  return seq_length(w) - seq_length(v);
}

std::vector<SeqBarS> StratumPoset::closure(const SeqBarS& y) const {
  if (index_of(y) < 0)
    throw NotInInterval("closure: not a stratum of this compactification");
  std::vector<SeqBarS> out;
  for (const SeqBarS& v : strata)
    if (seq_leq(v, y)) out.push_back(v);
  return out;
}

std::vector<SeqBarS> StratumPoset::divisors() const {
  std::vector<SeqBarS> out;
  long top = seq_length(w);
  for (const SeqBarS& v : strata)
    if (top - seq_length(v) == 1) out.push_back(v);
  return out;
}

StratumPoset stratum_poset(const SeqBarS& w) {
  for (long e : w)
    if (e < 0) throw ValidationError("stratum_poset: negative entry");
  StratumPoset out;
  out.w = w;
  out.strata = seqs_below(w);
  std::sort(out.strata.begin(), out.strata.end(),
            [](const SeqBarS& a, const SeqBarS& b) {
              long la = seq_length(a), lb = seq_length(b);
              if (la != lb) return la > lb;
              return a < b;
            });
  for (size_t lo = 0; lo < out.strata.size(); ++lo)
    for (size_t hi = 0; hi < out.strata.size(); ++hi)
      if (seq_length(out.strata[hi]) - seq_length(out.strata[lo]) == 1 &&
          seq_leq(out.strata[lo], out.strata[hi]))
        out.hasse.emplace_back(static_cast<long>(lo), static_cast<long>(hi));
  return out;
}

long variety_dimension(const SeqBarS& w) { return seq_length(w); }

bool ramifies_along(const RootDatum& rd, const FrobeniusTwist& tw,
                    const SeqBarS& x, const TorusCharacter& theta,
                    const SeqBarS& v, const SeqBarS& v_prime) {
  validate_seq(rd, x);
  validate_seq(rd, v);
  validate_seq(rd, v_prime);
  if (v.size() != x.size() || !seq_leq(v, x))
    throw NotComparable("ramifies_along: v is not a stratum of x");
  if (v_prime.size() != v.size() || !seq_leq(v_prime, v))
    throw NotComparable("ramifies_along: v' is not a stratum of v");
  if (seq_length(v) - seq_length(v_prime) != 1)
    throw ValidationError(
        "ramifies_along: v' is not a divisor component of v");
  FiniteTorus t = finite_torus(rd, tw, x);
  if (!character_fits(t.group, theta))
    throw CharacterDomainMismatch(
        "ramifies_along: character does not fit T^{wF}");
  SeqBarS support = w_theta(rd, tw, x, theta);
  if (!seq_leq(support, v))
    throw NotInInterval("ramifies_along: v is not in I(w, theta)");
  std::vector<long> flips = seq_diff_positions(v, v_prime);
  internal_check(flips.size() == 1, "divisor step drops one position");
  // Ramified exactly when the dropped position carries the character:
  // then v is the join of v' and w_theta; otherwise w_theta <= v'.
  return support[static_cast<size_t>(flips[0])] != 0;
}

MonodromyTable monodromy_table(const RootDatum& rd, const FrobeniusTwist& tw,
                               const SeqBarS& w, const TorusCharacter& theta) {
  validate_seq(rd, w);
  FiniteTorus t = finite_torus(rd, tw, w);
  if (!character_fits(t.group, theta))
    throw CharacterDomainMismatch(
        "monodromy_table: character does not fit T^{wF}");
  SeqBarS support = w_theta(rd, tw, w, theta);
  MonodromyTable out;
  out.poset = stratum_poset(w);
  long ell = seq_length(w);
  for (const SeqBarS& v : out.poset.strata) {
    bool member = seq_leq(support, v);
    out.in_interval.push_back(member);
    std::vector<Int> row(static_cast<size_t>(ell) + 1, Int(0));
    if (member) {
      std::vector<Int> binom = binomial_row(ell - seq_length(v));
      std::copy(binom.begin(), binom.end(), row.begin());
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

const std::vector<Int>& MonodromyTable::row(const SeqBarS& v) const {
  long k = poset.index_of(v);
  if (k < 0)
    throw NotInInterval("row: not a stratum of this compactification");
  return rows[static_cast<size_t>(k)];
}

Int MonodromyTable::multiplicity(const SeqBarS& v, long i) const {
  const std::vector<Int>& r = row(v);
  if (i < 0 || i >= static_cast<long>(r.size())) return 0;
  return r[static_cast<size_t>(i)];
}

}  // namespace finred
