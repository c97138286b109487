#pragma once

// Stratification combinatorics of compactified Deligne-Lusztig varieties.
// The closure of the variety X(w) attached to a sequence w over S-bar is the
// disjoint union of the strata X(v) over all v <= w (componentwise), a
// normal-crossings configuration whose divisor components are the strata of
// codimension one.  The rank-1 local system of a torus character theta
// extends over a stratum with binomial multiplicities when the stratum lies
// in the admissible interval I(w, theta), and its restriction vanishes
// otherwise; whether the extension ramifies along a given divisor is decided
// by the support sequence w_theta alone.

#include "finred/finite_torus.hpp"
#include "finred/root_datum.hpp"
#include "finred/seq.hpp"

#include <utility>
#include <vector>

namespace finred {

// The poset of strata of the compactification of X(w): all v <= w under the
// componentwise order.  Strata are listed top-down, by decreasing length and
// lexicographically within a length, so the first entry is w itself and the
// last is the unique closed stratum.
struct StratumPoset {
  SeqBarS w;
  std::vector<SeqBarS> strata;
  // Covering pairs (lower, upper): indices into strata with
  // strata[lower] < strata[upper] and length difference one.
  std::vector<std::pair<long, long>> hasse;

  // Index of v in strata, or -1 when v is not a stratum.
  long index_of(const SeqBarS& v) const;
  // l(w) - l(v).  Throws NotInInterval when v is not a stratum.
  long codim(const SeqBarS& v) const;
  // The closure of the stratum y: every v <= y, in poset order.
  std::vector<SeqBarS> closure(const SeqBarS& y) const;
  // The divisor components of the boundary: the codimension-1 strata.
  std::vector<SeqBarS> divisors() const;
};

// 2^{l(w)} strata; identity entries are rigid and contribute no choice.
StratumPoset stratum_poset(const SeqBarS& w);

// dim X(w) = l(w), the number of non-identity entries.  The same count gives
// the dimension of the variety attached to any lift of w, and of the Levi
// variety attached to a pair (I, v) it is l(v).
long variety_dimension(const SeqBarS& w);

// Whether the canonical extension of the local system of theta over the
// closure of X(x) ramifies along the divisor component X(v') of the partial
// compactification of X(v).  Preconditions: theta lives on the torus of x,
// w_theta <= v <= x, v' < v and l(v) - l(v') = 1; violations raise
// CharacterDomainMismatch / NotComparable / NotInInterval / ValidationError.
// Under these preconditions the dichotomy is complete: either v is the
// smallest stratum above both v' and w_theta (the extension ramifies), or
// w_theta <= v' (it does not) -- equivalently, the extension ramifies
// exactly when the entry of w_theta at the dropped position is nontrivial.
bool ramifies_along(const RootDatum& rd, const FrobeniusTwist& tw,
                    const SeqBarS& x, const TorusCharacter& theta,
                    const SeqBarS& v, const SeqBarS& v_prime);

// Restriction multiplicities of the local system of theta to the strata of
// the compactification of X(w).  Row k lists, for i = 0, ..., l(w), the
// multiplicity in degree i over poset.strata[k]: the binomial coefficient
// C(l(w) - l(v), i) when the stratum v lies in I(w, theta), zero otherwise.
struct MonodromyTable {
  StratumPoset poset;
  std::vector<std::vector<Int>> rows;
  std::vector<bool> in_interval;

  // The row of a stratum.  Throws NotInInterval when v is not a stratum.
  const std::vector<Int>& row(const SeqBarS& v) const;
  // Multiplicity at (v, i); zero for i outside 0..l(w).
  Int multiplicity(const SeqBarS& v, long i) const;
};

MonodromyTable monodromy_table(const RootDatum& rd, const FrobeniusTwist& tw,
                               const SeqBarS& w, const TorusCharacter& theta);

}  // namespace finred
