#pragma once

// Sequences over S-bar = S u {1}: the index tuples (w_1, ..., w_r) that drive
// the Deligne-Lusztig combinatorics. Entry 0 is the identity; entry k >= 1 is
// the simple reflection of index k-1. The partial order is componentwise
// Bruhat order, which below a simple reflection reduces to 1 <= s.

#include "finred/root_datum.hpp"

#include <string>
#include <vector>

namespace finred {

using SeqBarS = std::vector<long>;

void validate_seq(const RootDatum& rd, const SeqBarS& w);

// Number of non-identity entries.
long seq_length(const SeqBarS& w);

// Componentwise order: v_i in {1, w_i} for all i. Lengths must agree.
bool seq_leq(const SeqBarS& v, const SeqBarS& w);

// I_{w,v}: positions where v and w differ. Requires v <= w.
std::vector<long> seq_diff_positions(const SeqBarS& w, const SeqBarS& v);

// Product of the entries, as a Y-matrix or as a Weyl-group index.
IntMatrix seq_product_y(const RootDatum& rd, const SeqBarS& w);
long seq_product_index(const WeylGroup& wg, const SeqBarS& w);

// All y with v <= y <= w (2^{#diff} sequences; requires v <= w).
std::vector<SeqBarS> seq_interval(const SeqBarS& v, const SeqBarS& w);

// All v <= w.
std::vector<SeqBarS> seqs_below(const SeqBarS& w);

// All sequences of the given length r over S-bar.
std::vector<SeqBarS> all_seqs(const RootDatum& rd, long r);

// "(s1,1,s2)"-style rendering: entries joined by commas, identity as "1",
// simple k as "s<k+1>".
std::string seq_to_string(const SeqBarS& w);
SeqBarS seq_parse(const std::string& s);

}  // namespace finred
