#pragma once

// Geometric and rational series of irreducible characters, organised through
// pairs (w, theta) with w a Weyl element and theta a character of the finite
// torus T^{wF}.  A pair determines a semisimple element of the dual torus
// (X tensor Q/Z, with the coroots of the original datum playing the role of
// dual roots), and the partition of all pairs into series can be computed two
// independent ways: definitionally, by comparing theta o N_{F^d/wF} on the
// split torus T^{F^d} up to the Weyl group, or through Weyl orbits of the
// dual elements.  Rational series refine geometric ones by passing to a
// regular embedding and comparing all extensions of the characters there.
//
// The second half of the header lives on the dual side: centralizers of
// semisimple elements, quasi-isolation, the Levi datum underlying Jordan
// decomposition, and the sets of bad primes controlling when that datum
// exists.

#include "finred/basics.hpp"
#include "finred/qz.hpp"
#include "finred/matrix.hpp"
#include "finred/root_datum.hpp"
#include "finred/seq.hpp"
#include "finred/finite_torus.hpp"
#include "finred/embedding.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finred {

// A single-element pair: a Weyl element together with a character of the
// torus T^{wF} it twists.
struct Pair {
  WeylElement w;
  TorusCharacter theta;
};

// A sequence pair: a sequence over the simple reflections extended by the
// identity, with a character of the torus attached to its product.  The
// elementary-move machinery works on these; a Pair is the special case of a
// reduced word.
struct SeqPair {
  SeqBarS w;
  TorusCharacter theta;
};

// All pairs (w, theta) of the datum: Weyl elements in enumeration order,
// characters of each T^{wF} in hom_group_elements order.
std::vector<Pair> all_pairs(const RootDatum& rd, const FrobeniusTwist& tw);

// ---------------------------------------------------------------------------
// Dual semisimple elements

// The element of X tensor Q/Z attached to a pair, together with the Weyl
// element whose twisted Frobenius fixes it.
struct DualSS {
  QZVec s;
  WeylElement fixing_w;
};

// Solve theta(N_w(mu)) = <mu, s> for s; the solution is s_j = theta(N_w(e_j))
// on the cocharacter basis.  The result has denominators prime to p and is
// fixed by the transpose action of wF on X tensor Q/Z.
DualSS dual_ss(const RootDatum& rd, const FrobeniusTwist& tw, const Pair& p);

// Reverse direction: the character of T^{wF} whose dual element is s.
// Requires s to be fixed by the transpose action of wF.
TorusCharacter character_of_dual(const RootDatum& rd, const FrobeniusTwist& tw,
                                 const WeylElement& w, const QZVec& s);

// The transpose action of a Weyl element on X tensor Q/Z (the action through
// which the Weyl group permutes dual semisimple elements).
QZVec dual_weyl_apply(const WeylElement& x, const QZVec& s);

// ---------------------------------------------------------------------------
// Geometric and rational conjugacy

// Definitional test: compose each theta_i with the norm down from the split
// torus T^{F^d} (d the splitting exponent) and compare the resulting
// characters of Y/(q^d - 1)Y up to the Weyl group acting on Y.
bool geometrically_conjugate(const RootDatum& rd, const FrobeniusTwist& tw,
                             const Pair& a, const Pair& b);

// Second, independent route: Weyl-orbit equality of the dual elements.
bool geometrically_conjugate_dual(const RootDatum& rd,
                                  const FrobeniusTwist& tw, const Pair& a,
                                  const Pair& b);

// All extensions of p.theta to the torus of the regular embedding twisted by
// the same Weyl word.  The extensions form a torsor under the characters of
// the cokernel torus; the count is checked internally.
std::vector<TorusCharacter> character_extensions(const RootDatum& rd,
                                                 const FrobeniusTwist& tw,
                                                 const RegularEmbedding& emb,
                                                 const Pair& p);

// Rational conjugacy: some pair of extensions to the regular embedding is
// geometrically conjugate there.  For data with connected center the
// embedding is the identity and this coincides with geometric conjugacy.
bool rationally_conjugate(const RootDatum& rd, const FrobeniusTwist& tw,
                          const Pair& a, const Pair& b);

// ---------------------------------------------------------------------------
// Series partitions

// One block of the partition of all pairs into rational series.  The
// representative is the member minimizing (word length, word, character
// values); minimal_f_class records the least Weyl index in the twisted
// conjugacy class x w phi(x)^{-1} of a minimal member's element, for the
// record only.
struct SeriesId {
  Pair representative;
  std::vector<Pair> members;
  long minimal_f_class = 0;

  long member_count() const { return static_cast<long>(members.size()); }
};

// Partition all pairs into rational series (the partition relevant over a
// field of characteristic zero).
std::vector<SeriesId> series_partition(const RootDatum& rd,
                                       const FrobeniusTwist& tw);

// Partition refined for an ell-modular system: pairs are first coarsened by
// theta -> theta_{ell'} and grouped by the rational series of the coarsened
// pair.  Requires ell prime and different from p.
std::vector<SeriesId> series_partition_brauer(const RootDatum& rd,
                                              const FrobeniusTwist& tw,
                                              const Int& ell);

// The same partition computed through geometric conjugacy only.
std::vector<SeriesId> geometric_partition(const RootDatum& rd,
                                          const FrobeniusTwist& tw);

// ---------------------------------------------------------------------------
// Elementary moves

// One-step neighbors of a sequence pair under the two elementary moves, in
// both directions: (1) twisted Weyl conjugation w -> v w phi(v)^{-1} with
// theta transported through v, the target re-expressed as the padded
// lexicographic word when it fits inside `bound`; (2) for sequences without
// identity entries, passage to (w_theta, theta_{w_theta}), together with all
// preimages of the given pair under that passage.
std::vector<SeqPair> elementary_moves(const RootDatum& rd,
                                      const FrobeniusTwist& tw,
                                      const SeqPair& sp, long bound = 3);

// Bounded search for a chain of elementary moves.  The test is a
// semi-decision: Equivalent is definitive, Unknown only means no chain was
// found through sequences of the given length.
enum class MoveReach { Equivalent, Unknown };

MoveReach sim_w_equivalent(const RootDatum& rd, const FrobeniusTwist& tw,
                           const SeqPair& a, const SeqPair& b, long bound = 3);

// ---------------------------------------------------------------------------
// Minimal pairs

// The members (w, theta) of a series that cannot be shrunk: theta is
// nontrivial on every kept position of the word of w, i.e. w_theta keeps the
// whole word.
std::vector<Pair> minimal_pairs(const RootDatum& rd, const FrobeniusTwist& tw,
                                const SeriesId& series);

// A Weyl element x with b = (x w phi(x)^{-1}, theta o x^{-1}), if one exists.
std::optional<long> conjugating_witness(const RootDatum& rd,
                                        const FrobeniusTwist& tw,
                                        const Pair& a, const Pair& b);

// Every two minimal pairs of the series are related by twisted Weyl
// conjugation.
bool check_minimality_lemma(const RootDatum& rd, const FrobeniusTwist& tw,
                            const SeriesId& series);

// ---------------------------------------------------------------------------
// Regularity relative to a twisted Levi

// A standard Levi is a subset I of the simple indices together with a Weyl
// element v whose composite with the diagram twist stabilizes I.  A pair for
// the Levi is a sequence over the simple reflections of I (extended by the
// identity) with a character of T^{(wv)F}.
//
// Regular: every root whose coroot is killed by theta o N_{wv} lies in the
// span of I.  Super-regular: the full Weyl stabilizer of theta o N_{wv} lies
// in the parabolic subgroup W_I.
bool is_regular(const RootDatum& rd, const FrobeniusTwist& tw,
                const std::vector<long>& levi,
                const std::vector<long>& v_word, const SeqPair& sp);

bool is_super_regular(const RootDatum& rd, const FrobeniusTwist& tw,
                      const std::vector<long>& levi,
                      const std::vector<long>& v_word, const SeqPair& sp);

// ---------------------------------------------------------------------------
// Dual-side centralizers

// Centralizer of a semisimple element s of the dual torus.  The roots of the
// dual group are the coroots of rd; phi_dual lists the indices of those
// pairing to zero with s, w_connected is the reflection subgroup they
// generate, w_full the full stabilizer of s in the Weyl group, and the
// centralizer is connected exactly when the two agree.
struct StabilizerData {
  std::vector<long> phi_dual;
  std::vector<long> w_connected;
  std::vector<long> w_full;
  bool connected = false;
};

StabilizerData centralizer_data(const RootDatum& rd, const QZVec& s);

// A Levi subsystem of the dual root system: the intersection of the coroots
// with the rational span of a Weyl translate of a subset of the simple
// coroots.  Stored as sorted coroot indices.
struct LeviSubsystem {
  std::vector<long> root_indices;
};

// All Levi subsystems of the dual system, deduplicated.  Rank is capped at 4.
std::vector<LeviSubsystem> levi_subsystems(const RootDatum& rd);

// The smallest Levi subsystem whose reflections contain the centralizer data
// of s: its roots must contain phi_dual and its Weyl group the full
// stabilizer.  Quasi-isolated means no proper such Levi exists.
LeviSubsystem minimal_levi(const RootDatum& rd, const QZVec& s);

bool is_quasi_isolated(const RootDatum& rd, const QZVec& s);

// ---------------------------------------------------------------------------
// Jordan decomposition datum

// The standard twisted Levi underlying the Jordan decomposition at s, when
// the centralizer of s is a Levi subgroup: levi_simples and v_prime give the
// standard pair (I', v') with v' phi(I') = I', and conjugator the Weyl
// element carrying the standard subsystem onto the centralizer's.  When the
// centralizer is not a Levi the obstruction field says why (disconnected
// stabilizer, or an isolated element tied to the bad primes in
// obstruction_primes) and the positional fields are meaningless.
struct JordanDatum {
  bool is_levi = false;
  std::string obstruction;
  std::vector<Int> obstruction_primes;
  std::vector<long> levi_simples;
  long v_prime = 0;
  long conjugator = 0;
};

JordanDatum jordan_datum(const RootDatum& rd, const FrobeniusTwist& tw,
                         const DualSS& s);

// The pushforward of a Levi pair through the Jordan datum: the sequence w
// over I' with twist v' becomes the plain pair (wv', theta).
Pair jordan_push(const RootDatum& rd, const FrobeniusTwist& tw,
                 const JordanDatum& jd, const SeqPair& levi_pair);

// ---------------------------------------------------------------------------
// Bad primes

// Bad primes of the root system: the primes dividing a coefficient of the
// highest root of some irreducible component of the Cartan graph.  This
// reproduces the classical table (none in type A, 2 in types B/C/D, 2 and 3
// in G2/F4/E6/E7, and 2, 3, 5 in E8) without recognizing the type.
std::vector<Int> bad_primes(const RootDatum& rd);

// Bad primes together with the primes dividing the component group of the
// center (the torsion of X modulo the root lattice).
std::vector<Int> pi_set(const RootDatum& rd, const FrobeniusTwist& tw);

}  // namespace finred
