#pragma once

// Based root data (X, Phi, Y, Phi^vee) in explicit coordinates, Frobenius
// twists F = q*tau, and Weyl groups with their actions on both lattices.
//
// Conventions used throughout:
//   - the pairing between X and Y is the standard dot product of coordinates;
//   - a simple reflection acts on Y by  lambda -> lambda - <alpha, lambda> alpha^vee
//     and on X by the adjoint map  x -> x - <x, alpha^vee> alpha;
//   - Weyl matrices are the Y-side actions; the X-side action of w is
//     (M_w^{-1})^T.
//   - only genuine Frobenius maps are modeled: F = q*tau with q = p^a and tau
//     of finite order permuting the simple coroots. Square-root isogenies
//     (Suzuki, Ree) have no integer q and are rejected at construction.

#include "finred/basics.hpp"
#include "finred/lattice.hpp"
#include "finred/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace finred {

Int dot(const Vec& x, const Vec& y);

struct RootDatum {
  long rank = 0;              // rank of X and Y
  std::vector<Vec> roots;     // all roots, X-coordinates
  std::vector<Vec> coroots;   // aligned coroots, Y-coordinates
  std::vector<long> simple;   // indices into roots/coroots marking Delta

  long num_roots() const { return static_cast<long>(roots.size()); }
  long num_simple() const { return static_cast<long>(simple.size()); }
  const Vec& simple_root(long i) const { return roots[static_cast<size_t>(simple[static_cast<size_t>(i)])]; }
  const Vec& simple_coroot(long i) const { return coroots[static_cast<size_t>(simple[static_cast<size_t>(i)])]; }

  // C_ij = <alpha_i, alpha_j^vee> over the simple system.
  IntMatrix cartan() const;

  IntMatrix simple_reflection_y(long i) const;
  IntMatrix simple_reflection_x(long i) const;

  long root_index(const Vec& alpha) const;  // -1 when absent
  bool is_root(const Vec& alpha) const { return root_index(alpha) >= 0; }

  // Expansion of roots[idx] over the simple roots (always integral).
  Vec root_in_simple_basis(long idx) const;
  // Root indices whose simple-basis expansion is nonnegative.
  std::vector<long> positive_roots() const;

  // Columns = simple roots (X side) / simple coroots (Y side).
  IntMatrix simple_root_matrix() const;
  IntMatrix simple_coroot_matrix() const;
};

// Full invariant check: pairings 2, reflections permute the root system,
// roots primitive in Z*Phi, Cartan matrix crystallographic of finite type.
void validate_root_datum(const RootDatum& rd);

RootDatum dual_datum(const RootDatum& rd);
RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

// Generic builders. The Cartan matrix convention is C_ij = <alpha_i, alpha_j^vee>.
RootDatum root_datum_simply_connected(const IntMatrix& cartan);
RootDatum root_datum_adjoint(const IntMatrix& cartan);
RootDatum root_datum_gl(long n);

// Cartan matrices of the small catalog types: "A1", "A2", "B2", "C2", "G2".
IntMatrix cartan_of_type(const std::string& type);

// Builtins by name: "SLn", "GLn", "PGLn" (n >= 2), "Sp4", and "<type>-sc" /
// "<type>-ad" for the catalog types; "x" joins summands ("A1-sc x A1-sc").
RootDatum build_root_datum(const std::string& name);

struct FrobeniusTwist {
  Int p = 2;       // prime
  long a = 1;      // q = p^a
  IntMatrix tau;   // finite-order action on Y permuting the simple coroots

  Int q() const { return pow_int(p, a); }
  IntMatrix frobenius_y() const { return q() * tau; }  // F on Y
  IntMatrix tau_inverse() const;
  IntMatrix tau_x() const;  // (tau^{-1})^T, the action on X

  // sigma with tau(alpha_i^vee) = alpha_{sigma(i)}^vee.
  std::vector<long> simple_permutation(const RootDatum& rd) const;
};

// Validated constructors (identity tau, or an explicit matrix).
FrobeniusTwist make_twist(const RootDatum& rd, const Int& p, long a);
FrobeniusTwist make_twist(const RootDatum& rd, const Int& p, long a, IntMatrix tau);
void validate_twist(const RootDatum& rd, const FrobeniusTwist& tw);

struct WeylElement {
  std::vector<long> word;  // lex-minimal reduced word, 0-based simple indices
  IntMatrix m;             // action on Y

  long length() const { return static_cast<long>(word.size()); }
};

class WeylGroup {
 public:
  // Breadth-first closure under right multiplication by simple reflections;
  // deterministic, so element indices and stored words are reproducible.
  static WeylGroup enumerate(const RootDatum& rd, long cap = 1000000);

  const RootDatum& datum() const { return rd_; }
  long size() const { return static_cast<long>(elems_.size()); }
  const WeylElement& at(long k) const { return elems_[static_cast<size_t>(k)]; }
  long identity() const { return 0; }
  long simple(long i) const { return simple_[static_cast<size_t>(i)]; }

  long index_of(const IntMatrix& m) const;  // -1 when absent
  long mul(long i, long j) const;
  long inverse(long k) const;
  long length(long k) const { return at(k).length(); }
  // Unique element of maximal length.
  long longest() const;

 private:
  RootDatum rd_;
  std::vector<WeylElement> elems_;
  std::vector<long> simple_;
  std::map<std::string, long> index_;
};

// Bruhat order on W (descent recursion; the subword criterion is the oracle
// used by the tests).
bool bruhat_leq(const WeylGroup& wg, long v, long w);

}  // namespace finred
