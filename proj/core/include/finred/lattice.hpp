#pragma once

// Sublattices of Z^n given by (not necessarily independent) generators, and
// the lattice arithmetic the rest of the library runs on: bases, membership,
// sums, saturation, annihilators, integer linear solving, kernels with mixed
// moduli, and finite quotients.

#include "finred/abelian.hpp"
#include "finred/matrix.hpp"
#include "finred/snf.hpp"

#include <optional>
#include <vector>

namespace finred {

struct Sublattice {
  long ambient_rank = 0;
  std::vector<Vec> generators;

  static Sublattice zero(long n) { return Sublattice{n, {}}; }
  static Sublattice full(long n);
  static Sublattice from_columns(const IntMatrix& m);

  IntMatrix generator_matrix() const;  // columns = generators
};

// Independent basis (columns) of the span; rank = cols of the result.
IntMatrix lattice_basis(const Sublattice& s);
long lattice_rank(const Sublattice& s);

Sublattice sublattice_sum(const Sublattice& a, const Sublattice& b);

bool lattice_member(const Vec& v, const Sublattice& s);
bool lattice_contains(const Sublattice& outer, const Sublattice& inner);
bool lattice_equal(const Sublattice& a, const Sublattice& b);

// Saturation: (Q-span of s) intersected with Z^n.
Sublattice saturation(const Sublattice& s);

// {x in Z^n : x . g = 0 for all generators g} (dual-side annihilator).
Sublattice annihilator(const Sublattice& s);

// Kernel of A as a map Z^cols -> Z^rows.
Sublattice kernel(const IntMatrix& a);

// {x : (A x)_i = 0 mod moduli[i]}, where moduli[i] = 0 demands exact zero.
Sublattice kernel_mixed(const IntMatrix& a, const std::vector<Int>& moduli);

// One integer solution of A x = b, if any.
std::optional<Vec> solve(const IntMatrix& a, const Vec& b);

// Columnwise: one integer solution of A X = B, if all columns are solvable.
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b);

// Integer index [outer : inner] for full-rank pairs (ratio of determinants).
Int lattice_index(const Sublattice& outer, const Sublattice& inner);

// Quotient span(a)/span(b); requires b subset of a (NotContained otherwise)
// and a finite quotient (InfiniteCokernel otherwise). The returned group's
// ambient is Z^n itself when a is the full lattice, else span(a) in the
// coordinates of lattice_basis(a).
FiniteAbelianGroup quotient_by(const Sublattice& a, const Sublattice& b);

}  // namespace finred
