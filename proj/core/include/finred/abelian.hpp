#pragma once

// Finite abelian groups presented as cokernels of integer matrices:
//   G = Z^n / column-span(M)  ~=  prod_i Z/d_i   (invariant factors d_i >= 2).
//
// The projection matrix maps an ambient vector to generator coordinates; a lift
// matrix sends each generator back to an ambient preimage. Factors equal to 1
// are dropped from the public invariant-factor list.

#include "finred/matrix.hpp"
#include "finred/qz.hpp"
#include "finred/snf.hpp"

#include <vector>

namespace finred {

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group on a rank-0 ambient

  long ambient_rank() const { return ambient_rank_; }
  const std::vector<Int>& invariant_factors() const { return inv_; }
  long num_generators() const { return static_cast<long>(inv_.size()); }
  const Int& order() const { return order_; }
  bool is_trivial() const { return inv_.empty(); }

  const IntMatrix& projection() const { return proj_; }
  const IntMatrix& lift() const { return lift_; }

  // Generator coordinates of an ambient vector, reduced mod the invariant
  // factors (the cokernel projection; for finite tori this IS the norm map).
  std::vector<Int> coords(const Vec& ambient) const;
  // Reduce arbitrary generator coordinates into canonical range.
  std::vector<Int> reduce(std::vector<Int> c) const;
  // An ambient preimage of the given generator coordinates.
  Vec lift_coords(const std::vector<Int>& c) const;

  bool coords_zero(const std::vector<Int>& c) const;

  // All |G| elements in mixed-radix order (c_i in [0, d_i)).
  std::vector<std::vector<Int>> elements() const;

  // Construction: cokernel of M as a map into Z^rows (image = column span).
  // With require_finite, a free summand raises InfiniteCokernel.
  static FiniteAbelianGroup cokernel(const IntMatrix& m, bool require_finite = true);

 private:
  long ambient_rank_ = 0;
  std::vector<Int> inv_;  // d_i >= 2, d_1 | d_2 | ...
  IntMatrix proj_;        // num_generators x ambient_rank
  IntMatrix lift_;        // ambient_rank x num_generators
  Int order_ = 1;
};

// A homomorphism G -> Q/Z, stored by its value on each generator.
// Well-formed when den(values[i]) | d_i. For finite tori this is the type of
// the characters theta (and theta_y, theta_{l'}).
struct GroupCharacter {
  QZVec values;  // one entry per invariant-factor generator

  QZ eval_coords(const std::vector<Int>& c) const;
  QZ eval_ambient(const FiniteAbelianGroup& g, const Vec& ambient) const;
  bool is_trivial() const;
  Int order() const;  // lcm of value orders
};

// Check den(values[i]) | d_i for the given group.
bool character_fits(const FiniteAbelianGroup& g, const GroupCharacter& chi);

// All |G| homomorphisms G -> Q/Z, in mixed-radix order of numerators.
std::vector<GroupCharacter> hom_group_elements(const FiniteAbelianGroup& g);

// The l'-part of a character: chi^k with k = 1 mod (l'-part of order) and
// k = 0 mod (l-part of order); equivalently multiplication by the inverse of
// the l-part of the order on each value.
GroupCharacter ell_prime_part(const GroupCharacter& chi, const Int& ell);

}  // namespace finred
