#pragma once

// Lattice-level auxiliary groups:
//
//   regular_embedding: enlarge X to the fiber product of X -> X/Z*Phi with a
//   free cover of X/Z*Phi, producing a datum whose center is connected
//   (X~/Z*Phi~ torsion-free) together with the inclusion Y -> Y~ along which
//   characters of the bigger torus restrict.
//
//   injective_coroots_cover: the dual construction; every coroot of the
//   cover is primitive, the projection Y^ -> Y is surjective, and its kernel
//   is a central coweight sublattice.
//
// The free cover has one generator per nontrivial invariant factor plus one
// per free summand of X/Z*Phi, and tau must permute those generators; when it
// does not, the construction falls back to the always-equivariant cover F = X.

#include "finred/root_datum.hpp"

namespace finred {

struct RegularEmbedding {
  RootDatum datum;        // the enlarged datum (X~, Y~)
  FrobeniusTwist twist;   // extended twist on Y~
  IntMatrix inclusion;    // iota: Y -> Y~
  IntMatrix restriction;  // res: X~ -> X (= inclusion transposed)
};

RegularEmbedding regular_embedding(const RootDatum& rd, const FrobeniusTwist& tw);

struct CorootsCover {
  RootDatum datum;            // cover datum (X^, Y^)
  FrobeniusTwist twist;       // twist on Y^
  IntMatrix projection;       // pr: Y^ -> Y, surjective
  Sublattice central_kernel;  // ker(pr), central coweights
};

CorootsCover injective_coroots_cover(const RootDatum& rd, const FrobeniusTwist& tw);

// The twist of the dual datum: tau* on Y* = X is the adjoint action.
FrobeniusTwist dual_twist(const RootDatum& rd, const FrobeniusTwist& tw);

}  // namespace finred
