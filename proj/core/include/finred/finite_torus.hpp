#pragma once

// Finite tori of twisted Frobenius maps, presented through cocharacters:
//
//   T^{wF}  :=  coker(w F_Y - 1  acting on Y),
//
// with the norm map N_w realized as the cokernel projection itself (the
// field-norm description of N_w fixes the same map once a compatible system
// of roots of unity is chosen; nothing downstream depends on that choice).
//
// On top of the plain tori this module provides the sequence combinatorics:
// the coroot frames beta_{w,v,i}^vee, the sublattices Y_{w,v} they span, the
// common quotients Y/((yF-1)Y + Y_{w,v}) with their canonical isomorphisms,
// the minimal sequence w_theta of a character with its interval I(w, theta),
// character transport theta_y, and the component group of the intermediate
// covering S_{w,v} computed in the injective-coroots cover.

#include "finred/abelian.hpp"
#include "finred/embedding.hpp"
#include "finred/root_datum.hpp"
#include "finred/seq.hpp"

namespace finred {

using TorusCharacter = GroupCharacter;

// Least d with (wF)^d = q^d on Y for every w: the lcm of the orders of the
// matrices w*tau over the Weyl group.
long splitting_exponent(const RootDatum& rd, const FrobeniusTwist& tw);
long splitting_exponent(const WeylGroup& wg, const FrobeniusTwist& tw);

struct FiniteTorus {
  IntMatrix w_action;        // product of the sequence entries, acting on Y
  FiniteAbelianGroup group;  // coker(w_action * F_Y - 1)

  // The norm map N_w: Y -> T^{wF} is the cokernel projection.
  std::vector<Int> norm(const Vec& lambda) const { return group.coords(lambda); }
};

FiniteTorus finite_torus(const RootDatum& rd, const FrobeniusTwist& tw, const SeqBarS& w);

// All characters of T^{wF} (always of order prime to p), optionally
// restricted to orders prime to a further prime ell (Brauer mode).
std::vector<TorusCharacter> torus_characters(const FiniteTorus& t);
std::vector<TorusCharacter> torus_characters_ell_regular(const FiniteTorus& t, const Int& ell);

// The coroot vectors attached to a pair v <= w of sequences: alpha_{w,i}^vee
// is the coroot of the i-th entry (zero for identity entries), the (w,v)
// variant vanishes outside I_{w,v}, and the beta's are the alpha's pushed
// through the prefix s_1...s_{i-1} of w. Y_{w,v} is spanned by the
// beta_{w,v,i}^vee.
struct CorootFrame {
  std::vector<long> diff;     // I_{w,v}
  std::vector<Vec> alpha_w;   // alpha_{w,i}^vee
  std::vector<Vec> alpha_wv;  // alpha_{w,v,i}^vee
  std::vector<Vec> beta_w;    // s_1...s_{i-1}(alpha_{w,i}^vee)
  std::vector<Vec> beta_wv;   // s_1...s_{i-1}(alpha_{w,v,i}^vee)
  Sublattice y_wv;            // span of the beta_wv
};

CorootFrame coroot_frame(const RootDatum& rd, const SeqBarS& w, const SeqBarS& v);

// The alternative generating family t_1...t_{i-1}(alpha_{w,v,i}^vee) built
// from the prefixes of any y in [v, w]; spans the same lattice Y_{w,v}.
std::vector<Vec> alt_generators(const RootDatum& rd, const SeqBarS& w,
                                const SeqBarS& v, const SeqBarS& y);

// Y / ((yF-1)Y + Y_{w,v}): independent of the choice of v <= y <= w because
// the summed lattices coincide.
FiniteAbelianGroup quotient_torus(const RootDatum& rd, const FrobeniusTwist& tw,
                                  const SeqBarS& w, const SeqBarS& v, const SeqBarS& y);

// T^{wF}/N_w(Y_{w,v}) -> T^{yF}/N_y(Y_{w,v}), both realized inside the common
// cokernel Y/((wF-1)Y + Y_{w,v}); the map is induced by the identity on Y.
struct CanonicalIso {
  FiniteTorus source;          // T^{wF}
  FiniteTorus target;          // T^{yF}
  FiniteAbelianGroup quotient; // the common presentation

  // Quotient class of a torus element, on either side.
  std::vector<Int> source_class(const std::vector<Int>& source_coords) const;
  std::vector<Int> target_class(const std::vector<Int>& target_coords) const;
  // A target-torus representative of the image of a source element.
  std::vector<Int> forward(const std::vector<Int>& source_coords) const;
};

CanonicalIso canonical_iso(const RootDatum& rd, const FrobeniusTwist& tw,
                           const SeqBarS& w, const SeqBarS& y, const SeqBarS& v);

// The minimal sequence of theta: entry i is kept iff theta(N_w(beta_{w,i}^vee))
// is nontrivial. I(w, theta) = [w_theta, w]; membership is equivalent to
// theta vanishing on N_w(Y_{w,x}).
SeqBarS w_theta(const RootDatum& rd, const FrobeniusTwist& tw, const SeqBarS& w,
                const TorusCharacter& theta);
std::vector<SeqBarS> interval(const RootDatum& rd, const FrobeniusTwist& tw,
                              const SeqBarS& w, const TorusCharacter& theta);

// theta_y on T^{yF}, defined by theta_y(N_y(lambda)) = theta(N_w(lambda));
// requires y in I(w, theta).
TorusCharacter theta_on_y(const RootDatum& rd, const FrobeniusTwist& tw,
                          const SeqBarS& w, const TorusCharacter& theta,
                          const SeqBarS& y);

// Component group of S_{w,v}/C^F computed in the injective-coroots cover via
// the character lattice of the r-fold torus; the p-part (invisible on reduced
// points in characteristic p) is dropped. Isomorphic to quotient_torus(w, v).
FiniteAbelianGroup pi0_S(const RootDatum& rd, const FrobeniusTwist& tw,
                         const SeqBarS& w, const SeqBarS& v);

// Equality of abstract isomorphism type (same nontrivial invariant factors).
bool same_invariants(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

}  // namespace finred
