#include "finred/abelian.hpp"

namespace finred {

namespace {

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1); inverse mod 1 is 0.
Int inv_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  Int r0 = m, r1 = mod_euclid(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  internal_check(r0 == 1, "inv_mod: arguments are not coprime");
  return mod_euclid(s0, m);
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::cokernel(const IntMatrix& m, bool require_finite) {
  auto s = smith_normal_form(m);
  FiniteAbelianGroup g;
  g.ambient_rank_ = m.rows();
  if (s.rank < m.rows() && require_finite)
    throw InfiniteCokernel("cokernel: image has rank " + std::to_string(s.rank) +
                           " inside Z^" + std::to_string(m.rows()));
  // Generators are the classes of U^{-1} e_t for invariant factors d_t > 1;
  // U-coordinates reduced mod d_t are the quotient coordinates.
  std::vector<long> keep;
  for (long t = 0; t < s.rank; ++t)
    if (s.diag(t) > 1) keep.push_back(t);
  long k = static_cast<long>(keep.size());
  g.proj_ = IntMatrix(k, m.rows());
  g.lift_ = IntMatrix(m.rows(), k);
  for (long i = 0; i < k; ++i) {
    g.inv_.push_back(s.diag(keep[static_cast<size_t>(i)]));
    g.order_ *= g.inv_.back();
    for (long j = 0; j < m.rows(); ++j) {
      g.proj_.at(i, j) = s.U.at(keep[static_cast<size_t>(i)], j);
      g.lift_.at(j, i) = s.U_inv.at(j, keep[static_cast<size_t>(i)]);
    }
  }
  return g;
}

std::vector<Int> FiniteAbelianGroup::coords(const Vec& ambient) const {
  if (static_cast<long>(ambient.size()) != ambient_rank_)
    throw ValidationError("coords: ambient vector length mismatch");
  return reduce(proj_.apply(ambient));
}

std::vector<Int> FiniteAbelianGroup::reduce(std::vector<Int> c) const {
  if (c.size() != inv_.size())
    throw ValidationError("reduce: coordinate length mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_euclid(c[i], inv_[i]);
  return c;
}

Vec FiniteAbelianGroup::lift_coords(const std::vector<Int>& c) const {
  if (c.size() != inv_.size())
    throw ValidationError("lift_coords: coordinate length mismatch");
  return lift_.apply(c);
}

bool FiniteAbelianGroup::coords_zero(const std::vector<Int>& c) const {
  for (size_t i = 0; i < c.size(); ++i)
    if (mod_euclid(c[i], inv_[i]) != 0) return false;
  return true;
}

std::vector<std::vector<Int>> FiniteAbelianGroup::elements() const {
  if (order_ > 10000000)
    throw CapExceeded("elements: group order exceeds the enumeration cap");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(inv_.size(), Int(0));
  while (true) {
    out.push_back(cur);
    size_t i = inv_.size();
    while (i > 0) {
      --i;
      cur[i] += 1;
      if (cur[i] < inv_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (inv_.empty()) return out;
  }
}

QZ GroupCharacter::eval_coords(const std::vector<Int>& c) const {
  if (c.size() != values.size())
    throw CharacterDomainMismatch("character: coordinate length mismatch");
  QZ acc;
  for (size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * values[i];
  return acc;
}

QZ GroupCharacter::eval_ambient(const FiniteAbelianGroup& g, const Vec& ambient) const {
  return eval_coords(g.coords(ambient));
}

bool GroupCharacter::is_trivial() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

Int GroupCharacter::order() const {
  Int o = 1;
  for (const auto& v : values) o = lcm_int(o, v.order());
  return o;
}

bool character_fits(const FiniteAbelianGroup& g, const GroupCharacter& chi) {
  if (static_cast<long>(chi.values.size()) != g.num_generators()) return false;
  for (size_t i = 0; i < chi.values.size(); ++i)
    if (g.invariant_factors()[i] % chi.values[i].order() != 0) return false;
  return true;
}

std::vector<GroupCharacter> hom_group_elements(const FiniteAbelianGroup& g) {
  std::vector<GroupCharacter> out;
  for (const auto& c : g.elements()) {
    GroupCharacter chi;
    for (size_t i = 0; i < c.size(); ++i)
      chi.values.push_back(QZ(c[i], g.invariant_factors()[i]));
    out.push_back(std::move(chi));
  }
  return out;
}

GroupCharacter ell_prime_part(const GroupCharacter& chi, const Int& ell) {
  if (ell < 2 || !is_prime_int(ell))
    throw ValidationError("ell_prime_part: ell must be prime");
  Int m = chi.order();
  Int la = 1;
  while (m % ell == 0) {
    la *= ell;
    m /= ell;
  }
  // Now the original order is la * m with ell coprime to m. Raising to
  // k = la * (la^{-1} mod m) kills the ell-part and fixes the ell'-part.
  Int k = la * inv_mod(la, m);
  GroupCharacter out;
  for (const auto& v : chi.values) out.values.push_back(k * v);
  return out;
}

}  // namespace finred
