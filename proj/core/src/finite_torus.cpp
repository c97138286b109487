#include "finred/finite_torus.hpp"

#include <algorithm>
#include <string>

namespace finred {

long splitting_exponent(const WeylGroup& wg, const FrobeniusTwist& tw) {
  long d = 1;
  for (long k = 0; k < wg.size(); ++k) {
    long ord = (wg.at(k).m * tw.tau).multiplicative_order();
    d = static_cast<long>(lcm_int(d, ord).convert_to<long>());
  }
  return d;
}

long splitting_exponent(const RootDatum& rd, const FrobeniusTwist& tw) {
  return splitting_exponent(WeylGroup::enumerate(rd), tw);
}

FiniteTorus finite_torus(const RootDatum& rd, const FrobeniusTwist& tw, const SeqBarS& w) {
  validate_seq(rd, w);
  IntMatrix mw = seq_product_y(rd, w);
  IntMatrix wf1 = mw * tw.frobenius_y() - IntMatrix::identity(rd.rank);
  return FiniteTorus{mw, FiniteAbelianGroup::cokernel(wf1)};
}

std::vector<TorusCharacter> torus_characters(const FiniteTorus& t) {
  return hom_group_elements(t.group);
}

std::vector<TorusCharacter> torus_characters_ell_regular(const FiniteTorus& t, const Int& ell) {
  if (ell < 2) throw ValidationError("torus_characters_ell_regular: ell must be a prime");
  std::vector<TorusCharacter> out;
  for (TorusCharacter& chi : torus_characters(t))
    if (chi.order() % ell != 0) out.push_back(std::move(chi));
  return out;
}

CorootFrame coroot_frame(const RootDatum& rd, const SeqBarS& w, const SeqBarS& v) {
  validate_seq(rd, w);
  validate_seq(rd, v);
  if (!seq_leq(v, w))
    throw NotComparable("coroot_frame: v is not componentwise below w");
  CorootFrame f;
  f.diff = seq_diff_positions(w, v);
  long r = static_cast<long>(w.size());
  Vec zero(static_cast<size_t>(rd.rank), Int(0));
  IntMatrix prefix = IntMatrix::identity(rd.rank);  // s_1 ... s_{i-1}
  for (long i = 0; i < r; ++i) {
    long e = w[static_cast<size_t>(i)];
    Vec aw = e == 0 ? zero : rd.simple_coroot(e - 1);
    Vec awv = v[static_cast<size_t>(i)] == e ? zero : aw;
    f.alpha_w.push_back(aw);
    f.alpha_wv.push_back(awv);
    f.beta_w.push_back(prefix.apply(aw));
    f.beta_wv.push_back(prefix.apply(awv));
    if (e != 0) prefix = prefix * rd.simple_reflection_y(e - 1);
  }
  f.y_wv.ambient_rank = rd.rank;
  for (long i : f.diff) f.y_wv.generators.push_back(f.beta_wv[static_cast<size_t>(i)]);
  return f;
}

std::vector<Vec> alt_generators(const RootDatum& rd, const SeqBarS& w,
                                const SeqBarS& v, const SeqBarS& y) {
  CorootFrame f = coroot_frame(rd, w, v);
  validate_seq(rd, y);
  if (!seq_leq(v, y) || !seq_leq(y, w))
    throw NotComparable("alt_generators: y is not in the interval [v, w]");
  std::vector<Vec> out;
  IntMatrix prefix = IntMatrix::identity(rd.rank);  // t_1 ... t_{i-1}
  for (size_t i = 0; i < w.size(); ++i) {
    out.push_back(prefix.apply(f.alpha_wv[i]));
    if (y[i] != 0) prefix = prefix * rd.simple_reflection_y(y[i] - 1);
  }
  return out;
}

FiniteAbelianGroup quotient_torus(const RootDatum& rd, const FrobeniusTwist& tw,
                                  const SeqBarS& w, const SeqBarS& v, const SeqBarS& y) {
  CorootFrame f = coroot_frame(rd, w, v);
  validate_seq(rd, y);
  if (!seq_leq(v, y) || !seq_leq(y, w))
    throw NotComparable("quotient_torus: y is not in the interval [v, w]");
  IntMatrix yf1 = seq_product_y(rd, y) * tw.frobenius_y() - IntMatrix::identity(rd.rank);
  return FiniteAbelianGroup::cokernel(hstack(yf1, f.y_wv.generator_matrix()));
}

std::vector<Int> CanonicalIso::source_class(const std::vector<Int>& source_coords) const {
  return quotient.coords(source.group.lift_coords(source_coords));
}

std::vector<Int> CanonicalIso::target_class(const std::vector<Int>& target_coords) const {
  return quotient.coords(target.group.lift_coords(target_coords));
}

std::vector<Int> CanonicalIso::forward(const std::vector<Int>& source_coords) const {
  return target.group.coords(source.group.lift_coords(source_coords));
}

CanonicalIso canonical_iso(const RootDatum& rd, const FrobeniusTwist& tw,
                           const SeqBarS& w, const SeqBarS& y, const SeqBarS& v) {
  CanonicalIso iso;
  iso.source = finite_torus(rd, tw, w);
  iso.target = finite_torus(rd, tw, y);
  // Presenting the common quotient with wF; by the lattice lemma the same
  // subgroup of Y results from yF, which is what makes target_class valid.
  iso.quotient = quotient_torus(rd, tw, w, v, w);
  return iso;
}

SeqBarS w_theta(const RootDatum& rd, const FrobeniusTwist& tw, const SeqBarS& w,
                const TorusCharacter& theta) {
  FiniteTorus t = finite_torus(rd, tw, w);
  if (!character_fits(t.group, theta))
    throw CharacterDomainMismatch("w_theta: character does not fit T^{wF}");
  CorootFrame f = coroot_frame(rd, w, w);
  SeqBarS out(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i)
    if (!theta.eval_coords(t.norm(f.beta_w[i])).is_zero()) out[i] = w[i];
  return out;
}

std::vector<SeqBarS> interval(const RootDatum& rd, const FrobeniusTwist& tw,
                              const SeqBarS& w, const TorusCharacter& theta) {
  return seq_interval(w_theta(rd, tw, w, theta), w);
}

TorusCharacter theta_on_y(const RootDatum& rd, const FrobeniusTwist& tw,
                          const SeqBarS& w, const TorusCharacter& theta,
                          const SeqBarS& y) {
  FiniteTorus tw_torus = finite_torus(rd, tw, w);
  if (!character_fits(tw_torus.group, theta))
    throw CharacterDomainMismatch("theta_on_y: character does not fit T^{wF}");
  SeqBarS wt = w_theta(rd, tw, w, theta);
  validate_seq(rd, y);
  if (!seq_leq(wt, y) || !seq_leq(y, w))
    throw NotInInterval("theta_on_y: y is not in I(w, theta) = [w_theta, w]");
  FiniteTorus ty_torus = finite_torus(rd, tw, y);

  TorusCharacter out;
  for (long i = 0; i < ty_torus.group.num_generators(); ++i) {
    std::vector<Int> e(static_cast<size_t>(ty_torus.group.num_generators()), Int(0));
    e[static_cast<size_t>(i)] = 1;
    out.values.push_back(theta.eval_coords(tw_torus.norm(ty_torus.group.lift_coords(e))));
  }

  // Well-definedness is a theorem (the norm kernels agree modulo Y_{w,w_theta});
  // verify the defining relation theta_y o N_y = theta o N_w on a basis of Y.
  internal_check(character_fits(ty_torus.group, out), "theta_on_y: transported character fits");
  for (long j = 0; j < rd.rank; ++j) {
    Vec e(static_cast<size_t>(rd.rank), Int(0));
    e[static_cast<size_t>(j)] = 1;
    internal_check(out.eval_coords(ty_torus.norm(e)) == theta.eval_coords(tw_torus.norm(e)),
                   "theta_on_y: defining relation");
  }
  return out;
}

bool same_invariants(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return a.invariant_factors() == b.invariant_factors();
}

// ---- component group of the torsor, in the injective-coroots cover --------

namespace {

// Classical adjugate via cofactors; inputs here are tiny (central rank).
IntMatrix adjugate(const IntMatrix& g) {
  long k = g.rows();
  IntMatrix adj(k, k);
  if (k == 0) return adj;
  if (k == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      IntMatrix minor(k - 1, k - 1);
      for (long r = 0, rr = 0; r < k; ++r) {
        if (r == i) continue;
        for (long c = 0, cc = 0; c < k; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = g.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;  // transposed cofactor
    }
  }
  return adj;
}

Int strip_prime(Int n, const Int& p) {
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace

FiniteAbelianGroup pi0_S(const RootDatum& rd, const FrobeniusTwist& tw,
                         const SeqBarS& w, const SeqBarS& v) {
  validate_seq(rd, w);
  validate_seq(rd, v);
  if (!seq_leq(v, w)) throw NotComparable("pi0_S: v is not componentwise below w");

  CorootsCover cover = injective_coroots_cover(rd, tw);
  const RootDatum& cd = cover.datum;
  long n = cd.rank;

  // The empty sequence describes the plain torus T^F; model it with a single
  // identity entry so the r-fold construction below applies uniformly.
  SeqBarS ww = w, vv = v;
  if (ww.empty()) {
    ww = {0};
    vv = {0};
  }
  long r = static_cast<long>(ww.size());
  long big = n * r;

  // The r-fold torus: (wF')(l_1, ..., l_r) = (m_1 l_2, ..., m_{r-1} l_r,
  // m_r q tau l_1), with m_i the reflection of the i-th entry in the cover.
  IntMatrix wf(big, big);
  for (long i = 0; i < r; ++i) {
    long e = ww[static_cast<size_t>(i)];
    IntMatrix blk = e == 0 ? IntMatrix::identity(n) : cd.simple_reflection_y(e - 1);
    if (i == r - 1) blk = blk * cover.twist.frobenius_y();
    long colblk = (i + 1) % r;
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) wf.at(i * n + a, colblk * n + b) = blk.at(a, b);
  }

  // The coroot subtorus: one cover coroot per difference position, placed in
  // its own copy.
  Sublattice sub = Sublattice::zero(big);
  for (long i : seq_diff_positions(ww, vv)) {
    Vec g(static_cast<size_t>(big), Int(0));
    const Vec& crt = cd.simple_coroot(ww[static_cast<size_t>(i)] - 1);
    for (long a = 0; a < n; ++a) g[static_cast<size_t>(i * n + a)] = crt[static_cast<size_t>(a)];
    sub.generators.push_back(g);
  }

  // Character lattice of the preimage: X' / (wF' - 1)^T (annihilator of the
  // subtorus); its torsion classes are the characters of the component group.
  IntMatrix ann = lattice_basis(annihilator(sub));
  IntMatrix moved = (wf.transpose() - IntMatrix::identity(big)) * ann;
  Sublattice b = Sublattice::from_columns(moved);
  Sublattice satb = saturation(b);
  IntMatrix pb = lattice_basis(satb);
  long m = pb.cols();
  if (m == 0) return FiniteAbelianGroup{};

  auto rel_opt = solve_matrix(pb, moved);
  internal_check(rel_opt.has_value(), "pi0_S: image inside its own saturation");
  FiniteAbelianGroup torsion = FiniteAbelianGroup::cokernel(*rel_opt);

  // Central-point conditions: the characters must also kill the diagonal
  // image of C^F. With K a basis of the central cokernel and G the matrix of
  // (F - 1) on it, C^F is generated by the columns of K G^{-1} modulo K, so a
  // character x survives iff <x, diag(K adj(G) e_j)> = 0 mod det(G).
  IntMatrix k = lattice_basis(cover.central_kernel);
  Int modulus = 1;
  std::vector<Vec> cond;  // diagonal lifts, one per central basis vector
  if (k.cols() > 0) {
    IntMatrix fk = (cover.twist.frobenius_y() - IntMatrix::identity(n)) * k;
    auto g_opt = solve_matrix(k, fk);
    internal_check(g_opt.has_value(), "pi0_S: Frobenius stabilizes the central kernel");
    IntMatrix kc = k * adjugate(*g_opt);
    modulus = g_opt->det();
    if (modulus < 0) modulus = -modulus;
    internal_check(modulus != 0, "pi0_S: F - 1 invertible on the central kernel");
    for (long j = 0; j < kc.cols(); ++j) {
      Vec d(static_cast<size_t>(big), Int(0));
      for (long i = 0; i < r; ++i)
        for (long a = 0; a < n; ++a) d[static_cast<size_t>(i * n + a)] = kc.at(a, j);
      cond.push_back(d);
    }
  }
  auto kills_central = [&](const Vec& x) {
    for (const Vec& d : cond)
      if (mod_euclid(dot(x, d), modulus) != 0) return false;
    return true;
  };
  // The filter must be constant on torsion classes; check it on the
  // relation generators.
  for (long j = 0; j < moved.cols(); ++j)
    internal_check(kills_central(moved.col(j)), "pi0_S: relations pair integrally with C^F");

  // Collect the surviving classes and present the subgroup they generate.
  std::vector<Vec> kept;
  for (const auto& c : torsion.elements()) {
    Vec lift = torsion.lift_coords(c);  // basis coordinates of sat(B)
    if (kills_central(pb.apply(lift))) kept.push_back(lift);
  }
  Sublattice inner{m, {}};
  for (long j = 0; j < rel_opt->cols(); ++j) inner.generators.push_back(rel_opt->col(j));
  Sublattice outer = inner;
  for (const Vec& x : kept) outer.generators.push_back(x);
  FiniteAbelianGroup pi = quotient_by(outer, inner);

  // On reduced points in characteristic p only the p'-part remains.
  std::vector<Int> stripped;
  for (const Int& d : pi.invariant_factors()) {
    Int dp = strip_prime(d, tw.p);
    if (dp > 1) stripped.push_back(dp);
  }
  std::sort(stripped.begin(), stripped.end());
  IntMatrix diag(static_cast<long>(stripped.size()), static_cast<long>(stripped.size()));
  for (size_t i = 0; i < stripped.size(); ++i)
    diag.at(static_cast<long>(i), static_cast<long>(i)) = stripped[i];
  return FiniteAbelianGroup::cokernel(diag);
}

}  // namespace finred
