#include "finred/embedding.hpp"

#include "finred/lattice.hpp"

namespace finred {

FrobeniusTwist dual_twist(const RootDatum& rd, const FrobeniusTwist& tw) {
  return make_twist(dual_datum(rd), tw.p, tw.a, tw.tau_x());
}

RegularEmbedding regular_embedding(const RootDatum& rd, const FrobeniusTwist& tw) {
  validate_twist(rd, tw);
  long n = rd.rank;
  auto s = smith_normal_form(rd.simple_root_matrix());
  IntMatrix tau_x = tw.tau_x();

  // Generator slots of Q = X/Z*Phi: one per nontrivial invariant factor and
  // one per free summand, in U-row order.
  std::vector<long> slots;  // row indices t of U
  std::vector<bool> is_torsion;
  for (long t = 0; t < s.rank; ++t)
    if (s.diag(t) > 1) {
      slots.push_back(t);
      is_torsion.push_back(true);
    }
  for (long t = s.rank; t < n; ++t) {
    slots.push_back(t);
    is_torsion.push_back(false);
  }
  long k_slots = static_cast<long>(slots.size());

  // Does tau permute the canonical generator classes g_t = [U^{-1} e_t]?
  // Column t of U * tau_X * U^{-1} is the class data of tau(g_t).
  IntMatrix z = s.U * tau_x * s.U_inv;
  std::vector<long> perm(static_cast<size_t>(k_slots), -1);
  bool primary_ok = true;
  for (long k = 0; k < k_slots && primary_ok; ++k) {
    Vec c = z.col(slots[static_cast<size_t>(k)]);
    for (long k2 = 0; k2 < k_slots; ++k2) {
      bool match = true;
      for (long j = 0; j < k_slots && match; ++j) {
        long row = slots[static_cast<size_t>(j)];
        Int want = (j == k2) ? 1 : 0;
        if (is_torsion[static_cast<size_t>(j)]) {
          if (mod_euclid(c[static_cast<size_t>(row)] - want, s.diag(row)) != 0) match = false;
        } else {
          if (c[static_cast<size_t>(row)] != want) match = false;
        }
      }
      if (match) {
        perm[static_cast<size_t>(k)] = k2;
        break;
      }
    }
    if (perm[static_cast<size_t>(k)] < 0) primary_ok = false;
  }
  if (primary_ok) {
    std::vector<bool> hit(static_cast<size_t>(k_slots), false);
    for (long k = 0; k < k_slots; ++k) {
      if (hit[static_cast<size_t>(perm[static_cast<size_t>(k)])]) primary_ok = false;
      hit[static_cast<size_t>(perm[static_cast<size_t>(k)])] = true;
    }
  }

  // Fiber product X~ = {(x, u) : class(x) = pi(u)} inside Z^{n + rank F}.
  Sublattice fiber{0, {}};
  IntMatrix tau_f;
  long f_rank = 0;
  if (primary_ok) {
    f_rank = k_slots;
    IntMatrix a(k_slots, n + f_rank);
    std::vector<Int> moduli;
    for (long k = 0; k < k_slots; ++k) {
      long t = slots[static_cast<size_t>(k)];
      for (long j = 0; j < n; ++j) a.at(k, j) = s.U.at(t, j);
      a.at(k, n + k) = -1;
      moduli.push_back(is_torsion[static_cast<size_t>(k)] ? s.diag(t) : Int(0));
    }
    fiber = kernel_mixed(a, moduli);
    tau_f = IntMatrix(f_rank, f_rank);
    for (long k = 0; k < k_slots; ++k) tau_f.at(perm[static_cast<size_t>(k)], k) = 1;
  } else {
    // Fallback cover F = X with pi the canonical projection; tau_F = tau_X is
    // equivariant by construction.
    f_rank = n;
    IntMatrix a(n, 2 * n);
    std::vector<Int> moduli;
    for (long t = 0; t < n; ++t) {
      for (long j = 0; j < n; ++j) {
        a.at(t, j) = s.U.at(t, j);
        a.at(t, n + j) = -s.U.at(t, j);
      }
      moduli.push_back(t < s.rank ? s.diag(t) : Int(0));
    }
    fiber = kernel_mixed(a, moduli);
    tau_f = tau_x;
  }

  IntMatrix basis = lattice_basis(fiber);  // (n + f_rank) x rank(X~)
  long nt = basis.cols();

  RootDatum out;
  out.rank = nt;
  out.simple = rd.simple;
  IntMatrix p(n, nt);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < nt; ++j) p.at(i, j) = basis.at(i, j);
  IntMatrix iota = p.transpose();

  for (long t = 0; t < rd.num_roots(); ++t) {
    Vec target(static_cast<size_t>(n + f_rank), Int(0));
    for (long i = 0; i < n; ++i) target[static_cast<size_t>(i)] = rd.roots[static_cast<size_t>(t)][static_cast<size_t>(i)];
    auto c = solve(basis, target);
    internal_check(c.has_value(), "root does not lie in the fiber product");
    out.roots.push_back(*c);
    out.coroots.push_back(iota.apply(rd.coroots[static_cast<size_t>(t)]));
  }

  // tau on X~ in fiber coordinates, then its inverse-transpose on Y~.
  IntMatrix big(n + f_rank, n + f_rank);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) big.at(i, j) = tau_x.at(i, j);
  for (long i = 0; i < f_rank; ++i)
    for (long j = 0; j < f_rank; ++j) big.at(n + i, n + j) = tau_f.at(i, j);
  auto mx = solve_matrix(basis, big * basis);
  internal_check(mx.has_value(), "tau does not stabilize the fiber product");
  auto mx_inv = solve_matrix(*mx, IntMatrix::identity(nt));
  internal_check(mx_inv.has_value(), "tau is not invertible on the fiber product");
  IntMatrix tau_y = mx_inv->transpose();

  RegularEmbedding emb;
  emb.datum = std::move(out);
  validate_root_datum(emb.datum);
  emb.twist = make_twist(emb.datum, tw.p, tw.a, tau_y);
  emb.inclusion = iota;
  emb.restriction = p;

  // Connected center, torsion-free inclusion cokernel, Frobenius
  // compatibility: all guaranteed by the construction, so their failure
  // would be a bug here rather than bad input.
  auto center = smith_normal_form(emb.datum.simple_root_matrix());
  for (long t = 0; t < center.rank; ++t)
    internal_check(center.diag(t) == 1, "fiber product has nonconnected center");
  internal_check((tau_y * iota) == (iota * tw.tau),
                 "inclusion does not intertwine the twists");
  return emb;
}

CorootsCover injective_coroots_cover(const RootDatum& rd, const FrobeniusTwist& tw) {
  auto emb = regular_embedding(dual_datum(rd), dual_twist(rd, tw));
  CorootsCover cover;
  cover.datum = dual_datum(emb.datum);
  cover.twist = dual_twist(emb.datum, emb.twist);
  cover.projection = emb.restriction;
  cover.central_kernel = kernel(cover.projection);

  internal_check((cover.projection * cover.twist.frobenius_y()) ==
                     (tw.frobenius_y() * cover.projection),
                 "cover projection does not intertwine the Frobenii");
  for (const auto& cv : cover.datum.coroots) {
    Int g = 0;
    for (const auto& x : cv) g = gcd_int(g, x);
    internal_check(g == 1, "cover coroot is not primitive");
  }
  return cover;
}

}  // namespace finred
