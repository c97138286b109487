#include "finred/snf.hpp"

namespace finred {

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  long r = m.rows(), c = m.cols();
  SnfDecomposition s;
  s.U = IntMatrix::identity(r);
  s.U_inv = IntMatrix::identity(r);
  s.V = IntMatrix::identity(c);
  s.V_inv = IntMatrix::identity(c);
  s.D = m;
  IntMatrix& D = s.D;

  // Elementary ops, mirrored into the transforms. Row ops multiply U on the
  // left and U_inv by the inverse op on the right; column ops multiply V on
  // the right and V_inv by the inverse op on the left.
  auto swap_rows = [&](long i, long j) {
    if (i == j) return;
    for (long t = 0; t < c; ++t) std::swap(D.at(i, t), D.at(j, t));
    for (long t = 0; t < r; ++t) std::swap(s.U.at(i, t), s.U.at(j, t));
    for (long t = 0; t < r; ++t) std::swap(s.U_inv.at(t, i), s.U_inv.at(t, j));
  };
  auto swap_cols = [&](long i, long j) {
    if (i == j) return;
    for (long t = 0; t < r; ++t) std::swap(D.at(t, i), D.at(t, j));
    for (long t = 0; t < c; ++t) std::swap(s.V.at(t, i), s.V.at(t, j));
    for (long t = 0; t < c; ++t) std::swap(s.V_inv.at(i, t), s.V_inv.at(j, t));
  };
  auto add_row = [&](long dst, long src, const Int& k) {  // row dst += k * row src
    if (k == 0) return;
    for (long t = 0; t < c; ++t) D.at(dst, t) += k * D.at(src, t);
    for (long t = 0; t < r; ++t) s.U.at(dst, t) += k * s.U.at(src, t);
    for (long t = 0; t < r; ++t) s.U_inv.at(t, src) -= k * s.U_inv.at(t, dst);
  };
  auto add_col = [&](long dst, long src, const Int& k) {  // col dst += k * col src
    if (k == 0) return;
    for (long t = 0; t < r; ++t) D.at(t, dst) += k * D.at(t, src);
    for (long t = 0; t < c; ++t) s.V.at(t, dst) += k * s.V.at(t, src);
    for (long t = 0; t < c; ++t) s.V_inv.at(src, t) -= k * s.V_inv.at(dst, t);
  };
  auto negate_row = [&](long i) {
    for (long t = 0; t < c; ++t) D.at(i, t) = -D.at(i, t);
    for (long t = 0; t < r; ++t) s.U.at(i, t) = -s.U.at(i, t);
    for (long t = 0; t < r; ++t) s.U_inv.at(t, i) = -s.U_inv.at(t, i);
  };

  long kmax = std::min(r, c);
  long t = 0;
  for (; t < kmax; ++t) {
    bool block_empty = false;
    while (true) {
      // Pivot: smallest nonzero |entry| in the trailing block, first position
      // in row-major order on ties. Fixed so runs are reproducible.
      long pi = -1, pj = -1;
      Int best = 0;
      for (long i = t; i < r; ++i)
        for (long j = t; j < c; ++j) {
          const Int& x = D.at(i, j);
          if (x == 0) continue;
          Int ax = x < 0 ? -x : x;
          if (pi < 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        block_empty = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (long i = t + 1; i < r; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);  // truncated: |remainder| < |pivot|
        add_row(i, t, -q);
        if (D.at(i, t) != 0) dirty = true;
      }
      for (long j = t + 1; j < c; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        add_col(j, t, -q);
        if (D.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Row and column t are clear; force the pivot to divide the rest of the
      // block by folding in an offending row, which shrinks the pivot.
      bool fixed = false;
      for (long i = t + 1; i < r && !fixed; ++i)
        for (long j = t + 1; j < c && !fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (block_empty) break;
    if (D.at(t, t) < 0) negate_row(t);
  }
  s.rank = t;

  internal_check((s.U * m * s.V) == s.D, "snf: transforms do not reproduce D");
  internal_check((s.U * s.U_inv).is_identity(), "snf: U inverse is wrong");
  internal_check((s.V * s.V_inv).is_identity(), "snf: V inverse is wrong");
  return s;
}

}  // namespace finred
