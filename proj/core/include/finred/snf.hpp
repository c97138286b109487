#pragma once

// Smith normal form over Z with recorded unimodular transforms:
//   U * M * V = D,  D diagonal with nonnegative entries and d1 | d2 | ...
//
// The pivot rule is fixed (smallest nonzero absolute value, then lexicographic
// row-major position) so the decomposition is reproducible across runs.

#include "finred/matrix.hpp"

namespace finred {

struct SnfDecomposition {
  IntMatrix U, V;        // unimodular
  IntMatrix U_inv, V_inv;
  IntMatrix D;           // diagonal, nonnegative, divisibility chain
  long rank = 0;         // number of nonzero diagonal entries

  Int diag(long t) const {
    return (t < D.rows() && t < D.cols()) ? D.at(t, t) : Int(0);
  }
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace finred
