#include "finred/lattice.hpp"

namespace finred {

Sublattice Sublattice::full(long n) {
  Sublattice s{n, {}};
  for (long i = 0; i < n; ++i) {
    Vec e(static_cast<size_t>(n), Int(0));
    e[static_cast<size_t>(i)] = 1;
    s.generators.push_back(std::move(e));
  }
  return s;
}

Sublattice Sublattice::from_columns(const IntMatrix& m) {
  Sublattice s{m.rows(), {}};
  for (long j = 0; j < m.cols(); ++j) s.generators.push_back(m.col(j));
  return s;
}

IntMatrix Sublattice::generator_matrix() const {
  return IntMatrix::from_columns(ambient_rank, generators);
}

IntMatrix lattice_basis(const Sublattice& s) {
  IntMatrix g = s.generator_matrix();
  auto snf = smith_normal_form(g);
  // G * V has exactly `rank` nonzero columns, and they span the same lattice.
  IntMatrix gv = g * snf.V;
  IntMatrix basis(g.rows(), snf.rank);
  for (long j = 0; j < snf.rank; ++j)
    for (long i = 0; i < g.rows(); ++i) basis.at(i, j) = gv.at(i, j);
  return basis;
}

long lattice_rank(const Sublattice& s) {
  return smith_normal_form(s.generator_matrix()).rank;
}

Sublattice sublattice_sum(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank != b.ambient_rank)
    throw ValidationError("sublattice_sum: ambient rank mismatch");
  Sublattice cat{a.ambient_rank, a.generators};
  cat.generators.insert(cat.generators.end(), b.generators.begin(), b.generators.end());
  return Sublattice::from_columns(lattice_basis(cat));
}

std::optional<Vec> solve(const IntMatrix& a, const Vec& b) {
  if (static_cast<long>(b.size()) != a.rows())
    throw ValidationError("solve: right-hand side length mismatch");
  auto s = smith_normal_form(a);
  Vec z = s.U.apply(b);
  Vec c(static_cast<size_t>(a.cols()), Int(0));
  for (long t = 0; t < a.rows(); ++t) {
    if (t < s.rank) {
      if (z[static_cast<size_t>(t)] % s.diag(t) != 0) return std::nullopt;
      if (t < a.cols()) c[static_cast<size_t>(t)] = z[static_cast<size_t>(t)] / s.diag(t);
    } else if (z[static_cast<size_t>(t)] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(c);
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("solve_matrix: row count mismatch");
  IntMatrix x(a.cols(), b.cols());
  for (long j = 0; j < b.cols(); ++j) {
    auto c = solve(a, b.col(j));
    if (!c) return std::nullopt;
    for (long i = 0; i < a.cols(); ++i) x.at(i, j) = (*c)[static_cast<size_t>(i)];
  }
  return x;
}

bool lattice_member(const Vec& v, const Sublattice& s) {
  if (static_cast<long>(v.size()) != s.ambient_rank)
    throw ValidationError("lattice_member: vector length mismatch");
  return solve(s.generator_matrix(), v).has_value();
}

bool lattice_contains(const Sublattice& outer, const Sublattice& inner) {
  if (outer.ambient_rank != inner.ambient_rank)
    throw ValidationError("lattice_contains: ambient rank mismatch");
  for (const auto& g : inner.generators)
    if (!lattice_member(g, outer)) return false;
  return true;
}

bool lattice_equal(const Sublattice& a, const Sublattice& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

Sublattice saturation(const Sublattice& s) {
  auto snf = smith_normal_form(s.generator_matrix());
  // Q-span meets Z^n in the span of the first `rank` columns of U^{-1}.
  Sublattice out{s.ambient_rank, {}};
  for (long t = 0; t < snf.rank; ++t) out.generators.push_back(snf.U_inv.col(t));
  return out;
}

Sublattice annihilator(const Sublattice& s) {
  return kernel(s.generator_matrix().transpose());
}

Sublattice kernel(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  Sublattice out{a.cols(), {}};
  for (long t = s.rank; t < a.cols(); ++t) out.generators.push_back(s.V.col(t));
  return out;
}

Sublattice kernel_mixed(const IntMatrix& a, const std::vector<Int>& moduli) {
  if (static_cast<long>(moduli.size()) != a.rows())
    throw ValidationError("kernel_mixed: one modulus per row required");
  IntMatrix slack(a.rows(), a.rows());
  for (long i = 0; i < a.rows(); ++i) slack.at(i, i) = moduli[static_cast<size_t>(i)];
  Sublattice k = kernel(hstack(a, slack));
  Sublattice out{a.cols(), {}};
  for (const auto& g : k.generators) {
    Vec x(g.begin(), g.begin() + a.cols());
    bool zero = true;
    for (const auto& xi : x)
      if (xi != 0) zero = false;
    if (!zero) out.generators.push_back(std::move(x));
  }
  return Sublattice::from_columns(lattice_basis(out));
}

Int lattice_index(const Sublattice& outer, const Sublattice& inner) {
  IntMatrix p = lattice_basis(outer);
  IntMatrix q = lattice_basis(inner);
  if (p.cols() != q.cols())
    throw InfiniteCokernel("lattice_index: ranks differ, index is infinite");
  IntMatrix coords(p.cols(), q.cols());
  for (long j = 0; j < q.cols(); ++j) {
    auto c = solve(p, q.col(j));
    if (!c) throw NotContained("lattice_index: inner lattice not inside outer");
    for (long i = 0; i < p.cols(); ++i) coords.at(i, j) = (*c)[static_cast<size_t>(i)];
  }
  Int d = coords.det();
  return d < 0 ? -d : d;
}

FiniteAbelianGroup quotient_by(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank != b.ambient_rank)
    throw ValidationError("quotient_by: ambient rank mismatch");
  IntMatrix p = lattice_basis(a);
  IntMatrix rel(p.cols(), static_cast<long>(b.generators.size()));
  for (size_t j = 0; j < b.generators.size(); ++j) {
    auto c = solve(p, b.generators[j]);
    if (!c) throw NotContained("quotient_by: second lattice not inside the first");
    for (long i = 0; i < p.cols(); ++i) rel.at(i, static_cast<long>(j)) = (*c)[static_cast<size_t>(i)];
  }
  return FiniteAbelianGroup::cokernel(rel);
}

}  // namespace finred
