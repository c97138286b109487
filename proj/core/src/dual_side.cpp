#include "finred/series.hpp"

#include "finred/basics.hpp"
#include "finred/lattice.hpp"
#include "finred/snf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace finred {

namespace {

QZ pair_with(const Vec& coroot, const QZVec& s) {
  QZ acc;
  for (size_t i = 0; i < coroot.size(); ++i) acc = acc + coroot[i] * s[i];
  return acc;
}

void check_dual_element(const RootDatum& rd, const QZVec& s) {
  if (static_cast<long>(s.size()) != rd.rank)
    throw ValidationError("dual element has wrong rank");
}

// Y-side matrix of the reflection in the root/coroot pair at index c.
IntMatrix reflection_matrix(const RootDatum& rd, long c) {
  IntMatrix m = IntMatrix::identity(rd.rank);
  const Vec& root = rd.roots[static_cast<size_t>(c)];
  const Vec& coroot = rd.coroots[static_cast<size_t>(c)];
  for (long i = 0; i < rd.rank; ++i)
    for (long j = 0; j < rd.rank; ++j)
      m.at(i, j) = m.at(i, j) - coroot[static_cast<size_t>(i)] *
                                    root[static_cast<size_t>(j)];
  return m;
}

// Subgroup generated by the reflections of the given coroot indices.
std::vector<long> reflection_closure(const RootDatum& rd, const WeylGroup& wg,
                                     const std::vector<long>& roots) {
  std::set<long> gens;
  for (long c : roots) {
    long k = wg.index_of(reflection_matrix(rd, c));
    internal_check(k >= 0, "reflection outside the enumerated Weyl group");
    gens.insert(k);
  }
  std::set<long> closure{wg.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (long x : std::vector<long>(closure.begin(), closure.end()))
      for (long r : gens)
        if (closure.insert(wg.mul(x, r)).second) grew = true;
  }
  return std::vector<long>(closure.begin(), closure.end());
}

// The X-side action of the element at index x applied to a root vector.
Vec x_side_apply(const WeylGroup& wg, long x, const Vec& v) {
  const IntMatrix& m_inv = wg.at(wg.inverse(x)).m;
  Vec out(v.size(), Int(0));
  for (size_t j = 0; j < v.size(); ++j) {
    Int acc = 0;
    for (size_t k = 0; k < v.size(); ++k)
      acc += m_inv.at(static_cast<long>(k), static_cast<long>(j)) * v[k];
    out[j] = acc;
  }
  return out;
}

// The standard subsystem spanned by a subset of the simples: all roots whose
// simple-basis support lies inside it.
std::vector<long> standard_subsystem(const RootDatum& rd,
                                     const std::vector<long>& simples) {
  std::vector<long> out;
  for (long c = 0; c < rd.num_roots(); ++c) {
    Vec supp = rd.root_in_simple_basis(c);
    bool inside = true;
    for (long i = 0; i < rd.num_simple(); ++i) {
      if (supp[static_cast<size_t>(i)] == 0) continue;
      if (std::find(simples.begin(), simples.end(), i) == simples.end())
        inside = false;
    }
    if (inside) out.push_back(c);
  }
  return out;
}

std::vector<Int> sorted_union(std::set<Int> primes) {
  return std::vector<Int>(primes.begin(), primes.end());
}

}  // namespace

StabilizerData centralizer_data(const RootDatum& rd, const QZVec& s) {
  check_dual_element(rd, s);
  StabilizerData out;
  for (long c = 0; c < rd.num_roots(); ++c)
    if (pair_with(rd.coroots[static_cast<size_t>(c)], s) == QZ())
      out.phi_dual.push_back(c);
  WeylGroup wg = WeylGroup::enumerate(rd);
  for (long x = 0; x < wg.size(); ++x) {
    const IntMatrix& m_inv = wg.at(wg.inverse(x)).m;
    bool fixes = true;
    for (long j = 0; j < rd.rank; ++j) {
      QZ acc;
      for (long k = 0; k < rd.rank; ++k)
        acc = acc + m_inv.at(k, j) * s[static_cast<size_t>(k)];
      if (!(acc == s[static_cast<size_t>(j)])) fixes = false;
    }
    if (fixes) out.w_full.push_back(x);
  }
  out.w_connected = reflection_closure(rd, wg, out.phi_dual);
  for (long x : out.w_connected)
    internal_check(std::binary_search(out.w_full.begin(), out.w_full.end(), x),
                   "reflection subgroup leaks out of the stabilizer");
  out.connected = out.w_connected.size() == out.w_full.size();
  return out;
}

std::vector<LeviSubsystem> levi_subsystems(const RootDatum& rd) {
  if (rd.num_simple() > 4)
    throw CapExceeded("levi_subsystems: semisimple rank capped at 4");
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::set<std::vector<long>> seen;
  long ns = rd.num_simple();
  for (long mask = 0; mask < (1L << ns); ++mask) {
    std::vector<long> simples;
    for (long i = 0; i < ns; ++i)
      if (mask & (1L << i)) simples.push_back(i);
    std::vector<long> base = standard_subsystem(rd, simples);
    for (long x = 0; x < wg.size(); ++x) {
      std::vector<long> image;
      for (long c : base) {
        long idx = rd.root_index(
            x_side_apply(wg, x, rd.roots[static_cast<size_t>(c)]));
        internal_check(idx >= 0, "Weyl image is not a root");
        image.push_back(idx);
      }
      std::sort(image.begin(), image.end());
      seen.insert(image);
    }
  }
  std::vector<LeviSubsystem> out;
  for (const std::vector<long>& v : seen) out.push_back(LeviSubsystem{v});
  std::sort(out.begin(), out.end(),
            [](const LeviSubsystem& a, const LeviSubsystem& b) {
              return std::make_pair(a.root_indices.size(), a.root_indices) <
                     std::make_pair(b.root_indices.size(), b.root_indices);
            });
  return out;
}

LeviSubsystem minimal_levi(const RootDatum& rd, const QZVec& s) {
  StabilizerData cd = centralizer_data(rd, s);
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::vector<LeviSubsystem> candidates;
  for (const LeviSubsystem& l : levi_subsystems(rd)) {
    bool contains_roots = true;
    for (long c : cd.phi_dual)
      if (!std::binary_search(l.root_indices.begin(), l.root_indices.end(), c))
        contains_roots = false;
    if (!contains_roots) continue;
    std::vector<long> wl = reflection_closure(rd, wg, l.root_indices);
    bool contains_stab = true;
    for (long x : cd.w_full)
      if (!std::binary_search(wl.begin(), wl.end(), x)) contains_stab = false;
    if (contains_stab) candidates.push_back(l);
  }
  internal_check(!candidates.empty(), "no Levi subsystem contains the stabilizer");
  size_t least = candidates[0].root_indices.size();  // sorted by size already
  long count = 0;
  for (const LeviSubsystem& l : candidates)
    if (l.root_indices.size() == least) ++count;
  internal_check(count == 1, "minimal Levi overgroup is not unique");
  return candidates[0];
}

bool is_quasi_isolated(const RootDatum& rd, const QZVec& s) {
  return static_cast<long>(minimal_levi(rd, s).root_indices.size()) ==
         rd.num_roots();
}

JordanDatum jordan_datum(const RootDatum& rd, const FrobeniusTwist& tw,
                         const DualSS& s) {
  check_dual_element(rd, s.s);
  IntMatrix wf = s.fixing_w.m * tw.tau;
  for (long j = 0; j < rd.rank; ++j) {
    QZ acc;
    for (long i = 0; i < rd.rank; ++i)
      acc = acc + (tw.q() * wf.at(i, j)) * s.s[static_cast<size_t>(i)];
    if (!(acc == s.s[static_cast<size_t>(j)]))
      throw ValidationError(
          "jordan_datum: s is not fixed by the twisted Frobenius of fixing_w");
  }

  JordanDatum out;
  out.obstruction_primes = pi_set(rd, tw);
  StabilizerData cd = centralizer_data(rd, s.s);
  if (!cd.connected) {
    out.obstruction = "centralizer of s is disconnected";
    return out;
  }

  // Look for a Weyl element carrying the centralizer's root system onto a
  // standard subsystem whose twisted Frobenius v' phi stabilizes its simples.
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::vector<long> want = cd.phi_dual;  // sorted by construction
  bool standardizable = false;
  for (long x = 0; x < wg.size(); ++x) {
    long xi = wg.inverse(x);
    std::vector<long> image;
    for (long c : want)
      image.push_back(rd.root_index(
          x_side_apply(wg, xi, rd.roots[static_cast<size_t>(c)])));
    std::sort(image.begin(), image.end());
    std::vector<long> simples;
    for (long i = 0; i < rd.num_simple(); ++i)
      if (std::binary_search(image.begin(), image.end(), rd.simple[static_cast<size_t>(i)]))
        simples.push_back(i);
    if (standard_subsystem(rd, simples) != image) continue;
    standardizable = true;
    long w_idx = wg.index_of(s.fixing_w.m);
    internal_check(w_idx >= 0, "fixing element outside the Weyl group");
    long v_prime = wg.index_of(wg.at(xi).m * wg.at(w_idx).m * tw.tau *
                               wg.at(x).m * tw.tau_inverse());
    internal_check(v_prime >= 0, "twisted conjugate escapes the Weyl group");
    // v' phi must permute the simple roots of I'.
    std::optional<IntMatrix> inv = solve_matrix(
        wg.at(v_prime).m * tw.tau, IntMatrix::identity(rd.rank));
    internal_check(inv.has_value(), "twist matrix is not invertible");
    bool stabilizes = true;
    for (long i : simples) {
      const Vec& alpha = rd.simple_root(i);
      Vec img(alpha.size(), Int(0));
      for (size_t j = 0; j < alpha.size(); ++j) {
        Int acc = 0;
        for (size_t k = 0; k < alpha.size(); ++k)
          acc += inv->at(static_cast<long>(k), static_cast<long>(j)) * alpha[k];
        img[j] = acc;
      }
      bool found = false;
      for (long jj : simples)
        if (rd.simple_root(jj) == img) found = true;
      if (!found) stabilizes = false;
    }
    if (!stabilizes) continue;
    out.is_levi = true;
    out.levi_simples = simples;
    out.v_prime = v_prime;
    out.conjugator = x;
    return out;
  }
  internal_check(!standardizable,
                 "standard subsystem found but no stable twist representative");
  out.obstruction = "s is isolated: its centralizer is not a Levi subgroup";
  return out;
}

Pair jordan_push(const RootDatum& rd, const FrobeniusTwist& tw,
                 const JordanDatum& jd, const SeqPair& levi_pair) {
  if (!jd.is_levi)
    throw ValidationError("jordan_push: no Levi datum (" + jd.obstruction + ")");
  for (long e : levi_pair.w) {
    if (e == 0) continue;
    if (std::find(jd.levi_simples.begin(), jd.levi_simples.end(), e - 1) ==
        jd.levi_simples.end())
      throw ValidationError(
          "jordan_push: sequence entry outside the Levi's simple reflections");
  }
  validate_seq(rd, levi_pair.w);
  WeylGroup wg = WeylGroup::enumerate(rd);
  long composite = wg.index_of(seq_product_y(rd, levi_pair.w) *
                               wg.at(jd.v_prime).m);
  internal_check(composite >= 0, "composite element escapes the Weyl group");
  SeqBarS word;
  for (long i : wg.at(composite).word) word.push_back(i + 1);
  FiniteTorus tc = finite_torus(rd, tw, word);
  if (!character_fits(tc.group, levi_pair.theta))
    throw ValidationError(
        "jordan_push: character does not live on the composite torus");
  return Pair{wg.at(composite), levi_pair.theta};
}

std::vector<Int> bad_primes(const RootDatum& rd) {
  long ns = rd.num_simple();
  if (ns == 0) return {};
  // Components of the Cartan graph.
  IntMatrix cartan = rd.cartan();
  std::vector<long> comp(static_cast<size_t>(ns), -1);
  long ncomp = 0;
  for (long i = 0; i < ns; ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    std::vector<long> stack{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      long u = stack.back();
      stack.pop_back();
      for (long v = 0; v < ns; ++v)
        if (cartan.at(u, v) != 0 && comp[static_cast<size_t>(v)] < 0) {
          comp[static_cast<size_t>(v)] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  // Highest root of each component; its coefficients carry the bad primes.
  std::vector<Vec> highest(static_cast<size_t>(ncomp));
  std::vector<Int> height(static_cast<size_t>(ncomp), Int(-1));
  for (long c = 0; c < rd.num_roots(); ++c) {
    Vec coeffs = rd.root_in_simple_basis(c);
    long home = -1;
    Int h = 0;
    for (long i = 0; i < ns; ++i) {
      if (coeffs[static_cast<size_t>(i)] == 0) continue;
      home = comp[static_cast<size_t>(i)];
      h += coeffs[static_cast<size_t>(i)];
    }
    internal_check(home >= 0, "root with empty support");
    if (h > height[static_cast<size_t>(home)]) {
      height[static_cast<size_t>(home)] = h;
      highest[static_cast<size_t>(home)] = coeffs;
    }
  }
  std::set<Int> primes;
  for (const Vec& coeffs : highest)
    for (const Int& c : coeffs)
      if (c > 1)
        for (const Int& p : prime_factors(c)) primes.insert(p);
  return sorted_union(std::move(primes));
}

std::vector<Int> pi_set(const RootDatum& rd, const FrobeniusTwist& tw) {
  validate_twist(rd, tw);
  std::set<Int> primes;
  for (const Int& p : bad_primes(rd)) primes.insert(p);
  if (rd.num_simple() > 0) {
    // Torsion of X / Z*Phi, the component group of the center.
    SnfDecomposition snf = smith_normal_form(rd.simple_root_matrix());
    for (long i = 0; i < snf.rank; ++i) {
      Int d = snf.diag(i);
      if (d < 0) d = -d;
      if (d > 1)
        for (const Int& p : prime_factors(d)) primes.insert(p);
    }
  }
  return sorted_union(std::move(primes));
}

}  // namespace finred
