#include "finred/series.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace finred {

namespace {

SeqBarS word_seq(const WeylElement& e) {
  SeqBarS w;
  for (long i : e.word) w.push_back(i + 1);
  return w;
}

Vec basis_vec(long n, long j) {
  Vec v(static_cast<size_t>(n), Int(0));
  v[static_cast<size_t>(j)] = 1;
  return v;
}

// phi(x) = tau x tau^{-1}, the diagram twist acting on Weyl elements.
long phi_of(const WeylGroup& wg, const FrobeniusTwist& tw, long x) {
  long k = wg.index_of(tw.tau * wg.at(x).m * tw.tau_inverse());
  internal_check(k >= 0, "diagram twist does not normalize the Weyl group");
  return k;
}

void check_theta_fits(const FiniteTorus& t, const TorusCharacter& theta,
                      const char* where) {
  if (!character_fits(t.group, theta))
    throw CharacterDomainMismatch(std::string(where) +
                                  ": character does not live on T^{wF}");
}

// theta o x^{-1} as a character of T^{x w phi(x)^{-1} F}, evaluated on the
// generators of the target presentation.
TorusCharacter transport_character(const WeylGroup& wg, const FiniteTorus& src,
                                   const FiniteTorus& dst,
                                   const TorusCharacter& theta, long x) {
  const IntMatrix& mx_inv = wg.at(wg.inverse(x)).m;
  TorusCharacter out;
  for (long i = 0; i < dst.group.num_generators(); ++i) {
    std::vector<Int> ei(static_cast<size_t>(dst.group.num_generators()),
                        Int(0));
    ei[static_cast<size_t>(i)] = 1;
    out.values.push_back(
        theta.eval_coords(src.group.coords(mx_inv.apply(dst.group.lift_coords(ei)))));
  }
  internal_check(character_fits(dst.group, out),
                 "transported character does not fit the target torus");
  return out;
}

std::string values_key(const QZVec& v) { return qzvec_to_string(v); }

std::string seq_key(const SeqBarS& w) {
  std::string k;
  for (long e : w) k += std::to_string(e) + ".";
  return k;
}

// Shared context for the conjugacy machinery over one datum.
struct Grid {
  WeylGroup wg;
  std::vector<FiniteTorus> tori;

  Grid(const RootDatum& rd, const FrobeniusTwist& tw)
      : wg(WeylGroup::enumerate(rd)) {
    for (long k = 0; k < wg.size(); ++k)
      tori.push_back(finite_torus(rd, tw, word_seq(wg.at(k))));
  }

  const FiniteTorus& torus_of(const WeylElement& w) const {
    long k = wg.index_of(w.m);
    internal_check(k >= 0, "Weyl element outside the enumerated group");
    return tori[static_cast<size_t>(k)];
  }
};

QZVec dual_of(const RootDatum& rd, const FiniteTorus& t,
              const TorusCharacter& theta) {
  QZVec s;
  for (long j = 0; j < rd.rank; ++j)
    s.push_back(theta.eval_coords(t.norm(basis_vec(rd.rank, j))));
  return s;
}

// The lexicographically least Weyl translate of s under the transpose action.
std::string orbit_key(const WeylGroup& wg, const QZVec& s) {
  QZVec best = s;
  for (long x = 0; x < wg.size(); ++x) {
    const IntMatrix& m_inv = wg.at(wg.inverse(x)).m;
    QZVec t;
    for (long j = 0; j < m_inv.cols(); ++j) {
      QZ acc;
      for (long k = 0; k < m_inv.rows(); ++k)
        acc = acc + m_inv.at(k, j) * s[static_cast<size_t>(k)];
      t.push_back(acc);
    }
    if (qzvec_less(t, best)) best = t;
  }
  return values_key(best);
}

// The set of Weyl-orbit keys of the dual elements of all extensions of p to
// the regular embedding: the rational-conjugacy invariant of p.  Two pairs
// are rationally conjugate exactly when the sets meet (equivalently, when
// they are equal: the extensions form a torsor under Weyl-invariant
// translations).
std::set<std::string> extension_orbit_keys(const RootDatum& rd,
                                           const FrobeniusTwist& tw,
                                           const RegularEmbedding& emb,
                                           const WeylGroup& big_wg,
                                           const Pair& p) {
  std::set<std::string> keys;
  FiniteTorus big = finite_torus(emb.datum, emb.twist, word_seq(p.w));
  for (const TorusCharacter& ext : character_extensions(rd, tw, emb, p))
    keys.insert(orbit_key(big_wg, dual_of(emb.datum, big, ext)));
  return keys;
}

std::string keyset_string(const std::set<std::string>& keys) {
  std::string out;
  for (const std::string& k : keys) out += k + "#";
  return out;
}

bool pair_less(const Pair& a, const Pair& b) {
  return std::make_tuple(a.w.length(), a.w.word, values_key(a.theta.values)) <
         std::make_tuple(b.w.length(), b.w.word, values_key(b.theta.values));
}

// Assemble SeriesId blocks from a key for every pair, in first-encounter
// order of the keys.
std::vector<SeriesId> blocks_from_keys(const RootDatum& rd,
                                       const FrobeniusTwist& tw,
                                       const std::vector<Pair>& pairs,
                                       const std::vector<std::string>& keys) {
  std::map<std::string, size_t> index;
  std::vector<SeriesId> blocks;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto it = index.find(keys[i]);
    if (it == index.end()) {
      index.emplace(keys[i], blocks.size());
      blocks.push_back(SeriesId{});
      it = index.find(keys[i]);
    }
    blocks[it->second].members.push_back(pairs[i]);
  }
  Grid g(rd, tw);
  for (SeriesId& b : blocks) {
    b.representative = *std::min_element(b.members.begin(), b.members.end(),
                                         pair_less);
    std::vector<Pair> mins = minimal_pairs(rd, tw, b);
    long wk = g.wg.index_of(mins[0].w.m);
    long best = g.wg.size();
    for (long x = 0; x < g.wg.size(); ++x)
      best = std::min(best, g.wg.mul(g.wg.mul(x, wk),
                                     g.wg.inverse(phi_of(g.wg, tw, x))));
    b.minimal_f_class = best;
  }
  return blocks;
}

}  // namespace

std::vector<Pair> all_pairs(const RootDatum& rd, const FrobeniusTwist& tw) {
  Grid g(rd, tw);
  std::vector<Pair> out;
  for (long k = 0; k < g.wg.size(); ++k)
    for (const TorusCharacter& theta :
         hom_group_elements(g.tori[static_cast<size_t>(k)].group))
      out.push_back(Pair{g.wg.at(k), theta});
  return out;
}

DualSS dual_ss(const RootDatum& rd, const FrobeniusTwist& tw, const Pair& p) {
  FiniteTorus t = finite_torus(rd, tw, word_seq(p.w));
  check_theta_fits(t, p.theta, "dual_ss");
  return DualSS{dual_of(rd, t, p.theta), p.w};
}

TorusCharacter character_of_dual(const RootDatum& rd, const FrobeniusTwist& tw,
                                 const WeylElement& w, const QZVec& s) {
  if (static_cast<long>(s.size()) != rd.rank)
    throw ValidationError("character_of_dual: dual element has wrong rank");
  // s must be fixed by the transpose action of wF.
  IntMatrix wf = w.m * tw.tau;
  for (long j = 0; j < rd.rank; ++j) {
    QZ acc;
    for (long i = 0; i < rd.rank; ++i)
      acc = acc + (tw.q() * wf.at(i, j)) * s[static_cast<size_t>(i)];
    if (!(acc == s[static_cast<size_t>(j)]))
      throw ValidationError(
          "character_of_dual: s is not fixed by the twisted Frobenius");
  }
  FiniteTorus t = finite_torus(rd, tw, word_seq(w));
  TorusCharacter chi;
  for (long i = 0; i < t.group.num_generators(); ++i) {
    std::vector<Int> ei(static_cast<size_t>(t.group.num_generators()), Int(0));
    ei[static_cast<size_t>(i)] = 1;
    Vec lift = t.group.lift_coords(ei);
    QZ acc;
    for (long k = 0; k < rd.rank; ++k)
      acc = acc + lift[static_cast<size_t>(k)] * s[static_cast<size_t>(k)];
    chi.values.push_back(acc);
  }
  internal_check(character_fits(t.group, chi),
                 "dual element does not define a character of T^{wF}");
  return chi;
}

QZVec dual_weyl_apply(const WeylElement& x, const QZVec& s) {
  std::optional<IntMatrix> inv =
      solve_matrix(x.m, IntMatrix::identity(x.m.rows()));
  internal_check(inv.has_value(), "Weyl matrix is not invertible");
  QZVec out;
  for (long j = 0; j < inv->cols(); ++j) {
    QZ acc;
    for (long k = 0; k < inv->rows(); ++k)
      acc = acc + inv->at(k, j) * s[static_cast<size_t>(k)];
    out.push_back(acc);
  }
  return out;
}

bool geometrically_conjugate(const RootDatum& rd, const FrobeniusTwist& tw,
                             const Pair& a, const Pair& b) {
  Grid g(rd, tw);
  const FiniteTorus& ta = g.torus_of(a.w);
  const FiniteTorus& tb = g.torus_of(b.w);
  check_theta_fits(ta, a.theta, "geometrically_conjugate");
  check_theta_fits(tb, b.theta, "geometrically_conjugate");

  // Work on the split torus T^{F^d} = Y/(q^d - 1)Y; the norm down to T^{wF}
  // is induced by the identity of Y, so theta o N is evaluation of theta on
  // the cokernel class.  Conjugacy is then Weyl-translation of characters.
  long d = splitting_exponent(g.wg, tw);
  Int qd1 = pow_int(tw.q(), d) - 1;
  FiniteAbelianGroup split =
      FiniteAbelianGroup::cokernel(qd1 * IntMatrix::identity(rd.rank));
  std::vector<Vec> gens;
  for (long i = 0; i < split.num_generators(); ++i) {
    std::vector<Int> ei(static_cast<size_t>(split.num_generators()), Int(0));
    ei[static_cast<size_t>(i)] = 1;
    gens.push_back(split.lift_coords(ei));
  }
  for (long x = 0; x < g.wg.size(); ++x) {
    const IntMatrix& mx_inv = g.wg.at(g.wg.inverse(x)).m;
    bool match = true;
    for (const Vec& lam : gens) {
      QZ lhs = a.theta.eval_coords(ta.norm(mx_inv.apply(lam)));
      QZ rhs = b.theta.eval_coords(tb.norm(lam));
      if (!(lhs == rhs)) match = false;
    }
    if (match) return true;
  }
  return false;
}

bool geometrically_conjugate_dual(const RootDatum& rd,
                                  const FrobeniusTwist& tw, const Pair& a,
                                  const Pair& b) {
  WeylGroup wg = WeylGroup::enumerate(rd);
  return orbit_key(wg, dual_ss(rd, tw, a).s) ==
         orbit_key(wg, dual_ss(rd, tw, b).s);
}

std::vector<TorusCharacter> character_extensions(const RootDatum& rd,
                                                 const FrobeniusTwist& tw,
                                                 const RegularEmbedding& emb,
                                                 const Pair& p) {
  SeqBarS w = word_seq(p.w);
  FiniteTorus t = finite_torus(rd, tw, w);
  FiniteTorus big = finite_torus(emb.datum, emb.twist, w);
  check_theta_fits(t, p.theta, "character_extensions");

  // Images in the big torus of the generators of T^{wF}.
  std::vector<std::vector<Int>> images;
  for (long i = 0; i < t.group.num_generators(); ++i) {
    std::vector<Int> ei(static_cast<size_t>(t.group.num_generators()), Int(0));
    ei[static_cast<size_t>(i)] = 1;
    images.push_back(big.group.coords(emb.inclusion.apply(t.group.lift_coords(ei))));
  }
  std::vector<TorusCharacter> out;
  for (const TorusCharacter& ext : hom_group_elements(big.group)) {
    bool restricts = true;
    for (size_t i = 0; i < images.size(); ++i)
      if (!(ext.eval_coords(images[i]) == p.theta.values[i])) restricts = false;
    if (restricts) out.push_back(ext);
  }
  internal_check(!out.empty(), "a torus character admits no extension");
  return out;
}

bool rationally_conjugate(const RootDatum& rd, const FrobeniusTwist& tw,
                          const Pair& a, const Pair& b) {
  RegularEmbedding emb = regular_embedding(rd, tw);
  WeylGroup big_wg = WeylGroup::enumerate(emb.datum);
  std::set<std::string> ka = extension_orbit_keys(rd, tw, emb, big_wg, a);
  std::set<std::string> kb = extension_orbit_keys(rd, tw, emb, big_wg, b);
  for (const std::string& k : ka)
    if (kb.count(k)) return true;
  return false;
}

std::vector<SeriesId> series_partition(const RootDatum& rd,
                                       const FrobeniusTwist& tw) {
  RegularEmbedding emb = regular_embedding(rd, tw);
  WeylGroup big_wg = WeylGroup::enumerate(emb.datum);
  std::vector<Pair> pairs = all_pairs(rd, tw);
  std::vector<std::string> keys;
  for (const Pair& p : pairs)
    keys.push_back(
        keyset_string(extension_orbit_keys(rd, tw, emb, big_wg, p)));
  return blocks_from_keys(rd, tw, pairs, keys);
}

std::vector<SeriesId> series_partition_brauer(const RootDatum& rd,
                                              const FrobeniusTwist& tw,
                                              const Int& ell) {
  if (!is_prime_int(ell))
    throw ValidationError("series_partition_brauer: ell must be prime");
  if (ell == tw.p)
    throw ValidationError(
        "series_partition_brauer: ell must differ from the defining "
        "characteristic");
  RegularEmbedding emb = regular_embedding(rd, tw);
  WeylGroup big_wg = WeylGroup::enumerate(emb.datum);
  std::vector<Pair> pairs = all_pairs(rd, tw);
  std::vector<std::string> keys;
  for (const Pair& p : pairs) {
    Pair coarse{p.w, ell_prime_part(p.theta, ell)};
    keys.push_back(
        keyset_string(extension_orbit_keys(rd, tw, emb, big_wg, coarse)));
  }
  return blocks_from_keys(rd, tw, pairs, keys);
}

std::vector<SeriesId> geometric_partition(const RootDatum& rd,
                                          const FrobeniusTwist& tw) {
  Grid g(rd, tw);
  std::vector<Pair> pairs = all_pairs(rd, tw);
  std::vector<std::string> keys;
  for (const Pair& p : pairs)
    keys.push_back(orbit_key(g.wg, dual_ss(rd, tw, p).s));
  return blocks_from_keys(rd, tw, pairs, keys);
}

namespace {

// All sequences of length up to bound, bucketed by their Weyl product.
std::map<long, std::vector<SeqBarS>> seqs_by_product(const RootDatum& rd,
                                                     const WeylGroup& wg,
                                                     long bound) {
  std::map<long, std::vector<SeqBarS>> out;
  for (long r = 0; r <= bound; ++r)
    for (const SeqBarS& w : all_seqs(rd, r))
      out[seq_product_index(wg, w)].push_back(w);
  return out;
}

// Barred sequences z >= w of the same length (filling zero entries).
std::vector<SeqBarS> seqs_above(const RootDatum& rd, const SeqBarS& w) {
  std::vector<SeqBarS> out{w};
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) continue;
    std::vector<SeqBarS> grown;
    for (const SeqBarS& z : out)
      for (long e = 0; e <= rd.num_simple(); ++e) {
        SeqBarS t = z;
        t[i] = e;
        grown.push_back(t);
      }
    out.swap(grown);
  }
  return out;
}

}  // namespace

std::vector<SeqPair> elementary_moves(const RootDatum& rd,
                                      const FrobeniusTwist& tw,
                                      const SeqPair& sp, long bound) {
  validate_seq(rd, sp.w);
  if (bound < 1)
    throw ValidationError("elementary_moves: bound must be positive");
  Grid g(rd, tw);
  long k = seq_product_index(g.wg, sp.w);
  const FiniteTorus& t = g.tori[static_cast<size_t>(k)];
  check_theta_fits(t, sp.theta, "elementary_moves");

  long reach = std::max<long>(bound, static_cast<long>(sp.w.size()));
  std::map<long, std::vector<SeqBarS>> targets = seqs_by_product(rd, g.wg, reach);

  std::set<std::pair<std::string, std::string>> seen;
  std::vector<SeqPair> out;
  auto push = [&](const SeqBarS& w, const TorusCharacter& theta) {
    if (w == sp.w && qzvec_eq(theta.values, sp.theta.values)) return;
    if (seen.insert({seq_key(w), values_key(theta.values)}).second)
      out.push_back(SeqPair{w, theta});
  };

  // Twisted conjugation (the identity case lists plain re-sequencings).
  for (long v = 0; v < g.wg.size(); ++v) {
    long kk = g.wg.mul(g.wg.mul(v, k), g.wg.inverse(phi_of(g.wg, tw, v)));
    auto it = targets.find(kk);
    if (it == targets.end()) continue;
    TorusCharacter moved =
        transport_character(g.wg, t, g.tori[static_cast<size_t>(kk)], sp.theta, v);
    for (const SeqBarS& y : it->second) push(y, moved);
  }

  // Passage toward w_theta: everything in the interval carries theta along
  // the canonical isomorphism of the two tori.
  for (const SeqBarS& y : interval(rd, tw, sp.w, sp.theta)) {
    if (y == sp.w) continue;
    push(y, theta_on_y(rd, tw, sp.w, sp.theta, y));
  }

  // ... and its preimages: pairs on a filled sequence that descend to sp.
  for (const SeqBarS& z : seqs_above(rd, sp.w)) {
    if (z == sp.w) continue;
    long kz = seq_product_index(g.wg, z);
    for (const TorusCharacter& up :
         hom_group_elements(g.tori[static_cast<size_t>(kz)].group)) {
      if (!seq_leq(w_theta(rd, tw, z, up), sp.w)) continue;
      if (qzvec_eq(theta_on_y(rd, tw, z, up, sp.w).values, sp.theta.values))
        push(z, up);
    }
  }

  std::sort(out.begin(), out.end(), [](const SeqPair& a, const SeqPair& b) {
    return std::make_pair(seq_key(a.w), values_key(a.theta.values)) <
           std::make_pair(seq_key(b.w), values_key(b.theta.values));
  });
  return out;
}

MoveReach sim_w_equivalent(const RootDatum& rd, const FrobeniusTwist& tw,
                           const SeqPair& a, const SeqPair& b, long bound) {
  validate_seq(rd, a.w);
  validate_seq(rd, b.w);
  Grid g(rd, tw);
  long ka = seq_product_index(g.wg, a.w);
  long kb = seq_product_index(g.wg, b.w);
  check_theta_fits(g.tori[static_cast<size_t>(ka)], a.theta, "sim_w_equivalent");
  check_theta_fits(g.tori[static_cast<size_t>(kb)], b.theta, "sim_w_equivalent");

  long reach = std::max({bound, static_cast<long>(a.w.size()),
                         static_cast<long>(b.w.size()), 1L});
  std::map<long, std::vector<SeqBarS>> reps = seqs_by_product(rd, g.wg, reach);

  // Sequences with equal product present the same torus, so characters move
  // freely between them; a state is (product, character values).  Closing a
  // state applies twisted conjugation plus barring and unbarring from every
  // representative sequence within reach.
  using State = std::pair<long, std::string>;
  auto state_of = [](long k, const TorusCharacter& th) {
    return State{k, values_key(th.values)};
  };
  State target = state_of(kb, b.theta);

  std::map<State, TorusCharacter> frontier{{state_of(ka, a.theta), a.theta}};
  std::set<State> visited{state_of(ka, a.theta)};
  while (!frontier.empty()) {
    if (visited.count(target)) return MoveReach::Equivalent;
    std::map<State, TorusCharacter> next;
    auto push = [&](long k, const TorusCharacter& th) {
      State s = state_of(k, th);
      if (visited.insert(s).second) next.emplace(s, th);
    };
    for (const auto& [state, theta] : frontier) {
      long k = state.first;
      const FiniteTorus& t = g.tori[static_cast<size_t>(k)];
      for (long v = 0; v < g.wg.size(); ++v) {
        long kk = g.wg.mul(g.wg.mul(v, k), g.wg.inverse(phi_of(g.wg, tw, v)));
        if (g.wg.at(kk).length() > reach) continue;
        push(kk, transport_character(g.wg, t, g.tori[static_cast<size_t>(kk)],
                                     theta, v));
      }
      auto it = reps.find(k);
      if (it == reps.end()) continue;
      for (const SeqBarS& w : it->second) {
        for (const SeqBarS& y : interval(rd, tw, w, theta)) {
          if (y == w) continue;
          push(seq_product_index(g.wg, y), theta_on_y(rd, tw, w, theta, y));
        }
        for (const SeqBarS& z : seqs_above(rd, w)) {
          if (z == w) continue;
          long kz = seq_product_index(g.wg, z);
          for (const TorusCharacter& up :
               hom_group_elements(g.tori[static_cast<size_t>(kz)].group)) {
            if (!seq_leq(w_theta(rd, tw, z, up), w)) continue;
            if (qzvec_eq(theta_on_y(rd, tw, z, up, w).values, theta.values))
              push(kz, up);
          }
        }
      }
    }
    frontier.swap(next);
  }
  return visited.count(target) ? MoveReach::Equivalent : MoveReach::Unknown;
}

std::vector<Pair> minimal_pairs(const RootDatum& rd, const FrobeniusTwist& tw,
                                const SeriesId& series) {
  std::vector<Pair> out;
  for (const Pair& p : series.members) {
    SeqBarS w = word_seq(p.w);
    if (w_theta(rd, tw, w, p.theta) == w) out.push_back(p);
  }
  internal_check(!out.empty(), "a series without minimal pairs");
  return out;
}

std::optional<long> conjugating_witness(const RootDatum& rd,
                                        const FrobeniusTwist& tw,
                                        const Pair& a, const Pair& b) {
  Grid g(rd, tw);
  long ka = g.wg.index_of(a.w.m);
  long kb = g.wg.index_of(b.w.m);
  internal_check(ka >= 0 && kb >= 0, "pair outside the enumerated Weyl group");
  const FiniteTorus& ta = g.tori[static_cast<size_t>(ka)];
  const FiniteTorus& tb = g.tori[static_cast<size_t>(kb)];
  check_theta_fits(ta, a.theta, "conjugating_witness");
  check_theta_fits(tb, b.theta, "conjugating_witness");
  for (long x = 0; x < g.wg.size(); ++x) {
    if (g.wg.mul(g.wg.mul(x, ka), g.wg.inverse(phi_of(g.wg, tw, x))) != kb)
      continue;
    if (qzvec_eq(transport_character(g.wg, ta, tb, a.theta, x).values,
                 b.theta.values))
      return x;
  }
  return std::nullopt;
}

bool check_minimality_lemma(const RootDatum& rd, const FrobeniusTwist& tw,
                            const SeriesId& series) {
  std::vector<Pair> mins = minimal_pairs(rd, tw, series);
  for (size_t i = 0; i < mins.size(); ++i)
    for (size_t j = i + 1; j < mins.size(); ++j)
      if (!conjugating_witness(rd, tw, mins[i], mins[j]).has_value())
        return false;
  return true;
}

namespace {

// Validate (I, v) and return the Y-side matrix of v from its word.
IntMatrix check_levi_twist(const RootDatum& rd, const FrobeniusTwist& tw,
                           const std::vector<long>& levi,
                           const std::vector<long>& v_word) {
  for (long i : levi)
    if (i < 0 || i >= rd.num_simple())
      throw ValidationError("invalid simple index in the Levi subset");
  IntMatrix mv = IntMatrix::identity(rd.rank);
  for (long i : v_word) {
    if (i < 0 || i >= rd.num_simple())
      throw ValidationError("invalid simple index in the Levi twist word");
    mv = mv * rd.simple_reflection_y(i);
  }
  // The X-side action of v o phi must permute the simple roots of I.
  std::optional<IntMatrix> inv = solve_matrix(mv * tw.tau,
                                              IntMatrix::identity(rd.rank));
  internal_check(inv.has_value(), "twist matrix is not invertible");
  for (long i : levi) {
    const Vec& alpha = rd.simple_root(i);
    Vec image(alpha.size(), Int(0));
    for (size_t j = 0; j < alpha.size(); ++j) {
      Int acc = 0;
      for (size_t kk = 0; kk < alpha.size(); ++kk)
        acc += inv->at(static_cast<long>(kk), static_cast<long>(j)) * alpha[kk];
      image[j] = acc;
    }
    bool in_levi = false;
    for (long j : levi)
      if (rd.simple_root(j) == image) in_levi = true;
    if (!in_levi)
      throw InvalidLeviTwist(
          "the twist does not stabilize the simple roots of the Levi");
  }
  return mv;
}

bool root_support_in(const RootDatum& rd, long root_idx,
                     const std::vector<long>& levi) {
  Vec supp = rd.root_in_simple_basis(root_idx);
  for (long i = 0; i < rd.num_simple(); ++i) {
    if (supp[static_cast<size_t>(i)] == 0) continue;
    if (std::find(levi.begin(), levi.end(), i) == levi.end()) return false;
  }
  return true;
}

struct LeviContext {
  FiniteTorus t;   // torus of the composite element wv
  TorusCharacter theta;
};

LeviContext levi_context(const RootDatum& rd, const FrobeniusTwist& tw,
                         const std::vector<long>& levi,
                         const std::vector<long>& v_word, const SeqPair& sp) {
  check_levi_twist(rd, tw, levi, v_word);
  SeqBarS full = sp.w;
  for (long i : v_word) full.push_back(i + 1);
  validate_seq(rd, full);
  FiniteTorus t = finite_torus(rd, tw, full);
  check_theta_fits(t, sp.theta, "regularity");
  return LeviContext{std::move(t), sp.theta};
}

}  // namespace

bool is_regular(const RootDatum& rd, const FrobeniusTwist& tw,
                const std::vector<long>& levi,
                const std::vector<long>& v_word, const SeqPair& sp) {
  LeviContext c = levi_context(rd, tw, levi, v_word, sp);
  for (long a = 0; a < rd.num_roots(); ++a) {
    if (root_support_in(rd, a, levi)) continue;
    if (c.theta.eval_coords(c.t.norm(rd.coroots[static_cast<size_t>(a)])) == QZ())
      return false;
  }
  return true;
}

bool is_super_regular(const RootDatum& rd, const FrobeniusTwist& tw,
                      const std::vector<long>& levi,
                      const std::vector<long>& v_word, const SeqPair& sp) {
  LeviContext c = levi_context(rd, tw, levi, v_word, sp);
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::set<long> w_levi{wg.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (long x : std::vector<long>(w_levi.begin(), w_levi.end()))
      for (long i : levi)
        if (w_levi.insert(wg.mul(x, wg.simple(i))).second) grew = true;
  }
  for (long x = 0; x < wg.size(); ++x) {
    if (w_levi.count(x)) continue;
    const IntMatrix& mx_inv = wg.at(wg.inverse(x)).m;
    bool fixes = true;
    for (long j = 0; j < rd.rank; ++j) {
      Vec ej = basis_vec(rd.rank, j);
      if (!(c.theta.eval_coords(c.t.norm(mx_inv.apply(ej))) ==
            c.theta.eval_coords(c.t.norm(ej))))
        fixes = false;
    }
    if (fixes) return false;  // the stabilizer leaks out of W_I
  }
  return true;
}

}  // namespace finred
