// Finite tori T^{wF}, coroot frames, canonical isomorphisms, intervals and
// component groups. Independent oracles used here:
//   - Laplace-expansion determinant (no shared code with the Bareiss one);
//   - the GL_n point-count formula prod_i (q^{c_i} - 1) over cycle types;
//   - brute-force minimum of I(w, theta) straight from the definition
//     (theta trivial on N_w(Y_{w,x})), against the beta^vee rule.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finred/embedding.hpp"
#include "finred/finite_torus.hpp"
#include "finred/root_datum.hpp"
#include "finred/seq.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace finred;

namespace {

// Independent determinant: Laplace expansion along the first remaining row.
Int laplace_det(const IntMatrix& m, std::vector<long> rows, std::vector<long> cols) {
  if (rows.empty()) return 1;
  Int acc = 0;
  long r = rows[0];
  std::vector<long> rest_rows(rows.begin() + 1, rows.end());
  for (size_t k = 0; k < cols.size(); ++k) {
    if (m.at(r, cols[k]) == 0) continue;
    std::vector<long> rest_cols;
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest_cols.push_back(cols[j]);
    Int minor = laplace_det(m, rest_rows, rest_cols);
    Int term = m.at(r, cols[k]) * minor;
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

Int oracle_abs_det(const IntMatrix& m) {
  std::vector<long> idx;
  for (long i = 0; i < m.rows(); ++i) idx.push_back(i);
  Int d = laplace_det(m, idx, idx);
  return d < 0 ? -d : d;
}

// Cycle type of a permutation matrix (sorted descending); fails the test if
// the matrix is not a permutation.
std::vector<long> perm_cycle_type(const IntMatrix& m) {
  long n = m.rows();
  std::vector<long> img(n, -1);
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < n; ++i) {
      if (m.at(i, j) == 0) continue;
      REQUIRE(m.at(i, j) == 1);
      REQUIRE(img[j] == -1);
      img[j] = i;
    }
    REQUIRE(img[j] >= 0);
  }
  std::vector<bool> seen(n, false);
  std::vector<long> cycles;
  for (long j = 0; j < n; ++j) {
    if (seen[j]) continue;
    long len = 0, cur = j;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = img[cur];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

Int gl_order_oracle(const std::vector<long>& cycles, const Int& q) {
  Int r = 1;
  for (long c : cycles) r *= pow_int(q, c) - 1;
  return r;
}

// theta trivial on N_w(Y_{w,x})? Checked on lattice generators (N_w and theta
// compose to a homomorphism on Y).
bool trivial_on_norm(const FiniteTorus& t, const GroupCharacter& theta, const Sublattice& lat) {
  for (const Vec& g : lat.generators)
    if (!theta.eval_coords(t.norm(g)).is_zero()) return false;
  return true;
}

// Brute-force I(w, theta) from the definition, with its minimum.
std::vector<SeqBarS> oracle_interval(const RootDatum& rd, const FrobeniusTwist& tw,
                                     const SeqBarS& w, const GroupCharacter& theta) {
  FiniteTorus t = finite_torus(rd, tw, w);
  std::vector<SeqBarS> in;
  for (const SeqBarS& x : seqs_below(w))
    if (trivial_on_norm(t, theta, coroot_frame(rd, w, x).y_wv)) in.push_back(x);
  return in;
}

SeqBarS oracle_minimum(const std::vector<SeqBarS>& set) {
  REQUIRE(!set.empty());
  SeqBarS best = set[0];
  for (const SeqBarS& x : set)
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] < best[i]) best[i] = x[i];
  // The componentwise minimum must itself belong to the set.
  REQUIRE(std::find(set.begin(), set.end(), best) != set.end());
  return best;
}

SeqBarS word_to_seq(const WeylElement& e) {
  SeqBarS w;
  for (long i : e.word) w.push_back(i + 1);
  return w;
}

std::string coords_key(const std::vector<Int>& c) {
  std::string s;
  for (const Int& x : c) s += x.str() + ",";
  return s;
}

GroupCharacter character_of_order(const FiniteAbelianGroup& g, const Int& k) {
  for (const GroupCharacter& chi : hom_group_elements(g))
    if (chi.order() == k) return chi;
  REQUIRE(false);
  return GroupCharacter{};
}

Sublattice image_lattice(const IntMatrix& m) { return Sublattice::from_columns(m); }

}  // namespace

TEST_CASE("splitting exponent of small data") {
  FrobeniusTwist q3 = make_twist(build_root_datum("SL2"), 3, 1);
  CHECK(splitting_exponent(build_root_datum("SL2"), q3) == 2);
  CHECK(splitting_exponent(build_root_datum("GL3"), make_twist(build_root_datum("GL3"), 2, 1)) == 6);
  CHECK(splitting_exponent(build_root_datum("PGL2"), make_twist(build_root_datum("PGL2"), 3, 1)) == 2);

  // Defining property: (wF)^d = q^d on Y, for every w.
  RootDatum a2 = build_root_datum("A2-sc");
  FrobeniusTwist tw = make_twist(a2, 2, 1);
  WeylGroup wg = WeylGroup::enumerate(a2);
  long d = splitting_exponent(wg, tw);
  CHECK(d == 6);
  for (long k = 0; k < wg.size(); ++k) {
    IntMatrix wf = wg.at(k).m * tw.frobenius_y();
    IntMatrix pw = IntMatrix::identity(a2.rank);
    for (long e = 0; e < d; ++e) pw = pw * wf;
    CHECK(pw == pow_int(tw.q(), d) * IntMatrix::identity(a2.rank));
  }

  // The twisted A1 x A1 (swap) needs the tau factor: s1*tau has order 4.
  RootDatum aa = build_root_datum("A1-sc x A1-sc");
  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  FrobeniusTwist twisted = make_twist(aa, 2, 1, swap);
  CHECK(splitting_exponent(aa, twisted) == 4);
}

TEST_CASE("finite torus: frozen small values") {
  RootDatum sl2 = build_root_datum("SL2");
  FrobeniusTwist tw = make_twist(sl2, 3, 1);
  CHECK(finite_torus(sl2, tw, {0}).group.invariant_factors() == std::vector<Int>{2});
  CHECK(finite_torus(sl2, tw, {1}).group.invariant_factors() == std::vector<Int>{4});

  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  CHECK(finite_torus(gl2, tg, {1}).group.invariant_factors() == std::vector<Int>{8});
  CHECK(finite_torus(gl2, tg, {0}).group.invariant_factors() == std::vector<Int>{2, 2});

  RootDatum pgl2 = build_root_datum("PGL2");
  FrobeniusTwist tp = make_twist(pgl2, 3, 1);
  CHECK(finite_torus(pgl2, tp, {1}).group.invariant_factors() == std::vector<Int>{4});
}

TEST_CASE("finite torus: GL cycle-type oracle") {
  for (long n : {2L, 3L}) {
    RootDatum gl = build_root_datum("GL" + std::to_string(n));
    WeylGroup wg = WeylGroup::enumerate(gl);
    for (Int q : {Int(2), Int(3)}) {
      FrobeniusTwist tw = make_twist(gl, q, 1);
      for (long k = 0; k < wg.size(); ++k) {
        FiniteTorus t = finite_torus(gl, tw, word_to_seq(wg.at(k)));
        CHECK(t.group.order() == gl_order_oracle(perm_cycle_type(wg.at(k).m), q));
      }
    }
  }
}

TEST_CASE("finite torus: order equals |det(wF-1)|, norm exact") {
  std::vector<std::pair<RootDatum, FrobeniusTwist>> data;
  for (const char* name : {"SL2", "GL2", "PGL2", "A2-sc", "B2-sc", "A1-sc x A1-sc"}) {
    RootDatum rd = build_root_datum(name);
    data.emplace_back(rd, make_twist(rd, 3, 1));
    data.emplace_back(rd, make_twist(rd, 2, 1));
  }
  {
    RootDatum aa = build_root_datum("A1-sc x A1-sc");
    IntMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    data.emplace_back(aa, make_twist(aa, 2, 1, swap));
  }
  for (const auto& [rd, tw] : data) {
    WeylGroup wg = WeylGroup::enumerate(rd);
    for (long k = 0; k < wg.size(); ++k) {
      SeqBarS w = word_to_seq(wg.at(k));
      FiniteTorus t = finite_torus(rd, tw, w);
      IntMatrix wf1 = wg.at(k).m * tw.frobenius_y() - IntMatrix::identity(rd.rank);
      CHECK(t.group.order() == oracle_abs_det(wf1));
      // Exactness: the norm kills (wF-1)Y...
      for (long j = 0; j < rd.rank; ++j)
        CHECK(t.group.coords_zero(t.norm(wf1.col(j))));
      // ...and lifts of all classes map back (norm surjective).
      if (t.group.order() <= 64) {
        for (const auto& c : t.group.elements())
          CHECK(t.norm(t.group.lift_coords(c)) == c);
      }
    }
  }
}

TEST_CASE("torus characters: counts and ell-regular filter") {
  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tw = make_twist(gl2, 3, 1);
  FiniteTorus t8 = finite_torus(gl2, tw, {1});
  CHECK(torus_characters(t8).size() == 8);
  CHECK(torus_characters_ell_regular(t8, 2).size() == 1);
  CHECK(torus_characters_ell_regular(t8, 3).size() == 8);
  CHECK(torus_characters_ell_regular(t8, 5).size() == 8);

  FiniteTorus t22 = finite_torus(gl2, tw, {0});
  CHECK(torus_characters(t22).size() == 4);
  CHECK(torus_characters_ell_regular(t22, 2).size() == 1);
}

TEST_CASE("coroot frame: frozen shapes") {
  RootDatum gl2 = build_root_datum("GL2");
  CorootFrame f = coroot_frame(gl2, {1}, {0});
  CHECK(f.diff == std::vector<long>{0});
  CHECK(f.alpha_w[0] == gl2.simple_coroot(0));
  CHECK(f.beta_w[0] == gl2.simple_coroot(0));  // empty prefix
  CHECK(f.alpha_wv == f.alpha_w);
  Sublattice expect{2, {Vec{1, -1}}};
  CHECK(lattice_equal(f.y_wv, expect));

  // v = w: no difference positions, zero lattice.
  CorootFrame g = coroot_frame(gl2, {1}, {1});
  CHECK(g.diff.empty());
  CHECK(lattice_rank(g.y_wv) == 0);
  CHECK(g.alpha_wv[0] == Vec{0, 0});
  CHECK(g.alpha_w[0] == gl2.simple_coroot(0));

  // SL2: the coroot spans all of Y.
  RootDatum sl2 = build_root_datum("SL2");
  CHECK(lattice_equal(coroot_frame(sl2, {1}, {0}).y_wv, Sublattice::full(1)));

  // Identity entries contribute zero columns everywhere.
  CorootFrame h = coroot_frame(gl2, {0, 1}, {0, 0});
  CHECK(h.diff == std::vector<long>{1});
  CHECK(h.alpha_w[0] == Vec{0, 0});
  CHECK(h.beta_wv[1] == gl2.simple_coroot(0));  // prefix (1) acts trivially

  // beta is the prefix image of alpha: spot check on B2, w = (s1, s2, s1).
  RootDatum b2 = build_root_datum("B2-sc");
  CorootFrame k = coroot_frame(b2, {1, 2, 1}, {1, 0, 0});
  IntMatrix s1 = b2.simple_reflection_y(0);
  IntMatrix s2 = b2.simple_reflection_y(1);
  CHECK(k.beta_w[0] == b2.simple_coroot(0));
  CHECK(k.beta_w[1] == s1.apply(b2.simple_coroot(1)));
  CHECK(k.beta_w[2] == (s1 * s2).apply(b2.simple_coroot(0)));
  CHECK(k.diff == std::vector<long>({1, 2}));
}

TEST_CASE("coroot lattice lemma: all triples v <= y <= w") {
  std::vector<std::pair<RootDatum, FrobeniusTwist>> data;
  for (const char* name : {"SL2", "GL2", "A2-sc", "B2-sc"}) {
    RootDatum rd = build_root_datum(name);
    data.emplace_back(rd, make_twist(rd, 3, 1));
  }
  for (const auto& [rd, tw] : data) {
    long max_r = rd.rank >= 2 ? 2 : 3;  // acceptance reruns this at length 3
    IntMatrix f = tw.frobenius_y();
    IntMatrix id = IntMatrix::identity(rd.rank);
    for (long r = 0; r <= max_r; ++r) {
      for (const SeqBarS& w : all_seqs(rd, r)) {
        IntMatrix mw = seq_product_y(rd, w);
        for (const SeqBarS& y : seqs_below(w)) {
          IntMatrix my = seq_product_y(rd, y);
          for (const SeqBarS& v : seqs_below(y)) {
            CorootFrame frame = coroot_frame(rd, w, v);

            // (1) (w - y)Y is contained in Y_{w,v}.
            IntMatrix diff = mw - my;
            for (long j = 0; j < rd.rank; ++j)
              CHECK(lattice_member(diff.col(j), frame.y_wv));

            // (2) prefixes of y give an alternative generating family.
            Sublattice alt{rd.rank, alt_generators(rd, w, v, y)};
            CHECK(lattice_equal(alt, frame.y_wv));

            // (corollary) Y_{w,v} = Y_{w,y} + Y_{y,v}.
            Sublattice split = sublattice_sum(coroot_frame(rd, w, y).y_wv,
                                              coroot_frame(rd, y, v).y_wv);
            CHECK(lattice_equal(split, frame.y_wv));

            // (3) (wF-1)Y + Y_{w,v} = (yF-1)Y + Y_{w,v}.
            Sublattice sw = sublattice_sum(image_lattice(mw * f - id), frame.y_wv);
            Sublattice sy = sublattice_sum(image_lattice(my * f - id), frame.y_wv);
            CHECK(lattice_equal(sw, sy));

            // (4) N_w, N_y induce a bijection of the quotients.
            CanonicalIso iso = canonical_iso(rd, tw, w, y, v);
            CHECK(iso.quotient.order() == lattice_index(Sublattice::full(rd.rank), sw));
            std::set<std::string> source_classes, matched;
            for (const auto& c : iso.source.group.elements()) {
              auto q = iso.source_class(c);
              CHECK(iso.target_class(iso.forward(c)) == q);
              source_classes.insert(coords_key(q));
            }
            CHECK(Int(source_classes.size()) == iso.quotient.order());
            for (const auto& c : iso.target.group.elements())
              matched.insert(coords_key(iso.target_class(c)));
            CHECK(Int(matched.size()) == iso.quotient.order());
          }
        }
      }
    }
  }
}

TEST_CASE("quotient torus: frozen values and y-independence") {
  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  CHECK(quotient_torus(gl2, tg, {1}, {0}, {1}).invariant_factors() == std::vector<Int>{2});
  CHECK(quotient_torus(gl2, tg, {1}, {0}, {0}).invariant_factors() == std::vector<Int>{2});
  CHECK(quotient_torus(gl2, tg, {1}, {1}, {1}).invariant_factors() == std::vector<Int>{8});

  RootDatum sl2 = build_root_datum("SL2");
  FrobeniusTwist ts = make_twist(sl2, 3, 1);
  CHECK(quotient_torus(sl2, ts, {1}, {0}, {1}).is_trivial());

  RootDatum pgl2 = build_root_datum("PGL2");
  FrobeniusTwist tp = make_twist(pgl2, 3, 1);
  CHECK(quotient_torus(pgl2, tp, {1}, {0}, {1}).invariant_factors() == std::vector<Int>{2});

  // Any y in [v, w] yields the same invariant factors.
  RootDatum b2 = build_root_datum("B2-sc");
  FrobeniusTwist tb = make_twist(b2, 2, 1);
  SeqBarS w{1, 2, 1}, v{0, 2, 0};
  auto base = quotient_torus(b2, tb, w, v, v).invariant_factors();
  for (const SeqBarS& y : seq_interval(v, w))
    CHECK(quotient_torus(b2, tb, w, v, y).invariant_factors() == base);

  // y outside [v, w] is rejected.
  CHECK_THROWS_AS(quotient_torus(b2, tb, w, v, SeqBarS{2, 2, 2}), ValidationError);
}

TEST_CASE("w_theta: frozen values") {
  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  FiniteTorus t = finite_torus(gl2, tg, {1});  // Z/8

  GroupCharacter trivial{QZVec{QZ(0, 1)}};
  CHECK(w_theta(gl2, tg, {1}, trivial) == SeqBarS{0});

  GroupCharacter half{QZVec{QZ(1, 2)}};
  CHECK(w_theta(gl2, tg, {1}, half) == SeqBarS{0});

  GroupCharacter quarter{QZVec{QZ(1, 4)}};
  CHECK(w_theta(gl2, tg, {1}, quarter) == SeqBarS{1});
  GroupCharacter eighth{QZVec{QZ(1, 8)}};
  CHECK(w_theta(gl2, tg, {1}, eighth) == SeqBarS{1});

  RootDatum sl2 = build_root_datum("SL2");
  FrobeniusTwist ts = make_twist(sl2, 3, 1);
  CHECK(w_theta(sl2, ts, {1}, GroupCharacter{QZVec{QZ(1, 4)}}) == SeqBarS{1});
  CHECK(w_theta(sl2, ts, {1}, GroupCharacter{QZVec{QZ(1, 2)}}) == SeqBarS{1});
  CHECK(w_theta(sl2, ts, {1}, GroupCharacter{QZVec{QZ(0, 1)}}) == SeqBarS{0});

  // Characters that do not fit the torus are rejected.
  CHECK_THROWS_AS(w_theta(gl2, tg, {1}, GroupCharacter{QZVec{QZ(1, 3)}}),
                  CharacterDomainMismatch);
  CHECK_THROWS_AS(w_theta(gl2, tg, {1}, GroupCharacter{QZVec{QZ(1, 8), QZ(0, 1)}}),
                  CharacterDomainMismatch);
  (void)t;
}

TEST_CASE("w_theta and interval against the brute-force definition") {
  std::vector<std::pair<RootDatum, FrobeniusTwist>> data;
  for (const char* name : {"SL2", "GL2", "PGL2"}) {
    RootDatum rd = build_root_datum(name);
    data.emplace_back(rd, make_twist(rd, 3, 1));
  }
  {
    RootDatum a2 = build_root_datum("A2-sc");
    data.emplace_back(a2, make_twist(a2, 2, 1));
  }
  for (const auto& [rd, tw] : data) {
    for (long r = 0; r <= 2; ++r) {
      for (const SeqBarS& w : all_seqs(rd, r)) {
        FiniteTorus t = finite_torus(rd, tw, w);
        if (t.group.order() > 100) continue;
        for (const GroupCharacter& theta : torus_characters(t)) {
          std::vector<SeqBarS> in = oracle_interval(rd, tw, w, theta);
          SeqBarS wt = w_theta(rd, tw, w, theta);
          CHECK(wt == oracle_minimum(in));
          // I(w, theta) is exactly the sub-interval [w_theta, w].
          std::vector<SeqBarS> got = interval(rd, tw, w, theta);
          std::vector<SeqBarS> want = seq_interval(wt, w);
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          std::sort(in.begin(), in.end());
          CHECK(got == want);
          CHECK(got == in);
        }
      }
    }
  }
}

TEST_CASE("theta_on_y: transport along the interval") {
  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  GroupCharacter half{QZVec{QZ(1, 2)}};

  // Frozen: on T^{F} = (Z/2)^2 the transported character is (1/2, 1/2).
  TorusCharacter down = theta_on_y(gl2, tg, {1}, half, {0});
  CHECK(down.values == QZVec({QZ(1, 2), QZ(1, 2)}));

  // Transport to y = w is the identity.
  CHECK(theta_on_y(gl2, tg, {1}, half, {1}).values == half.values);

  // Characters of full order do not descend.
  CHECK_THROWS_AS(theta_on_y(gl2, tg, {1}, GroupCharacter{QZVec{QZ(1, 8)}}, {0}),
                  NotInInterval);

  // Defining identity theta_y(N_y(lambda)) = theta(N_w(lambda)), and the
  // interval corollary y_{theta_y} = w_theta, over a grid.
  std::vector<std::pair<RootDatum, FrobeniusTwist>> data;
  for (const char* name : {"SL2", "GL2", "PGL2", "A2-sc"}) {
    RootDatum rd = build_root_datum(name);
    data.emplace_back(rd, make_twist(rd, rd.rank == 2 ? 2 : 3, 1));
  }
  for (const auto& [rd, tw] : data) {
    for (long r = 0; r <= 2; ++r) {
      for (const SeqBarS& w : all_seqs(rd, r)) {
        FiniteTorus tw_torus = finite_torus(rd, tw, w);
        if (tw_torus.group.order() > 100) continue;
        for (const GroupCharacter& theta : torus_characters(tw_torus)) {
          SeqBarS wt = w_theta(rd, tw, w, theta);
          for (const SeqBarS& y : seq_interval(wt, w)) {
            TorusCharacter ty = theta_on_y(rd, tw, w, theta, y);
            FiniteTorus t_y = finite_torus(rd, tw, y);
            for (long j = 0; j < rd.rank; ++j) {
              Vec e(rd.rank, 0);
              e[static_cast<size_t>(j)] = 1;
              CHECK(ty.eval_coords(t_y.norm(e)) == theta.eval_coords(tw_torus.norm(e)));
            }
            CHECK(w_theta(rd, tw, y, ty) == wt);
          }
        }
      }
    }
  }
}

TEST_CASE("pi0 of the torsor: frozen values") {
  RootDatum sl2 = build_root_datum("SL2");
  FrobeniusTwist ts = make_twist(sl2, 3, 1);
  CHECK(pi0_S(sl2, ts, {1}, {0}).is_trivial());
  CHECK(pi0_S(sl2, ts, {1}, {1}).invariant_factors() == std::vector<Int>{4});

  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  CHECK(pi0_S(gl2, tg, {1}, {0}).invariant_factors() == std::vector<Int>{2});
  CHECK(pi0_S(gl2, tg, {1}, {1}).invariant_factors() == std::vector<Int>{8});

  RootDatum pgl2 = build_root_datum("PGL2");
  FrobeniusTwist tp = make_twist(pgl2, 3, 1);
  CHECK(pi0_S(pgl2, tp, {1}, {0}).invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("pi0 of the torsor matches the finite-torus quotient") {
  std::vector<std::pair<RootDatum, FrobeniusTwist>> data;
  for (const char* name : {"SL2", "PGL2", "GL2"}) {
    RootDatum rd = build_root_datum(name);
    data.emplace_back(rd, make_twist(rd, 2, 1));
    data.emplace_back(rd, make_twist(rd, 3, 1));
  }
  {
    RootDatum a2ad = build_root_datum("A2-ad");
    data.emplace_back(a2ad, make_twist(a2ad, 2, 1));
  }
  for (const auto& [rd, tw] : data) {
    long max_r = rd.num_simple() >= 2 ? 1 : 2;  // acceptance covers length 2
    for (long r = 0; r <= max_r; ++r) {
      for (const SeqBarS& w : all_seqs(rd, r)) {
        for (const SeqBarS& v : seqs_below(w)) {
          FiniteAbelianGroup quot = quotient_torus(rd, tw, w, v, w);
          FiniteAbelianGroup pi0 = pi0_S(rd, tw, w, v);
          CHECK(same_invariants(pi0, quot));
        }
      }
    }
  }
}

TEST_CASE("same_invariants") {
  RootDatum gl2 = build_root_datum("GL2");
  FrobeniusTwist tg = make_twist(gl2, 3, 1);
  FiniteAbelianGroup a = finite_torus(gl2, tg, {1}).group;   // Z/8
  FiniteAbelianGroup b = finite_torus(gl2, tg, {0}).group;   // Z/2 x Z/2
  CHECK(same_invariants(a, a));
  CHECK(!same_invariants(a, b));
  CHECK(same_invariants(FiniteAbelianGroup{}, FiniteAbelianGroup{}));
}
