#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finred/root_datum.hpp"
#include "finred/seq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace finred;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Oracles: rational solves for simple-basis expansions, inversion counting
// for lengths, and the subword criterion for Bruhat order. None of these
// share code with the library implementations they check.
// ---------------------------------------------------------------------------

namespace {

// Solve B c = v over Q (B square-ish with independent columns, desk scale).
std::vector<Rat> rational_solve(const std::vector<Vec>& basis, const Vec& v) {
  size_t n = v.size(), k = basis.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(basis[j][i]);
    a[i][k] = Rat(v[i]);
  }
  size_t row = 0;
  std::vector<long> pivot_col(k, -1);
  for (size_t c = 0; c < k && row < n; ++c) {
    size_t piv = row;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[row][c];
      for (size_t j = 0; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col[c] = static_cast<long>(row);
    ++row;
  }
  std::vector<Rat> out(k, Rat(0));
  for (size_t c = 0; c < k; ++c)
    if (pivot_col[c] >= 0) out[c] = a[static_cast<size_t>(pivot_col[c])][c] == 0
                                        ? Rat(0)
                                        : a[static_cast<size_t>(pivot_col[c])][k] /
                                              a[static_cast<size_t>(pivot_col[c])][c];
  return out;
}

// Positive coroots = those whose simple-coroot expansion is nonnegative.
std::vector<Vec> oracle_positive_coroots(const RootDatum& rd) {
  std::vector<Vec> simples;
  for (long i = 0; i < rd.num_simple(); ++i) simples.push_back(rd.simple_coroot(i));
  std::vector<Vec> out;
  for (const auto& cv : rd.coroots) {
    auto c = rational_solve(simples, cv);
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    REQUIRE((nonneg || nonpos));  // crystallographic root systems only
    if (nonneg) out.push_back(cv);
  }
  return out;
}

// Length as the number of positive coroots sent negative by the Y-action.
long oracle_inversions(const RootDatum& rd, const IntMatrix& m) {
  std::vector<Vec> simples;
  for (long i = 0; i < rd.num_simple(); ++i) simples.push_back(rd.simple_coroot(i));
  long count = 0;
  for (const auto& cv : oracle_positive_coroots(rd)) {
    Vec img = m.apply(cv);
    auto c = rational_solve(simples, img);
    bool nonpos = true;
    for (const auto& x : c)
      if (x > 0) nonpos = false;
    if (nonpos) ++count;
  }
  return count;
}

// All elements reachable as subwords of the given word.
std::set<std::string> oracle_subword_closure(const RootDatum& rd,
                                             const std::vector<long>& word) {
  std::set<std::string> out;
  size_t n = word.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    IntMatrix m = IntMatrix::identity(rd.rank);
    for (size_t t = 0; t < n; ++t)
      if (mask & (size_t{1} << t)) m = m * rd.simple_reflection_y(word[t]);
    out.insert(m.key());
  }
  return out;
}

// Every reduced word of the element with the given matrix and length.
void oracle_reduced_words(const RootDatum& rd, const IntMatrix& target, long len,
                          std::vector<long>& cur, IntMatrix acc,
                          std::vector<std::vector<long>>& out) {
  if (static_cast<long>(cur.size()) == len) {
    if (acc == target) out.push_back(cur);
    return;
  }
  for (long i = 0; i < rd.num_simple(); ++i) {
    cur.push_back(i);
    oracle_reduced_words(rd, target, len, cur, acc * rd.simple_reflection_y(i), out);
    cur.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

TEST_CASE("SL2 datum: alpha = (2), coroot = (1)") {
  auto rd = build_root_datum("SL2");
  CHECK(rd.rank == 1);
  REQUIRE(rd.num_simple() == 1);
  CHECK(rd.simple_root(0) == Vec{2});
  CHECK(rd.simple_coroot(0) == Vec{1});
  CHECK(dot(rd.simple_root(0), rd.simple_coroot(0)) == 2);
  CHECK(rd.num_roots() == 2);
  validate_root_datum(rd);
}

TEST_CASE("GL2 datum: alpha = e1 - e2 on both sides") {
  auto rd = build_root_datum("GL2");
  CHECK(rd.rank == 2);
  REQUIRE(rd.num_simple() == 1);
  CHECK(rd.simple_root(0) == Vec{1, -1});
  CHECK(rd.simple_coroot(0) == Vec{1, -1});
  validate_root_datum(rd);
}

TEST_CASE("PGL2 datum: alpha = (1), coroot = (2)") {
  auto rd = build_root_datum("PGL2");
  CHECK(rd.rank == 1);
  CHECK(rd.simple_root(0) == Vec{1});
  CHECK(rd.simple_coroot(0) == Vec{2});
  validate_root_datum(rd);
}

TEST_CASE("catalog root counts and validation") {
  CHECK(build_root_datum("A2-sc").num_roots() == 6);
  CHECK(build_root_datum("B2-sc").num_roots() == 8);
  CHECK(build_root_datum("G2-sc").num_roots() == 12);
  CHECK(build_root_datum("Sp4").num_roots() == 8);
  CHECK(build_root_datum("GL3").num_roots() == 6);
  for (const char* name : {"SL2", "SL3", "GL2", "GL3", "PGL2", "PGL3", "Sp4",
                           "A1-sc", "A1-ad", "A2-sc", "A2-ad", "B2-sc", "B2-ad",
                           "G2-sc", "A1-sc x A1-sc"}) {
    validate_root_datum(build_root_datum(name));
  }
  CHECK_THROWS_AS(build_root_datum("E9"), UnknownType);
}

TEST_CASE("Sp4 is the simply connected C2 datum") {
  auto rd = build_root_datum("Sp4");
  IntMatrix c = rd.cartan();
  CHECK(c.at(0, 0) == 2);
  CHECK(c.at(0, 1) == -1);
  CHECK(c.at(1, 0) == -2);
  CHECK(c.at(1, 1) == 2);
}

TEST_CASE("B2 Cartan matrix") {
  auto rd = build_root_datum("B2-sc");
  IntMatrix c = rd.cartan();
  CHECK(c.at(0, 0) == 2);
  CHECK(c.at(0, 1) == -2);
  CHECK(c.at(1, 0) == -1);
  CHECK(c.at(1, 1) == 2);
}

TEST_CASE("invalid Cartan data is rejected") {
  IntMatrix bad(2, 2);
  bad.at(0, 0) = 3;  // diagonal must be 2
  bad.at(1, 1) = 2;
  CHECK_THROWS_AS(root_datum_simply_connected(bad), InvalidCartan);

  IntMatrix pos(2, 2);  // positive off-diagonal
  pos.at(0, 0) = 2;
  pos.at(0, 1) = 1;
  pos.at(1, 0) = 1;
  pos.at(1, 1) = 2;
  CHECK_THROWS_AS(root_datum_simply_connected(pos), InvalidCartan);

  IntMatrix aff(2, 2);  // det 4 - 5 < 0: infinite type
  aff.at(0, 0) = 2;
  aff.at(0, 1) = -1;
  aff.at(1, 0) = -5;
  aff.at(1, 1) = 2;
  CHECK_THROWS_AS(root_datum_simply_connected(aff), NonCrystallographic);
}

TEST_CASE("direct sum of A1 and A1") {
  auto rd = build_root_datum("A1-sc x A1-sc");
  CHECK(rd.rank == 2);
  CHECK(rd.num_roots() == 4);
  CHECK(rd.num_simple() == 2);
  auto wg = WeylGroup::enumerate(rd);
  CHECK(wg.size() == 4);
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

TEST_CASE("dual of SL2 is PGL2") {
  auto d = dual_datum(build_root_datum("SL2"));
  auto pgl = build_root_datum("PGL2");
  CHECK(d.simple_root(0) == pgl.simple_root(0));
  CHECK(d.simple_coroot(0) == pgl.simple_coroot(0));
  validate_root_datum(d);
}

TEST_CASE("GL2 is self-dual; double dual is the identity") {
  auto gl = build_root_datum("GL2");
  auto d = dual_datum(gl);
  CHECK(d.roots == gl.roots);
  CHECK(d.coroots == gl.coroots);
  auto b2 = build_root_datum("B2-sc");
  auto dd = dual_datum(dual_datum(b2));
  CHECK(dd.roots == b2.roots);
  CHECK(dd.coroots == b2.coroots);
  CHECK(dd.simple == b2.simple);
}

// ---------------------------------------------------------------------------
// Weyl groups
// ---------------------------------------------------------------------------

TEST_CASE("Weyl group sizes") {
  CHECK(WeylGroup::enumerate(build_root_datum("A1-sc")).size() == 2);
  CHECK(WeylGroup::enumerate(build_root_datum("A2-sc")).size() == 6);
  CHECK(WeylGroup::enumerate(build_root_datum("B2-sc")).size() == 8);
  CHECK(WeylGroup::enumerate(build_root_datum("G2-sc")).size() == 12);
  CHECK(WeylGroup::enumerate(build_root_datum("GL3")).size() == 6);
}

TEST_CASE("simple reflections square to the identity and fix the root set") {
  for (const char* name : {"A2-sc", "B2-ad", "G2-sc", "GL3"}) {
    auto rd = build_root_datum(name);
    for (long i = 0; i < rd.num_simple(); ++i) {
      IntMatrix s = rd.simple_reflection_y(i);
      CHECK((s * s).is_identity());
      for (const auto& cv : rd.coroots) {
        Vec img = s.apply(cv);
        bool found = false;
        for (const auto& other : rd.coroots)
          if (other == img) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("word lengths equal inversion counts (A2, B2, G2, GL3)") {
  for (const char* name : {"A2-sc", "B2-sc", "G2-sc", "GL3", "A2-ad"}) {
    auto rd = build_root_datum(name);
    auto wg = WeylGroup::enumerate(rd);
    for (long k = 0; k < wg.size(); ++k) {
      REQUIRE(wg.at(k).length() == oracle_inversions(rd, wg.at(k).m));
    }
  }
}

TEST_CASE("stored words are lex-minimal reduced words") {
  for (const char* name : {"A2-sc", "B2-sc", "G2-sc"}) {
    auto rd = build_root_datum(name);
    auto wg = WeylGroup::enumerate(rd);
    for (long k = 0; k < wg.size(); ++k) {
      std::vector<std::vector<long>> words;
      std::vector<long> cur;
      oracle_reduced_words(rd, wg.at(k).m, wg.at(k).length(), cur,
                           IntMatrix::identity(rd.rank), words);
      REQUIRE(!words.empty());
      std::sort(words.begin(), words.end());
      REQUIRE(wg.at(k).word == words.front());
    }
  }
}

TEST_CASE("group structure: multiplication, inverses, longest element") {
  auto rd = build_root_datum("B2-sc");
  auto wg = WeylGroup::enumerate(rd);
  for (long i = 0; i < wg.size(); ++i) {
    CHECK((wg.at(i).m * wg.at(wg.inverse(i)).m).is_identity());
    for (long j = 0; j < wg.size(); ++j) {
      long k = wg.mul(i, j);
      CHECK(wg.at(k).m == (wg.at(i).m * wg.at(j).m));
    }
  }
  CHECK(wg.length(wg.longest()) == 4);
  CHECK(wg.length(WeylGroup::enumerate(build_root_datum("A2-sc")).longest()) == 3);
  CHECK(wg.length(wg.identity()) == 0);
}

TEST_CASE("bruhat_leq agrees with the subword criterion on A2 and B2") {
  for (const char* name : {"A2-sc", "B2-sc"}) {
    auto rd = build_root_datum(name);
    auto wg = WeylGroup::enumerate(rd);
    for (long w = 0; w < wg.size(); ++w) {
      auto closure = oracle_subword_closure(rd, wg.at(w).word);
      for (long v = 0; v < wg.size(); ++v) {
        bool oracle = closure.count(wg.at(v).m.key()) > 0;
        REQUIRE(bruhat_leq(wg, v, w) == oracle);
      }
    }
  }
}

TEST_CASE("s1 <= s1 s2 s1 in A2") {
  auto rd = build_root_datum("A2-sc");
  auto wg = WeylGroup::enumerate(rd);
  long s1 = wg.simple(0), s2 = wg.simple(1);
  long w = wg.mul(wg.mul(s1, s2), s1);
  CHECK(wg.length(w) == 3);
  CHECK(bruhat_leq(wg, s1, w));
  CHECK(bruhat_leq(wg, s2, w));
  CHECK_FALSE(bruhat_leq(wg, w, s1));
}

// ---------------------------------------------------------------------------
// Frobenius twists
// ---------------------------------------------------------------------------

TEST_CASE("identity twist validates; q = p^a") {
  auto rd = build_root_datum("A2-sc");
  auto tw = make_twist(rd, 3, 2);
  CHECK(tw.q() == 9);
  CHECK(tw.tau.is_identity());
  auto sigma = tw.simple_permutation(rd);
  CHECK(sigma == std::vector<long>{0, 1});
}

TEST_CASE("swap twist on A1 x A1") {
  auto rd = build_root_datum("A1-sc x A1-sc");
  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  auto tw = make_twist(rd, 2, 1, swap);
  auto sigma = tw.simple_permutation(rd);
  CHECK(sigma == std::vector<long>{1, 0});
  CHECK(tw.frobenius_y().at(0, 1) == 2);
}

TEST_CASE("non-permuting tau is rejected") {
  auto rd = build_root_datum("SL2");
  IntMatrix bad(1, 1);
  bad.at(0, 0) = 2;  // scales the coroot, no twist
  CHECK_THROWS_AS(make_twist(rd, 2, 1, bad), ValidationError);
  CHECK_THROWS_AS(make_twist(rd, 4, 1), ValidationError);  // p must be prime
}

TEST_CASE("GL2 unitary twist: tau(e_i) = -e_{1-i} permutes the coroots") {
  auto rd = build_root_datum("GL2");
  IntMatrix tau(2, 2);
  tau.at(0, 1) = -1;
  tau.at(1, 0) = -1;
  auto tw = make_twist(rd, 3, 1, tau);
  CHECK(tw.simple_permutation(rd) == std::vector<long>{0});
  CHECK(tw.tau_x() == tau);  // self-adjoint involution here
}

// ---------------------------------------------------------------------------
// Sequences over S-bar
// ---------------------------------------------------------------------------

TEST_CASE("seq_leq examples") {
  CHECK(seq_leq(SeqBarS{0, 1}, SeqBarS{1, 1}));        // (1,s) <= (s,s)
  CHECK_FALSE(seq_leq(SeqBarS{1, 0}, SeqBarS{0, 1}));  // (s,1) vs (1,s)
  CHECK(seq_leq(SeqBarS{0, 0}, SeqBarS{1, 2}));
  CHECK(seq_leq(SeqBarS{1, 2}, SeqBarS{1, 2}));
  CHECK_FALSE(seq_leq(SeqBarS{2}, SeqBarS{1}));
  CHECK_THROWS_AS(seq_leq(SeqBarS{1}, SeqBarS{1, 1}), ValidationError);
}

TEST_CASE("sequence lengths, products, intervals") {
  auto rd = build_root_datum("A2-sc");
  auto wg = WeylGroup::enumerate(rd);
  SeqBarS w{1, 0, 2, 1};  // (s1, 1, s2, s1)
  validate_seq(rd, w);
  CHECK(seq_length(w) == 3);
  CHECK(seq_length(SeqBarS{0, 0}) == 0);
  long prod = seq_product_index(wg, w);
  CHECK(prod == wg.mul(wg.mul(wg.simple(0), wg.simple(1)), wg.simple(0)));
  CHECK(seq_product_y(rd, w) == wg.at(prod).m);

  SeqBarS v{0, 0, 2, 0};
  REQUIRE(seq_leq(v, w));
  CHECK(seq_diff_positions(w, v) == std::vector<long>{0, 3});
  auto box = seq_interval(v, w);
  CHECK(box.size() == 4);  // two free positions
  for (const auto& y : box) {
    CHECK(seq_leq(v, y));
    CHECK(seq_leq(y, w));
  }
  CHECK(seqs_below(w).size() == 8);
  CHECK(all_seqs(rd, 2).size() == 9);  // (m+1)^r with m = 2
  CHECK_THROWS_AS(seq_diff_positions(v, w), NotComparable);
  SeqBarS bad{5};
  CHECK_THROWS_AS(validate_seq(rd, bad), ValidationError);
}

TEST_CASE("sequence parsing round-trip") {
  SeqBarS w{1, 0, 2};
  CHECK(seq_to_string(w) == "s1,1,s2");
  CHECK(seq_parse("s1,1,s2") == w);
  CHECK(seq_parse("1") == SeqBarS{0});
  CHECK_THROWS_AS(seq_parse("s0"), ValidationError);
  CHECK_THROWS_AS(seq_parse("x3"), ValidationError);
}
