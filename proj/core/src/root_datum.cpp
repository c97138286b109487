#include "finred/root_datum.hpp"

#include <algorithm>
#include <set>

namespace finred {

Int dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ValidationError("dot: length mismatch");
  Int acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

IntMatrix RootDatum::cartan() const {
  long m = num_simple();
  IntMatrix c(m, m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) c.at(i, j) = dot(simple_root(i), simple_coroot(j));
  return c;
}

IntMatrix RootDatum::simple_reflection_y(long i) const {
  const Vec& alpha = simple_root(i);
  const Vec& cv = simple_coroot(i);
  IntMatrix m = IntMatrix::identity(rank);
  for (long k = 0; k < rank; ++k)
    for (long j = 0; j < rank; ++j)
      m.at(k, j) -= alpha[static_cast<size_t>(j)] * cv[static_cast<size_t>(k)];
  return m;
}

IntMatrix RootDatum::simple_reflection_x(long i) const {
  const Vec& alpha = simple_root(i);
  const Vec& cv = simple_coroot(i);
  IntMatrix m = IntMatrix::identity(rank);
  for (long k = 0; k < rank; ++k)
    for (long j = 0; j < rank; ++j)
      m.at(k, j) -= cv[static_cast<size_t>(j)] * alpha[static_cast<size_t>(k)];
  return m;
}

long RootDatum::root_index(const Vec& alpha) const {
  for (size_t t = 0; t < roots.size(); ++t)
    if (roots[t] == alpha) return static_cast<long>(t);
  return -1;
}

IntMatrix RootDatum::simple_root_matrix() const {
  std::vector<Vec> cols;
  for (long i = 0; i < num_simple(); ++i) cols.push_back(simple_root(i));
  return IntMatrix::from_columns(rank, cols);
}

IntMatrix RootDatum::simple_coroot_matrix() const {
  std::vector<Vec> cols;
  for (long i = 0; i < num_simple(); ++i) cols.push_back(simple_coroot(i));
  return IntMatrix::from_columns(rank, cols);
}

Vec RootDatum::root_in_simple_basis(long idx) const {
  auto c = solve(simple_root_matrix(), roots[static_cast<size_t>(idx)]);
  internal_check(c.has_value(), "root does not lie in the simple-root span");
  return *c;
}

std::vector<long> RootDatum::positive_roots() const {
  std::vector<long> out;
  for (long t = 0; t < num_roots(); ++t) {
    Vec c = root_in_simple_basis(t);
    bool nonneg = true;
    for (const auto& x : c)
      if (x < 0) nonneg = false;
    if (nonneg) out.push_back(t);
  }
  return out;
}

namespace {

// Basic shape checks plus finite type (all leading principal minors positive).
void validate_cartan(const IntMatrix& c) {
  long m = c.rows();
  if (c.cols() != m) throw InvalidCartan("Cartan matrix must be square");
  for (long i = 0; i < m; ++i) {
    if (c.at(i, i) != 2) throw InvalidCartan("Cartan diagonal entries must be 2");
    for (long j = 0; j < m; ++j) {
      if (i == j) continue;
      if (c.at(i, j) > 0) throw InvalidCartan("off-diagonal Cartan entries must be <= 0");
      if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
        throw InvalidCartan("Cartan zeros must be symmetric");
    }
  }
  for (long k = 1; k <= m; ++k) {
    IntMatrix lead(k, k);
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) lead.at(i, j) = c.at(i, j);
    if (lead.det() <= 0)
      throw NonCrystallographic("Cartan matrix is not of finite type");
  }
}

}  // namespace

void validate_root_datum(const RootDatum& rd) {
  if (rd.rank < 0) throw ValidationError("negative rank");
  if (rd.roots.size() != rd.coroots.size())
    throw ValidationError("roots and coroots must be aligned");
  for (const auto& r : rd.roots)
    if (static_cast<long>(r.size()) != rd.rank)
      throw ValidationError("root coordinate length mismatch");
  for (const auto& c : rd.coroots)
    if (static_cast<long>(c.size()) != rd.rank)
      throw ValidationError("coroot coordinate length mismatch");
  std::set<std::string> seen;
  for (const auto& r : rd.roots) {
    std::string k = vec_to_string(r);
    if (seen.count(k)) throw ValidationError("duplicate root");
    seen.insert(k);
  }
  for (size_t t = 0; t < rd.roots.size(); ++t)
    if (dot(rd.roots[t], rd.coroots[t]) != 2)
      throw ValidationError("<alpha, alpha^vee> must be 2");
  for (long i : rd.simple)
    if (i < 0 || i >= rd.num_roots()) throw ValidationError("bad simple index");
  if (rd.num_simple() > 0) validate_cartan(rd.cartan());

  // Reflections permute the root system (both sides), roots are primitive.
  for (long i = 0; i < rd.num_simple(); ++i) {
    IntMatrix sy = rd.simple_reflection_y(i);
    IntMatrix sx = rd.simple_reflection_x(i);
    for (long t = 0; t < rd.num_roots(); ++t) {
      Vec r = sx.apply(rd.roots[static_cast<size_t>(t)]);
      long idx = rd.root_index(r);
      if (idx < 0) throw ValidationError("reflection does not permute the roots");
      if (sy.apply(rd.coroots[static_cast<size_t>(t)]) != rd.coroots[static_cast<size_t>(idx)])
        throw ValidationError("reflection does not permute the coroots compatibly");
    }
  }
  for (long t = 0; t < rd.num_roots(); ++t) {
    Vec c = rd.root_in_simple_basis(t);
    Int g = 0;
    for (const auto& x : c) g = gcd_int(g, x);
    if (g != 1) throw ValidationError("root is not primitive in Z*Phi");
  }
}

RootDatum dual_datum(const RootDatum& rd) {
  RootDatum d;
  d.rank = rd.rank;
  d.roots = rd.coroots;
  d.coroots = rd.roots;
  d.simple = rd.simple;
  return d;
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
  RootDatum s;
  s.rank = a.rank + b.rank;
  auto pad_left = [&](const Vec& v) {
    Vec out(static_cast<size_t>(s.rank), Int(0));
    for (size_t t = 0; t < v.size(); ++t) out[t] = v[t];
    return out;
  };
  auto pad_right = [&](const Vec& v) {
    Vec out(static_cast<size_t>(s.rank), Int(0));
    for (size_t t = 0; t < v.size(); ++t) out[static_cast<size_t>(a.rank) + t] = v[t];
    return out;
  };
  for (size_t t = 0; t < a.roots.size(); ++t) {
    s.roots.push_back(pad_left(a.roots[t]));
    s.coroots.push_back(pad_left(a.coroots[t]));
  }
  for (size_t t = 0; t < b.roots.size(); ++t) {
    s.roots.push_back(pad_right(b.roots[t]));
    s.coroots.push_back(pad_right(b.coroots[t]));
  }
  for (long i : a.simple) s.simple.push_back(i);
  for (long i : b.simple) s.simple.push_back(i + a.num_roots());
  return s;
}

namespace {

// Generate the full system from a simple system by reflection closure.
RootDatum close_simple_system(long rank, std::vector<Vec> simple_roots,
                              std::vector<Vec> simple_coroots) {
  long m = static_cast<long>(simple_roots.size());
  std::vector<std::pair<Vec, Vec>> all;
  for (long i = 0; i < m; ++i)
    all.emplace_back(simple_roots[static_cast<size_t>(i)],
                     simple_coroots[static_cast<size_t>(i)]);
  auto find = [&](const Vec& r) -> long {
    for (size_t t = 0; t < all.size(); ++t)
      if (all[t].first == r) return static_cast<long>(t);
    return -1;
  };
  for (size_t head = 0; head < all.size(); ++head) {
    for (long i = 0; i < m; ++i) {
      const Vec& si_root = simple_roots[static_cast<size_t>(i)];
      const Vec& si_cv = simple_coroots[static_cast<size_t>(i)];
      Int a = dot(all[head].first, si_cv);
      Int b = dot(si_root, all[head].second);
      Vec r = all[head].first, c = all[head].second;
      for (size_t t = 0; t < r.size(); ++t) {
        r[t] -= a * si_root[t];
        c[t] -= b * si_cv[t];
      }
      if (find(r) < 0) all.emplace_back(std::move(r), std::move(c));
    }
    if (all.size() > 1000)
      throw NonCrystallographic("root closure does not terminate");
  }
  RootDatum rd;
  rd.rank = rank;
  for (auto& [r, c] : all) {
    rd.roots.push_back(std::move(r));
    rd.coroots.push_back(std::move(c));
  }
  for (long i = 0; i < m; ++i) rd.simple.push_back(i);
  validate_root_datum(rd);
  return rd;
}

}  // namespace

RootDatum root_datum_simply_connected(const IntMatrix& cartan) {
  validate_cartan(cartan);
  long m = cartan.rows();
  std::vector<Vec> roots, coroots;
  for (long i = 0; i < m; ++i) {
    roots.push_back(cartan.row(i));  // alpha_i = row i, so <a_i, a_j^vee> = C_ij
    Vec e(static_cast<size_t>(m), Int(0));
    e[static_cast<size_t>(i)] = 1;
    coroots.push_back(std::move(e));
  }
  return close_simple_system(m, roots, coroots);
}

RootDatum root_datum_adjoint(const IntMatrix& cartan) {
  validate_cartan(cartan);
  long m = cartan.rows();
  std::vector<Vec> roots, coroots;
  for (long i = 0; i < m; ++i) {
    Vec e(static_cast<size_t>(m), Int(0));
    e[static_cast<size_t>(i)] = 1;
    roots.push_back(std::move(e));
    coroots.push_back(cartan.col(i));  // alpha_j^vee = column j
  }
  return close_simple_system(m, roots, coroots);
}

RootDatum root_datum_gl(long n) {
  if (n < 2) throw ValidationError("GL builtin needs n >= 2");
  std::vector<Vec> roots, coroots;
  for (long i = 0; i + 1 < n; ++i) {
    Vec v(static_cast<size_t>(n), Int(0));
    v[static_cast<size_t>(i)] = 1;
    v[static_cast<size_t>(i + 1)] = -1;
    roots.push_back(v);
    coroots.push_back(v);
  }
  return close_simple_system(n, roots, coroots);
}

IntMatrix cartan_of_type(const std::string& type) {
  if (type.size() >= 2 && type[0] == 'A') {
    long m = std::stol(type.substr(1));
    if (m >= 1 && m <= 8) {
      IntMatrix c(m, m);
      for (long i = 0; i < m; ++i) {
        c.at(i, i) = 2;
        if (i + 1 < m) {
          c.at(i, i + 1) = -1;
          c.at(i + 1, i) = -1;
        }
      }
      return c;
    }
  }
  auto two_by_two = [](int c01, int c10) {
    IntMatrix c(2, 2);
    c.at(0, 0) = 2;
    c.at(1, 1) = 2;
    c.at(0, 1) = c01;
    c.at(1, 0) = c10;
    return c;
  };
  if (type == "B2") return two_by_two(-2, -1);
  if (type == "C2") return two_by_two(-1, -2);
  if (type == "G2") return two_by_two(-1, -3);
  throw UnknownType("unknown Cartan type '" + type + "'");
}

RootDatum build_root_datum(const std::string& name) {
  auto join = name.find(" x ");
  if (join != std::string::npos)
    return direct_sum(build_root_datum(name.substr(0, join)),
                      build_root_datum(name.substr(join + 3)));
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  try {
    if (name == "Sp4") return root_datum_simply_connected(cartan_of_type("C2"));
    if (starts("SL"))
      return root_datum_simply_connected(cartan_of_type("A" + std::to_string(std::stol(name.substr(2)) - 1)));
    if (starts("PGL"))
      return root_datum_adjoint(cartan_of_type("A" + std::to_string(std::stol(name.substr(3)) - 1)));
    if (starts("GL")) return root_datum_gl(std::stol(name.substr(2)));
    if (name.size() > 3 && name.substr(name.size() - 3) == "-sc")
      return root_datum_simply_connected(cartan_of_type(name.substr(0, name.size() - 3)));
    if (name.size() > 3 && name.substr(name.size() - 3) == "-ad")
      return root_datum_adjoint(cartan_of_type(name.substr(0, name.size() - 3)));
  } catch (const std::invalid_argument&) {
    throw UnknownType("unparsable datum name '" + name + "'");
  } catch (const std::out_of_range&) {
    throw UnknownType("unparsable datum name '" + name + "'");
  }
  throw UnknownType("unknown datum name '" + name + "'");
}

IntMatrix FrobeniusTwist::tau_inverse() const {
  long o = tau.multiplicative_order(256);
  IntMatrix inv = IntMatrix::identity(tau.rows());
  for (long k = 0; k + 1 < o; ++k) inv = inv * tau;
  return inv;
}

IntMatrix FrobeniusTwist::tau_x() const { return tau_inverse().transpose(); }

std::vector<long> FrobeniusTwist::simple_permutation(const RootDatum& rd) const {
  std::vector<long> sigma(static_cast<size_t>(rd.num_simple()), -1);
  for (long i = 0; i < rd.num_simple(); ++i) {
    Vec img = tau.apply(rd.simple_coroot(i));
    for (long j = 0; j < rd.num_simple(); ++j)
      if (rd.simple_coroot(j) == img) sigma[static_cast<size_t>(i)] = j;
    if (sigma[static_cast<size_t>(i)] < 0)
      throw ValidationError("tau does not permute the simple coroots");
  }
  std::vector<long> check = sigma;
  std::sort(check.begin(), check.end());
  for (long i = 0; i < rd.num_simple(); ++i)
    if (check[static_cast<size_t>(i)] != i)
      throw ValidationError("tau is not injective on the simple coroots");
  return sigma;
}

void validate_twist(const RootDatum& rd, const FrobeniusTwist& tw) {
  if (!is_prime_int(tw.p)) throw ValidationError("p must be prime");
  if (tw.a < 1) throw ValidationError("exponent a must be >= 1");
  if (tw.tau.rows() != rd.rank || tw.tau.cols() != rd.rank)
    throw ValidationError("tau must act on Y");
  try {
    tw.tau.multiplicative_order(256);
  } catch (const CapExceeded&) {
    throw ValidationError("tau must have finite order");
  }
  auto sigma = tw.simple_permutation(rd);
  IntMatrix tx = tw.tau_x();
  for (long i = 0; i < rd.num_simple(); ++i)
    if (tx.apply(rd.simple_root(i)) != rd.simple_root(sigma[static_cast<size_t>(i)]))
      throw ValidationError("tau's adjoint does not permute the simple roots compatibly");
}

FrobeniusTwist make_twist(const RootDatum& rd, const Int& p, long a) {
  return make_twist(rd, p, a, IntMatrix::identity(rd.rank));
}

FrobeniusTwist make_twist(const RootDatum& rd, const Int& p, long a, IntMatrix tau) {
  FrobeniusTwist tw{p, a, std::move(tau)};
  validate_twist(rd, tw);
  return tw;
}

WeylGroup WeylGroup::enumerate(const RootDatum& rd, long cap) {
  WeylGroup wg;
  wg.rd_ = rd;
  long m = rd.num_simple();
  std::vector<IntMatrix> refl;
  for (long i = 0; i < m; ++i) refl.push_back(rd.simple_reflection_y(i));

  wg.elems_.push_back(WeylElement{{}, IntMatrix::identity(rd.rank)});
  wg.index_[wg.elems_[0].m.key()] = 0;
  // Breadth-first: parents in discovery order, children by ascending simple
  // index, so each element's first word is its lex-minimal reduced word.
  for (size_t head = 0; head < wg.elems_.size(); ++head) {
    for (long i = 0; i < m; ++i) {
      IntMatrix cand = wg.elems_[head].m * refl[static_cast<size_t>(i)];
      std::string key = cand.key();
      if (wg.index_.count(key)) continue;
      std::vector<long> word = wg.elems_[head].word;
      word.push_back(i);
      wg.index_[key] = static_cast<long>(wg.elems_.size());
      wg.elems_.push_back(WeylElement{std::move(word), std::move(cand)});
      if (static_cast<long>(wg.elems_.size()) > cap)
        throw CapExceeded("Weyl enumeration exceeds the configured cap");
    }
  }
  for (long i = 0; i < m; ++i)
    wg.simple_.push_back(wg.index_.at(refl[static_cast<size_t>(i)].key()));
  return wg;
}

long WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

long WeylGroup::mul(long i, long j) const {
  long k = index_of(at(i).m * at(j).m);
  internal_check(k >= 0, "Weyl group not closed under multiplication");
  return k;
}

long WeylGroup::inverse(long k) const {
  IntMatrix m = IntMatrix::identity(rd_.rank);
  const auto& word = at(k).word;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = m * rd_.simple_reflection_y(*it);
  long r = index_of(m);
  internal_check(r >= 0, "inverse not found");
  return r;
}

long WeylGroup::longest() const {
  long best = 0;
  for (long k = 1; k < size(); ++k)
    if (length(k) > length(best)) best = k;
  return best;
}

bool bruhat_leq(const WeylGroup& wg, long v, long w) {
  // Descent recursion: for a left descent s of w,
  //   v <= w  iff  min(v, sv) <= sw.
  while (wg.length(w) > 0) {
    if (wg.length(v) > wg.length(w)) return false;
    if (v == w) return true;
    // left descent: first i with l(s_i w) < l(w)
    long i = -1;
    long m = wg.datum().num_simple();
    for (long t = 0; t < m; ++t) {
      long sw = wg.mul(wg.simple(t), w);
      if (wg.length(sw) < wg.length(w)) {
        i = t;
        break;
      }
    }
    internal_check(i >= 0, "nontrivial element with no left descent");
    long sv = wg.mul(wg.simple(i), v);
    if (wg.length(sv) < wg.length(v)) v = sv;
    w = wg.mul(wg.simple(i), w);
  }
  return wg.length(v) == 0;
}

}  // namespace finred
