// Implementation of the finred command line.  Each subcommand resolves the
// shared configuration into a root datum and a Frobenius twist, computes
// through the core library, and renders either a human-readable table or a
// versioned CSV.  With --cache-dir the rendered output is keyed by a content
// hash of everything that determines it and replayed byte-identically.

#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "finred/abelian.hpp"
#include "finred/basics.hpp"
#include "finred/finite_torus.hpp"
#include "finred/lattice.hpp"
#include "finred/matrix.hpp"
#include "finred/qz.hpp"
#include "finred/root_datum.hpp"
#include "finred/seq.hpp"
#include "finred/series.hpp"
#include "finred/strata.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace finred::cli {

namespace {

// Per-command arguments collected by the parser.
struct Parsed {
  std::string w_arg;                  // torus / monodromy positional
  std::vector<std::string> cochars;   // torus --cochar
  std::string filter;                 // series --filter
  long series_index = -1;             // monodromy --series
  std::string theta_arg;              // monodromy --theta
  std::string s_arg;                  // jordan --s
  std::string fixing_w;               // jordan --fixing-w
};

// ---------------------------------------------------------------------------
// Rendering helpers

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Quotes a CSV field only when it needs it (commas or quotes inside).
std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Renders a sequence the way seq_parse reads it back; the empty word is the
// identity element "1".
std::string word_str(const SeqBarS& w) {
  if (w.empty()) return "1";
  return seq_to_string(w);
}

// The stored reduced word of a Weyl element, as a parsable sequence.
std::string element_str(const WeylGroup& wg, long k) {
  SeqBarS w;
  for (long i : wg.at(k).word) w.push_back(i + 1);
  return word_str(w);
}

std::string shape_str(const FiniteAbelianGroup& g) {
  std::vector<Int> f = g.invariant_factors();
  if (f.empty()) return "trivial";
  std::string out;
  for (size_t i = 0; i < f.size(); ++i)
    out += std::string(i ? " x " : "") + "Z/" + f[i].str();
  return out;
}

std::string int_list_str(const std::vector<Int>& v, const char* sep = ";") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += std::string(i ? sep : "") + v[i].str();
  return out;
}

std::string prime_set_str(const std::vector<Int>& v) {
  return "{" + int_list_str(v, ", ") + "}";
}

std::string simples_str(const std::vector<long>& v, const char* sep = ", ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i)
    out += std::string(i ? sep : "") + "s" + std::to_string(v[i] + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Input parsing helpers

std::vector<long> parse_long_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(what + ": not a comma-separated integer list: " + s);
    }
  }
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

Vec parse_int_list(const std::string& s, const std::string& what) {
  Vec out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(Int(tok));
    } catch (const std::exception&) {
      throw ValidationError(what + ": not a comma-separated integer list: " + s);
    }
  }
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

// ---------------------------------------------------------------------------
// Configuration resolution

RootDatum datum_from_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("datum: cannot open file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("datum: ") + e.what());
  }
  RootDatum rd;
  try {
    rd.rank = j.at("rank").get<long>();
    for (const auto& row : j.at("roots")) {
      Vec v;
      for (const auto& x : row) v.push_back(Int(x.get<long long>()));
      rd.roots.push_back(std::move(v));
    }
    for (const auto& row : j.at("coroots")) {
      Vec v;
      for (const auto& x : row) v.push_back(Int(x.get<long long>()));
      rd.coroots.push_back(std::move(v));
    }
    for (const auto& x : j.at("simple")) rd.simple.push_back(x.get<long>());
  } catch (const std::exception& e) {
    throw ValidationError(std::string("datum: malformed root-datum file: ") +
                          e.what());
  }
  validate_root_datum(rd);
  return rd;
}

RootDatum resolve_datum(const JobConfig& cfg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.datum, ec))
    return datum_from_file(cfg.datum);
  if (cfg.datum == "GLn" || cfg.datum == "SLn" || cfg.datum == "PGLn") {
    if (cfg.n <= 0)
      throw ValidationError("datum: family name " + cfg.datum +
                            " needs --n");
    std::string name =
        cfg.datum.substr(0, cfg.datum.size() - 1) + std::to_string(cfg.n);
    return build_root_datum(name);
  }
  return build_root_datum(cfg.datum);
}

FrobeniusTwist resolve_twist(const RootDatum& rd, const JobConfig& cfg) {
  if (cfg.twist == "split") return make_twist(rd, cfg.p, cfg.a);
  if (cfg.twist.rfind("perm=", 0) == 0) {
    std::vector<long> sigma = parse_long_list(cfg.twist.substr(5), "twist");
    long ns = rd.num_simple();
    if (static_cast<long>(sigma.size()) != ns)
      throw ValidationError(
          "twist: the permutation needs one entry per simple root");
    std::vector<bool> seen(sigma.size(), false);
    for (long v : sigma) {
      if (v < 0 || v >= ns || seen[static_cast<size_t>(v)])
        throw ValidationError("twist: not a permutation of 0.." +
                              std::to_string(ns - 1));
      seen[static_cast<size_t>(v)] = true;
    }
    // tau is pinned down by tau(alpha_i^vee) = alpha_{sigma(i)}^vee, which
    // only determines a matrix when the simple coroots are a basis of Y.
    if (ns != rd.rank)
      throw ValidationError(
          "twist: permutation twists need the simple coroots to be a basis "
          "of Y");
    IntMatrix c = rd.simple_coroot_matrix();
    std::vector<Vec> cols;
    for (long i = 0; i < ns; ++i)
      cols.push_back(
          rd.coroots[static_cast<size_t>(rd.simple[static_cast<size_t>(
              sigma[static_cast<size_t>(i)])])]);
    IntMatrix c_sigma = IntMatrix::from_columns(rd.rank, cols);
    std::optional<IntMatrix> sol =
        solve_matrix(c.transpose(), c_sigma.transpose());
    if (!sol)
      throw TwistNotLiftable(
          "twist: the permutation does not lift to an integral action on Y");
    return make_twist(rd, cfg.p, cfg.a, sol->transpose());
  }
  throw ValidationError("twist: unrecognized twist '" + cfg.twist +
                        "' (use split or perm=<sigma>)");
}

// ---------------------------------------------------------------------------
// Subcommands

std::string run_torus(const RootDatum& rd, const FrobeniusTwist& tw,
                      const JobConfig& cfg, const Parsed& pa) {
  SeqBarS w = seq_parse(pa.w_arg);
  FiniteTorus t = finite_torus(rd, tw, w);
  std::vector<std::pair<std::string, std::string>> norms;
  for (const std::string& arg : pa.cochars) {
    Vec lambda = parse_int_list(arg, "torus");
    if (static_cast<long>(lambda.size()) != rd.rank)
      throw ValidationError("torus: cocharacter has " +
                            std::to_string(lambda.size()) +
                            " entries; the datum has rank " +
                            std::to_string(rd.rank));
    norms.emplace_back(arg, int_list_str(t.norm(lambda)));
  }

  std::ostringstream os;
  std::string wstr = word_str(w);
  if (cfg.format == "csv") {
    os << "# finred-torus-csv 1\n";
    os << "key,value\n";
    os << "datum," << csv_field(cfg.datum) << "\n";
    os << "q," << tw.q().str() << "\n";
    os << "w," << csv_field(wstr) << "\n";
    os << "invariant_factors," << int_list_str(t.group.invariant_factors())
       << "\n";
    os << "order," << t.group.order().str() << "\n";
    for (const auto& [arg, val] : norms)
      os << csv_field("norm(" + arg + ")") << "," << val << "\n";
  } else {
    os << "datum " << cfg.datum << ", q = " << tw.q().str() << ", w = " << wstr
       << "\n";
    os << "T^{wF} = " << shape_str(t.group) << ", order "
       << t.group.order().str() << "\n";
    for (const auto& [arg, val] : norms)
      os << "norm(" << arg << ") = " << val << "\n";
  }
  return os.str();
}

std::string run_series(const RootDatum& rd, const FrobeniusTwist& tw,
                       const JobConfig& cfg, const Parsed& pa) {
  if (!pa.filter.empty() && pa.filter != "trivial")
    throw ValidationError("series: unknown filter '" + pa.filter +
                          "' (only trivial is supported)");

  WeylGroup wg = WeylGroup::enumerate(rd);
  std::vector<SeriesId> part = cfg.mode == "brauer"
                                   ? series_partition_brauer(rd, tw, cfg.ell)
                                   : series_partition(rd, tw);
  std::vector<SeriesId> geo = geometric_partition(rd, tw);
  std::map<std::pair<long, std::string>, long> geo_of;
  for (size_t g = 0; g < geo.size(); ++g)
    for (const Pair& m : geo[g].members)
      geo_of[{wg.index_of(m.w.m), qzvec_to_string(m.theta.values)}] =
          static_cast<long>(g);

  bool csv = cfg.format == "csv";
  std::ostringstream os;
  if (csv) {
    os << "# finred-series-csv 1\n";
    os << "representative_w,representative_theta,size,geometric_class,"
          "minimal_pairs,dual_s\n";
  } else {
    os << "series census: " << cfg.datum << ", q = " << tw.q().str()
       << ", mode " << cfg.mode;
    if (cfg.mode == "brauer") os << ", ell = " << cfg.ell.str();
    os << "\n";
    os << "representative_w representative_theta size geometric_class "
          "minimal_pairs dual_s\n";
  }

  long shown = 0;
  for (const SeriesId& sid : part) {
    if (pa.filter == "trivial") {
      bool has_trivial = false;
      for (const Pair& m : sid.members)
        if (m.theta.is_trivial()) {
          has_trivial = true;
          break;
        }
      if (!has_trivial) continue;
    }
    const Pair& rep = sid.representative;
    SeqBarS wword;
    for (long i : rep.w.word) wword.push_back(i + 1);
    std::string wstr = word_str(wword);
    std::string thstr = qzvec_to_string(rep.theta.values);
    auto it = geo_of.find({wg.index_of(rep.w.m), thstr});
    internal_check(it != geo_of.end(),
                   "series representative missing from the geometric "
                   "partition");
    long nmin = static_cast<long>(minimal_pairs(rd, tw, sid).size());
    std::string dstr = qzvec_to_string(dual_ss(rd, tw, rep).s);
    if (csv) {
      os << csv_field(wstr) << "," << thstr << "," << sid.member_count()
         << "," << it->second << "," << nmin << "," << dstr << "\n";
    } else {
      os << wstr << " " << (thstr.empty() ? "-" : thstr) << " "
         << sid.member_count() << " " << it->second << " " << nmin << " "
         << (dstr.empty() ? "-" : dstr) << "\n";
    }
    ++shown;
  }
  if (!csv) os << shown << " series\n";
  return os.str();
}

std::string run_monodromy(const RootDatum& rd, const FrobeniusTwist& tw,
                          const JobConfig& cfg, const Parsed& pa) {
  bool got_w = !pa.w_arg.empty();
  bool got_series = pa.series_index >= 0;
  if (got_w == got_series)
    throw ValidationError(
        "monodromy: give exactly one of the sequence or --series");

  SeqBarS w;
  TorusCharacter theta;
  if (got_series) {
    std::vector<SeriesId> part =
        cfg.mode == "brauer" ? series_partition_brauer(rd, tw, cfg.ell)
                             : series_partition(rd, tw);
    if (pa.series_index >= static_cast<long>(part.size()))
      throw ValidationError("monodromy: --series index out of range (census "
                            "has " +
                            std::to_string(part.size()) + " rows)");
    const Pair& rep = part[static_cast<size_t>(pa.series_index)].representative;
    for (long i : rep.w.word) w.push_back(i + 1);
    theta = rep.theta;
  } else {
    w = seq_parse(pa.w_arg);
    if (!pa.theta_arg.empty()) {
      theta.values = qzvec_parse(pa.theta_arg);
    } else {
      FiniteTorus t = finite_torus(rd, tw, w);
      theta.values =
          QZVec(static_cast<size_t>(t.group.num_generators()), QZ());
    }
  }

  MonodromyTable mt = monodromy_table(rd, tw, w, theta);

  bool csv = cfg.format == "csv";
  std::ostringstream os;
  if (csv) {
    os << "# finred-monodromy-csv 1\n";
    os << "stratum,codim,in_interval,multiplicities\n";
  } else {
    std::string thstr = qzvec_to_string(theta.values);
    os << "monodromy table: " << cfg.datum << ", q = " << tw.q().str()
       << ", w = " << word_str(w) << ", theta = "
       << (thstr.empty() ? "-" : thstr) << "\n";
    os << "stratum codim in_interval multiplicities\n";
  }
  for (size_t k = 0; k < mt.poset.strata.size(); ++k) {
    const SeqBarS& v = mt.poset.strata[k];
    long codim = mt.poset.codim(v);
    std::string mults = int_list_str(mt.rows[k]);
    if (csv) {
      os << csv_field(word_str(v)) << "," << codim << ","
         << (mt.in_interval[k] ? 1 : 0) << "," << mults << "\n";
    } else {
      os << word_str(v) << " " << codim << " "
         << (mt.in_interval[k] ? "yes" : "no") << " " << mults << "\n";
    }
  }
  return os.str();
}

// s is fixed by the twisted Frobenius of w when q (w tau)^T s = s in
// X tensor Q/Z.
bool fixes_dual(const RootDatum& rd, const FrobeniusTwist& tw,
                const IntMatrix& wm, const QZVec& s) {
  IntMatrix wf = wm * tw.tau;
  Int q = tw.q();
  for (long j = 0; j < rd.rank; ++j) {
    QZ acc;
    for (long i = 0; i < rd.rank; ++i)
      acc = acc + (q * wf.at(i, j)) * s[static_cast<size_t>(i)];
    if (acc != s[static_cast<size_t>(j)]) return false;
  }
  return true;
}

std::string run_jordan(const RootDatum& rd, const FrobeniusTwist& tw,
                       const JobConfig& cfg, const Parsed& pa) {
  QZVec s = qzvec_parse(pa.s_arg);
  if (static_cast<long>(s.size()) != rd.rank)
    throw ValidationError("jordan: s has " + std::to_string(s.size()) +
                          " entries; the datum has rank " +
                          std::to_string(rd.rank));
  WeylGroup wg = WeylGroup::enumerate(rd);
  long fix = -1;
  if (!pa.fixing_w.empty()) {
    fix = seq_product_index(wg, seq_parse(pa.fixing_w));
  } else {
    for (long k = 0; k < wg.size(); ++k)
      if (fixes_dual(rd, tw, wg.at(k).m, s)) {
        fix = k;
        break;
      }
    if (fix < 0)
      throw ValidationError(
          "jordan: no twisted Frobenius of the Weyl group fixes s");
  }
  DualSS d{s, wg.at(fix)};
  JordanDatum jd = jordan_datum(rd, tw, d);
  std::vector<Int> bad = bad_primes(rd);
  std::vector<Int> pi = pi_set(rd, tw);
  bool qi = is_quasi_isolated(rd, s);
  std::string kind = jd.levi_simples.empty()
                         ? "torus"
                         : (static_cast<long>(jd.levi_simples.size()) ==
                                    rd.num_simple()
                                ? "G"
                                : "standard");

  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "# finred-jordan-csv 1\n";
    os << "key,value\n";
    os << "datum," << csv_field(cfg.datum) << "\n";
    os << "q," << tw.q().str() << "\n";
    os << "s," << qzvec_to_string(s) << "\n";
    os << "fixing_w," << csv_field(element_str(wg, fix)) << "\n";
    os << "bad_primes," << int_list_str(bad) << "\n";
    os << "pi," << int_list_str(pi) << "\n";
    os << "quasi_isolated," << (qi ? 1 : 0) << "\n";
    os << "is_levi," << (jd.is_levi ? 1 : 0) << "\n";
    if (jd.is_levi) {
      os << "levi_kind," << kind << "\n";
      os << "levi_simples," << csv_field(simples_str(jd.levi_simples, ";"))
         << "\n";
      os << "v_prime," << csv_field(element_str(wg, jd.v_prime)) << "\n";
      os << "conjugator," << csv_field(element_str(wg, jd.conjugator)) << "\n";
    } else {
      os << "obstruction," << csv_field(jd.obstruction) << "\n";
      os << "obstruction_primes," << int_list_str(jd.obstruction_primes)
         << "\n";
    }
  } else {
    os << "datum " << cfg.datum << ", q = " << tw.q().str() << "\n";
    os << "s = " << qzvec_to_string(s) << ", fixed by w = "
       << element_str(wg, fix) << "\n";
    os << "bad primes = " << prime_set_str(bad) << "\n";
    os << "pi = " << prime_set_str(pi) << "\n";
    os << "quasi-isolated: " << (qi ? "yes" : "no") << "\n";
    if (jd.is_levi) {
      os << "Levi: " << kind << " (I' = {" << simples_str(jd.levi_simples)
         << "}, v' = " << element_str(wg, jd.v_prime) << ")\n";
      os << "conjugator = " << element_str(wg, jd.conjugator) << "\n";
    } else {
      os << "NotLevi: " << jd.obstruction
         << "; pi = " << prime_set_str(jd.obstruction_primes) << "\n";
    }
  }
  return os.str();
}

std::string dispatch(const std::string& command, const JobConfig& cfg,
                     const Parsed& pa) {
  RootDatum rd = resolve_datum(cfg);
  FrobeniusTwist tw = resolve_twist(rd, cfg);
  if (command == "torus") return run_torus(rd, tw, cfg, pa);
  if (command == "series") return run_series(rd, tw, cfg, pa);
  if (command == "monodromy") return run_monodromy(rd, tw, cfg, pa);
  return run_jordan(rd, tw, cfg, pa);
}

// Everything the output depends on: the datum argument (file contents for file
// datums, so edits invalidate), q, twist, mode, format, and the command with
// its arguments.
std::string cache_blob(const JobConfig& cfg, const std::string& command,
                       const Parsed& pa) {
  std::string blob;
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.datum, ec)) {
    std::ifstream f(cfg.datum, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    blob = ss.str();
  } else {
    blob = cfg.datum;
  }
  auto add = [&blob](const std::string& piece) {
    blob += '\x1f';
    blob += piece;
  };
  add(std::to_string(cfg.n));
  add(cfg.p.str());
  add(std::to_string(cfg.a));
  add(cfg.twist);
  add(cfg.mode);
  add(cfg.ell.str());
  add(cfg.format);
  add(command);
  add(pa.w_arg);
  for (const std::string& c : pa.cochars) add(c);
  add(pa.filter);
  add(std::to_string(pa.series_index));
  add(pa.theta_arg);
  add(pa.s_arg);
  add(pa.fixing_w);
  return blob;
}

}  // namespace

void validate_config(const JobConfig& cfg) {
  if (!is_prime_int(cfg.p))
    throw ValidationError("config: p must be prime (got " + cfg.p.str() +
                          ")");
  if (cfg.a < 1) throw ValidationError("config: a must be at least 1");
  if (cfg.mode != "K" && cfg.mode != "brauer")
    throw ValidationError("config: mode must be K or brauer");
  if (cfg.mode == "brauer") {
    if (cfg.ell == 0)
      throw ValidationError("config: brauer mode needs --ell");
    if (!is_prime_int(cfg.ell))
      throw ValidationError("config: ell must be prime (got " +
                            cfg.ell.str() + ")");
    if (cfg.ell == cfg.p)
      throw ValidationError("config: ell must differ from p");
  } else if (cfg.ell != 0) {
    throw ValidationError("config: --ell only applies in brauer mode");
  }
  if (cfg.format != "table" && cfg.format != "csv")
    throw ValidationError("config: format must be table or csv");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  JobConfig cfg;
  Parsed pa;
  long long p_ll = 2;
  long long ell_ll = 0;

  CLI::App app{"Torus-character combinatorics of finite reductive groups"};
  app.require_subcommand(1);
  app.add_option("--datum", cfg.datum,
                 "builtin name, family name (GLn/SLn/PGLn), or root-datum "
                 "file");
  app.add_option("--n", cfg.n, "rank parameter for the family names");
  app.add_option("--p", p_ll, "characteristic (prime)");
  app.add_option("--a", cfg.a, "exponent: q = p^a");
  app.add_option("--twist", cfg.twist,
                 "split, or perm=<comma-separated images of the simple "
                 "roots>");
  app.add_option("--mode", cfg.mode, "coefficient mode: K or brauer");
  app.add_option("--ell", ell_ll, "coefficient prime (brauer mode only)");
  app.add_option("--format", cfg.format, "table or csv");
  app.add_option("--cache-dir", cfg.cache_dir,
                 "replay identical invocations from this directory");

  CLI::App* sub_torus = app.add_subcommand(
      "torus", "invariant factors and norm images of a torus T^{wF}");
  sub_torus
      ->add_option("w", pa.w_arg,
                   "sequence over the simple reflections, e.g. s1,s2 or 1")
      ->required();
  sub_torus->add_option("--cochar", pa.cochars,
                        "comma-separated cocharacter; repeatable");
  sub_torus->fallthrough();

  CLI::App* sub_series = app.add_subcommand(
      "series", "census of the rational series of pairs (w, theta)");
  sub_series->add_option(
      "--filter", pa.filter,
      "trivial: keep only series containing a trivial character");
  sub_series->fallthrough();

  CLI::App* sub_mono = app.add_subcommand(
      "monodromy", "stratum and monodromy table of a compactified variety");
  sub_mono->add_option("w", pa.w_arg, "sequence over the simple reflections");
  sub_mono->add_option("--theta", pa.theta_arg,
                       "character by generator values, e.g. 1/4 or 0/1;1/2");
  sub_mono->add_option("--series", pa.series_index,
                       "take the pair from this row of the census");
  sub_mono->fallthrough();

  CLI::App* sub_jordan = app.add_subcommand(
      "jordan", "Levi datum of a dual semisimple element");
  sub_jordan
      ->add_option("--s", pa.s_arg,
                   "element of X tensor Q/Z, e.g. 1/8;3/8")
      ->required();
  sub_jordan->add_option("--fixing-w", pa.fixing_w,
                         "element whose twisted Frobenius fixes s");
  sub_jordan->fallthrough();

  std::vector<std::string> argv_s;
  argv_s.reserve(args.size() + 1);
  argv_s.push_back("finred");
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_s.size());
  for (const std::string& s : argv_s) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  cfg.p = Int(p_ll);
  cfg.ell = Int(ell_ll);
  std::string command;
  if (app.got_subcommand(sub_torus))
    command = "torus";
  else if (app.got_subcommand(sub_series))
    command = "series";
  else if (app.got_subcommand(sub_mono))
    command = "monodromy";
  else
    command = "jordan";

  try {
    validate_config(cfg);
    std::string payload;
    if (cfg.cache_dir.empty()) {
      payload = dispatch(command, cfg, pa);
    } else {
      namespace fs = std::filesystem;
      fs::path dir(cfg.cache_dir);
      fs::create_directories(dir);
      fs::path file = dir / (hex64(fnv1a(cache_blob(cfg, command, pa))) +
                             ".out");
      if (fs::is_regular_file(file)) {
        std::ifstream f(file, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        payload = ss.str();
      } else {
        payload = dispatch(command, cfg, pa);
        fs::path tmp = file;
        tmp += ".tmp";
        {
          std::ofstream o(tmp, std::ios::binary);
          o << payload;
        }
        fs::rename(tmp, file);
      }
    }
    out << payload;
    return 0;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace finred::cli
