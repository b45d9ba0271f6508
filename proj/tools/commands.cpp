#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "braidslice/arrangement.hpp"
#include "braidslice/chamber_cache.hpp"
#include "braidslice/charpoly.hpp"
#include "braidslice/errors.hpp"
#include "braidslice/literature.hpp"
#include "braidslice/ranking.hpp"
#include "braidslice/symmetry.hpp"
#include "braidslice/unfolding.hpp"
#include "cli.hpp"

namespace braidslice::cli {

Json big(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

void progress(const Globals& g, const std::string& message) {
  if (!g.quiet) std::cerr << "braidslice: " << message << "\n";
}

namespace {

Json rats(std::span<const Rat> v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(x.str());
  return out;
}

Json rankings(const std::vector<Ranking>& rs) {
  Json out = Json::array();
  for (const Ranking& r : rs) out.push_back(r.str());
  return out;
}

std::string joined(const std::vector<Ranking>& rs) {
  std::string out;
  for (const Ranking& r : rs) out += (out.empty() ? "" : " ") + r.str();
  return out;
}

CharPolyOptions cp_options(const Globals& g) {
  CharPolyOptions o;
  o.threads = g.threads;
  o.prime_floor = g.prime_floor;
  return o;
}

EnumerateOptions enum_options(const Globals& g) {
  EnumerateOptions o;
  o.seed = g.seed;
  o.threads = g.threads;
  if (!g.quiet) o.progress = [](std::size_t n) { std::cerr << "braidslice: " << n << " regions\n"; };
  return o;
}

std::string spec_suffix(const ArrangementSpec& spec) {
  return std::string(spec.augment_braid ? "-aug" : "") + (spec.cone_restrict ? "-cone" : "");
}

// --cache if given, else $BRAIDSLICE_CACHE_DIR/chambers-m<m>[-aug][-cone].txt.
std::optional<std::filesystem::path> cache_path(const std::string& flag, const ArrangementSpec& spec) {
  if (!flag.empty()) return std::filesystem::path(flag);
  const char* dir = std::getenv("BRAIDSLICE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / ("chambers-m" + std::to_string(spec.m) + spec_suffix(spec) + ".txt");
}

struct Total {
  BigInt chambers;
  std::optional<CharPoly> poly;
  std::optional<CharPolyRun> run;
  bool literature = false;
};

// chi and the chamber count, from the published tables when computing is
// off or out of reach (m = 8).
Total total_chambers(const Globals& g, const ArrangementSpec& spec, bool allow_compute) {
  Total t;
  const bool reachable = spec.m <= 7;
  if (!allow_compute || !reachable) {
    const auto p = spec.augment_braid ? published_augmented_charpoly(spec.m) : published_charpoly(spec.m);
    if (p) {
      t.poly = *p;
      t.chambers = chamber_count(*p);
      t.literature = true;
      return t;
    }
    if (!reachable) throw DimensionMismatch("no published value for m=" + std::to_string(spec.m) + " and computing is out of reach");
  }
  progress(g, "counting points for m=" + std::to_string(spec.m));
  t.run = compute_charpoly(spec, cp_options(g));
  t.poly = t.run->poly;
  t.chambers = chamber_count(t.run->poly);
  return t;
}

void add_m(CLI::App* sub, int& m) {
  sub->add_option("-m", m, "Number of objects")->required()->check(CLI::Range(2, kMaxArrangementSize));
}

RatVec parse_direction(const std::string& text) {
  RatVec v;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto a = field.find_first_not_of(" \t");
    const auto b = field.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty coordinate in --v");
    v.push_back(Rat::parse(field.substr(a, b - a + 1)));
  }
  if (v.size() < 2) throw DimensionMismatch("--v needs at least two coordinates");
  return v;
}

struct CharpolyArgs {
  int m = 0;
  bool augment = false;
  bool no_compute = false;
};

Output cmd_charpoly(const Globals& g, const CharpolyArgs& a) {
  const ArrangementSpec spec{a.m, a.augment, false};
  const Total t = total_chambers(g, spec, !a.no_compute);
  Output out{"charpoly", a.m, Json::object(), t.literature, ""};
  Json coeffs = Json::array();
  for (int k = t.poly->degree(); k >= 0; --k) coeffs.push_back(big((*t.poly)[k]));
  out.result["polynomial"] = t.poly->str();
  out.result["coefficients"] = coeffs;
  out.result["chambers"] = big(t.chambers);
  out.result["augmented"] = a.augment;
  std::ostringstream text;
  text << "polynomial: " << t.poly->str() << "\n"
       << "chambers: " << t.chambers.get_str() << "\n";
  if (t.run) {
    Json counts = Json::array();
    std::string primes;
    for (const auto* list : {&t.run->interpolation, &t.run->validation}) {
      for (const FieldCount& fc : *list) {
        counts.push_back({{"q", fc.q}, {"count", fc.count}});
        primes += (primes.empty() ? "" : " ") + std::to_string(fc.q);
      }
    }
    out.result["field_counts"] = counts;
    text << "primes: " << primes << "\n";
  }
  text << "provenance: " << (t.literature ? "literature" : "computed") << "\n";
  out.text = text.str();
  return out;
}

struct CountArgs {
  int m = 0;
  bool augment = false;
  bool no_compute = false;
  std::string method = "charpoly";
};

Output cmd_count(const Globals& g, const CountArgs& a) {
  const ArrangementSpec spec{a.m, a.augment, false};
  Output out{"count", a.m, Json::object(), false, ""};
  BigInt n;
  if (a.method == "enumerate") {
    n = BigInt(static_cast<unsigned long>(enumerate_chambers(spec, enum_options(g)).size()));
  } else {
    const Total t = total_chambers(g, spec, !a.no_compute);
    n = t.chambers;
    out.literature = t.literature;
  }
  out.result["chambers"] = big(n);
  out.result["method"] = out.literature ? "literature" : a.method;
  out.result["augmented"] = a.augment;
  out.text = "chambers: " + n.get_str() + "\nmethod: " + out.result["method"].get<std::string>() +
             "\nprovenance: " + (out.literature ? "literature" : "computed") + "\n";
  return out;
}

struct QmArgs {
  int m = 0;
  bool no_compute = false;
};

Output cmd_qm(const Globals& g, const QmArgs& a) {
  if (a.m < 3) throw DimensionMismatch("q(m) needs m >= 3");
  const Total t = total_chambers(g, {a.m, false, false}, !a.no_compute);
  const BigInt q = t.chambers - a.m;
  Output out{"qm", a.m, Json::object(), t.literature, ""};
  out.result["q"] = big(q);
  out.result["chambers"] = big(t.chambers);
  out.result["not_realizable"] = a.m;
  out.text = "q: " + q.get_str() + "\nchambers: " + t.chambers.get_str() + "\nnot_realizable: " + std::to_string(a.m) +
             "\nprovenance: " + (t.literature ? "literature" : "computed") + "\n";
  return out;
}

// Positive multiple of v with coprime integer entries.
RatVec primitive(std::span<const Rat> v) {
  BigInt l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  BigInt g = 0;
  for (const Rat& x : v) {
    const BigInt n = x.num() * (l / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  RatVec out;
  for (const Rat& x : v) out.push_back(x * Rat(l) / Rat(g));
  return out;
}

struct RpArgs {
  std::string v;
  std::string mu;
};

Output cmd_rp(const Globals&, const RpArgs& a) {
  Output out{"rp", 0, Json::object(), false, ""};
  std::ostringstream text;
  RatVec v;
  if (!a.mu.empty()) {
    const ObjectConfig cfg = load_object_config(a.mu);
    const GenericityReport gen = check_genericity(cfg);
    if (!gen.generic()) throw Error(ErrorKind::kBadInput, "configuration is not generic: " + gen.first_violation.value_or("?"));
    v = primitive(direction(cfg).v_unnormalized);
    const RatVec u = normalized_u(cfg);
    out.result["u"] = rats(u);
    text << "u: " << to_string(u) << "\n";
  } else {
    v = parse_direction(a.v);
  }
  const RankingPattern rp = ranking_pattern(v);
  const int m = static_cast<int>(v.size());
  out.m = m;
  const std::uint64_t expected = factorial(m - 1);
  const std::uint64_t admissible = factorial(m) - rp.excluded().size();
  const auto cls = classify_realizability(v);
  out.result["v"] = rats(v);
  out.result["excluded"] = rankings(rp.excluded());
  out.result["excluded_count"] = rp.excluded().size();
  out.result["expected_excluded"] = expected;
  out.result["admissible_count"] = admissible;
  out.result["bounded_count"] = bounded_cells(v).size();
  out.result["realizability"] = std::string(to_string(cls));
  text << "v: " << to_string(v) << "\n"
       << "excluded: " << joined(rp.excluded()) << "\n"
       << "excluded_count: " << rp.excluded().size() << "\n"
       << "expected_excluded: " << expected << "\n"
       << "admissible_count: " << admissible << "\n"
       << "bounded_count: " << bounded_cells(v).size() << "\n"
       << "realizability: " << to_string(cls) << "\n";
  if (rp.excluded().size() != expected) {
    throw Error(ErrorKind::kConsistency, "pattern excludes " + std::to_string(rp.excluded().size()) + " rankings, expected " +
                                             std::to_string(expected));
  }
  out.text = text.str();
  return out;
}

struct OrbitsArgs {
  int m = 0;
  std::string table;
};

std::string latex_vector(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    const Rat& x = v[i];
    if (x.is_integer()) {
      out += x.str();
    } else {
      out += std::string(x.sign() < 0 ? "-" : "") + "\\tfrac{" + BigInt(abs(x.num())).get_str() + "}{" + x.den().get_str() + "}";
    }
  }
  return out + ")^T";
}

Output cmd_orbits(Globals& g, const OrbitsArgs& a) {
  std::string table = a.table.empty() ? g.format : a.table;
  if (table == "json") g.format = "json";
  OrbitOptions opts;
  opts.enumerate = enum_options(g);
  const OrbitTable t = orbit_table(a.m, opts);

  Output out{"orbits", a.m, Json::object(), false, ""};
  Json rows = Json::array();
  std::uint64_t sum = 0;
  std::ostringstream text;
  if (table == "latex") {
    text << "\\begin{tabular}{clrr}\n\\hline\n & $v$ & $|\\mathfrak{S}_{" << a.m << "}D|$ & $\\#$pos \\\\\n\\hline\n";
  } else if (table == "csv") {
    text << "index,positive_entries,orbit_size,stabilizer_order,realizability,cone_sign,canonical_sign,representative\n";
  } else {
    text << "orbits: " << t.orbits.size() << "\n";
  }
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    const OrbitRecord& r = t.orbits[i];
    sum += r.orbit_size;
    rows.push_back({{"index", i + 1},
                    {"positive_entries", r.positive_entries},
                    {"orbit_size", r.orbit_size},
                    {"stabilizer_order", r.stabilizer_order},
                    {"realizability", std::string(to_string(r.realizability))},
                    {"cone_sign", r.cone_sign.str()},
                    {"canonical_sign", r.canonical_sign.str()},
                    {"representative", rats(r.representative_witness)}});
    if (table == "latex") {
      text << "$R_{" << a.m << "," << i + 1 << "}$ & $" << latex_vector(r.representative_witness) << "$ & " << r.orbit_size
           << " & " << r.positive_entries << " \\\\\n";
    } else if (table == "csv") {
      std::string rep;
      for (const Rat& x : r.representative_witness) rep += (rep.empty() ? "" : " ") + x.str();
      text << i + 1 << "," << r.positive_entries << "," << r.orbit_size << "," << r.stabilizer_order << ","
           << to_string(r.realizability) << "," << r.cone_sign.str() << "," << r.canonical_sign.str() << "," << rep << "\n";
    } else {
      text << i + 1 << "  pos=" << r.positive_entries << "  orbit=" << r.orbit_size << "  stab=" << r.stabilizer_order
           << "  " << to_string(r.realizability) << "  " << r.cone_sign.str() << "  " << to_string(r.representative_witness)
           << "\n";
    }
  }
  if (table == "latex") {
    text << "\\hline\n & total & " << sum << " & \\\\\n\\hline\n\\end{tabular}\n";
  } else if (table != "csv") {
    text << "orbit_size_sum: " << sum << "\n"
         << "inequivalent_patterns: " << t.orbits.size() - 1 << "\n";
  }
  out.result["orbits"] = t.orbits.size();
  out.result["inequivalent_patterns"] = t.orbits.size() - 1;
  out.result["orbit_size_sum"] = sum;
  out.result["total_chambers"] = big(t.total_chambers);
  out.result["rows"] = rows;
  out.text = text.str();
  return out;
}

struct EnumerateArgs {
  int m = 0;
  bool augment = false;
  bool cone = false;
  bool force = false;
  std::string cache;
};

Output cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  const ArrangementSpec spec{a.m, a.augment, a.cone};
  const auto path = cache_path(a.cache, spec);
  Output out{"enumerate", a.m, Json::object(), false, ""};
  std::vector<Chamber> chambers;
  bool from_cache = false;
  if (path && !a.force && std::filesystem::exists(*path)) {
    ChamberCache c = load_cache(*path);
    if (c.spec.m != spec.m || c.spec.augment_braid != spec.augment_braid || c.spec.cone_restrict != spec.cone_restrict) {
      throw Error(ErrorKind::kCache, "cache " + path->string() + " holds a different arrangement; use --force to overwrite");
    }
    chambers = std::move(c.chambers);
    from_cache = true;
    progress(g, "loaded " + std::to_string(chambers.size()) + " chambers from " + path->string());
  } else {
    chambers = enumerate_chambers(spec, enum_options(g));
    if (path) {
      save_cache(spec, chambers, *path);
      progress(g, "wrote " + path->string());
    }
  }
  out.result["chambers"] = chambers.size();
  out.result["augmented"] = a.augment;
  out.result["cone"] = a.cone;
  out.result["cache"] = path ? Json(path->string()) : Json(nullptr);
  out.result["from_cache"] = from_cache;
  out.text = "chambers: " + std::to_string(chambers.size()) + "\ncache: " + (path ? path->string() : "none") +
             "\nfrom_cache: " + (from_cache ? "true" : "false") + "\n";
  return out;
}

struct VerifyArgs {
  int m = 0;
  bool augment = false;
  bool cone = false;
  std::string cache;
};

Output cmd_verify(const Globals& g, const VerifyArgs& a) {
  std::optional<std::filesystem::path> path;
  if (!a.cache.empty()) {
    path = a.cache;
  } else if (a.m > 0) {
    path = cache_path("", {a.m, a.augment, a.cone});
  }
  if (!path) throw Error(ErrorKind::kBadInput, "verify needs --cache PATH, or -m with BRAIDSLICE_CACHE_DIR set");
  const ChamberCache c = load_cache(*path);
  const ArrangementSpec& spec = c.spec;
  const int m = spec.m;

  // Witnesses: distinct signs, each witness strictly inside its region.
  std::set<SignVector> seen;
  for (const Chamber& ch : c.chambers) {
    if (!seen.insert(ch.sign).second) throw Error(ErrorKind::kConsistency, "duplicate chamber " + ch.sign.str());
    Rat sum;
    for (const Rat& x : ch.witness) sum += x;
    if (!sum.is_zero()) throw Error(ErrorKind::kConsistency, "witness of " + ch.sign.str() + " leaves H0");
    const RatMat sys = chamber_system(spec, ch.sign);
    for (std::size_t r = 0; r < sys.rows(); ++r) {
      Rat d;
      for (std::size_t k = 0; k < sys.cols(); ++k) d += sys(r, k) * ch.witness[k];
      if (d.sign() <= 0) throw Error(ErrorKind::kConsistency, "witness of " + ch.sign.str() + " is not interior");
    }
  }
  progress(g, "checked " + std::to_string(c.chambers.size()) + " witnesses");

  Output out{"verify", m, Json::object(), false, ""};
  out.result["cache"] = path->string();
  out.result["chambers"] = c.chambers.size();
  out.result["witnesses_checked"] = c.chambers.size();
  std::ostringstream text;
  text << "cache: " << path->string() << "\n"
       << "chambers: " << c.chambers.size() << "\n"
       << "witnesses_checked: " << c.chambers.size() << "\n";

  if (!spec.cone_restrict) {
    const Total t = total_chambers(g, spec, true);
    if (t.chambers != static_cast<unsigned long>(c.chambers.size())) {
      throw Error(ErrorKind::kConsistency, "cache has " + std::to_string(c.chambers.size()) + " chambers, chi gives " + t.chambers.get_str());
    }
    // Canonical-form census: orbits found must account for every chamber.
    std::set<SignVector> canon;
    std::uint64_t orbit_sum = 0;
    for (const Chamber& ch : c.chambers) {
      const SignVector k = canonical_form(ch.sign);
      if (canon.insert(k).second) orbit_sum += factorial(m) / stabilizer(ch.sign).size();
    }
    if (orbit_sum != c.chambers.size()) {
      throw Error(ErrorKind::kConsistency, "orbit sizes add up to " + std::to_string(orbit_sum) + ", not " + std::to_string(c.chambers.size()));
    }
    out.result["expected_chambers"] = big(t.chambers);
    out.result["orbits"] = canon.size();
    text << "expected_chambers: " << t.chambers.get_str() << "\n"
         << "orbits: " << canon.size() << "\n";
    if (!spec.augment_braid) {
      std::size_t not_realizable = 0;
      for (const Chamber& ch : c.chambers) {
        if (classify_realizability(ch) == RealizabilityClass::kV1NotRealizable) ++not_realizable;
      }
      if (not_realizable != static_cast<std::size_t>(m)) {
        throw Error(ErrorKind::kConsistency, std::to_string(not_realizable) + " chambers are not realizable, expected " + std::to_string(m));
      }
      out.result["not_realizable"] = not_realizable;
      text << "not_realizable: " << not_realizable << "\n";
    }
  }
  out.result["status"] = "ok";
  text << "status: ok\n";
  out.text = text.str();
  return out;
}

}  // namespace

void register_commands(CLI::App& app, Globals& g, std::function<Output()>& run) {
  {
    auto* sub = app.add_subcommand("charpoly", "Characteristic polynomial and chamber count");
    auto a = std::make_shared<CharpolyArgs>();
    add_m(sub, a->m);
    sub->add_flag("--augment", a->augment, "Add the braid hyperplanes x_i = x_j");
    sub->add_flag("--no-compute", a->no_compute, "Use the published polynomial when there is one");
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_charpoly(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("count", "Number of chambers");
    auto a = std::make_shared<CountArgs>();
    add_m(sub, a->m);
    sub->add_flag("--augment", a->augment, "Add the braid hyperplanes x_i = x_j");
    sub->add_flag("--no-compute", a->no_compute, "Use the published count when there is one");
    sub->add_option("--method", a->method, "How to count")->check(CLI::IsMember({"charpoly", "enumerate"}))->capture_default_str();
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_count(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("qm", "Number of ranking patterns realizable by unfolding models");
    auto a = std::make_shared<QmArgs>();
    add_m(sub, a->m);
    sub->add_flag("--no-compute", a->no_compute, "Use the published chamber count");
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_qm(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("rp", "Ranking pattern of a direction or an object configuration");
    auto a = std::make_shared<RpArgs>();
    auto* v = sub->add_option("--v", a->v, "Direction, comma-separated rationals summing to zero");
    auto* mu = sub->add_option("--mu", a->mu, "File with one object per line, coordinates comma-separated")->check(CLI::ExistingFile);
    v->excludes(mu);
    sub->require_option(1);
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_rp(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("orbits", "Orbits of chambers under relabeling, one row per orbit");
    auto a = std::make_shared<OrbitsArgs>();
    add_m(sub, a->m);
    sub->add_option("--table", a->table, "Table layout")->check(CLI::IsMember({"text", "latex", "csv", "json"}));
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_orbits(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("enumerate", "Enumerate chambers, optionally through a cache file");
    auto a = std::make_shared<EnumerateArgs>();
    add_m(sub, a->m);
    sub->add_flag("--augment", a->augment, "Add the braid hyperplanes x_i = x_j");
    sub->add_flag("--cone", a->cone, "Only chambers meeting x_1 > ... > x_m");
    sub->add_flag("--force", a->force, "Recompute even if the cache exists");
    sub->add_option("--cache", a->cache, "Cache file (default: $BRAIDSLICE_CACHE_DIR/chambers-m<m>.txt)");
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_enumerate(g, *a); }; });
  }
  {
    auto* sub = app.add_subcommand("verify", "Re-check a chamber cache");
    auto a = std::make_shared<VerifyArgs>();
    sub->add_option("-m", a->m, "Locate the cache in $BRAIDSLICE_CACHE_DIR")->check(CLI::Range(2, kMaxArrangementSize));
    sub->add_flag("--augment", a->augment, "With -m: the augmented cache");
    sub->add_flag("--cone", a->cone, "With -m: the cone cache");
    sub->add_option("--cache", a->cache, "Cache file");
    sub->callback([&g, &run, a] { run = [&g, a] { return cmd_verify(g, *a); }; });
  }
}

}  // namespace braidslice::cli
