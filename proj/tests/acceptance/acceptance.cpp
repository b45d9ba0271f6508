// Acceptance suite: one PASS/FAIL line per criterion on stdout, details of
// failures and timings on stderr. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "braidslice/arrangement.hpp"
#include "braidslice/charpoly.hpp"
#include "braidslice/errors.hpp"
#include "braidslice/linalg.hpp"
#include "braidslice/ranking.hpp"
#include "braidslice/symmetry.hpp"
#include "braidslice/unfolding.hpp"
#include "oracles.hpp"
#include "orbit_rows.hpp"

namespace bs = braidslice;

namespace {

unsigned g_threads = 1;
bool g_stretch = true;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

bs::RatVec ints(std::initializer_list<long> xs) {
  bs::RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::set<std::string> names(const std::vector<bs::Ranking>& rs) {
  std::set<std::string> out;
  for (const bs::Ranking& r : rs) out.insert(r.str());
  return out;
}

bs::EnumerateOptions enum_options() {
  bs::EnumerateOptions o;
  o.threads = g_threads;
  return o;
}

bs::CharPolyOptions cp_options() {
  bs::CharPolyOptions o;
  o.threads = g_threads;
  return o;
}

// Full chamber lists are shared by criteria 2, 5 and 8.
const std::vector<bs::Chamber>& chambers(int m) {
  static std::map<int, std::vector<bs::Chamber>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, bs::enumerate_chambers({m, false, false}, enum_options())).first;
  return it->second;
}

std::map<int, double> g_enum_seconds;

void timed_enumeration(int m) {
  const auto t0 = std::chrono::steady_clock::now();
  (void)chambers(m);
  g_enum_seconds[m] = seconds_since(t0);
}

// Criterion 1.
void criterion_charpoly(Check& c) {
  const std::map<int, std::string> expected{
      {3, "t^2-3t+2"},
      {4, "t^3-7t^2+15t-9"},
      {5, "t^4-15t^3+80t^2-170t+104"},
      {6, "t^5-31t^4+375t^3-2130t^2+5270t-3485"},
      {7, "t^6-63t^5+1652t^4-22435t^3+159460t^2-510524t+371909"},
  };
  for (int m = 3; m <= (g_stretch ? 7 : 6); ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    const bs::CharPoly p = bs::charpoly({m, false, false}, cp_options());
    const double s = seconds_since(t0);
    const std::string tag = "m=" + std::to_string(m);
    c.note(tag + " " + fmt_seconds(s));
    c.expect(p.str() == expected.at(m), tag + ": got " + p.str());
    if (m <= 5) c.expect(s < 1.0, tag + " took " + fmt_seconds(s));
    if (m == 6) c.expect(s < 300.0, tag + " took " + fmt_seconds(s));
  }
  if (!g_stretch) c.note("m=7 skipped");
}

// Criterion 2.
void criterion_enumeration(Check& c) {
  const std::map<int, unsigned long> expected{{3, 6}, {4, 32}, {5, 370}, {6, 11292}};
  for (const auto& [m, count] : expected) {
    timed_enumeration(m);
    const std::string tag = "m=" + std::to_string(m);
    const auto& ch = chambers(m);
    const bs::BigInt from_chi = bs::chamber_count(bs::charpoly({m, false, false}, cp_options()));
    c.note(tag + " " + std::to_string(ch.size()) + " in " + fmt_seconds(g_enum_seconds[m]));
    c.expect(ch.size() == count, tag + ": enumerated " + std::to_string(ch.size()));
    c.expect(from_chi == count, tag + ": chi(-1) gives " + from_chi.get_str());
    // Every witness lies in its own chamber.
    std::size_t bad = 0;
    for (const bs::Chamber& ch_i : ch) {
      if (bs::sign_of_point({m, false, false}, ch_i.witness) != ch_i.sign) ++bad;
    }
    c.expect(bad == 0, tag + ": " + std::to_string(bad) + " witnesses off their chamber");
    if (m == 6) c.expect(g_enum_seconds[m] < 1800.0, tag + " enumeration took " + fmt_seconds(g_enum_seconds[m]));
  }
}

// Criterion 3.
void criterion_augmented(Check& c) {
  const std::map<int, std::pair<std::string, unsigned long>> expected{
      {3, {"t^2-6t+5", 2}},
      {4, {"t^3-13t^2+47t-35", 4}},
  };
  for (const auto& [m, want] : expected) {
    const std::string tag = "m=" + std::to_string(m);
    const bs::CharPoly p = bs::charpoly({m, true, false}, cp_options());
    c.expect(p.str() == want.first, tag + ": got " + p.str());
    const bs::BigInt n = bs::chamber_count(p);
    const bs::BigInt f(static_cast<unsigned long>(bs::factorial(m)));
    c.expect(n % f == 0 && n / f == want.second, tag + ": " + n.get_str() + " chambers");
    c.expect(bs::upper_bound_via_quotient(m, cp_options()) + 1 == want.second, tag + ": quotient bound");
    // Cross-check against direct enumeration of the augmented arrangement.
    const auto aug = bs::enumerate_chambers({m, true, false}, enum_options());
    c.expect(bs::BigInt(static_cast<unsigned long>(aug.size())) == n, tag + ": augmented enumeration " + std::to_string(aug.size()));
  }
}

// Criterion 4.
void criterion_qm(Check& c) {
  const std::map<int, std::string> expected{{3, "3"}, {4, "28"}, {5, "365"}, {6, "11286"}, {7, "1066037"}, {8, "347326344"}};
  for (const auto& [m, want] : expected) {
    const std::string tag = "m=" + std::to_string(m);
    if (m == 7 && !g_stretch) {
      const bs::QmResult lit = bs::q_of_m(7, false);
      c.expect(lit.from_literature && lit.value.get_str() == want, tag + ": literature value");
      continue;
    }
    const bs::QmResult q = bs::q_of_m(m, true, g_threads);
    c.expect(q.value.get_str() == want, tag + ": got " + q.value.get_str());
    c.expect(q.from_literature == (m == 8), tag + ": provenance");
    if (m == 8) c.note("m=8 from literature");
  }
  // q(m) equals the realizable chambers of an actual enumeration.
  for (int m = 3; m <= 6; ++m) {
    std::size_t realizable = 0;
    for (const bs::Chamber& ch : chambers(m)) {
      if (bs::classify_realizability(ch) != bs::RealizabilityClass::kV1NotRealizable) ++realizable;
    }
    c.expect(bs::q_of_m(m, true, g_threads).value == static_cast<unsigned long>(realizable),
             "m=" + std::to_string(m) + ": realizable chambers " + std::to_string(realizable));
  }
}

bs::RatVec at_epsilon(const bs::testdata::OrbitRow& row) {
  const bs::Rat eps(1, 10000);
  bs::RatVec out;
  for (const auto& [base, k] : row.point) out.push_back(base + k * eps);
  return out;
}

// Sum of orbit sizes over printed table rows; checks each row against the
// computed orbit table and returns the canonical forms it covers.
std::uint64_t check_rows(Check& c, int m, std::span<const bs::testdata::OrbitRow> rows, const bs::OrbitTable& table,
                         std::set<bs::SignVector>& covered, const std::string& label) {
  std::map<bs::SignVector, const bs::OrbitRecord*> by_canon;
  for (const bs::OrbitRecord& r : table.orbits) by_canon[r.canonical_sign] = &r;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bs::RatVec p = at_epsilon(rows[i]);
    const std::string tag = label + " row " + std::to_string(i + 1);
    const bs::SignVector canon = bs::canonical_form(bs::sign_of_point({m, false, false}, p));
    const auto it = by_canon.find(canon);
    if (it == by_canon.end()) {
      c.expect(false, tag + ": not an orbit of the computed table");
      continue;
    }
    c.expect(it->second->orbit_size == static_cast<std::uint64_t>(rows[i].orbit_size),
             tag + ": orbit size " + std::to_string(it->second->orbit_size));
    c.expect(covered.insert(canon).second, tag + ": repeats an orbit");
    sum += static_cast<std::uint64_t>(rows[i].orbit_size);
  }
  return sum;
}

// Criterion 5.
void criterion_orbits(Check& c) {
  const std::map<int, std::size_t> orbits{{3, 2}, {4, 4}, {5, 12}, {6, 56}};
  std::map<int, bs::OrbitTable> tables;
  for (const auto& [m, want] : orbits) {
    const std::string tag = "m=" + std::to_string(m);
    bs::OrbitOptions o;
    o.enumerate = enum_options();
    tables[m] = bs::orbit_table(m, o);
    c.expect(tables[m].orbits.size() == want, tag + ": " + std::to_string(tables[m].orbits.size()) + " orbits via cone");
    c.expect(tables[m].cone_chambers == want, tag + ": cone chambers are not a cross-section");
    c.expect(bs::orbit_count(chambers(m)) == want, tag + ": orbit count of the full enumeration");
    c.expect(bs::inequivalent_pattern_count(chambers(m)) == want - 1, tag + ": inequivalent patterns");
  }

  // m = 5: the five orbits with three positive entries.
  std::multiset<std::uint64_t> three_pos;
  for (const bs::OrbitRecord& r : tables[5].orbits) {
    if (r.positive_entries == 3) three_pos.insert(r.orbit_size);
  }
  c.expect(three_pos == std::multiset<std::uint64_t>{20, 60, 60, 30, 10}, "m=5: orbit-size multiset");
  std::set<bs::SignVector> covered5;
  const std::uint64_t s5 = check_rows(c, 5, bs::testdata::kFivePositiveThree, tables[5], covered5, "m=5");
  c.expect(s5 == 180, "m=5: table sum " + std::to_string(s5));
  c.expect(2 * (5 + s5) == 370, "m=5: 2(5+180) != 370");

  // m = 6: four positive entries, and three positive entries up to -rho.
  std::set<bs::SignVector> covered6;
  const std::uint64_t s64 = check_rows(c, 6, bs::testdata::kSixPositiveFour, tables[6], covered6, "m=6 (4+)");
  const std::uint64_t s63 = check_rows(c, 6, bs::testdata::kSixPositiveThree, tables[6], covered6, "m=6 (3+)");
  c.expect(s64 == 2220, "m=6: four-positive sum " + std::to_string(s64));
  c.expect(s63 == 3420, "m=6: three-positive sum " + std::to_string(s63));
  c.expect(2 * (6 + s64 + s63) == 11292, "m=6: 2(6+2220+3420) != 11292");
  // The printed rows together with D_1 and the -rho images exhaust the table.
  std::set<bs::SignVector> all6 = covered6;
  for (const bs::SignVector& s : covered6) all6.insert(bs::canonical_form(bs::minus_rho(s)));
  const bs::SignVector d1 = bs::canonical_form(bs::sign_of_point({6, false, false}, ints({5, -1, -1, -1, -1, -1})));
  all6.insert(d1);
  all6.insert(bs::canonical_form(bs::minus_rho(d1)));
  c.expect(all6.size() == 56, "m=6: rows and their -rho images give " + std::to_string(all6.size()) + " orbits");
  std::uint64_t four_sum = 0;
  for (const bs::OrbitRecord& r : tables[6].orbits) {
    if (r.positive_entries == 4) four_sum += r.orbit_size;
  }
  c.expect(four_sum == 2220, "m=6: computed four-positive orbit sum " + std::to_string(four_sum));
}

// Criterion 6.
void criterion_example(Check& c) {
  const bs::ObjectConfig cfg = bs::parse_object_config("-3\n1\n2\n");
  const bs::DirectionResult d = bs::direction(cfg);
  c.expect(bs::oracle::positively_proportional(d.v_unnormalized, ints({-1, 5, -4})),
           "direction " + bs::to_string(d.v_unnormalized));
  const bs::RatVec u = bs::normalized_u(cfg);
  const bs::RatVec want{bs::Rat(-13, 28), bs::Rat(11, 28), bs::Rat(2, 28)};
  c.expect(u == want, "u = " + bs::to_string(u));
  const auto excluded = names(bs::ranking_pattern_uf(cfg).excluded());
  c.expect(excluded == std::set<std::string>{"(132)", "(312)"}, "excluded set");
  // Scaling the input does not change anything observable.
  const bs::ObjectConfig scaled = bs::parse_object_config("-0.75\n0.25\n0.5\n");
  c.expect(bs::normalized_u(scaled) == want, "u depends on the scale of mu");
  c.expect(bs::ranking_pattern_uf(scaled) == bs::ranking_pattern_uf(cfg), "pattern depends on the scale of mu");
}

// Criterion 7.
void criterion_four_patterns(Check& c) {
  const bs::RatVec d1 = ints({3, -1, -1, -1});
  const bs::RatVec e = ints({2, 2, -1, -3});
  const bs::RatVec mre = bs::minus_rho(e);
  const std::vector<std::pair<std::string, std::pair<bs::RatVec, std::set<std::string>>>> cases{
      {"RP_D1", {d1, {"(2341)", "(2431)", "(3241)", "(3421)", "(4231)", "(4321)"}}},
      {"RP_E", {e, {"(3412)", "(3421)", "(4312)", "(4321)", "(4132)", "(4231)"}}},
      {"RP_-rhoE", {mre, {"(3412)", "(3421)", "(4312)", "(4321)", "(4231)", "(3241)"}}},
  };
  const bs::ArrangementSpec spec{4, false, false};
  const auto cone = bs::chambers_in_fundamental_cone(4, enum_options());
  std::map<bs::SignVector, const bs::Chamber*> cone_by_sign;
  for (const bs::Chamber& ch : cone) cone_by_sign[ch.sign] = &ch;
  c.expect(cone.size() == 4, "cone chambers: " + std::to_string(cone.size()));
  for (const auto& [name, data] : cases) {
    const auto& [v, want] = data;
    const bs::SignVector s = bs::sign_of_point(spec, v);
    c.expect(bs::classify_realizability(v) != bs::RealizabilityClass::kV1NotRealizable, name + " not realizable");
    c.expect(names(bs::ranking_pattern(v).excluded()) == want, name + ": excluded set from v");
    // Any other point of the same chamber gives the same pattern.
    const auto it = cone_by_sign.find(s);
    if (it == cone_by_sign.end()) {
      c.expect(false, name + ": chamber misses the fundamental cone");
    } else {
      c.expect(names(bs::ranking_pattern(it->second->witness).excluded()) == want, name + ": excluded set from cone witness");
    }
    // Realized by an actual unfolding model.
    const auto cfg = bs::config_from_direction(v);
    c.expect(cfg.has_value() && names(bs::ranking_pattern_uf(*cfg).excluded()) == want, name + ": unfolding model");
  }
  c.expect(bs::classify_realizability(bs::minus_rho(d1)) == bs::RealizabilityClass::kV1NotRealizable, "-rho D1 realizable");
}

// Criterion 8.
void criterion_properties(Check& c) {
  // (a)
  {
    std::mt19937_64 rng(801);
    for (int m = 3; m <= 6; ++m) {
      int bad = 0;
      for (int i = 0; i < 200; ++i) {
        const bs::RatVec v = bs::oracle::random_generic_direction(m, rng);
        if (bs::ranking_pattern(v).excluded().size() != bs::factorial(m - 1)) ++bad;
      }
      c.expect(bad == 0, "(a) m=" + std::to_string(m) + ": " + std::to_string(bad) + " directions");
    }
  }
  // (b)
  {
    std::mt19937_64 rng(802);
    for (int m = 4; m <= 5; ++m) {
      int bad = 0;
      const auto rankings = bs::all_rankings(m);
      for (int i = 0; i < 50; ++i) {
        const bs::RatVec v = bs::oracle::random_generic_direction(m, rng);
        for (const bs::Ranking& r : rankings) {
          const bs::SliceClass cls = bs::classify_cell(v, r);
          const auto lp = bs::oracle::slice_cell_by_lp(v, r);
          const bs::SliceClass by_lp = !lp.nonempty ? bs::SliceClass::kEmpty
                                       : lp.bounded ? bs::SliceClass::kBounded
                                                    : bs::SliceClass::kUnbounded;
          if (cls != by_lp) ++bad;
        }
      }
      c.expect(bad == 0, "(b) m=" + std::to_string(m) + ": " + std::to_string(bad) + " disagreements");
    }
  }
  // (c)
  {
    std::mt19937_64 rng(803);
    for (int m = 5; m <= 6; ++m) {
      for (int p = 2; m - p >= 2; ++p) {
        const int q = m - p;
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
          const bs::RatVec v = bs::oracle::random_direction_with_profile(p, q, rng);
          bs::RatMat cons(2, static_cast<std::size_t>(m));
          for (std::size_t j = 0; j < v.size(); ++j) {
            cons(0, j) = 1;
            cons(1, j) = v[j];
          }
          // A random basis of {1, v}^perp: the nullspace basis times an
          // invertible matrix.
          const bs::RatMat w0 = bs::nullspace(cons);
          bs::RatMat g = bs::oracle::random_matrix(w0.cols(), w0.cols(), rng, 5);
          while (bs::rank(g) != w0.cols()) g = bs::oracle::random_matrix(w0.cols(), w0.cols(), rng, 5);
          const bs::RatMat w = w0 * g;
          const bs::Inertia in = bs::signature(w.transpose() * bs::RatMat::diagonal(v) * w);
          const bs::Inertia want{static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1), 0};
          if (!(in == want)) ++bad;
        }
        c.expect(bad == 0, "(c) m=" + std::to_string(m) + " (" + std::to_string(p) + "," + std::to_string(q) +
                               "): " + std::to_string(bad) + " constructions");
      }
    }
  }
  // (d)
  {
    std::mt19937_64 rng(804);
    for (int m = 4; m <= 5; ++m) {
      int bad = 0;
      for (int i = 0; i < 50; ++i) {
        const bs::ObjectConfig cfg = bs::oracle::random_generic_config(m, rng);
        const bs::RankingPattern rp = bs::ranking_pattern_uf(cfg);
        bs::Rat a = bs::oracle::random_rat(rng, 5, 4);
        if (a.is_zero()) a = bs::Rat(-3, 2);
        const auto sigma = bs::oracle::random_permutation(m, rng);
        const bool ok = bs::ranking_pattern_uf(cfg.translated(bs::oracle::random_point(cfg.n(), rng))) == rp &&
                        bs::ranking_pattern_uf(cfg.scaled(a)) == rp &&
                        bs::ranking_pattern_uf(cfg.permuted(sigma)) == rp.relabeled(sigma);
        if (!ok) ++bad;
      }
      c.expect(bad == 0, "(d) m=" + std::to_string(m) + ": " + std::to_string(bad) + " configs");
    }
  }
  // (e)
  {
    std::mt19937_64 rng(805);
    for (int m = 4; m <= 5; ++m) {
      int bad = 0;
      for (int i = 0; i < 20; ++i) {
        const bs::ObjectConfig cfg = bs::oracle::random_generic_config(m, rng);
        const bs::RankingPattern rp = bs::ranking_pattern_uf(cfg);
        for (const bs::Ranking& r : bs::all_rankings(m)) {
          const auto y = bs::witness_ideal_point(cfg, r);
          if (y.has_value() != rp.admits(r) || (y && bs::ranking_at(cfg, *y) != r)) ++bad;
        }
      }
      c.expect(bad == 0, "(e) m=" + std::to_string(m) + ": " + std::to_string(bad) + " rankings");
    }
  }
  // (f)
  for (int m = 3; m <= 6; ++m) {
    std::size_t not_realizable = 0;
    for (const bs::Chamber& ch : chambers(m)) {
      if (bs::classify_realizability(ch) == bs::RealizabilityClass::kV1NotRealizable) ++not_realizable;
    }
    c.expect(not_realizable == static_cast<std::size_t>(m),
             "(f) m=" + std::to_string(m) + ": " + std::to_string(not_realizable) + " not realizable");
  }
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  g_threads = std::max(1U, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-stretch") == 0) {
      g_stretch = false;
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      g_threads = static_cast<unsigned>(std::max(1, std::stoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--skip-stretch] [--threads N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "characteristic polynomials", criterion_charpoly},
      {2, "chamber counts by enumeration and chi(-1)", criterion_enumeration},
      {3, "augmented arrangement and quotients", criterion_augmented},
      {4, "realizable pattern counts q(m)", criterion_qm},
      {5, "orbit structure", criterion_orbits},
      {6, "three-object example", criterion_example},
      {7, "four-object ranking patterns", criterion_four_patterns},
      {8, "property suites", criterion_properties},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    const bool ok = c.failures().empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " (" << fmt_seconds(s) << ")\n";
    std::cout.flush();
    for (const std::string& n : c.notes()) std::cerr << "  " << cr.id << ": " << n << "\n";
    for (const std::string& f : c.failures()) std::cerr << "  " << cr.id << " FAILED: " << f << "\n";
  }
  return failed;
}
