#include "braidslice/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "braidslice/errors.hpp"
#include "braidslice/literature.hpp"

namespace braidslice {
namespace {

constexpr int kMaxSymmetrySize = 8;

std::size_t pair_index(int m, int a, int b) {
  return static_cast<std::size_t>(a * (2 * m - a - 1) / 2 + (b - a - 1));
}

// Where each hyperplane goes under each permutation, and whether its sign flips.
class GroupAction {
 public:
  explicit GroupAction(int m) : m_(m), perms_(all_permutations(m)) {
    subsets_ = subset_hyperplane_count(m);
    const auto mm = static_cast<std::size_t>(m);
    braids_ = mm * (mm - 1) / 2;
    const std::size_t width = subsets_ + braids_;
    target_.resize(perms_.size() * width);
    flip_.resize(perms_.size() * width);
    for (std::size_t p = 0; p < perms_.size(); ++p) {
      const Permutation& sigma = perms_[p];
      for (std::size_t h = 0; h < subsets_; ++h) {
        const auto mask = static_cast<unsigned>(h + 1);
        unsigned image = 0;
        for (int i = 0; i < m; ++i) {
          if ((mask >> i) & 1U) image |= 1U << sigma[static_cast<std::size_t>(i)];
        }
        const auto [hp, flipped] = SubsetHyperplane::canonical(image, m);
        target_[p * width + h] = static_cast<std::uint32_t>(hp.index());
        flip_[p * width + h] = flipped;
      }
      std::size_t k = subsets_;
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j, ++k) {
          int a = sigma[static_cast<std::size_t>(i)];
          int b = sigma[static_cast<std::size_t>(j)];
          const bool flipped = a > b;
          if (flipped) std::swap(a, b);
          target_[p * width + k] = static_cast<std::uint32_t>(subsets_ + pair_index(m, a, b));
          flip_[p * width + k] = flipped;
        }
      }
    }
  }

  [[nodiscard]] const std::vector<Permutation>& perms() const { return perms_; }

  [[nodiscard]] SignVector act(const SignVector& s, std::size_t p) const {
    const std::size_t width = subsets_ + braids_;
    SignVector out(m_, s.size());
    for (std::size_t h = 0; h < s.size(); ++h) {
      if (s.negative(h) != static_cast<bool>(flip_[p * width + h])) out.set(target_[p * width + h], -1);
    }
    return out;
  }

  [[nodiscard]] std::size_t index_of(std::span<const int> sigma) const {
    const auto it = std::lower_bound(perms_.begin(), perms_.end(), sigma,
                                     [](const Permutation& a, std::span<const int> b) {
                                       return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                                     });
    if (it == perms_.end() || !std::equal(it->begin(), it->end(), sigma.begin(), sigma.end())) {
      throw DimensionMismatch("not a permutation of the right size");
    }
    return static_cast<std::size_t>(it - perms_.begin());
  }

  void check(const SignVector& s) const {
    if (s.size() != subsets_ && s.size() != subsets_ + braids_) {
      throw DimensionMismatch("sign vector length does not match m = " + std::to_string(m_));
    }
  }

 private:
  int m_;
  std::vector<Permutation> perms_;
  std::size_t subsets_ = 0;
  std::size_t braids_ = 0;
  std::vector<std::uint32_t> target_;
  std::vector<std::uint8_t> flip_;
};

const GroupAction& action_for(int m) {
  if (m < 2 || m > kMaxSymmetrySize) {
    throw DimensionMismatch("symmetry computations need 2 <= m <= " + std::to_string(kMaxSymmetrySize));
  }
  static std::array<std::once_flag, kMaxSymmetrySize + 1> flags;
  static std::array<std::unique_ptr<GroupAction>, kMaxSymmetrySize + 1> tables;
  const auto i = static_cast<std::size_t>(m);
  std::call_once(flags[i], [&] { tables[i] = std::make_unique<GroupAction>(m); });
  return *tables[i];
}

}  // namespace

std::vector<Permutation> all_permutations(int m) {
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation inverse(std::span<const int> sigma) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return out;
}

std::string_view to_string(RealizabilityClass c) {
  switch (c) {
    case RealizabilityClass::kV2:
      return "V2";
    case RealizabilityClass::kV1Realizable:
      return "V1-realizable";
    case RealizabilityClass::kV1NotRealizable:
      return "V1-not-realizable";
  }
  return "?";
}

RealizabilityClass classify_realizability(std::span<const Rat> v) {
  int pos = 0;
  int neg = 0;
  for (const Rat& x : v) {
    if (x.sign() > 0) ++pos;
    if (x.sign() < 0) ++neg;
  }
  if (pos + neg != static_cast<int>(v.size()) || pos == 0 || neg == 0) {
    throw DegenerateDirection("direction has a zero entry or a constant sign", 0);
  }
  if (pos == 1) return RealizabilityClass::kV1Realizable;
  if (neg == 1) return RealizabilityClass::kV1NotRealizable;
  return RealizabilityClass::kV2;
}

RealizabilityClass classify_realizability(const Chamber& c) { return classify_realizability(c.witness); }

SignVector act(const SignVector& s, std::span<const int> sigma) {
  const GroupAction& g = action_for(s.m());
  g.check(s);
  return g.act(s, g.index_of(sigma));
}

SignVector canonical_form(const SignVector& s) {
  const GroupAction& g = action_for(s.m());
  g.check(s);
  SignVector best = s;
  for (std::size_t p = 0; p < g.perms().size(); ++p) {
    SignVector image = g.act(s, p);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<Permutation> stabilizer(const SignVector& s) {
  const GroupAction& g = action_for(s.m());
  g.check(s);
  std::vector<Permutation> out;
  for (std::size_t p = 0; p < g.perms().size(); ++p) {
    if (g.act(s, p) == s) out.push_back(g.perms()[p]);
  }
  return out;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int k = 2; k <= m; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation rho(int m) {
  Permutation p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = m - 1 - i;
  return p;
}

Ranking rho_reverse(const Ranking& r) { return r.relabeled(rho(r.size())); }

SignVector rho_reverse(const SignVector& s) { return act(s, rho(s.m())); }

SignVector minus_rho(const SignVector& s) { return rho_reverse(s).negated(); }

RatVec minus_rho(std::span<const Rat> v) {
  RatVec out;
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
  return out;
}

OrbitTable orbit_table(int m, const OrbitOptions& options) {
  if (m < 3 || m > kMaxSymmetrySize) throw DimensionMismatch("orbit tables need 3 <= m <= 8");
  const std::vector<Chamber> cone = chambers_in_fundamental_cone(m, options.enumerate);
  const std::uint64_t group = factorial(m);

  std::map<SignVector, OrbitRecord> orbits;
  for (const Chamber& c : cone) {
    SignVector canon = canonical_form(c.sign);
    if (orbits.contains(canon)) continue;
    OrbitRecord rec;
    rec.canonical_sign = canon;
    rec.cone_sign = c.sign;
    rec.stabilizer_order = stabilizer(c.sign).size();
    rec.orbit_size = group / rec.stabilizer_order;
    rec.representative_witness = c.witness;
    rec.realizability = classify_realizability(c.witness);
    rec.positive_entries = static_cast<int>(
        std::count_if(c.witness.begin(), c.witness.end(), [](const Rat& x) { return x.sign() > 0; }));
    orbits.emplace(std::move(canon), std::move(rec));
  }

  OrbitTable table;
  table.m = m;
  table.cone_chambers = cone.size();
  table.total_chambers = options.expected_total != 0
                             ? BigInt(static_cast<unsigned long>(options.expected_total))
                             : chamber_count(charpoly({m, false, false}, {.threads = options.enumerate.threads}));
  BigInt sum = 0;
  for (auto& [canon, rec] : orbits) {
    sum += static_cast<unsigned long>(rec.orbit_size);
    table.orbits.push_back(std::move(rec));
  }
  if (sum != table.total_chambers) {
    throw OrbitSumMismatch("orbit sizes add up to " + sum.get_str() + " but there are " +
                           table.total_chambers.get_str() + " chambers");
  }
  std::sort(table.orbits.begin(), table.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.positive_entries != b.positive_entries) return a.positive_entries > b.positive_entries;
    return a.cone_sign < b.cone_sign;
  });
  return table;
}

std::size_t orbit_count(std::span<const Chamber> chambers) {
  std::vector<SignVector> forms;
  forms.reserve(chambers.size());
  for (const Chamber& c : chambers) forms.push_back(canonical_form(c.sign));
  std::sort(forms.begin(), forms.end());
  return static_cast<std::size_t>(std::unique(forms.begin(), forms.end()) - forms.begin());
}

std::size_t inequivalent_pattern_count(std::span<const Chamber> chambers) { return orbit_count(chambers) - 1; }

std::size_t inequivalent_pattern_count(int m, const EnumerateOptions& options) {
  return inequivalent_pattern_count(enumerate_chambers({m, false, false}, options));
}

BigInt upper_bound_via_quotient(int m, const CharPolyOptions& options) {
  const BigInt chambers = chamber_count(charpoly({m, true, false}, options));
  const BigInt group(static_cast<unsigned long>(factorial(m)));
  if (chambers % group != 0) {
    throw NotDivisible(chambers.get_str() + " augmented chambers is not a multiple of " + group.get_str());
  }
  return BigInt(chambers / group - 1);
}

QmResult q_of_m(int m, bool allow_compute, unsigned threads) {
  if (m < 3 || m > 8) throw DimensionMismatch("q(m) is available for 3 <= m <= 8");
  const BigInt mm(m);
  if (allow_compute && m <= 7) {
    return {BigInt(chamber_count(charpoly({m, false, false}, {.threads = threads})) - mm), false};
  }
  return {BigInt(*published_chamber_count(m) - mm), true};
}

}  // namespace braidslice
