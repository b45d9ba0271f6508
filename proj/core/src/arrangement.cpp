#include "braidslice/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "braidslice/errors.hpp"
#include "braidslice/lp.hpp"

namespace braidslice {
namespace {

void check_m(int m) {
  if (m < 2 || m > kMaxArrangementSize) {
    throw DimensionMismatch("arrangement size m must lie in [2, " + std::to_string(kMaxArrangementSize) + "]");
  }
}

RatMat sum_zero_constraint(int m) {
  RatMat e(1, static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) e(0, static_cast<std::size_t>(i)) = 1;
  return e;
}

std::vector<int> braid_pair(int m, std::size_t k) {
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (k == 0) return {i, j};
      --k;
    }
  }
  return {};
}

}  // namespace

std::pair<SubsetHyperplane, bool> SubsetHyperplane::canonical(unsigned mask, int m) {
  const unsigned full = (1U << m) - 1U;
  mask &= full;
  if (mask == 0 || mask == full) throw DimensionMismatch("subset hyperplane needs a proper nonempty subset");
  if (mask >> (m - 1) & 1U) return {SubsetHyperplane{full & ~mask}, true};
  return {SubsetHyperplane{mask}, false};
}

std::string SubsetHyperplane::label() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; (mask >> i) != 0; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::size_t subset_hyperplane_count(int m) { return (std::size_t{1} << (m - 1)) - 1; }

std::size_t hyperplane_count(const ArrangementSpec& spec) {
  const auto m = static_cast<std::size_t>(spec.m);
  return subset_hyperplane_count(spec.m) + (spec.augment_braid ? m * (m - 1) / 2 : 0);
}

std::vector<std::vector<int>> hyperplane_normals(const ArrangementSpec& spec) {
  check_m(spec.m);
  std::vector<std::vector<int>> out;
  const unsigned limit = 1U << (spec.m - 1);
  for (unsigned mask = 1; mask < limit; ++mask) {
    std::vector<int> n(static_cast<std::size_t>(spec.m), 0);
    for (int i = 0; i < spec.m; ++i) n[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1U);
    out.push_back(std::move(n));
  }
  if (spec.augment_braid) {
    for (int i = 0; i < spec.m; ++i) {
      for (int j = i + 1; j < spec.m; ++j) {
        std::vector<int> n(static_cast<std::size_t>(spec.m), 0);
        n[static_cast<std::size_t>(i)] = 1;
        n[static_cast<std::size_t>(j)] = -1;
        out.push_back(std::move(n));
      }
    }
  }
  return out;
}

std::string hyperplane_label(const ArrangementSpec& spec, std::size_t index) {
  const std::size_t subsets = subset_hyperplane_count(spec.m);
  if (index < subsets) return "I=" + SubsetHyperplane{static_cast<unsigned>(index + 1)}.label();
  const auto p = braid_pair(spec.m, index - subsets);
  return "x" + std::to_string(p[0] + 1) + "=x" + std::to_string(p[1] + 1);
}

SignVector::SignVector(int m, std::size_t size) : m_(m), size_(size), bits_((size + 63) / 64, 0) {}

SignVector SignVector::parse(int m, std::string_view text) {
  SignVector out(m, text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') {
      out.set(i, -1);
    } else if (text[i] != '+') {
      throw DimensionMismatch("sign vector may only contain '+' and '-'");
    }
  }
  return out;
}

void SignVector::set(std::size_t i, int sign) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (sign < 0) {
    bits_[i / 64] |= bit;
  } else {
    bits_[i / 64] &= ~bit;
  }
}

void SignVector::flip(std::size_t i) { bits_[i / 64] ^= std::uint64_t{1} << (i % 64); }

SignVector SignVector::negated() const {
  SignVector out = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = ~bits_[w];
  if (size_ % 64 != 0) out.bits_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  return out;
}

SignVector SignVector::prefix(std::size_t n) const {
  SignVector out(m_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (negative(i)) out.set(i, -1);
  }
  return out;
}

std::string SignVector::str() const {
  std::string out(size_, '+');
  for (std::size_t i = 0; i < size_; ++i) {
    if (negative(i)) out[i] = '-';
  }
  return out;
}

std::size_t SignVector::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
  const std::size_t words = std::min(a.bits_.size(), b.bits_.size());
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.bits_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

SignVector sign_of_point(const ArrangementSpec& spec, std::span<const Rat> p) {
  check_m(spec.m);
  if (p.size() != static_cast<std::size_t>(spec.m)) throw DimensionMismatch("point has the wrong dimension");
  Rat total;
  for (const Rat& x : p) total += x;
  if (!total.is_zero()) throw DimensionMismatch("point does not lie on H0");

  const auto normals = hyperplane_normals(spec);
  SignVector out(spec.m, normals.size());
  for (std::size_t h = 0; h < normals.size(); ++h) {
    Rat value;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (normals[h][i] != 0) value += Rat(normals[h][i]) * p[i];
    }
    if (value.is_zero()) throw OnHyperplane("point lies on hyperplane " + hyperplane_label(spec, h), static_cast<int>(h));
    out.set(h, value.sign());
  }
  if (spec.cone_restrict) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] <= p[i + 1]) throw DimensionMismatch("point is not in the open cone x1 > ... > xm");
    }
  }
  return out;
}

RatMat chamber_system(const ArrangementSpec& spec, const SignVector& sign) {
  const auto normals = hyperplane_normals(spec);
  if (sign.size() != normals.size()) throw DimensionMismatch("sign vector length does not match the arrangement");
  const auto m = static_cast<std::size_t>(spec.m);
  RatMat a(0, m);
  RatVec row(m);
  for (std::size_t h = 0; h < normals.size(); ++h) {
    for (std::size_t i = 0; i < m; ++i) row[i] = normals[h][i] * sign[h];
    a.append_row(row);
  }
  if (spec.cone_restrict) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::fill(row.begin(), row.end(), Rat());
      row[i] = 1;
      row[i + 1] = -1;
      a.append_row(row);
    }
  }
  return a;
}

std::optional<RatVec> realize(const ArrangementSpec& spec, const SignVector& sign) {
  return feasible_strict(chamber_system(spec, sign), sum_zero_constraint(spec.m));
}

namespace {

RatVec random_seed_point(const ArrangementSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  std::vector<std::int64_t> x(static_cast<std::size_t>(spec.m));
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    x[i] = coord(rng);
    sum += x[i];
  }
  x.back() = -sum;
  if (spec.cone_restrict) std::sort(x.begin(), x.end(), std::greater<>());
  RatVec out;
  for (std::int64_t v : x) out.emplace_back(v);
  return out;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const ArrangementSpec& spec, const EnumerateOptions& options) {
  check_m(spec.m);
  const std::size_t nh = hyperplane_count(spec);

  std::mt19937_64 rng(options.seed);
  SignVector seed;
  bool seeded = false;
  for (int attempt = 0; attempt < options.max_seed_retries && !seeded; ++attempt) {
    try {
      seed = sign_of_point(spec, random_seed_point(spec, rng));
      seeded = true;
    } catch (const OnHyperplane&) {
    } catch (const DimensionMismatch&) {
      // Ties in a cone-restricted seed.
    }
  }
  if (!seeded) {
    throw SeedDegenerate("no generic seed point after " + std::to_string(options.max_seed_retries) + " attempts");
  }

  std::unordered_set<SignVector, SignVectorHash> visited;
  std::unordered_set<SignVector, SignVectorHash> rejected;
  std::vector<Chamber> found;

  auto seed_witness = realize(spec, seed);
  if (!seed_witness) throw Error(ErrorKind::kInternal, "seed region reported empty");
  visited.insert(seed);
  found.push_back({seed, std::move(*seed_witness)});

  std::vector<std::size_t> frontier{0};
  const unsigned threads = std::max(1U, options.threads);
  while (!frontier.empty()) {
    std::set<SignVector> candidate_set;
    for (std::size_t idx : frontier) {
      for (std::size_t h = 0; h < nh; ++h) {
        SignVector next = found[idx].sign;
        next.flip(h);
        if (visited.contains(next) || rejected.contains(next)) continue;
        candidate_set.insert(std::move(next));
      }
    }
    std::vector<SignVector> candidates(candidate_set.begin(), candidate_set.end());
    std::vector<std::optional<RatVec>> results(candidates.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i = cursor++; i < candidates.size(); i = cursor++) results[i] = realize(spec, candidates[i]);
    };
    if (threads == 1 || candidates.size() < 2) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, candidates.size()); ++t) pool.emplace_back(worker);
    }

    frontier.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!results[i]) {
        rejected.insert(std::move(candidates[i]));
        continue;
      }
      visited.insert(candidates[i]);
      frontier.push_back(found.size());
      found.push_back({std::move(candidates[i]), std::move(*results[i])});
    }
    if (options.progress) options.progress(found.size());
  }

  std::sort(found.begin(), found.end(), [](const Chamber& a, const Chamber& b) { return a.sign < b.sign; });
  return found;
}

std::vector<Chamber> chambers_in_fundamental_cone(int m, const EnumerateOptions& options) {
  if (m < 3) throw DimensionMismatch("fundamental cone enumeration needs m >= 3");
  const ArrangementSpec spec{m, false, true};
  // Each chamber meets the convex cone in a single convex region, so regions
  // and chambers correspond one to one.
  return enumerate_chambers(spec, options);
}

}  // namespace braidslice
