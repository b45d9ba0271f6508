#include "braidslice/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "braidslice/errors.hpp"

namespace braidslice {
namespace {

std::string subset_label(unsigned mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

void require_zero_sum(std::span<const Rat> v) {
  Rat total;
  for (const Rat& x : v) total += x;
  if (!total.is_zero()) {
    throw DegenerateDirection("direction does not lie on H0: coordinates sum to " + total.str(), 0);
  }
}

}  // namespace

Ranking::Ranking(std::span<const int> order) {
  if (order.empty() || order.size() > static_cast<std::size_t>(kMaxObjects)) {
    throw DimensionMismatch("Ranking: size must be between 1 and " + std::to_string(kMaxObjects));
  }
  m_ = static_cast<std::uint8_t>(order.size());
  std::vector<bool> seen(order.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int i = order[k];
    if (i < 0 || i >= m_ || seen[static_cast<std::size_t>(i)]) {
      throw DimensionMismatch("Ranking: not a permutation");
    }
    seen[static_cast<std::size_t>(i)] = true;
    order_[k] = static_cast<std::uint8_t>(i);
  }
}

Ranking Ranking::parse(std::string_view text) {
  std::vector<int> order;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c < '1' || c > '9') throw DimensionMismatch("Ranking: bad character in '" + std::string(text) + "'");
    order.push_back(c - '1');
  }
  return Ranking(order);
}

Ranking Ranking::identity(int m) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(order);
}

Ranking Ranking::reversed() const {
  Ranking out = *this;
  std::reverse(out.order_.begin(), out.order_.begin() + m_);
  return out;
}

Ranking Ranking::relabeled(std::span<const int> sigma) const {
  if (sigma.size() != m_) throw DimensionMismatch("Ranking::relabeled: permutation size mismatch");
  Ranking out = *this;
  for (int k = 0; k < m_; ++k) out.order_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(sigma[order_[static_cast<std::size_t>(k)]]);
  return out;
}

std::string Ranking::str() const {
  std::string out = "(";
  for (int k = 0; k < m_; ++k) out += static_cast<char>('1' + order_[static_cast<std::size_t>(k)]);
  return out + ")";
}

std::vector<Ranking> all_rankings(int m) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::string_view to_string(SliceClass c) {
  switch (c) {
    case SliceClass::kEmpty:
      return "empty";
    case SliceClass::kBounded:
      return "bounded";
    case SliceClass::kUnbounded:
      return "unbounded";
  }
  return "?";
}

RankingPattern::RankingPattern(int m, std::vector<Ranking> excluded) : m_(m), excluded_(std::move(excluded)) {
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

bool RankingPattern::admits(const Ranking& r) const {
  return !std::binary_search(excluded_.begin(), excluded_.end(), r);
}

std::vector<Ranking> RankingPattern::admissible() const {
  std::vector<Ranking> out;
  for (const Ranking& r : all_rankings(m_)) {
    if (admits(r)) out.push_back(r);
  }
  return out;
}

RankingPattern RankingPattern::relabeled(std::span<const int> sigma) const {
  std::vector<Ranking> ex;
  ex.reserve(excluded_.size());
  for (const Ranking& r : excluded_) ex.push_back(r.relabeled(sigma));
  return {m_, std::move(ex)};
}

void require_generic_direction(std::span<const Rat> v) {
  require_zero_sum(v);
  const unsigned m = static_cast<unsigned>(v.size());
  // Subsets avoiding the last index cover every hyperplane (I and its complement coincide).
  for (unsigned mask = 1; mask < (1U << (m - 1)); ++mask) {
    Rat s;
    for (unsigned i = 0; i + 1 < m; ++i) {
      if ((mask >> i) & 1U) s += v[i];
    }
    if (s.is_zero()) {
      throw DegenerateDirection("direction is not generic: the sum over I=" + subset_label(mask) + " vanishes", mask);
    }
  }
}

SliceClass classify_cell(std::span<const Rat> v, const Ranking& r) {
  if (static_cast<int>(v.size()) != r.size()) throw DimensionMismatch("classify_cell: ranking and direction sizes differ");
  require_zero_sum(v);
  bool any_pos = false;
  bool any_neg = false;
  Rat prefix;
  unsigned mask = 0;
  for (int k = 0; k + 1 < r.size(); ++k) {
    prefix += v[static_cast<std::size_t>(r[k])];
    mask |= 1U << r[k];
    const int s = prefix.sign();
    if (s == 0) {
      throw DegenerateDirection("direction is not generic: the sum over I=" + subset_label(mask) + " vanishes", mask);
    }
    (s > 0 ? any_pos : any_neg) = true;
  }
  if (any_pos && any_neg) return SliceClass::kUnbounded;
  return any_pos ? SliceClass::kBounded : SliceClass::kEmpty;
}

RankingPattern ranking_pattern(std::span<const Rat> v) {
  require_generic_direction(v);
  const int m = static_cast<int>(v.size());
  std::vector<Ranking> excluded;
  for (const Ranking& r : all_rankings(m)) {
    if (classify_cell(v, r) == SliceClass::kEmpty) excluded.push_back(r);
  }
  return {m, std::move(excluded)};
}

std::vector<Ranking> bounded_cells(std::span<const Rat> v) {
  require_generic_direction(v);
  std::vector<Ranking> out;
  for (const Ranking& r : all_rankings(static_cast<int>(v.size()))) {
    if (classify_cell(v, r) == SliceClass::kBounded) out.push_back(r);
  }
  return out;
}

RatVec permute_vector(std::span<const Rat> v, std::span<const int> sigma) {
  if (sigma.size() != v.size()) throw DimensionMismatch("permute_vector: size mismatch");
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(sigma[i])] = v[i];
  return out;
}

}  // namespace braidslice
