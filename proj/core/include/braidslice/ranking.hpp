#pragma once

// Rankings, ranking patterns of braid slices, and the prefix-sum criterion
// deciding how a braid chamber meets the slice {x in H0 : v.x = 1}.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidslice/linalg.hpp"

namespace braidslice {

inline constexpr int kMaxObjects = 9;

/// A total order (i1 ... im) of the objects, stored 0-based.
class Ranking {
 public:
  Ranking() = default;
  explicit Ranking(std::span<const int> order);

  /// Parses "(132)" or "132" (1-based digits).
  static Ranking parse(std::string_view text);
  static Ranking identity(int m);

  [[nodiscard]] int size() const { return m_; }
  [[nodiscard]] int operator[](int k) const { return order_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] std::span<const std::uint8_t> order() const {
    return {order_.data(), static_cast<std::size_t>(m_)};
  }

  [[nodiscard]] Ranking reversed() const;
  /// Relabels objects: position k holds sigma(i_k). sigma is 0-based.
  [[nodiscard]] Ranking relabeled(std::span<const int> sigma) const;

  /// "(132)" with 1-based labels.
  [[nodiscard]] std::string str() const;

  friend auto operator<=>(const Ranking&, const Ranking&) = default;
  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::uint8_t m_ = 0;
  std::array<std::uint8_t, kMaxObjects> order_{};
};

/// All m! rankings in lexicographic order.
std::vector<Ranking> all_rankings(int m);

enum class SliceClass { kEmpty, kBounded, kUnbounded };

std::string_view to_string(SliceClass c);

/// A set of rankings stored as its complement (the excluded rankings),
/// sorted ascending.
class RankingPattern {
 public:
  RankingPattern(int m, std::vector<Ranking> excluded);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const std::vector<Ranking>& excluded() const { return excluded_; }
  [[nodiscard]] bool admits(const Ranking& r) const;
  [[nodiscard]] std::vector<Ranking> admissible() const;

  /// Pattern with every ranking relabeled by sigma.
  [[nodiscard]] RankingPattern relabeled(std::span<const int> sigma) const;

  friend bool operator==(const RankingPattern&, const RankingPattern&) = default;
  friend auto operator<=>(const RankingPattern&, const RankingPattern&) = default;

 private:
  int m_;
  std::vector<Ranking> excluded_;
};

/// Throws DegenerateDirection unless sum(v) = 0 and no proper nonempty
/// subset sum of v vanishes.
void require_generic_direction(std::span<const Rat> v);

/// Empty iff every proper prefix sum along r is negative, bounded iff every
/// one is positive, unbounded otherwise. Throws DegenerateDirection.
SliceClass classify_cell(std::span<const Rat> v, const Ranking& r);

/// Rankings whose braid chamber meets the slice. Throws DegenerateDirection.
RankingPattern ranking_pattern(std::span<const Rat> v);

/// Rankings whose chamber meets the slice in a nonempty bounded set.
std::vector<Ranking> bounded_cells(std::span<const Rat> v);

/// Permutes coordinates: (sigma v)_{sigma(i)} = v_i.
RatVec permute_vector(std::span<const Rat> v, std::span<const int> sigma);

}  // namespace braidslice
