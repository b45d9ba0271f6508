#pragma once

// Unfolding models of codimension one: m objects at points mu_j in R^(m-2);
// an individual at y ranks the objects by increasing distance ||y - mu_j||.
// The rankings that occur are the ranking pattern of a braid slice whose
// direction is computed here.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidslice/linalg.hpp"
#include "braidslice/ranking.hpp"

namespace braidslice {

class ObjectConfig {
 public:
  /// Translates the points so their centroid is the origin. Throws
  /// DimensionMismatch when m < 3, the dimensions differ, or n < m-2, and
  /// FullDimensionalConfig when n >= m-1 (every ranking is then admissible).
  static ObjectConfig from_points(std::vector<RatVec> points);

  [[nodiscard]] int m() const { return static_cast<int>(mu_.size()); }
  [[nodiscard]] std::size_t n() const { return mu_.front().size(); }
  [[nodiscard]] const std::vector<RatVec>& mu() const { return mu_; }
  [[nodiscard]] const RatVec& operator[](std::size_t j) const { return mu_[j]; }

  [[nodiscard]] ObjectConfig translated(std::span<const Rat> shift) const;
  [[nodiscard]] ObjectConfig scaled(const Rat& factor) const;
  /// Object i becomes object sigma(i).
  [[nodiscard]] ObjectConfig permuted(std::span<const int> sigma) const;

 private:
  ObjectConfig() = default;
  std::vector<RatVec> mu_;
};

/// One object per line, comma-separated rational or decimal coordinates,
/// '#' starts a comment. Decimals are read exactly.
ObjectConfig parse_object_config(std::string_view text);
ObjectConfig load_object_config(const std::filesystem::path& path);

struct WU {
  RatMat W;
  RatVec u;
};

/// Rows of W are mu_j; u_j = -(||mu_j||^2 - s)/2 with s the mean of the
/// squared norms, so that 1^T W = 0 and 1^T u = 0.
WU build_Wu(const ObjectConfig& cfg);

/// u for the configuration rescaled to mean squared norm one, which stays
/// rational: it is u from build_Wu times m / sum ||mu_j||^2.
RatVec normalized_u(const ObjectConfig& cfg);

struct ForestCheck {
  bool holds = true;
  /// Offending edges, e.g. "{1,2},{3,4}", when violated.
  std::string violation;
};

/// Checks that for every forest with `edges` edges on the points, the
/// difference vectors along its edges are linearly independent.
ForestCheck check_forest_independence(std::span<const RatVec> points, std::size_t edges);

struct GenericityReport {
  bool a1_holds = false;
  bool a2_holds = false;
  std::optional<std::string> first_violation;
  [[nodiscard]] bool generic() const { return a1_holds && a2_holds; }
};

/// (A1): forests of m-2 edges on the mu_j. (A2): spanning trees on the lifted
/// points (mu_j, ||mu_j||^2).
GenericityReport check_genericity(const ObjectConfig& cfg);

struct DirectionResult {
  /// Positive multiple of the slice direction; lies on H0.
  RatVec v_unnormalized;
  RatVec u;
  RatMat W;
};

/// u minus its projection onto span{1, col W}. Throws SingularNormalEquations
/// when W has dependent columns and ZeroDirection when the result vanishes.
DirectionResult direction(const ObjectConfig& cfg);

RankingPattern ranking_pattern_uf(const ObjectConfig& cfg);

/// Exact y with ||y - mu_{i1}||^2 < ... < ||y - mu_{im}||^2, or nullopt when
/// r is not admissible.
std::optional<RatVec> witness_ideal_point(const ObjectConfig& cfg, const Ranking& r);

/// Rankings obtained by sorting exact squared distances from y; nullopt on a tie.
std::optional<Ranking> ranking_at(const ObjectConfig& cfg, std::span<const Rat> y);

/// A configuration whose slice direction is a positive multiple of v, built
/// from a basis of {1, v}^perp adjusted so that u.v > 0. nullopt when no
/// such basis exists (v has exactly one negative entry).
std::optional<ObjectConfig> config_from_direction(std::span<const Rat> v);

}  // namespace braidslice
