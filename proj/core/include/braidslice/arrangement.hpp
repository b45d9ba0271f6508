#pragma once

// The all-subset arrangement restricted to H0 = {x : sum x = 0}, optionally
// together with the braid hyperplanes x_i = x_j, and enumeration of its
// chambers by breadth-first search over single sign flips.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidslice/linalg.hpp"

namespace braidslice {

inline constexpr int kMaxArrangementSize = 9;

struct ArrangementSpec {
  int m = 3;
  /// Adds the restricted braid hyperplanes x_i = x_j.
  bool augment_braid = false;
  /// Restricts to the open cone x_1 > x_2 > ... > x_m.
  bool cone_restrict = false;
  friend bool operator==(const ArrangementSpec&, const ArrangementSpec&) = default;
};

/// H_I for a nonempty proper subset I of [m], kept in the representative that
/// omits the last index (H_I and H_{[m]\I} agree on H0).
struct SubsetHyperplane {
  unsigned mask = 0;

  /// Canonical representative of an arbitrary proper nonempty subset and
  /// whether the sum over `mask` equals minus the sum over the representative.
  static std::pair<SubsetHyperplane, bool> canonical(unsigned mask, int m);

  /// Position in ascending mask order.
  [[nodiscard]] std::size_t index() const { return mask - 1; }
  [[nodiscard]] std::string label() const;
};

std::size_t subset_hyperplane_count(int m);
std::size_t hyperplane_count(const ArrangementSpec& spec);

/// Integer normals in R^m, canonical subsets in ascending mask order followed
/// (when augmented) by e_i - e_j for i < j in lexicographic order.
std::vector<std::vector<int>> hyperplane_normals(const ArrangementSpec& spec);
std::string hyperplane_label(const ArrangementSpec& spec, std::size_t index);

/// One sign per hyperplane; a set bit means negative.
class SignVector {
 public:
  SignVector() = default;
  SignVector(int m, std::size_t size);

  /// Parses a string of '+' and '-' characters.
  static SignVector parse(int m, std::string_view text);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] int operator[](std::size_t i) const { return negative(i) ? -1 : 1; }
  [[nodiscard]] bool negative(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, int sign);
  void flip(std::size_t i);

  [[nodiscard]] SignVector negated() const;
  /// The first n signs (drops braid entries of an augmented vector).
  [[nodiscard]] SignVector prefix(std::size_t n) const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Lexicographic in index order with '+' before '-'.
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);

 private:
  int m_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& s) const { return s.hash(); }
};

struct Chamber {
  SignVector sign;
  /// Interior point on H0 (and inside the cone when restricted).
  RatVec witness;
};

/// Exact sign of every hyperplane at p. Throws OnHyperplane when p lies on
/// one, DimensionMismatch when p has the wrong length or leaves H0.
SignVector sign_of_point(const ArrangementSpec& spec, std::span<const Rat> p);

/// Inequality system (rows r with r.x > 0) whose solutions on H0 form the
/// region with the given signs; includes cone walls when restricted.
RatMat chamber_system(const ArrangementSpec& spec, const SignVector& sign);

/// Exact interior witness of the region with these signs, if nonempty.
std::optional<RatVec> realize(const ArrangementSpec& spec, const SignVector& sign);

struct EnumerateOptions {
  std::uint64_t seed = 0x5eedULL;
  unsigned threads = 1;
  int max_seed_retries = 100;
  /// Called after each BFS level with the number of regions found so far.
  std::function<void(std::size_t)> progress;
};

/// Every region of the arrangement (inside the cone when restricted), sorted
/// by sign vector. Witnesses depend only on the sign vector, so the output is
/// independent of the seed and the thread count.
std::vector<Chamber> enumerate_chambers(const ArrangementSpec& spec, const EnumerateOptions& options = {});

/// Chambers of the unaugmented arrangement meeting x_1 > ... > x_m.
std::vector<Chamber> chambers_in_fundamental_cone(int m, const EnumerateOptions& options = {});

}  // namespace braidslice
