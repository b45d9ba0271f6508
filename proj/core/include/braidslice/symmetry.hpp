#pragma once

// Relabeling symmetry: the symmetric group acts on chambers by permuting
// coordinates. Canonical forms, stabilizers, orbit tables through the
// fundamental cone, realizability classes and the derived counts.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "braidslice/arrangement.hpp"
#include "braidslice/charpoly.hpp"
#include "braidslice/ranking.hpp"

namespace braidslice {

using Permutation = std::vector<int>;

/// All permutations of {0..m-1} in lexicographic order.
std::vector<Permutation> all_permutations(int m);
Permutation inverse(std::span<const int> sigma);

enum class RealizabilityClass {
  /// At least two positive and two negative entries: both D and -D realizable.
  kV2,
  /// Exactly one positive entry.
  kV1Realizable,
  /// Exactly one negative entry.
  kV1NotRealizable,
};

std::string_view to_string(RealizabilityClass c);

/// Class of a generic direction by the signs of its entries.
RealizabilityClass classify_realizability(std::span<const Rat> v);
RealizabilityClass classify_realizability(const Chamber& c);

/// sigma applied to the chamber with sign vector s: the sign at sigma(I) is
/// the sign at I. Accepts plain and augmented sign vectors.
SignVector act(const SignVector& s, std::span<const int> sigma);

/// Lexicographically smallest sign vector in the orbit of s.
SignVector canonical_form(const SignVector& s);

/// Permutations fixing s.
std::vector<Permutation> stabilizer(const SignVector& s);

std::uint64_t factorial(int m);

/// rho(i) = m+1-i as a 0-based permutation.
Permutation rho(int m);
Ranking rho_reverse(const Ranking& r);
SignVector rho_reverse(const SignVector& s);
/// -rho D: (v_1, ..., v_m) -> (-v_m, ..., -v_1).
SignVector minus_rho(const SignVector& s);
RatVec minus_rho(std::span<const Rat> v);

struct OrbitRecord {
  SignVector canonical_sign;
  /// Sign vector of the orbit's chamber that meets the fundamental cone.
  SignVector cone_sign;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  /// Point of the chamber with strictly decreasing coordinates.
  RatVec representative_witness;
  RealizabilityClass realizability = RealizabilityClass::kV2;
  int positive_entries = 0;
};

struct OrbitTable {
  int m = 0;
  std::vector<OrbitRecord> orbits;
  /// Chambers meeting the fundamental cone; equals orbits.size() exactly when
  /// the cone chambers form a cross-section of the orbits.
  std::size_t cone_chambers = 0;
  BigInt total_chambers;
};

struct OrbitOptions {
  EnumerateOptions enumerate;
  /// Expected total number of chambers; 0 computes it from chi.
  std::uint64_t expected_total = 0;
};

/// One record per orbit meeting x_1 > ... > x_m, sorted by descending
/// positive_entries then cone sign. Throws OrbitSumMismatch unless the orbit
/// sizes add up to the total chamber count.
OrbitTable orbit_table(int m, const OrbitOptions& options = {});

/// Distinct canonical forms among the given chambers.
std::size_t orbit_count(std::span<const Chamber> chambers);

/// Orbits of all chambers minus one.
std::size_t inequivalent_pattern_count(int m, const EnumerateOptions& options = {});
std::size_t inequivalent_pattern_count(std::span<const Chamber> chambers);

/// |chambers of the augmented arrangement| / m! - 1. Throws NotDivisible.
BigInt upper_bound_via_quotient(int m, const CharPolyOptions& options = {});

struct QmResult {
  BigInt value;
  bool from_literature = false;
};

/// Number of realizable ranking patterns, chambers minus m. m <= 7 is
/// computed from chi unless allow_compute is false; m = 8 is the published count.
QmResult q_of_m(int m, bool allow_compute = true, unsigned threads = 1);

}  // namespace braidslice
