#pragma once

// Characteristic polynomials of the restricted all-subset arrangement (and of
// its union with the braid arrangement) by counting points over finite
// fields, and chamber counts from them.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braidslice/arrangement.hpp"
#include "braidslice/rational.hpp"

namespace braidslice {

/// Integer polynomial in t, coefficients stored by ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending);
  /// {1, -7, 15, -9} is t^3 - 7t^2 + 15t - 9.
  static Polynomial from_descending(std::span<const long> coeffs);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const BigInt& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Nonzero coefficients alternate in sign from the leading one down.
  [[nodiscard]] bool alternates_in_sign() const;

  [[nodiscard]] BigInt evaluate(const BigInt& t) const;
  /// "t^3-7t^2+15t-9".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

using CharPoly = Polynomial;

struct FieldCount {
  std::uint64_t q = 0;
  /// Points of F_q^m on x_1 + ... + x_m = 0 off every hyperplane.
  std::uint64_t count = 0;
};

bool is_prime(std::uint64_t n);

/// Exact point count over F_q. The arrangement is central and contains
/// x_1 = 0, so the count is (q-1) times the count on the slice x_1 = 1; the
/// innermost coordinate is counted in closed form from the set of residues
/// it must avoid. `threads` splits the outermost free coordinate.
FieldCount count_points(const ArrangementSpec& spec, std::uint64_t q, unsigned threads = 1);

/// Smallest value such that every prime above it is good for the
/// arrangement: no nonzero minor of its integer normal matrix (in the
/// coordinates x_1..x_{m-1}) can reach it, by Hadamard's inequality.
std::uint64_t default_prime_floor(const ArrangementSpec& spec);

struct CharPolyOptions {
  /// Primes must exceed this; 0 selects default_prime_floor().
  std::uint64_t prime_floor = 0;
  /// Extra primes checked against the interpolated polynomial.
  int validation_primes = 2;
  /// Times the prime window is shifted upward after a failed validation.
  int max_retries = 3;
  unsigned threads = 1;
};

struct CharPolyRun {
  CharPoly poly;
  std::vector<FieldCount> interpolation;
  std::vector<FieldCount> validation;
};

/// Interpolates chi from m point counts and validates it on further primes.
/// Throws InterpolationInconsistent when no window passes.
CharPolyRun compute_charpoly(const ArrangementSpec& spec, const CharPolyOptions& options = {});
CharPoly charpoly(const ArrangementSpec& spec, const CharPolyOptions& options = {});

/// Number of chambers, (-1)^deg chi(-1).
BigInt chamber_count(const CharPoly& p);

}  // namespace braidslice
