#pragma once

// Exact rational numbers.
//
// Values whose reduced numerator and denominator fit in a signed 64-bit word
// are stored inline; anything larger is promoted to a GMP rational and demoted
// again as soon as it fits. Arithmetic never overflows silently.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace braidslice {

using BigInt = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t n, std::int64_t d);
  explicit Rat(const BigInt& n);
  Rat(const BigInt& n, const BigInt& d);

  Rat(const Rat& other);
  Rat(Rat&& other) noexcept = default;
  Rat& operator=(const Rat& other);
  Rat& operator=(Rat&& other) noexcept = default;
  ~Rat() = default;

  /// Parses "p", "p/q", or a finite decimal such as "-0.125" or "3e-2".
  static Rat parse(std::string_view text);

  [[nodiscard]] BigInt num() const;
  [[nodiscard]] BigInt den() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  [[nodiscard]] mpq_class to_mpq() const;
  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rat abs(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace braidslice
