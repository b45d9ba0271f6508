#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidslice/rational.hpp"

namespace braidslice {

using RatVec = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(std::size_t n);
  static RatMat diagonal(std::span<const Rat> d);
  static RatMat from_rows(std::span<const RatVec> rows);
  static RatMat from_columns(std::span<const RatVec> cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rat> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] RatVec column(std::size_t c) const;

  void append_row(std::span<const Rat> r);

  [[nodiscard]] RatMat transpose() const;
  [[nodiscard]] bool is_symmetric() const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatVec operator*(const RatMat& a, std::span<const Rat> x);
  friend bool operator==(const RatMat& a, const RatMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

/// Exact rank by fraction-free (Bareiss) elimination on denominator-cleared rows.
std::size_t rank(const RatMat& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix by congruence diagonalization.
/// Throws NotSymmetric.
Inertia signature(const RatMat& s);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RatVec> solve(const RatMat& a, std::span<const Rat> b);

/// Basis (as columns) of { x : m x = 0 }.
RatMat nullspace(const RatMat& m);

/// u minus its orthogonal projection onto the column space of b.
/// Returns nullopt when b's columns are linearly dependent.
std::optional<RatVec> project_out(std::span<const Rat> u, const RatMat& b);

std::string to_string(std::span<const Rat> v);

}  // namespace braidslice
