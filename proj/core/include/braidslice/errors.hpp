#pragma once

#include <stdexcept>
#include <string>

namespace braidslice {

/// Category used by the command-line front end to pick an exit code.
enum class ErrorKind {
  kInternal = 1,
  kBadInput = 2,
  kCache = 3,
  kConsistency = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class NotSymmetric : public Error {
 public:
  explicit NotSymmetric(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

/// Malformed literal in user input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

/// A direction v has a vanishing subset sum (or a nonzero total).
class DegenerateDirection : public Error {
 public:
  DegenerateDirection(const std::string& what, unsigned subset_mask)
      : Error(ErrorKind::kBadInput, what), subset_mask_(subset_mask) {}
  /// Offending subset as a 0-based bitmask (0 when the total sum is nonzero).
  [[nodiscard]] unsigned subset_mask() const { return subset_mask_; }

 private:
  unsigned subset_mask_;
};

class OnHyperplane : public Error {
 public:
  OnHyperplane(const std::string& what, int hyperplane)
      : Error(ErrorKind::kBadInput, what), hyperplane_(hyperplane) {}
  /// Index of the hyperplane the point lies on, in arrangement order.
  [[nodiscard]] int hyperplane() const { return hyperplane_; }

 private:
  int hyperplane_;
};

class SeedDegenerate : public Error {
 public:
  explicit SeedDegenerate(const std::string& what) : Error(ErrorKind::kInternal, what) {}
};

class CorruptCache : public Error {
 public:
  explicit CorruptCache(const std::string& what) : Error(ErrorKind::kCache, what) {}
};

class VersionMismatch : public Error {
 public:
  explicit VersionMismatch(const std::string& what) : Error(ErrorKind::kCache, what) {}
};

class InterpolationInconsistent : public Error {
 public:
  explicit InterpolationInconsistent(const std::string& what) : Error(ErrorKind::kConsistency, what) {}
};

class OrbitSumMismatch : public Error {
 public:
  explicit OrbitSumMismatch(const std::string& what) : Error(ErrorKind::kConsistency, what) {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error(ErrorKind::kConsistency, what) {}
};

class SingularNormalEquations : public Error {
 public:
  explicit SingularNormalEquations(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

class ZeroDirection : public Error {
 public:
  explicit ZeroDirection(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

/// Objects live in R^n with n >= m-1; every ranking is admissible.
class FullDimensionalConfig : public Error {
 public:
  explicit FullDimensionalConfig(const std::string& what) : Error(ErrorKind::kBadInput, what) {}
};

}  // namespace braidslice
