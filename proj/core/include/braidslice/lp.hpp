#pragma once

// Exact feasibility for small systems of linear inequalities.
//
// Every routine answers with either a witness point that has been checked
// exactly against the system, or std::nullopt meaning the system is
// infeasible. Infeasibility is an answer, not an error.

#include <optional>

#include "braidslice/linalg.hpp"

namespace braidslice {

using Witness = std::optional<RatVec>;

/// Finds x with A x > 0 (every row strictly positive) and E x = 0.
///
/// Solved as A x >= 1: a homogeneous strict system is feasible iff this one is,
/// by rescaling any strict solution. E may be empty (0 rows).
Witness feasible_strict(const RatMat& a, const RatMat& e = {});

/// Finds x with A x > b componentwise and E x = f.
///
/// Maximizes a margin t subject to A x - t 1 >= b, t <= 1 and accepts iff the
/// optimum is positive.
Witness feasible_affine_strict(const RatMat& a, const RatVec& b, const RatMat& e, const RatVec& f);

/// Finds x with A x >= b and E x = f (non-strict).
Witness feasible_affine(const RatMat& a, const RatVec& b, const RatMat& e, const RatVec& f);

}  // namespace braidslice
