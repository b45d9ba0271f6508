#pragma once

// Published characteristic polynomials and counts, used as regression
// constants and as the reported value where computation is out of reach.

#include <optional>

#include "braidslice/charpoly.hpp"

namespace braidslice {

/// chi of the unaugmented arrangement for 2 <= m <= 8, or nullopt.
std::optional<CharPoly> published_charpoly(int m);

/// chi with the braid hyperplanes added, for m = 3, 4.
std::optional<CharPoly> published_augmented_charpoly(int m);

/// Number of chambers of the unaugmented arrangement for 2 <= m <= 8.
std::optional<BigInt> published_chamber_count(int m);

/// Orbits of chambers under relabeling, for 3 <= m <= 6.
std::optional<int> published_orbit_count(int m);

}  // namespace braidslice
