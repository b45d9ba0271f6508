#include "braidslice/literature.hpp"

#include <array>
#include <vector>

namespace braidslice {
namespace {

const std::vector<long>* descending(int m) {
  static const std::array<std::vector<long>, 7> table{{
      {1, -1},
      {1, -3, 2},
      {1, -7, 15, -9},
      {1, -15, 80, -170, 104},
      {1, -31, 375, -2130, 5270, -3485},
      {1, -63, 1652, -22435, 159460, -510524, 371909},
      {1, -127, 7035, -215439, 3831835, -37769977, 169824305, -135677633},
  }};
  if (m < 2 || m > 8) return nullptr;
  return &table[static_cast<std::size_t>(m - 2)];
}

}  // namespace

std::optional<CharPoly> published_charpoly(int m) {
  const auto* c = descending(m);
  if (c == nullptr) return std::nullopt;
  return Polynomial::from_descending(*c);
}

std::optional<CharPoly> published_augmented_charpoly(int m) {
  static const std::vector<long> m3{1, -6, 5};
  static const std::vector<long> m4{1, -13, 47, -35};
  if (m == 3) return Polynomial::from_descending(m3);
  if (m == 4) return Polynomial::from_descending(m4);
  return std::nullopt;
}

std::optional<BigInt> published_chamber_count(int m) {
  static const std::array<const char*, 7> counts{"2", "6", "32", "370", "11292", "1066044", "347326352"};
  if (m < 2 || m > 8) return std::nullopt;
  return BigInt(counts[static_cast<std::size_t>(m - 2)]);
}

std::optional<int> published_orbit_count(int m) {
  static const std::array<int, 4> counts{2, 4, 12, 56};
  if (m < 3 || m > 6) return std::nullopt;
  return counts[static_cast<std::size_t>(m - 3)];
}

}  // namespace braidslice
