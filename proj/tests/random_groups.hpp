#pragma once

#include <numeric>
#include <optional>
#include <random>

#include "og4/perm_group.hpp"

namespace random_groups {

using namespace og4;

// A random transitive group of degree <= 12 that stays enumerable: small
// degrees use arbitrary generators, larger ones generators respecting a
// block system with blocks of size a.
inline std::optional<PermGroup> random_transitive(std::mt19937& rng) {
  std::size_t n = 3 + rng() % 10;
  std::vector<Permutation> gens;
  std::size_t count = 1 + rng() % 2;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    if (n <= 8) {
      std::shuffle(img.begin(), img.end(), rng);
    } else {
      static const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
          {3, 3}, {2, 5}, {5, 2}, {2, 6}, {3, 4}, {4, 3}};
      std::vector<std::pair<std::size_t, std::size_t>> fit;
      for (auto s : shapes)
        if (s.first * s.second == n) fit.push_back(s);
      if (fit.empty()) return std::nullopt;
      auto [a, b] = fit[rng() % fit.size()];
      std::vector<std::size_t> blocks(b);
      std::iota(blocks.begin(), blocks.end(), 0);
      std::shuffle(blocks.begin(), blocks.end(), rng);
      for (std::size_t i = 0; i < b; ++i) {
        std::vector<Point> inner(a);
        std::iota(inner.begin(), inner.end(), Point{0});
        std::shuffle(inner.begin(), inner.end(), rng);
        for (std::size_t j = 0; j < a; ++j) img[i * a + j] = static_cast<Point>(blocks[i] * a + inner[j]);
      }
    }
    gens.emplace_back(img);
  }
  try {
    PermGroup G = PermGroup::generate(gens, EnumerationLimits{100'000, std::size_t{1} << 24});
    if (orbits(G).size() != 1) return std::nullopt;
    return G;
  } catch (const EnumerationOverflow&) {
    return std::nullopt;
  }
}


}  // namespace random_groups
