#pragma once

// Exhaustive search over Cayley pairs of small abelian groups: every
// (a, b, h) that build_cayley accepts, and whether N is then minimal normal.

#include <string>
#include <vector>

#include "og4/constructions.hpp"

namespace abelian_search {

struct Result {
  std::size_t groups = 0;
  std::size_t generating_pairs = 0;
  std::size_t swapping_automorphisms = 0;
  std::size_t certified = 0;
  std::size_t counterexamples = 0;  // N minimal normal in a certified pair
};

// Abelian groups of order <= 16, one per isomorphism type, as direct
// products of cyclic groups.
inline std::vector<og4::PermGroup> abelian_groups() {
  using namespace og4;
  std::vector<std::vector<std::size_t>> types = {
      {2},       {3},       {4},          {2, 2},    {5},       {6},          {7},
      {8},       {2, 4},    {2, 2, 2},    {9},       {3, 3},    {10},         {11},
      {12},      {2, 6},    {13},         {14},      {15},      {16},         {2, 8},
      {4, 4},    {2, 2, 4}, {2, 2, 2, 2}};
  std::vector<PermGroup> out;
  for (const auto& t : types) {
    PermGroup g = cyclic_group(t[0]);
    for (std::size_t i = 1; i < t.size(); ++i) g = direct_product(g, cyclic_group(t[i]));
    out.push_back(g);
  }
  return out;
}

// The map a -> b, b -> a extended through words in a and b, if well defined.
inline std::optional<std::vector<og4::ElementId>> swap_map(const og4::PermGroup& N, og4::ElementId a,
                                                           og4::ElementId b) {
  using og4::ElementId;
  const ElementId unset = ~ElementId{0};
  std::vector<ElementId> map(N.order(), unset);
  map[0] = 0;
  std::vector<ElementId> todo{0};
  while (!todo.empty()) {
    ElementId x = todo.back();
    todo.pop_back();
    for (auto [g, hg] : {std::pair{a, b}, std::pair{b, a}}) {
      ElementId y = N.mul(x, g), hy = N.mul(map[x], hg);
      if (map[y] == unset) {
        map[y] = hy;
        todo.push_back(y);
      } else if (map[y] != hy) {
        return std::nullopt;
      }
    }
  }
  for (ElementId v : map)
    if (v == unset) return std::nullopt;
  return map;
}

inline Result run() {
  using namespace og4;
  Result res;
  for (const PermGroup& N : abelian_groups()) {
    ++res.groups;
    for (ElementId a = 1; a < N.order(); ++a)
      for (ElementId b = 1; b < N.order(); ++b) {
        if (N.closure(std::vector<ElementId>{a, b}).size() != N.order()) continue;
        ++res.generating_pairs;
        auto map = swap_map(N, a, b);
        if (!map || !is_automorphism(N, *map)) continue;
        ++res.swapping_automorphisms;
        auto built = build_cayley({N, N.element(a), N.element(b), Automorphism::from_table(N, *map)});
        if (!built) continue;
        ++res.certified;
        PermGroup vn = built->normal_subgroup();
        const PermGroup& G = built->pair.group;
        bool minimal = true;
        for (const auto& M : all_normal_subgroups(G))
          if (M.order() > 1 && M.order() < vn.order() && vn.contains_group(M)) minimal = false;
        if (minimal) ++res.counterexamples;
      }
  }
  return res;
}

}  // namespace abelian_search
