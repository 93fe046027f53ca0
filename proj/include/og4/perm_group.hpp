#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "og4/permutation.hpp"

namespace og4 {

using ElementId = std::uint32_t;

// Sorted ids of elements of one PermGroup.
using ElementSet = std::vector<ElementId>;

struct EnumerationLimits {
  std::size_t max_order = 1'000'000;
  // order * degree; bounds the memory of the element table.
  std::size_t max_table_entries = std::size_t{1} << 28;
};

// A finite permutation group with every element enumerated.
//
// Elements are indexed by the lexicographic order of their image sequences,
// so the identity is always element 0. A base (points whose images identify
// an element) is computed once, which makes products, inverses and lookups
// cost O(|base|) rather than O(degree).
//
// Instances are immutable and cheap to copy; the element table is shared.
class PermGroup {
 public:
  static constexpr ElementId identity_id = 0;

  // Breadth-first closure of `generators` under right multiplication.
  // Throws EnumerationOverflow when the group exceeds `limits`.
  static PermGroup generate(std::vector<Permutation> generators,
                            const EnumerationLimits& limits = {});
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<ElementId>& generator_ids() const;
  const std::vector<Point>& base() const;

  std::span<const Point> row(ElementId g) const;
  Point image(ElementId g, Point x) const { return row(g)[x]; }
  Permutation element(ElementId g) const;

  std::optional<ElementId> find(std::span<const Point> images) const;
  std::optional<ElementId> find(const Permutation& p) const { return find(p.images()); }
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  ElementId mul(ElementId a, ElementId b) const;  // a, then b
  ElementId inv(ElementId a) const;
  ElementId conj(ElementId x, ElementId g) const;  // g^-1 x g
  ElementId commutator(ElementId a, ElementId b) const;  // a^-1 b^-1 a b
  std::size_t element_order(ElementId a) const;

  // Subgroup generated by `gens`, as sorted ids.
  ElementSet closure(std::span<const ElementId> gens) const;
  // Materializes a subgroup from its (sorted) element ids. When `gens` is
  // empty a small generating set is chosen greedily.
  PermGroup subgroup(const ElementSet& elements, std::vector<ElementId> gens = {}) const;
  PermGroup subgroup_generated(std::span<const ElementId> gens) const;
  ElementSet all_ids() const;
  // Ids in this group of every element of `sub`; throws if sub is not contained.
  ElementSet ids_of(const PermGroup& sub) const;
  bool contains_group(const PermGroup& sub) const;

  bool is_abelian() const;
  bool same_elements(const PermGroup& other) const;

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Blocks are sorted and listed by least element.
struct BlockPartition {
  std::vector<std::vector<Point>> blocks;

  std::size_t size() const { return blocks.size(); }
  std::size_t degree() const;
  // block index of every point
  std::vector<std::size_t> block_index() const;
  bool is_partition_of(std::size_t degree) const;
};

struct TransitivityProfile {
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
  std::size_t orbit_count = 0;
};

PermGroup enumerate_group(std::vector<Permutation> generators,
                          const EnumerationLimits& limits = {});
BlockPartition orbits(const PermGroup& group);
BlockPartition orbits(std::span<const Permutation> generators, std::size_t degree);
PermGroup point_stabilizer(const PermGroup& group, Point x);
TransitivityProfile transitivity_profile(const PermGroup& group);

// Standard groups on {0..n-1}.
PermGroup symmetric_group(std::size_t n, const EnumerationLimits& limits = {});
PermGroup alternating_group(std::size_t n, const EnumerationLimits& limits = {});
PermGroup cyclic_group(std::size_t n);
// A x B acting on the disjoint union of their point sets (B shifted by deg A).
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         const EnumerationLimits& limits = {});
// Right regular representation on the element ids.
PermGroup regular_representation(const PermGroup& group, const EnumerationLimits& limits = {});

}  // namespace og4
