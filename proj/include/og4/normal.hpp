#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/perm_group.hpp"

namespace og4 {

struct NormalSearchLimits {
  // Bound on the number of distinct normal subgroups discovered.
  std::size_t max_normal_subgroups = 100'000;
};

// Conjugacy classes as sorted id sets, listed by least element.
std::vector<ElementSet> conjugacy_classes(const PermGroup& group);

bool is_normal(const PermGroup& group, const PermGroup& sub);
// Normal closure of `seeds` (ids in group).
PermGroup normal_closure(const PermGroup& group, const ElementSet& seeds);
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds);

// Every normal subgroup exactly once, ordered by order, then by element ids.
std::vector<PermGroup> all_normal_subgroups(const PermGroup& group,
                                            const NormalSearchLimits& limits = {});
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group,
                                                const NormalSearchLimits& limits = {});

enum class Quasiprimitivity { quasiprimitive, biquasiprimitive, neither };
std::string to_string(Quasiprimitivity q);
Quasiprimitivity quasiprimitivity_type(const PermGroup& group,
                                       const NormalSearchLimits& limits = {});

// Nonabelian with only the trivial and full normal subgroups.
bool is_nonabelian_simple(const PermGroup& group);

struct BlockAction {
  PermGroup induced;  // on block indices
  PermGroup kernel;   // elements fixing every block
  std::vector<std::size_t> block_of;
  std::vector<Point> representatives;  // least point of each block

  // The permutation of blocks induced by element g of the acting group.
  Permutation block_image(const PermGroup& group, ElementId g) const;
};

// Throws InvalidArgument when the partition is not group-invariant.
BlockAction induced_block_action(const PermGroup& group, const BlockPartition& partition,
                                 const EnumerationLimits& limits = {});

PermGroup centralizer(const PermGroup& group, const ElementSet& subset);
PermGroup center(const PermGroup& group);
// Subgroup generated by all commutators [a, b], a in A, b in B (ids of group).
ElementSet commutator_subgroup(const PermGroup& group, const ElementSet& a, const ElementSet& b);
// Length of the lower central series; nullopt when the group is not nilpotent.
std::optional<int> nilpotency_class(const PermGroup& group);
bool is_elementary_abelian(const PermGroup& group);

// Automorphisms of an abstract group, as bijections of its element ids.
class Automorphism {
 public:
  // Verifies bijectivity and the homomorphism property on all element pairs.
  static Automorphism from_table(const PermGroup& group, std::vector<ElementId> map);
  // x -> c^-1 x c for a permutation c normalizing the group.
  static Automorphism conjugation(const PermGroup& group, const Permutation& c);

  ElementId operator()(ElementId x) const { return map_[x]; }
  const std::vector<ElementId>& table() const { return map_; }
  bool is_identity() const;
  Automorphism then(const Automorphism& other) const;  // this, then other
  std::string description;

 private:
  explicit Automorphism(std::vector<ElementId> m) : map_(std::move(m)) {}
  std::vector<ElementId> map_;
};

// Whether `map` (on element ids of group) is a bijective homomorphism.
bool is_automorphism(const PermGroup& group, const std::vector<ElementId>& map);
// Conjugation automorphisms by every element of `overgroup` that normalizes `group`.
std::vector<Automorphism> conjugation_automorphisms(const PermGroup& group,
                                                    const PermGroup& overgroup);

}  // namespace og4
