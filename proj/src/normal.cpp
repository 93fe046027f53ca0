#include "og4/normal.hpp"

#include <algorithm>
#include <map>

#include "og4/error.hpp"

namespace og4 {

namespace {

// Grows a subgroup one generator at a time, skipping elements already inside.
class IncrementalSubgroup {
 public:
  explicit IncrementalSubgroup(const PermGroup& g) : group_(g), in_(g.order(), 0) {
    members_.push_back(PermGroup::identity_id);
    in_[PermGroup::identity_id] = 1;
  }

  bool contains(ElementId x) const { return in_[x] != 0; }

  void add(ElementId x) {
    if (in_[x]) return;
    gens_.push_back(x);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (ElementId g : gens_) {
        ElementId y = group_.mul(members_[i], g);
        if (!in_[y]) {
          in_[y] = 1;
          members_.push_back(y);
        }
      }
    }
  }

  ElementSet sorted() const {
    ElementSet s = members_;
    std::sort(s.begin(), s.end());
    return s;
  }
  const std::vector<ElementId>& gens() const { return gens_; }
  std::size_t size() const { return members_.size(); }

 private:
  const PermGroup& group_;
  std::vector<char> in_;
  std::vector<ElementId> members_;
  std::vector<ElementId> gens_;
};

struct NormalEntry {
  ElementSet ids;
  std::vector<char> in;
};

// All normal subgroups as id sets: normal closures of classes, then their
// products, since every normal subgroup is the product of the class closures
// it contains.
std::vector<ElementSet> normal_subgroup_sets(const PermGroup& group, const NormalSearchLimits& limits) {
  const std::size_t order = group.order();
  auto classes = conjugacy_classes(group);

  std::vector<NormalEntry> closures;
  std::map<ElementSet, std::size_t> seen_closure;
  for (const auto& cls : classes) {
    if (cls.front() == PermGroup::identity_id) continue;
    IncrementalSubgroup sub(group);
    for (ElementId c : cls) sub.add(c);
    ElementSet ids = sub.sorted();
    if (seen_closure.count(ids)) continue;
    seen_closure.emplace(ids, closures.size());
    NormalEntry e{ids, std::vector<char>(order, 0)};
    for (ElementId x : e.ids) e.in[x] = 1;
    closures.push_back(std::move(e));
  }

  std::vector<NormalEntry> found;
  std::map<ElementSet, std::size_t> index;
  {
    NormalEntry triv{{PermGroup::identity_id}, std::vector<char>(order, 0)};
    triv.in[PermGroup::identity_id] = 1;
    index.emplace(triv.ids, 0);
    found.push_back(std::move(triv));
  }

  std::vector<char> in(order, 0);
  for (const auto& x : closures) {
    const std::size_t existing = found.size();
    for (std::size_t ai = 0; ai < existing; ++ai) {
      const NormalEntry& a = found[ai];
      bool inside = true;
      for (ElementId g : x.ids)
        if (!a.in[g]) {
          inside = false;
          break;
        }
      if (inside) continue;
      // A and X normal, so <A, X> = A X, a union of right cosets A x.
      std::fill(in.begin(), in.end(), 0);
      ElementSet join;
      for (ElementId xe : x.ids) {
        if (in[xe]) continue;
        for (ElementId ae : a.ids) {
          ElementId y = group.mul(ae, xe);
          if (!in[y]) {
            in[y] = 1;
            join.push_back(y);
          }
        }
      }
      std::sort(join.begin(), join.end());
      if (index.count(join)) continue;
      if (found.size() + 1 > limits.max_normal_subgroups)
        throw EnumerationOverflow("normal subgroup search exceeded the limit of " +
                                  std::to_string(limits.max_normal_subgroups) + " subgroups");
      index.emplace(join, found.size());
      NormalEntry e{std::move(join), in};
      found.push_back(std::move(e));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.ids));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool subset_of(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<ElementSet> conjugacy_classes(const PermGroup& group) {
  std::vector<ElementSet> classes;
  std::vector<char> seen(group.order(), 0);
  for (ElementId x = 0; x < group.order(); ++x) {
    if (seen[x]) continue;
    ElementSet cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (ElementId g : group.generator_ids()) {
        ElementId y = group.conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
  if (!group.contains_group(sub)) return false;
  for (const auto& g : group.generators())
    for (const auto& s : sub.generators())
      if (!sub.contains(s.conjugate_by(g))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& group, const ElementSet& seeds) {
  IncrementalSubgroup sub(group);
  std::vector<ElementId> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    ElementId x = pending.back();
    pending.pop_back();
    if (sub.contains(x)) continue;
    sub.add(x);
    // Conjugates of the new generator must lie in the closure as well.
    for (ElementId g : group.generator_ids()) pending.push_back(group.conj(x, g));
    for (ElementId h : sub.gens())
      for (ElementId g : group.generator_ids()) {
        ElementId c = group.conj(h, g);
        if (!sub.contains(c)) pending.push_back(c);
      }
  }
  return group.subgroup(sub.sorted(), sub.gens());
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds) {
  ElementSet ids;
  for (const auto& s : seeds) {
    auto id = group.find(s);
    if (!id) throw InvalidArgument("seed " + s.to_cycle_string() + " is not in the group");
    ids.push_back(*id);
  }
  return normal_closure(group, ids);
}

std::vector<PermGroup> all_normal_subgroups(const PermGroup& group, const NormalSearchLimits& limits) {
  std::vector<PermGroup> out;
  for (const auto& ids : normal_subgroup_sets(group, limits)) out.push_back(group.subgroup(ids));
  return out;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group,
                                                const NormalSearchLimits& limits) {
  auto sets = normal_subgroup_sets(group, limits);
  std::vector<PermGroup> out;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (sets[j].size() < sets[i].size() && sets[i].size() % sets[j].size() == 0 &&
          subset_of(sets[j], sets[i]))
        minimal = false;
    if (minimal) out.push_back(group.subgroup(sets[i]));
  }
  return out;
}

std::string to_string(Quasiprimitivity q) {
  switch (q) {
    case Quasiprimitivity::quasiprimitive:
      return "quasiprimitive";
    case Quasiprimitivity::biquasiprimitive:
      return "biquasiprimitive";
    case Quasiprimitivity::neither:
      return "neither";
  }
  return "neither";
}

Quasiprimitivity quasiprimitivity_type(const PermGroup& group, const NormalSearchLimits& limits) {
  if (!transitivity_profile(group).transitive)
    throw InvalidArgument("quasiprimitivity is defined for transitive groups only");
  bool all_transitive = true, all_at_most_two = true, some_two = false;
  for (const auto& n : all_normal_subgroups(group, limits)) {
    if (n.order() == 1) continue;
    std::size_t k = orbits(n).size();
    all_transitive = all_transitive && k == 1;
    all_at_most_two = all_at_most_two && k <= 2;
    some_two = some_two || k == 2;
  }
  if (all_transitive) return Quasiprimitivity::quasiprimitive;
  if (all_at_most_two && some_two) return Quasiprimitivity::biquasiprimitive;
  return Quasiprimitivity::neither;
}

bool is_nonabelian_simple(const PermGroup& group) {
  if (group.order() == 1 || group.is_abelian()) return false;
  for (const auto& cls : conjugacy_classes(group)) {
    if (cls.front() == PermGroup::identity_id) continue;
    IncrementalSubgroup sub(group);
    for (ElementId c : cls) {
      sub.add(c);
      if (sub.size() == group.order()) break;
    }
    if (sub.size() != group.order()) return false;
  }
  return true;
}

Permutation BlockAction::block_image(const PermGroup& group, ElementId g) const {
  std::vector<Point> img(representatives.size());
  for (std::size_t b = 0; b < representatives.size(); ++b)
    img[b] = static_cast<Point>(block_of[group.image(g, representatives[b])]);
  return Permutation(std::move(img));
}

BlockAction induced_block_action(const PermGroup& group, const BlockPartition& partition,
                                 const EnumerationLimits& limits) {
  if (!partition.is_partition_of(group.degree()))
    throw InvalidArgument("blocks do not partition the point set");
  std::vector<std::size_t> block_of = partition.block_index();
  std::vector<Point> reps;
  for (const auto& b : partition.blocks) reps.push_back(b.front());

  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> img(partition.size());
    for (std::size_t b = 0; b < partition.size(); ++b) {
      std::size_t target = block_of[g(partition.blocks[b].front())];
      for (Point x : partition.blocks[b])
        if (block_of[g(x)] != target)
          throw InvalidArgument("partition is not invariant under " + g.to_cycle_string());
      img[b] = static_cast<Point>(target);
    }
    gens.emplace_back(std::move(img));
  }

  ElementSet kernel_ids;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool fixes = true;
    for (std::size_t b = 0; b < reps.size() && fixes; ++b)
      fixes = block_of[group.image(g, reps[b])] == b;
    if (fixes) kernel_ids.push_back(g);
  }
  return BlockAction{PermGroup::generate(std::move(gens), limits), group.subgroup(kernel_ids),
                     std::move(block_of), std::move(reps)};
}

PermGroup centralizer(const PermGroup& group, const ElementSet& subset) {
  ElementSet ids;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool commutes = true;
    for (ElementId s : subset)
      if (group.mul(g, s) != group.mul(s, g)) {
        commutes = false;
        break;
      }
    if (commutes) ids.push_back(g);
  }
  return group.subgroup(ids);
}

PermGroup center(const PermGroup& group) {
  ElementSet gens(group.generator_ids().begin(), group.generator_ids().end());
  return centralizer(group, gens);
}

ElementSet commutator_subgroup(const PermGroup& group, const ElementSet& a, const ElementSet& b) {
  IncrementalSubgroup sub(group);
  for (ElementId x : a)
    for (ElementId y : b) sub.add(group.commutator(x, y));
  return sub.sorted();
}

std::optional<int> nilpotency_class(const PermGroup& group) {
  if (group.order() == 1) return 0;
  const ElementSet all = group.all_ids();
  ElementSet term = all;
  for (int c = 1;; ++c) {
    ElementSet next = commutator_subgroup(group, term, all);
    if (next.size() == 1) return c;
    if (next.size() == term.size()) return std::nullopt;
    term = std::move(next);
  }
}

bool is_elementary_abelian(const PermGroup& group) {
  if (!group.is_abelian()) return false;
  std::size_t p = 0;
  for (ElementId g : group.generator_ids()) {
    std::size_t o = group.element_order(g);
    if (o == 1) continue;
    for (std::size_t d = 2; d < o; ++d)
      if (o % d == 0) return false;  // order must be prime
    if (p && p != o) return false;
    p = o;
  }
  return true;
}

bool is_automorphism(const PermGroup& group, const std::vector<ElementId>& map) {
  if (map.size() != group.order()) return false;
  std::vector<char> hit(group.order(), 0);
  for (ElementId y : map) {
    if (y >= group.order() || hit[y]) return false;
    hit[y] = 1;
  }
  // A bijection respecting right multiplication by each generator respects
  // all products, every element being a positive word in the generators.
  for (ElementId x = 0; x < group.order(); ++x)
    for (ElementId g : group.generator_ids())
      if (map[group.mul(x, g)] != group.mul(map[x], map[g])) return false;
  return true;
}

Automorphism Automorphism::from_table(const PermGroup& group, std::vector<ElementId> map) {
  if (!is_automorphism(group, map))
    throw InvalidArgument("element map is not an automorphism of the group");
  return Automorphism(std::move(map));
}

Automorphism Automorphism::conjugation(const PermGroup& group, const Permutation& c) {
  if (c.degree() != group.degree()) throw DegreeMismatch("conjugating permutation has wrong degree");
  for (const auto& g : group.generators())
    if (!group.contains(g.conjugate_by(c)))
      throw InvalidArgument(c.to_cycle_string() + " does not normalize the group");
  std::vector<ElementId> map(group.order());
  std::vector<Point> img(group.degree());
  for (ElementId x = 0; x < group.order(); ++x) {
    auto r = group.row(x);
    for (std::size_t p = 0; p < img.size(); ++p) img[c(static_cast<Point>(p))] = c(r[p]);
    auto id = group.find(img);
    if (!id) throw InvariantViolation("conjugate left the group");
    map[x] = *id;
  }
  Automorphism a(std::move(map));
  a.description = "conjugation by " + c.to_cycle_string();
  return a;
}

bool Automorphism::is_identity() const {
  for (ElementId x = 0; x < map_.size(); ++x)
    if (map_[x] != x) return false;
  return true;
}

Automorphism Automorphism::then(const Automorphism& other) const {
  std::vector<ElementId> m(map_.size());
  for (ElementId x = 0; x < map_.size(); ++x) m[x] = other.map_[map_[x]];
  Automorphism a(std::move(m));
  a.description = description + " then " + other.description;
  return a;
}

std::vector<Automorphism> conjugation_automorphisms(const PermGroup& group,
                                                    const PermGroup& overgroup) {
  std::vector<Automorphism> out;
  for (ElementId c = 0; c < overgroup.order(); ++c) {
    auto perm = overgroup.element(c);
    bool normalizes = true;
    for (const auto& g : group.generators())
      if (!group.contains(g.conjugate_by(perm))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(Automorphism::conjugation(group, perm));
  }
  return out;
}

}  // namespace og4
