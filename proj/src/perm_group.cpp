#include "og4/perm_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "og4/error.hpp"

namespace og4 {

namespace {

constexpr ElementId kEmpty = ~ElementId{0};
constexpr std::size_t kMaxBase = 64;

inline std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

template <class Seq>
std::uint64_t hash_points(const Seq& seq, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) h = (h ^ seq[i]) * 0x100000001b3ULL;
  return mix(h);
}

std::size_t slot_count_for(std::size_t n) {
  std::size_t s = 16;
  while (s < 2 * n) s <<= 1;
  return s;
}

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::size_t order = 0;
  std::vector<Point> table;
  std::vector<Permutation> gens;
  std::vector<ElementId> gen_ids;
  std::vector<ElementId> inverse;
  std::vector<Point> base;
  std::vector<ElementId> slots;

  const Point* row(ElementId g) const { return table.data() + std::size_t{g} * degree; }

  template <class Seq>
  ElementId lookup_base(const Seq& base_images) const {
    const std::size_t mask = slots.size() - 1;
    std::size_t s = hash_points(base_images, base.size()) & mask;
    for (;; s = (s + 1) & mask) {
      ElementId id = slots[s];
      if (id == kEmpty) return kEmpty;
      const Point* r = row(id);
      bool eq = true;
      for (std::size_t i = 0; i < base.size() && eq; ++i) eq = r[base[i]] == base_images[i];
      if (eq) return id;
    }
  }

  void build_slots() {
    slots.assign(slot_count_for(order), kEmpty);
    const std::size_t mask = slots.size() - 1;
    std::array<Point, kMaxBase> bi{};
    for (ElementId id = 0; id < order; ++id) {
      const Point* r = row(id);
      for (std::size_t i = 0; i < base.size(); ++i) bi[i] = r[base[i]];
      std::size_t s = hash_points(bi, base.size()) & mask;
      while (slots[s] != kEmpty) s = (s + 1) & mask;
      slots[s] = id;
    }
  }

  void build_base() {
    base.clear();
    std::vector<ElementId> remaining;
    for (ElementId id = 1; id < order; ++id) remaining.push_back(id);
    while (!remaining.empty()) {
      const Point* r = row(remaining.front());
      Point p = 0;
      while (r[p] == p) ++p;
      base.push_back(p);
      std::erase_if(remaining, [&](ElementId id) { return row(id)[p] != p; });
    }
    if (base.size() > kMaxBase) throw InvariantViolation("base longer than supported");
  }
};

PermGroup PermGroup::generate(std::vector<Permutation> generators, const EnumerationLimits& limits) {
  if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw DegreeMismatch("generators have degrees " + std::to_string(n) + " and " +
                           std::to_string(g.degree()));

  auto impl = std::make_shared<Impl>();
  impl->degree = n;
  std::vector<Point>& table = impl->table;
  const auto id_perm = Permutation::identity(n);
  table.assign(id_perm.images().begin(), id_perm.images().end());

  std::vector<ElementId> slots(16, kEmpty);
  std::size_t count = 1;
  auto insert_slot = [&](std::vector<ElementId>& sl, ElementId id) {
    const std::size_t mask = sl.size() - 1;
    std::size_t s = hash_points(table.data() + std::size_t{id} * n, n) & mask;
    while (sl[s] != kEmpty) s = (s + 1) & mask;
    sl[s] = id;
  };
  insert_slot(slots, 0);

  std::vector<Point> candidate(n);
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& g : generators) {
      const Point* r = table.data() + i * n;
      for (std::size_t x = 0; x < n; ++x) candidate[x] = g(r[x]);
      const std::size_t mask = slots.size() - 1;
      std::size_t s = hash_points(candidate, n) & mask;
      bool found = false;
      for (;; s = (s + 1) & mask) {
        ElementId id = slots[s];
        if (id == kEmpty) break;
        if (std::equal(candidate.begin(), candidate.end(), table.begin() + std::size_t{id} * n)) {
          found = true;
          break;
        }
      }
      if (found) continue;
      if (count + 1 > limits.max_order)
        throw EnumerationOverflow("group enumeration exceeded the cap of " +
                                  std::to_string(limits.max_order) + " elements");
      if ((count + 1) * n > limits.max_table_entries)
        throw EnumerationOverflow("group enumeration exceeded the element-table cap of " +
                                  std::to_string(limits.max_table_entries) + " entries (degree " +
                                  std::to_string(n) + ")");
      table.insert(table.end(), candidate.begin(), candidate.end());
      slots[s] = static_cast<ElementId>(count);
      ++count;
      if (2 * count > slots.size()) {
        std::vector<ElementId> bigger(slots.size() * 2, kEmpty);
        for (ElementId id = 0; id < count; ++id) insert_slot(bigger, id);
        slots.swap(bigger);
      }
    }
  }

  // Reindex lexicographically.
  std::vector<ElementId> perm(count);
  std::iota(perm.begin(), perm.end(), ElementId{0});
  std::sort(perm.begin(), perm.end(), [&](ElementId a, ElementId b) {
    return std::lexicographical_compare(table.begin() + std::size_t{a} * n,
                                        table.begin() + std::size_t{a + 1} * n,
                                        table.begin() + std::size_t{b} * n,
                                        table.begin() + std::size_t{b + 1} * n);
  });
  std::vector<Point> sorted(count * n);
  for (std::size_t k = 0; k < count; ++k)
    std::copy_n(table.begin() + std::size_t{perm[k]} * n, n, sorted.begin() + k * n);
  table.swap(sorted);
  impl->order = count;
  impl->build_base();
  impl->build_slots();

  impl->inverse.resize(count);
  std::vector<Point> inv_row(n);
  for (ElementId id = 0; id < count; ++id) {
    const Point* r = impl->row(id);
    for (Point x = 0; x < n; ++x) inv_row[r[x]] = x;
    std::array<Point, kMaxBase> bi{};
    for (std::size_t i = 0; i < impl->base.size(); ++i) bi[i] = inv_row[impl->base[i]];
    impl->inverse[id] = impl->lookup_base(bi);
  }
  for (const auto& g : generators) {
    std::array<Point, kMaxBase> bi{};
    for (std::size_t i = 0; i < impl->base.size(); ++i) bi[i] = g(impl->base[i]);
    impl->gen_ids.push_back(impl->lookup_base(bi));
  }
  impl->gens = std::move(generators);
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return generate({Permutation::identity(degree)});
}

std::size_t PermGroup::degree() const { return impl_->degree; }
std::size_t PermGroup::order() const { return impl_->order; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }
const std::vector<ElementId>& PermGroup::generator_ids() const { return impl_->gen_ids; }
const std::vector<Point>& PermGroup::base() const { return impl_->base; }

std::span<const Point> PermGroup::row(ElementId g) const {
  return {impl_->row(g), impl_->degree};
}

Permutation PermGroup::element(ElementId g) const {
  auto r = row(g);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

std::optional<ElementId> PermGroup::find(std::span<const Point> images) const {
  if (images.size() != impl_->degree) return std::nullopt;
  std::array<Point, kMaxBase> bi{};
  for (std::size_t i = 0; i < impl_->base.size(); ++i) bi[i] = images[impl_->base[i]];
  ElementId id = impl_->lookup_base(bi);
  if (id == kEmpty) return std::nullopt;
  auto r = row(id);
  if (!std::equal(r.begin(), r.end(), images.begin())) return std::nullopt;
  return id;
}

ElementId PermGroup::mul(ElementId a, ElementId b) const {
  const Impl& m = *impl_;
  const Point* ra = m.row(a);
  const Point* rb = m.row(b);
  std::array<Point, kMaxBase> bi{};
  for (std::size_t i = 0; i < m.base.size(); ++i) bi[i] = rb[ra[m.base[i]]];
  return m.lookup_base(bi);
}

ElementId PermGroup::inv(ElementId a) const { return impl_->inverse[a]; }

ElementId PermGroup::conj(ElementId x, ElementId g) const {
  const Impl& m = *impl_;
  const Point* rgi = m.row(m.inverse[g]);
  const Point* rx = m.row(x);
  const Point* rg = m.row(g);
  std::array<Point, kMaxBase> bi{};
  for (std::size_t i = 0; i < m.base.size(); ++i) bi[i] = rg[rx[rgi[m.base[i]]]];
  return m.lookup_base(bi);
}

ElementId PermGroup::commutator(ElementId a, ElementId b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::size_t PermGroup::element_order(ElementId a) const {
  std::size_t k = 1;
  for (ElementId x = a; x != identity_id; x = mul(x, a)) ++k;
  return k;
}

ElementSet PermGroup::closure(std::span<const ElementId> gens) const {
  std::vector<char> in(order(), 0);
  ElementSet list{identity_id};
  in[identity_id] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (ElementId g : gens) {
      ElementId x = mul(list[i], g);
      if (!in[x]) {
        in[x] = 1;
        list.push_back(x);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

PermGroup PermGroup::subgroup(const ElementSet& elements, std::vector<ElementId> gens) const {
  if (elements.empty() || elements.front() != identity_id)
    throw InvalidArgument("subgroup element set must contain the identity");
  if (gens.empty()) {
    std::vector<char> in(order(), 0);
    in[identity_id] = 1;
    for (ElementId e : elements) {
      if (in[e]) continue;
      gens.push_back(e);
      for (ElementId x : closure(gens)) in[x] = 1;
    }
  }
  std::erase(gens, identity_id);
  if (gens.empty()) gens.push_back(identity_id);

  const Impl& parent = *impl_;
  auto impl = std::make_shared<Impl>();
  impl->degree = parent.degree;
  impl->order = elements.size();
  impl->table.resize(elements.size() * parent.degree);
  for (std::size_t k = 0; k < elements.size(); ++k)
    std::copy_n(parent.row(elements[k]), parent.degree, impl->table.begin() + k * parent.degree);
  impl->base = parent.base;
  impl->build_slots();
  auto position = [&](ElementId parent_id) {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_id);
    if (it == elements.end() || *it != parent_id)
      throw InvalidArgument("element set is not closed under the group operations");
    return static_cast<ElementId>(it - elements.begin());
  };
  impl->inverse.resize(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    impl->inverse[k] = position(parent.inverse[elements[k]]);
  for (ElementId g : gens) {
    impl->gen_ids.push_back(position(g));
    impl->gens.push_back(element(g));
  }
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::subgroup_generated(std::span<const ElementId> gens) const {
  return subgroup(closure(gens), std::vector<ElementId>(gens.begin(), gens.end()));
}

ElementSet PermGroup::all_ids() const {
  ElementSet s(order());
  std::iota(s.begin(), s.end(), ElementId{0});
  return s;
}

ElementSet PermGroup::ids_of(const PermGroup& sub) const {
  if (sub.degree() != degree()) throw DegreeMismatch("subgroup has a different degree");
  ElementSet out;
  out.reserve(sub.order());
  for (ElementId k = 0; k < sub.order(); ++k) {
    auto id = find(sub.row(k));
    if (!id) throw InvalidArgument("group is not a subgroup");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::contains_group(const PermGroup& sub) const {
  if (sub.degree() != degree()) return false;
  for (const auto& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& g = generator_ids();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (mul(g[i], g[j]) != mul(g[j], g[i])) return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return order() == other.order() && contains_group(other);
}

std::size_t BlockPartition::degree() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::vector<std::size_t> BlockPartition::block_index() const {
  std::vector<std::size_t> idx(degree(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point x : blocks[b]) idx.at(x) = b;
  return idx;
}

bool BlockPartition::is_partition_of(std::size_t n) const {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (Point x : b) {
      if (x >= n || seen[x]) return false;
      seen[x] = 1;
      ++total;
    }
  }
  return total == n;
}

PermGroup enumerate_group(std::vector<Permutation> generators, const EnumerationLimits& limits) {
  return PermGroup::generate(std::move(generators), limits);
}

BlockPartition orbits(std::span<const Permutation> generators, std::size_t degree) {
  BlockPartition part;
  std::vector<char> seen(degree, 0);
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators) {
        Point y = g(orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    part.blocks.push_back(std::move(orbit));
  }
  return part;
}

BlockPartition orbits(const PermGroup& group) {
  return orbits(group.generators(), group.degree());
}

PermGroup point_stabilizer(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point out of range");
  ElementSet ids;
  for (ElementId g = 0; g < group.order(); ++g)
    if (group.image(g, x) == x) ids.push_back(g);
  return group.subgroup(ids);
}

TransitivityProfile transitivity_profile(const PermGroup& group) {
  TransitivityProfile prof;
  auto orb = orbits(group);
  prof.orbit_count = orb.size();
  prof.transitive = orb.size() == 1;
  // Semiregular iff every point stabilizer is trivial iff every orbit has |G| points.
  prof.semiregular = std::all_of(orb.blocks.begin(), orb.blocks.end(),
                                 [&](const auto& b) { return b.size() == group.order(); });
  prof.regular = prof.transitive && prof.semiregular;
  return prof;
}

PermGroup symmetric_group(std::size_t n, const EnumerationLimits& limits) {
  if (n <= 1) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup::generate(
      {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})}, limits);
}

PermGroup alternating_group(std::size_t n, const EnumerationLimits& limits) {
  if (n <= 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  if (n == 3) return PermGroup::generate({Permutation::from_cycles(3, {{0, 1, 2}})}, limits);
  std::vector<Point> cyc;
  for (Point x = (n % 2 == 1) ? 0 : 1; x < n; ++x) cyc.push_back(x);
  return PermGroup::generate(
      {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cyc})}, limits);
}

PermGroup cyclic_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(1);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup::generate({Permutation::from_cycles(n, {cyc})});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, const EnumerationLimits& limits) {
  const std::size_t da = a.degree(), db = b.degree(), n = da + db;
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point x = 0; x < da; ++x) img[x] = g(x);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + g(x));
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(std::move(gens), limits);
}

PermGroup regular_representation(const PermGroup& group, const EnumerationLimits& limits) {
  std::vector<Permutation> gens;
  for (ElementId g : group.generator_ids()) {
    std::vector<Point> img(group.order());
    for (ElementId x = 0; x < group.order(); ++x) img[x] = group.mul(x, g);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(std::move(gens), limits);
}

}  // namespace og4
