#include "og4/quotient.hpp"

#include <algorithm>
#include <map>

namespace og4 {

namespace {

std::string n_str(std::size_t v) { return std::to_string(v); }

std::vector<std::string> block_labels(const OGPair& pair, const BlockPartition& blocks) {
  std::vector<std::string> labels;
  labels.reserve(blocks.size());
  for (const auto& b : blocks.blocks) labels.push_back("[" + pair.label(b.front()) + "]");
  return labels;
}

// An element of the induced group acting as a single r-cycle on the blocks.
std::optional<ElementId> rotation_of(const PermGroup& induced, std::size_t r) {
  for (ElementId g = 0; g < induced.order(); ++g) {
    auto cyc = induced.element(g).cycles();
    if (cyc.size() == 1 && cyc.front().size() == r) return g;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::K1:
      return "K1";
    case QuotientKind::Cover:
      return "Cover";
    case QuotientKind::OGMulticover:
      return "OGMulticover";
    case QuotientKind::ArcTransitiveMulticover:
      return "ArcTransitiveMulticover";
    case QuotientKind::K2:
      return "K2";
    case QuotientKind::OrientedCycle:
      return "OrientedCycle";
    case QuotientKind::UnorientedCycle:
      return "UnorientedCycle";
  }
  return "K1";
}

std::string to_string(BasicType t) {
  switch (t) {
    case BasicType::Quasiprimitive:
      return "Quasiprimitive";
    case BasicType::Biquasiprimitive:
      return "Biquasiprimitive";
    case BasicType::Cycle:
      return "Cycle";
    case BasicType::NonBasic:
      return "NonBasic";
  }
  return "NonBasic";
}

QuotientOutcome normal_quotient(const OGPair& pair, const PermGroup& normal) {
  const PermGroup& group = pair.group;
  const OrientedGraph& g = pair.graph;
  if (!group.contains_group(normal)) throw InvalidArgument("N is not a subgroup of the acting group");
  if (!is_normal(group, normal)) throw InvalidArgument("N is not normal in the acting group");

  ClauseLog log;
  log.check("quotient:normal", true, "N normal of order " + n_str(normal.order()));
  QuotientOutcome out;
  out.blocks = orbits(normal);
  const std::size_t nb = out.blocks.size();
  const auto block_of = out.blocks.block_index();

  BlockAction action = induced_block_action(group, out.blocks);
  out.induced_group = action.induced;
  out.kernel = action.kernel;
  log.check("quotient:order_arithmetic", out.induced_group.order() * out.kernel.order() == group.order(),
            n_str(out.induced_group.order()) + " * " + n_str(out.kernel.order()) + " = " +
                n_str(group.order()));

  if (nb == 1) {
    out.kind = QuotientKind::K1;
    out.quotient_graph = OrientedGraph(1, {});
    out.checks = std::move(log).take();
    return out;
  }

  std::vector<Arc> qarcs;
  for (const Arc& a : g.arcs()) {
    std::size_t b = block_of[a.first], c = block_of[a.second];
    if (b == c)
      throw InvariantViolation("an edge lies inside an N-orbit although there are " + n_str(nb) +
                               " orbits");
    qarcs.push_back({static_cast<Point>(b), static_cast<Point>(c)});
  }
  std::sort(qarcs.begin(), qarcs.end());
  qarcs.erase(std::unique(qarcs.begin(), qarcs.end()), qarcs.end());
  out.quotient_graph = OrientedGraph(nb, qarcs);
  log.check("quotient:no_internal_edges", true);

  // l = |Gamma(x) cap C| must not depend on x or on the adjacent orbit C.
  std::optional<std::size_t> ell;
  bool constant = true;
  for (Point x = 0; x < g.vertex_count() && constant; ++x) {
    std::map<std::size_t, std::size_t> per_block;
    for (Point y : g.out(x)) ++per_block[block_of[y]];
    for (Point y : g.in(x)) ++per_block[block_of[y]];
    for (const auto& [c, count] : per_block) {
      if (!ell) ell = count;
      constant = constant && *ell == count;
    }
  }
  if (!constant) throw InvariantViolation("multicover degree is not constant over quotient edges");
  out.multicover_degree = *ell;
  log.check("quotient:multicover_constant", true, "l = " + n_str(*ell));

  const OrientedGraph& q = out.quotient_graph;
  std::size_t k = 0;
  {
    std::vector<Point> nbrs(q.out(0).begin(), q.out(0).end());
    nbrs.insert(nbrs.end(), q.in(0).begin(), q.in(0).end());
    std::sort(nbrs.begin(), nbrs.end());
    k = static_cast<std::size_t>(std::unique(nbrs.begin(), nbrs.end()) - nbrs.begin());
  }
  out.quotient_valency = k;
  const std::size_t m = g.out(0).size() + g.in(0).size();
  log.check("quotient:k_times_l", k * out.multicover_degree == m,
            n_str(k) + " * " + n_str(out.multicover_degree) + " = " + n_str(m));

  if (q.is_antisymmetric()) {
    out.kind = QuotientKind::OGMulticover;
    log.check("quotient:k_even", k % 2 == 0, "k = " + n_str(k));
  } else if (q.is_symmetric()) {
    out.kind = QuotientKind::ArcTransitiveMulticover;
    log.check("quotient:m_over_k_even", k && (m / k) % 2 == 0 && m % k == 0, "m/k = " + n_str(k ? m / k : 0));
  } else {
    throw InvariantViolation("quotient arcs are neither oriented nor closed under reversal");
  }
  log.check("quotient:connected", connectivity(q).connected);
  out.checks = std::move(log).take();
  return out;
}

QuotientOutcome classify_og4_quotient(const OGPair& pair, const PermGroup& normal) {
  QuotientOutcome out = normal_quotient(pair, normal);
  ClauseLog log;
  log.append(out.checks);
  const std::size_t nb = out.blocks.size();
  const std::size_t ell = out.multicover_degree;
  const std::size_t k = out.quotient_valency;
  const PermGroup& group = pair.group;

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("normal subgroup of order " + n_str(normal.order()) + " gives " +
                             to_string(out.kind) + " with " + n_str(nb) + " orbits, k = " + n_str(k) +
                             ", l = " + n_str(ell) + ": " + what);
  };
  auto require = [&](const std::string& tag, bool holds, const std::string& detail = {}) {
    log.check(tag, holds, detail);
    if (!holds) fail(tag + (detail.empty() ? "" : " (" + detail + ")"));
  };

  if (out.kind == QuotientKind::K1) {
    require("k1:n_transitive", transitivity_profile(normal).transitive);
    require("k1:trivial_induced", out.induced_group.order() == 1);
  } else if (out.kind == QuotientKind::OGMulticover && k == 4) {
    out.kind = QuotientKind::Cover;
    require("cover:l_is_1", ell == 1, "l = " + n_str(ell));
    require("cover:n_semiregular", transitivity_profile(normal).semiregular);
    require("cover:kernel_is_n", out.kernel.same_elements(normal));
    require("cover:quotient_order", out.induced_group.order() * normal.order() == group.order());
    const auto block_of = out.blocks.block_index();
    bool distinct = true;
    for (Point x = 0; x < pair.graph.vertex_count() && distinct; ++x) {
      std::vector<std::size_t> seen;
      for (Point y : pair.graph.out(x)) seen.push_back(block_of[y]);
      for (Point y : pair.graph.in(x)) seen.push_back(block_of[y]);
      std::sort(seen.begin(), seen.end());
      distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }
    require("cover:neighbours_in_distinct_orbits", distinct);
    auto q = certify(out.quotient_graph, out.induced_group, block_labels(pair, out.blocks), 4);
    require("cover:quotient_in_og4", q.ok(), q.ok() ? "" : q.refutation().tag);
    out.quotient_pair = *q;
  } else if (out.kind == QuotientKind::OGMulticover && k == 2) {
    out.kind = QuotientKind::OrientedCycle;
    out.cycle_length = nb;
    require("cycle:r_at_least_3", nb >= 3, "r = " + n_str(nb));
    require("cycle:two_multicover", ell == 2, "l = " + n_str(ell));
    const PermGroup& ind = out.induced_group;
    require("cycle:cyclic_order_r", ind.order() == nb && ind.is_abelian() && rotation_of(ind, nb),
            "order " + n_str(ind.order()));
  } else if (out.kind == QuotientKind::ArcTransitiveMulticover && k == 1) {
    out.kind = QuotientKind::K2;
    require("k2:two_orbits", nb == 2);
    require("k2:induced_z2", out.induced_group.order() == 2);
    // No arc inside a part was confirmed by normal_quotient; the orbits are the bipartition.
    require("k2:bipartition", true, "N-orbits form the bipartition");
  } else if (out.kind == QuotientKind::ArcTransitiveMulticover && k == 2) {
    out.kind = QuotientKind::UnorientedCycle;
    out.cycle_length = nb;
    require("cycle:r_at_least_3", nb >= 3, "r = " + n_str(nb));
    require("cycle:two_multicover", ell == 2, "l = " + n_str(ell));
    const PermGroup& ind = out.induced_group;
    auto rot = rotation_of(ind, nb);
    bool reflection = false;
    if (rot) {
      for (ElementId t = 1; t < ind.order() && !reflection; ++t)
        reflection = ind.element_order(t) == 2 && ind.conj(*rot, t) == ind.inv(*rot);
    }
    require("cycle:dihedral_order_2r", ind.order() == 2 * nb && rot && reflection,
            "order " + n_str(ind.order()));
  } else {
    fail("the quotient matches no known case");
  }
  out.checks = std::move(log).take();
  return out;
}

std::vector<NormalQuotientEntry> classify_all_quotients(const OGPair& pair,
                                                        const NormalSearchLimits& limits) {
  std::vector<NormalQuotientEntry> out;
  for (auto& n : all_normal_subgroups(pair.group, limits)) {
    if (n.order() == 1) continue;
    auto outcome = classify_og4_quotient(pair, n);
    out.push_back({std::move(n), std::move(outcome)});
  }
  return out;
}

BasicType basic_type_of(const std::vector<NormalQuotientEntry>& entries) {
  bool cycle = false, k2 = false;
  for (const auto& e : entries) {
    switch (e.outcome.kind) {
      case QuotientKind::Cover:
        return BasicType::NonBasic;
      case QuotientKind::OrientedCycle:
      case QuotientKind::UnorientedCycle:
        cycle = true;
        break;
      case QuotientKind::K2:
        k2 = true;
        break;
      default:
        break;
    }
  }
  if (cycle) return BasicType::Cycle;
  return k2 ? BasicType::Biquasiprimitive : BasicType::Quasiprimitive;
}

BasicType basic_type(const OGPair& pair, const NormalSearchLimits& limits) {
  BasicType t = basic_type_of(classify_all_quotients(pair, limits));
  if (t == BasicType::NonBasic) return t;
  Quasiprimitivity q = quasiprimitivity_type(pair.group, limits);
  bool agrees = (t == BasicType::Quasiprimitive && q == Quasiprimitivity::quasiprimitive) ||
                (t == BasicType::Biquasiprimitive && q == Quasiprimitivity::biquasiprimitive) ||
                (t == BasicType::Cycle && q == Quasiprimitivity::neither);
  if (!agrees)
    throw InvariantViolation("basic type " + to_string(t) + " disagrees with the group being " +
                             to_string(q));
  return t;
}

namespace {

// Elements of `group` whose action on the current quotient vertices lies in
// `sub`. `proj` maps original vertices to quotient vertices, `reps` gives an
// original vertex in each quotient vertex.
PermGroup lift(const PermGroup& group, const std::vector<std::size_t>& proj,
               const std::vector<Point>& reps, const PermGroup& sub) {
  ElementSet ids;
  std::vector<Point> img(reps.size());
  for (ElementId g = 0; g < group.order(); ++g) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<Point>(proj[group.image(g, reps[c])]);
    if (sub.find(img)) ids.push_back(g);
  }
  return group.subgroup(ids);
}

struct Projection {
  std::vector<std::size_t> proj;
  std::vector<Point> reps;
};

Projection compose(const Projection& p, const BlockPartition& blocks) {
  Projection out;
  const auto block_of = blocks.block_index();
  out.proj.resize(p.proj.size());
  for (std::size_t v = 0; v < p.proj.size(); ++v) out.proj[v] = block_of[p.proj[v]];
  for (const auto& b : blocks.blocks) out.reps.push_back(p.reps[b.front()]);
  return out;
}

std::vector<NormalQuotientEntry> covers(const OGPair& pair, const NormalSearchLimits& limits) {
  std::vector<NormalQuotientEntry> out;
  for (auto& e : classify_all_quotients(pair, limits))
    if (e.outcome.kind == QuotientKind::Cover) out.push_back(std::move(e));
  return out;
}

}  // namespace

std::vector<ChainStep> basic_chain(const OGPair& pair, const NormalSearchLimits& limits) {
  std::vector<ChainStep> chain;
  OGPair current = pair;
  Projection proj;
  proj.proj.resize(pair.vertex_count());
  for (Point v = 0; v < pair.vertex_count(); ++v) {
    proj.proj[v] = v;
    proj.reps.push_back(v);
  }
  std::size_t last_order = 1;
  for (;;) {
    auto cands = covers(current, limits);
    if (cands.empty()) break;
    // Entries come by increasing order, then element ids.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (cands[i].normal.order() > cands[best].normal.order()) best = i;
    auto& e = cands[best];
    proj = compose(proj, e.outcome.blocks);
    OGPair next = *e.outcome.quotient_pair;
    PermGroup lifted = lift(pair.group, proj.proj, proj.reps, PermGroup::trivial(next.vertex_count()));
    if (lifted.order() <= last_order) throw InvariantViolation("basic chain failed to increase");
    last_order = lifted.order();
    chain.push_back({lifted, next});
    current = std::move(next);
  }
  return chain;
}

std::vector<ChainStep> all_basic_quotients(const OGPair& pair, const NormalSearchLimits& limits) {
  std::vector<ChainStep> out;
  for (auto& e : covers(pair, limits)) {
    const OGPair& q = *e.outcome.quotient_pair;
    if (basic_type_of(classify_all_quotients(q, limits)) != BasicType::NonBasic)
      out.push_back({e.normal, q});
  }
  return out;
}

}  // namespace og4
