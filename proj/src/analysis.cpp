#include "og4/analysis.hpp"

#include <algorithm>
#include <map>

#include "og4/normal.hpp"

namespace og4 {

std::string to_string(AttachmentKind k) {
  switch (k) {
    case AttachmentKind::loose: return "loose";
    case AttachmentKind::tight: return "tight";
    case AttachmentKind::intermediate: return "intermediate";
    case AttachmentKind::two_cycles_degenerate: return "two_cycles_degenerate";
  }
  return "?";
}

namespace {

void require_og4(const OGPair& pair) {
  if (!pair.certificate || pair.certificate->valency != 4)
    throw InvalidArgument("analysis needs a certified OG(4) pair");
}

Point other(std::span<const Point> two, Point x) { return two[0] == x ? two[1] : two[0]; }

std::vector<Point> canonical_rotation(const std::vector<Point>& cyc) {
  const std::size_t L = cyc.size();
  std::vector<Point> best;
  std::vector<Point> cand(L);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < L; ++start) {
      for (std::size_t i = 0; i < L; ++i)
        cand[i] = dir == 0 ? cyc[(start + i) % L] : cyc[(start + L - i) % L];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

AlternatingStructure alternating_structure(const OGPair& pair) {
  require_og4(pair);
  const OrientedGraph& g = pair.graph;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.arc_count();

  // Each arc (u, v) is used once; from the head v the walk goes back along
  // the other arc into v, then forward along the other arc out of its tail.
  std::vector<int> cycle_of_arc(m, -1);
  std::vector<std::vector<Point>> raw;
  bool partitions = true;
  for (std::size_t start = 0; start < m; ++start) {
    if (cycle_of_arc[start] >= 0) continue;
    const int id = static_cast<int>(raw.size());
    std::vector<Point> seq;
    auto [u, v] = g.arc(start);
    while (true) {
      std::size_t idx = *g.arc_index(u, v);
      if (cycle_of_arc[idx] == id) break;
      if (cycle_of_arc[idx] >= 0) { partitions = false; break; }
      cycle_of_arc[idx] = id;
      seq.push_back(u);
      seq.push_back(v);
      Point w = other(g.in(v), u);
      std::size_t back = *g.arc_index(w, v);
      if (cycle_of_arc[back] >= 0) { partitions = false; break; }
      cycle_of_arc[back] = id;
      u = w;
      v = other(g.out(w), v);
    }
    // seq is u0 v0 u1 v1 ..., with u_i -> v_i <- u_{i+1}.
    raw.push_back(std::move(seq));
  }

  AlternatingStructure out;
  out.partitions_edges = partitions && std::all_of(cycle_of_arc.begin(), cycle_of_arc.end(),
                                                   [](int c) { return c >= 0; });
  std::size_t len = raw.empty() ? 0 : raw[0].size();
  bool same_length = true;
  for (auto& c : raw) same_length = same_length && c.size() == len;
  out.common_length = same_length ? len : 0;

  // Tail cycle and head cycle of every vertex, before canonical reordering.
  std::vector<int> tail_cycle(n, -1), head_cycle(n, -1);
  for (Point x = 0; x < n; ++x) {
    tail_cycle[x] = cycle_of_arc[*g.arc_index(x, g.out(x)[0])];
    head_cycle[x] = cycle_of_arc[*g.arc_index(g.in(x)[0], x)];
  }

  std::vector<std::vector<Point>> canon;
  for (auto& c : raw) canon.push_back(canonical_rotation(c));
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
  std::vector<int> rank(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    out.cycles.push_back(canon[order[i]]);
  }

  out.two_cycles_per_vertex = true;
  std::map<std::pair<int, int>, std::vector<Point>> meet;
  for (Point x = 0; x < n; ++x) {
    int a = rank[tail_cycle[x]], b = rank[head_cycle[x]];
    if (a == b) {
      out.two_cycles_per_vertex = false;
      continue;
    }
    meet[{std::min(a, b), std::max(a, b)}].push_back(x);
  }
  std::size_t size = meet.empty() ? 0 : meet.begin()->second.size();
  out.intersection_sizes_constant = !meet.empty();
  for (auto& [key, pts] : meet)
    out.intersection_sizes_constant = out.intersection_sizes_constant && pts.size() == size;

  if (out.cycles.size() <= 2) {
    out.attachment_kind = AttachmentKind::two_cycles_degenerate;
    return out;
  }
  if (out.intersection_sizes_constant) out.attachment_number = size;
  const std::size_t half = out.common_length / 2;
  if (out.attachment_number == 1)
    out.attachment_kind = AttachmentKind::loose;
  else if (out.attachment_number == half)
    out.attachment_kind = AttachmentKind::tight;
  else
    out.attachment_kind = AttachmentKind::intermediate;

  if (out.two_cycles_per_vertex) {
    BlockPartition parts;
    for (auto& [key, pts] : meet) parts.blocks.push_back(pts);
    std::sort(parts.blocks.begin(), parts.blocks.end());
    try {
      induced_block_action(pair.group, parts);
      out.intersections_form_blocks = parts.is_partition_of(n);
    } catch (const InvalidArgument&) {
      out.intersections_form_blocks = false;
    }
  }
  return out;
}

SArcReport s_arc_report(const OGPair& pair, const SArcLimits& limits) {
  require_og4(pair);
  const OrientedGraph& g = pair.graph;
  const PermGroup& G = pair.group;
  const std::size_t n = g.vertex_count();

  // G is vertex-transitive and every vertex has out-valency 2, so there are
  // n 2^s s-arcs, and G is transitive on them exactly when the orbit of one
  // of them, |G| / |pointwise stabilizer|, has that size.
  SArcReport rep;
  std::vector<ElementId> stab = G.all_ids();
  Point x = 0;
  auto fix = [&](Point p) {
    std::vector<ElementId> keep;
    for (ElementId e : stab)
      if (G.image(e, p) == p) keep.push_back(e);
    stab.swap(keep);
  };
  fix(x);
  std::size_t count = n;
  rep.counts.push_back(count);
  for (std::size_t s = 1;; ++s) {
    // counts[s] > |G| already rules out transitivity, so no cap is needed there.
    if (count * 2 > limits.max_sarcs && count * 2 <= G.order()) {
      rep.lower_bound = true;
      rep.max_s = s - 1;
      break;
    }
    x = g.out(x)[0];
    fix(x);
    count *= 2;
    rep.counts.push_back(count);
    if (G.order() / stab.size() != count) {
      rep.max_s = s - 1;
      break;
    }
  }
  if (!rep.lower_bound) rep.regular_on_max = G.order() == rep.counts[rep.max_s];
  return rep;
}

StabilizerReport stabilizer_report(const OGPair& pair) {
  if (!pair.certificate) throw InvalidArgument("stabilizer report needs a certified pair");
  PermGroup st = point_stabilizer(pair.group, 0);
  StabilizerReport rep;
  rep.order = st.order();
  rep.is_2group = (rep.order & (rep.order - 1)) == 0;
  rep.elementary_abelian = is_elementary_abelian(st);
  rep.nilpotency_class = nilpotency_class(st);
  return rep;
}

}  // namespace og4
