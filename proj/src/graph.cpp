#include "og4/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace og4 {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.first + 1) + ", " + std::to_string(a.second + 1) + ")";
}

bool reaches_all(const OrientedGraph& g, bool forward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Point y : forward ? g.out(x) : g.in(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.vertex_count();
}

}  // namespace

OrientedGraph::OrientedGraph(std::size_t n_vertices, std::vector<Arc> arcs) : n_(n_vertices) {
  for (const Arc& a : arcs) {
    if (a.first >= n_ || a.second >= n_)
      throw InvalidArgument("arc " + arc_text(a) + " has an endpoint beyond " + std::to_string(n_) +
                            " vertices");
    if (a.first == a.second) throw InvalidArgument("diagonal arc " + arc_text(a));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end())
    throw InvalidArgument("arc " + arc_text(*dup) + " appears twice");

  out_start_.assign(n_ + 1, 0);
  in_start_.assign(n_ + 1, 0);
  for (const Arc& a : arcs) {
    ++out_start_[a.first + 1];
    ++in_start_[a.second + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    out_start_[i + 1] += out_start_[i];
    in_start_[i + 1] += in_start_[i];
  }
  out_.resize(arcs.size());
  tail_.resize(arcs.size());
  in_.resize(arcs.size());
  std::vector<std::size_t> fill(in_start_.begin(), in_start_.end() - 1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out_[i] = arcs[i].second;
    tail_[i] = arcs[i].first;
    in_[fill[arcs[i].second]++] = arcs[i].first;  // tails arrive in sorted order
  }
}

bool OrientedGraph::has_arc(Point x, Point y) const { return arc_index(x, y).has_value(); }

std::optional<std::size_t> OrientedGraph::arc_index(Point x, Point y) const {
  if (x >= n_) return std::nullopt;
  auto row = out(x);
  auto it = std::lower_bound(row.begin(), row.end(), y);
  if (it == row.end() || *it != y) return std::nullopt;
  return out_start_[x] + static_cast<std::size_t>(it - row.begin());
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> a(out_.size());
  for (std::size_t i = 0; i < out_.size(); ++i) a[i] = {tail_[i], out_[i]};
  return a;
}

Arc OrientedGraph::arc(std::size_t i) const { return {tail_[i], out_[i]}; }

bool OrientedGraph::is_symmetric() const {
  for (std::size_t i = 0; i < out_.size(); ++i)
    if (!has_arc(out_[i], tail_[i])) return false;
  return true;
}

bool OrientedGraph::is_antisymmetric() const {
  for (std::size_t i = 0; i < out_.size(); ++i)
    if (has_arc(out_[i], tail_[i])) return false;
  return true;
}

OrientedGraph reverse_arcs(const OrientedGraph& graph) {
  auto arcs = graph.arcs();
  for (auto& a : arcs) std::swap(a.first, a.second);
  return OrientedGraph(graph.vertex_count(), std::move(arcs));
}

OrientedGraph symmetrized(const OrientedGraph& graph) {
  auto arcs = graph.arcs();
  const std::size_t m = arcs.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!graph.has_arc(arcs[i].second, arcs[i].first)) arcs.push_back({arcs[i].second, arcs[i].first});
  return OrientedGraph(graph.vertex_count(), std::move(arcs));
}

OrientedGraph orbital_graph(const PermGroup& group, Arc seed) {
  if (seed.first == seed.second) throw InvalidArgument("diagonal seed " + arc_text(seed));
  if (seed.first >= group.degree() || seed.second >= group.degree())
    throw InvalidArgument("seed " + arc_text(seed) + " is beyond the group degree");
  std::vector<Arc> arcs;
  arcs.reserve(group.order());
  for (ElementId g = 0; g < group.order(); ++g)
    arcs.push_back({group.image(g, seed.first), group.image(g, seed.second)});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return OrientedGraph(group.degree(), std::move(arcs));
}

OrientedGraph orbital_graph(std::span<const Permutation> generators, std::size_t degree, Arc seed) {
  if (seed.first == seed.second) throw InvalidArgument("diagonal seed " + arc_text(seed));
  if (seed.first >= degree || seed.second >= degree)
    throw InvalidArgument("seed " + arc_text(seed) + " is beyond the degree");
  auto key = [degree](Arc a) { return std::uint64_t{a.first} * degree + a.second; };
  std::unordered_set<std::uint64_t> seen{key(seed)};
  std::vector<Arc> arcs{seed};
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (const auto& g : generators) {
      Arc b{g(arcs[i].first), g(arcs[i].second)};
      if (seen.insert(key(b)).second) arcs.push_back(b);
    }
  return OrientedGraph(degree, std::move(arcs));
}

std::optional<Arc> default_orbital_seed(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (!transitivity_profile(group).transitive)
    throw InvalidArgument("default orbital seed requires a transitive group");
  // Orbitals through (0, y) correspond to orbits of the stabilizer of 0.
  PermGroup stab = point_stabilizer(group, 0);
  UnionFind uf(n);
  for (ElementId g = 0; g < stab.order(); ++g)
    for (Point x = 0; x < n; ++x) uf.unite(x, stab.image(g, x));
  for (Point y = 1; y < n; ++y) {
    // Self-paired iff some t with t(y) = 0 takes (y, 0) back into the orbital.
    for (ElementId t = 0; t < group.order(); ++t) {
      if (group.image(t, y) != 0) continue;
      if (uf.find(group.image(t, 0)) != uf.find(y)) return Arc{0, y};
      break;
    }
  }
  return std::nullopt;
}

bool is_invariant(const OrientedGraph& graph, std::span<const Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != graph.vertex_count()) return false;
    for (std::size_t i = 0; i < graph.arc_count(); ++i) {
      Arc a = graph.arc(i);
      if (!graph.has_arc(g(a.first), g(a.second))) return false;
    }
  }
  return true;
}

std::string to_string(OrientationStatus s) {
  switch (s) {
    case OrientationStatus::g_oriented:
      return "g_oriented";
    case OrientationStatus::arc_transitive:
      return "arc_transitive";
    case OrientationStatus::not_invariant:
      return "not_invariant";
  }
  return "not_invariant";
}

OrientationStatus orientation_status(const OrientedGraph& graph, const PermGroup& group) {
  if (group.degree() != graph.vertex_count())
    throw DegreeMismatch("group degree " + std::to_string(group.degree()) + " does not match " +
                         std::to_string(graph.vertex_count()) + " vertices");
  if (!is_invariant(graph, group.generators())) return OrientationStatus::not_invariant;
  if (graph.is_antisymmetric()) return OrientationStatus::g_oriented;
  if (graph.is_symmetric() && arc_orbits(graph, group.generators()).size() == 1)
    return OrientationStatus::arc_transitive;
  return OrientationStatus::not_invariant;
}

Connectivity connectivity(const OrientedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n <= 1) return {true, true};
  Connectivity c;
  c.connected = reaches_all(symmetrized(graph), true);
  c.strongly_connected = reaches_all(graph, true) && reaches_all(graph, false);
  return c;
}

std::vector<std::vector<std::size_t>> arc_orbits(const OrientedGraph& graph,
                                                 std::span<const Permutation> generators) {
  UnionFind uf(graph.arc_count());
  for (const auto& g : generators)
    for (std::size_t i = 0; i < graph.arc_count(); ++i) {
      Arc a = graph.arc(i);
      auto j = graph.arc_index(g(a.first), g(a.second));
      if (!j) throw InvalidArgument("arc set is not invariant under " + g.to_cycle_string());
      uf.unite(i, *j);
    }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> index(graph.arc_count(), SIZE_MAX);
  for (std::size_t i = 0; i < graph.arc_count(); ++i) {
    std::size_t r = uf.find(i);
    if (index[r] == SIZE_MAX) {
      index[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[index[r]].push_back(i);
  }
  return orbits;
}

std::size_t arc_orbit_count(const OrientedGraph& graph, const PermGroup& group) {
  if (group.degree() != graph.vertex_count()) throw DegreeMismatch("group degree does not match graph");
  return arc_orbits(symmetrized(graph), group.generators()).size();
}

OrientedGraph apply(const OrientedGraph& graph, const Permutation& g) {
  if (g.degree() != graph.vertex_count()) throw DegreeMismatch("permutation degree does not match graph");
  auto arcs = graph.arcs();
  for (auto& a : arcs) a = {g(a.first), g(a.second)};
  return OrientedGraph(graph.vertex_count(), std::move(arcs));
}

std::string OGPair::label(Point v) const {
  if (v < labels.size()) return labels[v];
  return std::to_string(v + 1);
}

Checked<OGCertificate> verify_og(const OGPair& pair, std::size_t m) {
  if (m < 2 || m % 2 != 0) throw InvalidArgument("valency must be even and at least 2");
  const OrientedGraph& g = pair.graph;
  const PermGroup& group = pair.group;
  const std::size_t n = g.vertex_count();
  ClauseLog log;
  OGCertificate cert;

  if (!log.check("og:degree", group.degree() == n && n >= 2,
                 "group degree " + std::to_string(group.degree()) + ", " + std::to_string(n) +
                     " vertices"))
    return Checked<OGCertificate>::from_log(std::move(log));

  bool edges_kept = true;
  std::string witness;
  for (const auto& p : group.generators()) {
    for (std::size_t i = 0; i < g.arc_count() && edges_kept; ++i) {
      Arc a = g.arc(i);
      if (!g.has_arc(p(a.first), p(a.second)) && !g.has_arc(p(a.second), p(a.first))) {
        edges_kept = false;
        witness = p.to_cycle_string() + " moves edge " + arc_text(a) + " off the graph";
      }
    }
    if (!edges_kept) break;
  }
  if (!log.check("og:automorphism", edges_kept, edges_kept ? "generators preserve edges" : witness))
    return Checked<OGCertificate>::from_log(std::move(log));

  cert.orientation_preserved = is_invariant(g, group.generators());
  if (!log.check("og:orientation_invariant", cert.orientation_preserved,
                 cert.orientation_preserved ? "orientation G-invariant" : "orientation not G-invariant"))
    return Checked<OGCertificate>::from_log(std::move(log));

  if (!log.check("og:antisymmetric", g.is_antisymmetric(),
                 g.is_antisymmetric() ? "no arc reversed" : "arc set meets its reverse"))
    return Checked<OGCertificate>::from_log(std::move(log));

  cert.vertex_transitive = transitivity_profile(group).transitive;
  if (!log.check("og:vertex_transitive", cert.vertex_transitive))
    return Checked<OGCertificate>::from_log(std::move(log));

  std::size_t arc_orbit_total = arc_orbits(g, group.generators()).size();
  cert.edge_transitive = arc_orbit_total == 1;
  if (!log.check("og:arc_transitive", cert.edge_transitive,
                 std::to_string(arc_orbit_total) + " orbit(s) on arcs"))
    return Checked<OGCertificate>::from_log(std::move(log));

  cert.connected = connectivity(g).connected;
  if (!log.check("og:connected", cert.connected)) return Checked<OGCertificate>::from_log(std::move(log));

  bool valent = true;
  for (Point x = 0; x < n && valent; ++x)
    valent = g.out(x).size() == m / 2 && g.in(x).size() == m / 2;
  if (!log.check("og:valency", valent,
                 "out-valency " + std::to_string(g.out(0).size()) + ", in-valency " +
                     std::to_string(g.in(0).size()) + ", required " + std::to_string(m / 2)))
    return Checked<OGCertificate>::from_log(std::move(log));

  cert.valency = m;
  cert.stabilizer_order = group.order() / n;
  return Checked<OGCertificate>::success(cert, std::move(log).take());
}

Checked<OGPair> certify(OrientedGraph graph, PermGroup group, std::vector<std::string> labels,
                        std::size_t m) {
  OGPair pair{std::move(graph), std::move(group), std::move(labels), std::nullopt};
  auto cert = verify_og(pair, m);
  if (!cert) return Checked<OGPair>::refuted(cert.clauses());
  pair.certificate = *cert;
  return Checked<OGPair>::success(std::move(pair), cert.clauses());
}

}  // namespace og4
