#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "og4/error.hpp"
#include "og4/perm_group.hpp"

namespace og4 {

using Arc = std::pair<Point, Point>;

// A digraph on {0..n-1} without loops or repeated arcs, stored in compressed
// rows for both out- and in-neighbours (each list sorted). An arc and its
// reverse may both be present, which is how unoriented quotients are held.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  // Throws InvalidArgument on a diagonal, repeated or out-of-range arc.
  OrientedGraph(std::size_t n_vertices, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return out_.size(); }

  std::span<const Point> out(Point x) const {
    return {out_.data() + out_start_[x], out_start_[x + 1] - out_start_[x]};
  }
  std::span<const Point> in(Point x) const {
    return {in_.data() + in_start_[x], in_start_[x + 1] - in_start_[x]};
  }
  bool has_arc(Point x, Point y) const;
  // Position of (x, y) in arcs(), if present.
  std::optional<std::size_t> arc_index(Point x, Point y) const;
  // Sorted lexicographically.
  std::vector<Arc> arcs() const;
  Arc arc(std::size_t i) const;

  // Whether the arc set equals its reverse.
  bool is_symmetric() const;
  // Whether no arc has its reverse present.
  bool is_antisymmetric() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.out_start_ == b.out_start_ && a.out_ == b.out_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_start_{0}, in_start_{0};
  std::vector<Point> out_, in_;
  std::vector<Point> tail_;  // tail of the i-th arc
};

OrientedGraph reverse_arcs(const OrientedGraph& graph);
// Arc set together with its reverse.
OrientedGraph symmetrized(const OrientedGraph& graph);

// Orbit of `seed` under the action on ordered pairs.
OrientedGraph orbital_graph(const PermGroup& group, Arc seed);
OrientedGraph orbital_graph(std::span<const Permutation> generators, std::size_t degree, Arc seed);

// Least pair (0, y) whose orbital is not self-paired; nullopt when every
// orbital is self-paired. Requires a transitive group.
std::optional<Arc> default_orbital_seed(const PermGroup& group);

// Whether every generator maps the arc set onto itself.
bool is_invariant(const OrientedGraph& graph, std::span<const Permutation> generators);

enum class OrientationStatus { g_oriented, arc_transitive, not_invariant };
std::string to_string(OrientationStatus s);
OrientationStatus orientation_status(const OrientedGraph& graph, const PermGroup& group);

struct Connectivity {
  bool connected = false;
  bool strongly_connected = false;
};
Connectivity connectivity(const OrientedGraph& graph);

// Orbits of the group on the arcs of `graph` (by arc index).
std::vector<std::vector<std::size_t>> arc_orbits(const OrientedGraph& graph,
                                                 std::span<const Permutation> generators);
// Number of orbits on arcs together with their reverses. Throws
// InvalidArgument when that set is not invariant.
std::size_t arc_orbit_count(const OrientedGraph& graph, const PermGroup& group);

// Image of the arc set under a vertex permutation.
OrientedGraph apply(const OrientedGraph& graph, const Permutation& g);

struct OGCertificate {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool orientation_preserved = false;
  bool connected = false;
  std::size_t valency = 0;
  std::size_t stabilizer_order = 0;
};

// A graph with a group acting on its vertices. The certificate is present
// once verify_og (with the recorded valency) has succeeded.
struct OGPair {
  OrientedGraph graph;
  PermGroup group;
  std::vector<std::string> labels;  // one per vertex; may be empty
  std::optional<OGCertificate> certificate;

  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::string label(Point v) const;
};

// Checks membership of (graph, group) in OG(m). A refutation names the first
// failed condition; the clause order is degree, underlying automorphism,
// orientation invariance, antisymmetry, vertex-transitivity,
// arc-transitivity, connectivity, valency.
Checked<OGCertificate> verify_og(const OGPair& pair, std::size_t m);

// Builds a pair and attaches its certificate, or returns the refutation.
Checked<OGPair> certify(OrientedGraph graph, PermGroup group, std::vector<std::string> labels,
                        std::size_t m = 4);

}  // namespace og4
