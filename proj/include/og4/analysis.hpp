#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"

namespace og4 {

enum class AttachmentKind { loose, tight, intermediate, two_cycles_degenerate };
std::string to_string(AttachmentKind k);

struct AlternatingStructure {
  // Vertex sequences; consecutive vertices (cyclically) are joined by edges of
  // alternating orientation. Canonical: least rotation/reflection.
  std::vector<std::vector<Point>> cycles;
  std::size_t common_length = 0;  // edges per cycle
  bool partitions_edges = false;
  // Every vertex is the tail of one cycle and the head of another.
  bool two_cycles_per_vertex = false;
  // Whether all nonempty intersections of distinct cycles have one size.
  bool intersection_sizes_constant = false;
  // That size; zero in the degenerate case with at most two cycles.
  std::size_t attachment_number = 0;
  AttachmentKind attachment_kind = AttachmentKind::two_cycles_degenerate;
  // Whether the nonempty intersections of distinct cycles form a block
  // system invariant under the group (checked only when > 2 cycles).
  bool intersections_form_blocks = false;
};

// Requires a certified OG(4) pair (throws InvalidArgument otherwise).
AlternatingStructure alternating_structure(const OGPair& pair);

struct SArcLimits {
  std::size_t max_sarcs = 10'000'000;
};

struct SArcReport {
  std::size_t max_s = 0;
  // s-arc counts for s = 0..max_s+1 (only up to max_s for a lower bound)
  std::vector<std::size_t> counts;
  bool regular_on_max = false;
  // The cap was hit while the group was still transitive; max_s is then
  // only a lower bound.
  bool lower_bound = false;
};

SArcReport s_arc_report(const OGPair& pair, const SArcLimits& limits = {});

struct StabilizerReport {
  std::size_t order = 0;
  bool is_2group = false;
  bool elementary_abelian = false;
  std::optional<int> nilpotency_class;
};

StabilizerReport stabilizer_report(const OGPair& pair);

}  // namespace og4
