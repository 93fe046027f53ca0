#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"
#include "og4/normal.hpp"

namespace og4 {

enum class QuotientKind {
  K1,
  Cover,
  OGMulticover,
  ArcTransitiveMulticover,
  K2,
  OrientedCycle,
  UnorientedCycle,
};
std::string to_string(QuotientKind k);

struct QuotientOutcome {
  QuotientKind kind = QuotientKind::K1;
  BlockPartition blocks;  // N-orbits, sorted by least vertex
  // For oriented kinds the arcs inherit the orientation; otherwise every
  // quotient edge is stored as two opposite arcs.
  OrientedGraph quotient_graph;
  PermGroup induced_group = PermGroup::trivial(1);
  PermGroup kernel = PermGroup::trivial(1);
  std::size_t multicover_degree = 0;  // l: neighbours of a vertex in an adjacent block
  std::size_t quotient_valency = 0;   // k: undirected valency of the quotient
  std::size_t cycle_length = 0;       // r for the cycle cases
  // Present for Cover outcomes: the certified quotient pair.
  std::optional<OGPair> quotient_pair;
  // Every consistency check made while classifying.
  std::vector<Clause> checks;
};

// Forms the normal quotient and sorts it into K1, OGMulticover or
// ArcTransitiveMulticover. Throws InvalidArgument when N is not a normal
// subgroup, InvariantViolation when the multicover degree is not constant.
QuotientOutcome normal_quotient(const OGPair& pair, const PermGroup& normal);

// Refines normal_quotient for a certified OG(4) pair into exactly one of
// Cover, K1, K2, OrientedCycle or UnorientedCycle, checking the data each
// case promises. Throws InvariantViolation if no case applies.
QuotientOutcome classify_og4_quotient(const OGPair& pair, const PermGroup& normal);

enum class BasicType { Quasiprimitive, Biquasiprimitive, Cycle, NonBasic };
std::string to_string(BasicType t);

struct NormalQuotientEntry {
  PermGroup normal;
  QuotientOutcome outcome;
};

// Classification of every nontrivial normal subgroup, by increasing order.
std::vector<NormalQuotientEntry> classify_all_quotients(const OGPair& pair,
                                                        const NormalSearchLimits& limits = {});
// Basic type from the outcome kinds only.
BasicType basic_type_of(const std::vector<NormalQuotientEntry>& entries);
// Basic type, cross-checked against quasiprimitivity_type of the group
// (throws InvariantViolation on disagreement).
BasicType basic_type(const OGPair& pair, const NormalSearchLimits& limits = {});

struct ChainStep {
  PermGroup normal;  // N_i, a normal subgroup of the original group
  OGPair quotient;   // the pair on the N_i-orbits
};

// 1 < N_1 < ... < N_s with each quotient a Cover in OG(4) and the last one
// basic; empty for basic input. At each step the Cover subgroup of largest
// order is taken (ties by element ids).
std::vector<ChainStep> basic_chain(const OGPair& pair, const NormalSearchLimits& limits = {});

// Every normal subgroup N for which the quotient is a Cover whose pair is
// basic; each is a basic normal quotient of the input.
std::vector<ChainStep> all_basic_quotients(const OGPair& pair, const NormalSearchLimits& limits = {});

}  // namespace og4
