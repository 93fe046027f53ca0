#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "og4/constructions.hpp"

namespace og4 {

// A group named in a document: {"alternating": n}, {"symmetric": n},
// {"cyclic": n} or {"degree": n, "generators": [...]}.
struct GroupSpec {
  enum class Kind { alternating, symmetric, cyclic, generated };
  Kind kind = Kind::generated;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  PermGroup build(const EnumerationLimits& limits = {}) const;
};

// A pair given directly: a group by generators plus either an arc list or
// an orbital seed (the canonical one when neither is present).
struct PairSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::vector<Arc>> arcs;  // 0-based
  std::optional<Arc> seed_arc;           // 0-based
  std::vector<std::string> labels;
  std::size_t valency = 4;
};

struct ConstructionSpec {
  std::string family;
  std::size_t r = 0;  // lex_cycle
  std::size_t n = 0;  // sym_bigstab
  std::optional<GroupSpec> group;      // T, N or G, by family
  std::optional<GroupSpec> overgroup;  // conjugations used as Aut(T)
  std::vector<Permutation> subgroup;   // generators of H (raw_coset)
  std::map<std::string, Permutation> elements;  // a, b, sigma, h, g, s
};

struct Document {
  std::variant<PairSpec, ConstructionSpec> body;
  // Generators of a normal subgroup for the quotient command, if given.
  std::optional<std::vector<Permutation>> normal;

  bool is_construction() const { return std::holds_alternative<ConstructionSpec>(body); }
};

const std::vector<std::string>& construction_families();

// Syntax errors carry the line and column of the offending character;
// semantic errors name the JSON path and the position of its value.
Document parse_document(std::string_view text);

// Builds (and certifies) the pair a construction document describes.
Checked<Built> build_construction(const ConstructionSpec& spec, const EnumerationLimits& limits = {});

// Canonical pair document: degree, 1-based generators and sorted arcs, and
// labels when present. Parsing it and emitting again gives the same bytes.
std::string emit_pair_document(const OGPair& pair);

// Directed graph, one edge per arc in index order, 1-based node names.
std::string export_dot(const OGPair& pair);

}  // namespace og4
