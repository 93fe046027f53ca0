#pragma once

#include <string>
#include <vector>

#include "og4/constructions.hpp"
#include "oracle.hpp"

namespace fixtures {

inline oracle::Perm to_oracle(const og4::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline std::vector<oracle::Perm> to_oracle(const std::vector<og4::Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(to_oracle(p));
  return out;
}

inline oracle::Digraph to_oracle(const og4::OrientedGraph& g) {
  oracle::Digraph d(g.vertex_count());
  for (const auto& [x, y] : g.arcs()) d[x].push_back(static_cast<int>(y));
  return d;
}

inline og4::Permutation cyc(const char* text, std::size_t degree) { return og4::parse_cycles(text, degree); }

struct Instance {
  std::string name;
  og4::Built built;
};

// Every construction exercised by the suites, built once per process.
inline const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    using namespace og4;
    std::vector<Instance> v;
    for (std::size_t r = 3; r <= 8; ++r) v.push_back({"lex_cycle " + std::to_string(r), *lexicographic_cycle(r)});
    PermGroup A5 = alternating_group(5);
    v.push_back({"simple_cayley inner", *simple_cayley(A5, cyc("(1 2 3)", 5),
                                                       Automorphism::conjugation(A5, cyc("(1 4)(2 5)", 5)))});
    auto auts = conjugation_automorphisms(A5, symmetric_group(5));
    v.push_back({"tw_cayley", *tw_cayley(A5, cyc("(1 2 3)", 5), cyc("(1 2 3 4 5)", 5), auts)});
    v.push_back({"sym_bigstab 5", *sym_bigstab(5)});
    v.push_back({"sym_bigstab 7", *sym_bigstab(7)});
    v.push_back({"coset_simple", *coset_simple(A5, cyc("(1 4)(2 5)", 5), cyc("(1 2 3)", 5))});
    v.push_back({"pa", *pa_construction(A5, cyc("(1 2)(3 4)", 5), cyc("(1 5 4 3 2)", 5), auts)});
    auto tw21 = twenty_one_vertex_check();
    v.push_back({"twenty_one", Built{*tw21.pair, {}}});
    // Z5 x A5 with h = (1, sigma): a non-basic Cayley pair on 300 vertices.
    PermGroup N = PermGroup::generate({cyc("(1 2 3 4 5)", 10), cyc("(6 7 8)", 10), cyc("(6 7 8 9 10)", 10)});
    v.push_back({"z5xa5", *build_cayley({N, cyc("(1 2 3 4 5)(6 7 8)", 10), cyc("(1 2 3 4 5)(8 9 10)", 10),
                                          Automorphism::conjugation(N, cyc("(6 9)(7 10)", 10))})});
    // Z8 with x -> 3x: exactly two alternating cycles.
    PermGroup Z8 = cyclic_group(8);
    Permutation g = cyc("(1 2 3 4 5 6 7 8)", 8);
    v.push_back({"z8", *build_cayley({Z8, g, g * g * g, Automorphism::conjugation(Z8, cyc("(2 4)(3 7)(6 8)", 8))})});
    return v;
  }();
  return all;
}

}  // namespace fixtures
