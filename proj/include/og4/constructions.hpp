#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"
#include "og4/normal.hpp"

namespace og4 {

// A constructed pair together with the vertex action of the normal subgroup
// the construction is built around (N for Cayley graphs, T x T or Alt(n) for
// the coset families). The generator list is empty when there is none.
struct Built {
  OGPair pair;
  std::vector<Permutation> normal_generators;

  PermGroup normal_subgroup() const;
};

// Cay(N, S) with S = S0 u S0^-1, S0 = {a, b}, oriented x -> y iff y x^-1 in S0.
struct CayleySpec {
  PermGroup N;
  Permutation a;
  Permutation b;
  Automorphism h;
};

Checked<Built> build_cayley(const CayleySpec& spec);

// Vertex permutations of the right regular action of N (one per generator).
std::vector<Permutation> right_multiplications(const PermGroup& N);

// C_r[2.K_1] with Z_2 wr Z_r; vertex (i, j) has index 2i + j.
Checked<Built> lexicographic_cycle(std::size_t r);

Checked<Built> simple_cayley(const PermGroup& T, const Permutation& a, const Automorphism& sigma);

// Cay(T x T, {(a, b), (b, a)}) with the coordinate swap; T x T acts on the
// disjoint union of two copies of T's points. `automorphisms` is the
// caller's inventory of Aut(T).
Checked<Built> tw_cayley(const PermGroup& T, const Permutation& a, const Permutation& b,
                         const std::vector<Automorphism>& automorphisms);

struct CosetSpec {
  PermGroup G;
  PermGroup H;
  Permutation s;
};

// Cos(G, H, s) on right cosets (each numbered by its least element), with
// Hx -> Hy iff y x^-1 in HsH. All four coset conditions are reported.
Checked<Built> build_coset_graph(const CosetSpec& spec);

Checked<Built> coset_simple(const PermGroup& G, const Permutation& h, const Permutation& g);

// Sym(n) on the cosets of <(i, i+m)>, m = (n-1)/2, with g the n-cycle.
Checked<Built> sym_bigstab(std::size_t n, const EnumerationLimits& limits = {});

// (T x T) x| <iota> on the cosets of H = <(a, a), iota>, with g = (b, ba).
// `automorphisms` is an inventory of Aut(T); the ones fixing a are used.
Checked<Built> pa_construction(const PermGroup& T, const Permutation& a, const Permutation& b,
                               const std::vector<Automorphism>& automorphisms);

// PGL(2, 7) on the projective line, points 0..6 for the field and 7 for infinity.
PermGroup pgl2_7();

struct TwentyOneReport {
  std::size_t group_order = 0;
  std::size_t stabilizer_order = 0;
  bool stabilizer_dihedral = false;
  Permutation s = Permutation::identity(1);
  std::size_t vertices = 0;
  std::size_t valency = 0;
  bool arc_transitive = false;  // the undirected graph under PGL(2, 7)
  std::size_t frobenius_order = 0;
  std::optional<OGPair> pair;  // (G(Delta), F) when certified
  std::vector<Clause> clauses;
  std::size_t arc_orbits = 0;  // F-orbits on arcs and their reverses
  // Elements of PGL(2, 7) carrying some arc of Delta into Delta*, and those
  // mapping Delta onto Delta*.
  std::size_t elements_meeting_reverse = 0;
  std::size_t elements_swapping = 0;
};

// The 4-valent arc-transitive graph on 21 vertices from PGL(2, 7) and a
// dihedral subgroup of order 16, oriented by the Frobenius group of order 42.
TwentyOneReport twenty_one_vertex_check();

// A twisted pair Cay(T x T, {x, x^h}) with x = (a1, a2) and
// h = (sigma, sigma^-1) tau, and the bijection (u, v) -> (u^sigma, v) onto
// tw_cayley(a1^sigma, a2).
struct TwistNormalization {
  std::optional<Built> twisted;
  std::optional<Built> normalized;
  std::vector<Point> bijection;  // vertex of twisted -> vertex of normalized
  bool maps_arcs = false;
  bool h_becomes_swap = false;
  std::vector<Clause> clauses;
};
TwistNormalization normalize_twisted_cayley(const PermGroup& T, const Permutation& a1,
                                            const Permutation& a2, const Automorphism& sigma,
                                            const std::vector<Automorphism>& automorphisms);

}  // namespace og4
