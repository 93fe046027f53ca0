#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "og4/graph.hpp"
#include "random_groups.hpp"

using namespace og4;
using fixtures::cyc;
using fixtures::to_oracle;

TEST_CASE("oriented graph storage") {
  OrientedGraph g(4, {{2, 3}, {0, 1}, {1, 2}, {3, 0}});
  CHECK(g.arc_count() == 4);
  CHECK(g.arcs().front() == Arc{0, 1});
  CHECK(g.has_arc(3, 0));
  CHECK_FALSE(g.has_arc(0, 3));
  CHECK(*g.arc_index(1, 2) == 1);
  CHECK(g.is_antisymmetric());
  CHECK_FALSE(g.is_symmetric());
  CHECK(symmetrized(g).is_symmetric());
  CHECK(reverse_arcs(g).has_arc(0, 3));
  CHECK_THROWS_AS(OrientedGraph(3, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 1}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 3}}), InvalidArgument);
  CHECK(apply(g, cyc("(1 2 3 4)", 4)) == g);
}

TEST_CASE("orbital graphs and their seeds") {
  PermGroup Z5 = cyclic_group(5);
  auto g = orbital_graph(Z5, {0, 1});
  CHECK(g.arc_count() == 5);
  CHECK(g.has_arc(4, 0));
  CHECK(default_orbital_seed(Z5) == Arc{0, 1});
  CHECK(orientation_status(g, Z5) == OrientationStatus::g_oriented);
  // every orbital of a 2-transitive group is self-paired
  CHECK_FALSE(default_orbital_seed(symmetric_group(4)).has_value());
  auto k4 = orbital_graph(symmetric_group(4), {0, 1});
  CHECK(k4.arc_count() == 12);
  CHECK(orientation_status(k4, symmetric_group(4)) == OrientationStatus::arc_transitive);
  PermGroup rev = PermGroup::generate({cyc("(1 2)", 3)});
  OrientedGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(orientation_status(tri, rev) == OrientationStatus::not_invariant);
  auto from_gens = orbital_graph(std::vector<Permutation>{cyc("(1 2 3 4 5)", 5)}, 5, {0, 2});
  CHECK(from_gens == orbital_graph(Z5, {0, 2}));
}

TEST_CASE("OG membership names the failed condition") {
  OrientedGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  auto ok = certify(tri, cyclic_group(3), {}, 2);
  REQUIRE(ok.ok());
  CHECK(ok->certificate->valency == 2);
  CHECK(ok->certificate->stabilizer_order == 1);

  auto rev = verify_og({tri, PermGroup::generate({cyc("(1 2)", 3)}), {}, std::nullopt}, 2);
  REQUIRE_FALSE(rev.ok());
  CHECK(rev.refutation().tag == "og:orientation_invariant");
  CHECK(rev.refutation().detail == "orientation not G-invariant");

  auto wrong_m = verify_og({tri, cyclic_group(3), {}, std::nullopt}, 4);
  REQUIRE_FALSE(wrong_m.ok());
  CHECK(wrong_m.refutation().tag == "og:valency");

  // two disjoint directed triangles
  OrientedGraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  PermGroup G = PermGroup::generate({cyc("(1 2 3)(4 5 6)", 6), cyc("(1 4)(2 5)(3 6)", 6)});
  auto disc = verify_og({two, G, {}, std::nullopt}, 2);
  REQUIRE_FALSE(disc.ok());
  CHECK(disc.refutation().tag == "og:connected");

  auto inv = verify_og({orbital_graph(cyclic_group(4), {0, 1}), PermGroup::generate({cyc("(1 2 3)", 4)}), {}, std::nullopt}, 2);
  REQUIRE_FALSE(inv.ok());
  CHECK(inv.refutation().tag == "og:automorphism");
}

TEST_CASE("arc orbits") {
  PermGroup Z6 = cyclic_group(6);
  OrientedGraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}});
  CHECK(arc_orbits(g, Z6.generators()).size() == 2);
  CHECK(arc_orbit_count(g, Z6) == 4);
  CHECK(connectivity(g).strongly_connected);
}


TEST_CASE("connected orbital graphs are strongly connected") {
  std::mt19937 rng(2024);
  int tested = 0, disconnected = 0;
  while (tested < 150) {
    auto G = random_groups::random_transitive(rng);
    if (!G) continue;
    Point y = 1 + rng() % (G->degree() - 1);
    auto g = orbital_graph(*G, {0, y});
    auto c = connectivity(g);
    auto ref = to_oracle(g);
    CHECK(c.connected == oracle::weakly_connected(ref));
    CHECK(c.strongly_connected == oracle::strongly_connected(ref));
    CHECK(c.connected == c.strongly_connected);
    CHECK(is_invariant(g, G->generators()));
    disconnected += !c.connected;
    ++tested;
  }
  // the sample should contain both kinds
  CHECK(disconnected > 0);
  CHECK(disconnected < tested);
}

TEST_CASE("a plain digraph can be weakly but not strongly connected") {
  OrientedGraph path(3, {{0, 1}, {1, 2}});
  auto c = connectivity(path);
  CHECK(c.connected);
  CHECK_FALSE(c.strongly_connected);
}

TEST_CASE("constructed pairs satisfy the Sims equivalence") {
  for (const auto& inst : fixtures::instances()) {
    CAPTURE(inst.name);
    auto c = connectivity(inst.built.pair.graph);
    CHECK(c.connected);
    CHECK(c.strongly_connected);
  }
}
