#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "og4/normal.hpp"

using namespace og4;
using fixtures::cyc;
using fixtures::to_oracle;

TEST_CASE("permutation products act on the right") {
  Permutation p = cyc("(1 2)", 3), q = cyc("(2 3)", 3);
  // x^(pq) = (x^p)^q: 1 -> 2 -> 3
  CHECK((p * q)(0) == 2);
  CHECK((p * q).to_cycle_string() == "(1 3 2)");
  CHECK(p.conjugate_by(q) == cyc("(1 3)", 3));
  CHECK((p * q).order() == 3);
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(cyc("(1,5,4,3,2)", 5) == cyc("(1 5 4 3 2)", 5));
  CHECK(cyc("(1 2 3)(4 5)", 5).cycles() == std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4}});
}

TEST_CASE("malformed cycle notation is rejected") {
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 6)", 5), Error);
  CHECK(parse_cycles("", 3).is_identity());
}

TEST_CASE("group orders match brute-force closure") {
  CHECK(alternating_group(5).order() == 60);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(pgl2_7().order() == 336);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens;
    std::vector<Point> img(n);
    for (int k = 0; k < 2; ++k) {
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    PermGroup G = PermGroup::generate(gens);
    auto ref = oracle::closure(to_oracle(gens), n);
    REQUIRE(G.order() == ref.size());
    CHECK(G.element(PermGroup::identity_id).is_identity());
    // ids follow lexicographic order of the image sequences
    std::size_t i = 0;
    for (const auto& p : ref) CHECK(to_oracle(G.element(static_cast<ElementId>(i++))) == p);
    for (int k = 0; k < 30; ++k) {
      ElementId a = rng() % G.order(), b = rng() % G.order(), c = rng() % G.order();
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.inv(a)) == PermGroup::identity_id);
      CHECK(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
      CHECK(G.element(G.conj(a, b)) == G.element(a).conjugate_by(G.element(b)));
    }
  }
}

TEST_CASE("element ids do not depend on the generators") {
  PermGroup a = PermGroup::generate({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  PermGroup b = PermGroup::generate({cyc("(1 2)(3 4)", 4), cyc("(1 3 2)", 4)});
  REQUIRE(a.same_elements(b));
  for (ElementId g = 0; g < a.order(); ++g) CHECK(a.element(g) == b.element(g));
}

TEST_CASE("enumeration caps") {
  EnumerationLimits limits;
  limits.max_order = 100;
  CHECK_THROWS_AS(symmetric_group(5, limits), EnumerationOverflow);
  CHECK_NOTHROW(alternating_group(5, EnumerationLimits{60, 1 << 20}));
}

TEST_CASE("normal subgroups agree with the class-union oracle") {
  std::vector<PermGroup> groups = {symmetric_group(3), symmetric_group(4), alternating_group(4),
                                   PermGroup::generate({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)}),
                                   cyclic_group(6), alternating_group(5),
                                   PermGroup::generate({cyc("(1 2)", 6), cyc("(3 4)", 6), cyc("(5 6)", 6)})};
  for (const auto& G : groups) {
    auto ref = oracle::normal_subgroup_orders(oracle::closure(to_oracle(G.generators()), G.degree()));
    std::vector<std::size_t> got;
    for (const auto& N : all_normal_subgroups(G)) got.push_back(N.order());
    std::sort(got.begin(), got.end());
    CHECK(got == ref);
    for (const auto& N : all_normal_subgroups(G)) CHECK(is_normal(G, N));
  }
  auto s3 = all_normal_subgroups(symmetric_group(3));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].order() == 1);
  CHECK(s3[1].order() == 3);
  CHECK(s3[2].order() == 6);
  REQUIRE(minimal_normal_subgroups(symmetric_group(4)).size() == 1);
  CHECK(minimal_normal_subgroups(symmetric_group(4))[0].order() == 4);
}

TEST_CASE("simplicity, centres and nilpotency") {
  CHECK(is_nonabelian_simple(alternating_group(5)));
  CHECK_FALSE(is_nonabelian_simple(alternating_group(4)));
  CHECK_FALSE(is_nonabelian_simple(cyclic_group(5)));
  PermGroup d8 = PermGroup::generate({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)});
  CHECK(center(d8).order() == 2);
  CHECK(nilpotency_class(d8) == 2);
  CHECK(nilpotency_class(cyclic_group(4)) == 1);
  CHECK(nilpotency_class(PermGroup::trivial(3)) == 0);
  CHECK_FALSE(nilpotency_class(symmetric_group(3)).has_value());
  CHECK(is_elementary_abelian(PermGroup::generate({cyc("(1 2)", 4), cyc("(3 4)", 4)})));
  CHECK_FALSE(is_elementary_abelian(cyclic_group(4)));
  CHECK(conjugacy_classes(symmetric_group(4)).size() == 5);
  CHECK(conjugacy_classes(alternating_group(5)).size() == 5);
}

TEST_CASE("quasiprimitivity types") {
  PermGroup d8 = PermGroup::generate({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)});
  CHECK(quasiprimitivity_type(d8) == Quasiprimitivity::biquasiprimitive);
  CHECK(quasiprimitivity_type(symmetric_group(5)) == Quasiprimitivity::quasiprimitive);
  CHECK(quasiprimitivity_type(cyclic_group(5)) == Quasiprimitivity::quasiprimitive);
  CHECK(quasiprimitivity_type(cyclic_group(6)) == Quasiprimitivity::neither);
  CHECK_THROWS_AS(quasiprimitivity_type(PermGroup::generate({cyc("(1 2)", 3)})), InvalidArgument);
}

TEST_CASE("automorphisms") {
  PermGroup A5 = alternating_group(5);
  auto auts = conjugation_automorphisms(A5, symmetric_group(5));
  CHECK(auts.size() == 120);
  auto s = Automorphism::conjugation(A5, cyc("(1 2)", 5));
  CHECK(s.then(s).is_identity());
  CHECK_THROWS_AS(Automorphism::conjugation(A5, cyc("(1 2)", 6)), Error);
  // not a homomorphism: swapping two elements of Z5
  PermGroup Z5 = cyclic_group(5);
  std::vector<ElementId> map(5);
  std::iota(map.begin(), map.end(), ElementId{0});
  std::swap(map[1], map[2]);
  CHECK_FALSE(is_automorphism(Z5, map));
  CHECK_THROWS_AS(Automorphism::from_table(Z5, map), Error);
}

TEST_CASE("block actions") {
  PermGroup d8 = PermGroup::generate({cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)});
  BlockPartition p{{{0, 2}, {1, 3}}};
  auto act = induced_block_action(d8, p);
  CHECK(act.induced.order() == 2);
  CHECK(act.kernel.order() == 4);
  BlockPartition bad{{{0, 1}, {2, 3}}};
  CHECK_THROWS_AS(induced_block_action(d8, bad), InvalidArgument);
}
