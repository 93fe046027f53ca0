#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "og4/analysis.hpp"

using namespace og4;
using fixtures::to_oracle;

namespace {

const Built& instance(const std::string& name) {
  for (const auto& i : fixtures::instances())
    if (i.name == name) return i.built;
  throw std::runtime_error("no instance " + name);
}

// Alternating cycles as classes of arcs: two arcs are linked when they share
// a head or share a tail. Returns the vertex set of each class and its size.
std::vector<std::pair<std::set<Point>, std::size_t>> arc_classes(const OrientedGraph& g) {
  auto arcs = g.arcs();
  std::vector<std::size_t> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs[i].first == arcs[j].first || arcs[i].second == arcs[j].second) parent[find(i)] = find(j);
  std::map<std::size_t, std::pair<std::set<Point>, std::size_t>> cls;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto& c = cls[find(i)];
    c.first.insert(arcs[i].first);
    c.first.insert(arcs[i].second);
    ++c.second;
  }
  std::vector<std::pair<std::set<Point>, std::size_t>> out;
  for (auto& [k, v] : cls) out.push_back(v);
  return out;
}

std::set<oracle::Perm> elements(const PermGroup& G) {
  std::set<oracle::Perm> out;
  for (ElementId g = 0; g < G.order(); ++g) out.insert(to_oracle(G.element(g)));
  return out;
}

}  // namespace

TEST_CASE("s-arcs of the lexicographic 3-cycle") {
  const OGPair& p = instance("lex_cycle 3").pair;
  auto rep = s_arc_report(p);
  CHECK(rep.max_s == 2);
  CHECK(rep.counts == std::vector<std::size_t>{6, 12, 24, 48});
  CHECK(rep.regular_on_max);
  CHECK_FALSE(rep.lower_bound);
  auto d = to_oracle(p.graph);
  auto els = elements(p.group);
  CHECK(oracle::s_arcs(d, 2).size() == 24);
  CHECK(oracle::s_arc_orbits(d, els, 2) == 1);
  CHECK(oracle::s_arc_orbits(d, els, 3) == 2);
}

TEST_CASE("s-arc reports agree with exhaustive orbit counting") {
  for (const auto& inst : fixtures::instances()) {
    const OGPair& p = inst.built.pair;
    if (p.group.order() > 1000) continue;
    CAPTURE(inst.name);
    auto rep = s_arc_report(p);
    auto d = to_oracle(p.graph);
    auto els = elements(p.group);
    for (std::size_t s = 0; s <= rep.max_s + 1; ++s) {
      CHECK(oracle::s_arcs(d, s).size() == rep.counts[s]);
      CHECK((oracle::s_arc_orbits(d, els, s) == 1) == (s <= rep.max_s));
    }
  }
}

TEST_CASE("s-arc cap gives a lower bound") {
  SArcLimits limits;
  limits.max_sarcs = 100;
  auto rep = s_arc_report(instance("lex_cycle 8").pair, limits);
  CHECK(rep.lower_bound);
  CHECK_FALSE(rep.regular_on_max);
  CHECK(rep.counts.back() <= 100);
}

TEST_CASE("alternating cycles of the lexicographic cycles") {
  for (std::size_t r = 3; r <= 8; ++r) {
    auto a = alternating_structure(instance("lex_cycle " + std::to_string(r)).pair);
    CHECK(a.cycles.size() == r);
    CHECK(a.common_length == 4);
    CHECK(a.attachment_number == 2);
    CHECK(a.attachment_kind == AttachmentKind::tight);
    CHECK(a.intersections_form_blocks);
  }
  // (0,0) -> (1,0) <- (0,1) -> (1,1) <- (0,0), least rotation first
  auto a3 = alternating_structure(instance("lex_cycle 3").pair);
  CHECK(a3.cycles[0] == std::vector<Point>{0, 2, 1, 3});
}

TEST_CASE("two alternating cycles are degenerate") {
  auto a = alternating_structure(instance("z8").pair);
  CHECK(a.cycles.size() == 2);
  CHECK(a.common_length == 8);
  CHECK(a.attachment_kind == AttachmentKind::two_cycles_degenerate);
  CHECK(a.attachment_number == 0);
}

TEST_CASE("alternating structure on every constructed pair") {
  for (const auto& inst : fixtures::instances()) {
    CAPTURE(inst.name);
    const OGPair& p = inst.built.pair;
    auto a = alternating_structure(p);
    CHECK(a.partitions_edges);
    CHECK(a.common_length % 2 == 0);
    CHECK(a.common_length >= 4);
    CHECK(a.cycles.size() * a.common_length == p.graph.arc_count());
    for (const auto& c : a.cycles) CHECK(c.size() == a.common_length);
    auto classes = arc_classes(p.graph);
    CHECK(classes.size() == a.cycles.size());
    for (const auto& c : classes) CHECK(c.second == a.common_length);
    if (a.cycles.size() > 2) {
      CHECK(a.intersection_sizes_constant);
      CHECK(a.two_cycles_per_vertex);
      CHECK(a.intersections_form_blocks);
      // pairwise intersections recomputed from the arc classes
      std::set<std::size_t> sizes;
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          std::size_t k = 0;
          for (Point x : classes[i].first) k += classes[j].first.count(x);
          if (k) sizes.insert(k);
        }
      REQUIRE(sizes.size() == 1);
      CHECK(*sizes.begin() == a.attachment_number);
      std::size_t half = a.common_length / 2;
      CHECK(a.attachment_number <= half);
      CHECK(a.common_length % a.attachment_number == 0);
      CHECK((a.attachment_kind == AttachmentKind::tight) == (a.attachment_number == half));
      CHECK((a.attachment_kind == AttachmentKind::loose) == (a.attachment_number == 1));
      if (a.attachment_number >= 3) CHECK(stabilizer_report(p).order == 2);
    }
  }
}

TEST_CASE("stabilizer reports") {
  auto b7 = stabilizer_report(instance("sym_bigstab 7").pair);
  CHECK(b7.order == 8);
  CHECK(b7.elementary_abelian);
  CHECK(b7.nilpotency_class == 1);
  auto l4 = stabilizer_report(instance("lex_cycle 4").pair);
  CHECK(l4.order == 8);
  CHECK(l4.elementary_abelian);
  auto pa = stabilizer_report(instance("pa").pair);
  CHECK(pa.order == 4);
  CHECK(pa.elementary_abelian);
  for (const auto& inst : fixtures::instances()) {
    CAPTURE(inst.name);
    const OGPair& p = inst.built.pair;
    auto st = stabilizer_report(p);
    CHECK(st.order * p.vertex_count() == p.group.order());
    CHECK(st.is_2group);
    REQUIRE(st.nilpotency_class.has_value());
    CHECK(*st.nilpotency_class <= 2);
  }
}

TEST_CASE("analysis needs a certified OG(4) pair") {
  OGPair raw = instance("lex_cycle 3").pair;
  raw.certificate.reset();
  CHECK_THROWS_AS(alternating_structure(raw), InvalidArgument);
  CHECK_THROWS_AS(s_arc_report(raw), InvalidArgument);
  CHECK_THROWS_AS(stabilizer_report(raw), InvalidArgument);
}
