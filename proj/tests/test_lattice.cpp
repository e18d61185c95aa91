#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "json.hpp"
#include "torslat/lattice.hpp"
#include "torslat/subcat.hpp"

using namespace torslat;
using testing::mask;
using testing::node;

namespace {

// Covering pairs (top, bottom) computed from scratch on a list of classes.
std::set<std::pair<Mask, Mask>> covers(const std::vector<Mask>& classes) {
  std::set<std::pair<Mask, Mask>> out;
  for (const auto& t : classes)
    for (const auto& u : classes) {
      if (u == t || !u.is_subset_of(t)) continue;
      bool between = false;
      for (const auto& v : classes)
        if (v != u && v != t && u.is_subset_of(v) && v.is_subset_of(t)) between = true;
      if (!between) out.insert({t, u});
    }
  return out;
}

std::set<std::pair<Mask, Mask>> arrow_pairs(const TorsLattice& lat) {
  std::set<std::pair<Mask, Mask>> out;
  for (const auto& a : lat.arrows) out.insert({lat.nodes[a.top], lat.nodes[a.bottom]});
  return out;
}

}  // namespace

TEST_CASE("enumeration equals definitional subset filtering") {
  const std::map<std::string, std::size_t> expected = {
      {"a2", 5}, {"a2-reversed", 5}, {"a3", 14}, {"a3-alt", 14}, {"a4", 42}, {"ss2", 4}, {"ppa2", 6}, {"nakayama3", 14},
  };
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& cat = testing::catalog(e.name);
    const oracle::DefinitionalTables tables(cat);
    const auto reference = tables.torsion_classes();
    CHECK(reference.size() == expected.at(e.name));
    CHECK(enumerate_tors(cat).nodes == reference);
    CHECK(arrow_pairs(testing::lattice(e.name)) == covers(reference));
  }
}

TEST_CASE("a2 lattice and labels") {
  const auto& lat = testing::lattice("a2");
  const auto& cat = *lat.cat;
  REQUIRE(lat.size() == 5);
  CHECK(lat.nodes[0] == cat.empty_mask());
  CHECK(lat.nodes[1] == mask(cat, "S1"));
  CHECK(lat.nodes[2] == mask(cat, "S2"));
  CHECK(lat.nodes[3] == mask(cat, "S1,P1"));
  CHECK(lat.nodes[4] == cat.full_mask());
  auto label = [&](const std::string& t, const std::string& u) {
    auto a = lat.arrow_between(node(lat, t), node(lat, u));
    REQUIRE(a);
    return cat.names[lat.arrows[*a].label];
  };
  CHECK(lat.arrows.size() == 5);
  CHECK(label("full", "S1,P1") == "01");
  CHECK(label("full", "S2") == "10");
  CHECK(label("S1,P1", "S1") == "11");
  CHECK(label("S1", "0") == "10");
  CHECK(label("S2", "0") == "01");
}

TEST_CASE("small lattices") {
  CHECK(testing::lattice("ss2").size() == 4);
  CHECK(testing::lattice("ss2").arrows.size() == 4);
  CHECK(testing::lattice("a3").size() == 14);
  const auto trunc = testing::algebra("vertices 1\narrow x 1 1\nrelation x x x\n");
  const auto cat = build_catalog(trunc);
  const auto lat = build_lattice(cat);
  CHECK(lat.size() == 2);
  REQUIRE(lat.arrows.size() == 1);
  CHECK(cat.brick[lat.arrows[0].label]);
}

TEST_CASE("joins and meets") {
  const auto& lat = testing::lattice("a2");
  CHECK(join(lat, {node(lat, "S1"), node(lat, "S2")}) == lat.top());
  CHECK(meet(lat, {node(lat, "S1,P1"), node(lat, "S2")}) == lat.bottom());
  CHECK(join(lat, {}) == lat.bottom());
  CHECK(meet(lat, {}) == lat.top());
  for (const auto& e : corpus()) {
    const auto& l = testing::lattice(e.name);
    for (int a = 0; a < int(l.size()); ++a)
      for (int b = 0; b < int(l.size()); ++b) {
        const int j = join(l, {a, b}), m = meet(l, {a, b});
        CHECK(l.leq(a, j));
        CHECK(l.leq(b, j));
        CHECK(l.leq(m, a));
        CHECK(l.leq(m, b));
        // Least upper bound and greatest lower bound among all nodes.
        for (int c = 0; c < int(l.size()); ++c) {
          if (l.leq(a, c) && l.leq(b, c)) CHECK(l.leq(j, c));
          if (l.leq(c, a) && l.leq(c, b)) CHECK(l.leq(c, m));
        }
      }
  }
}

TEST_CASE("upper and lower sets, labels of node sets") {
  const auto& lat = testing::lattice("a2");
  const auto& cat = *lat.cat;
  const Interval low{node(lat, "0"), node(lat, "S1,P1")};
  CHECK(lower_set(lat, low) == std::vector<int>{node(lat, "0"), node(lat, "S1")});
  CHECK(labels_of(lat, lower_set(lat, low)) == mask(cat, "S1"));
  const Interval all{lat.bottom(), lat.top()};
  CHECK(upper_set(lat, all) == std::vector<int>{node(lat, "S2"), node(lat, "S1,P1"), lat.top()});
  CHECK(labels_of(lat, upper_set(lat, all)) == mask(cat, "S1,S2"));
  const Interval point{lat.top(), lat.top()};
  CHECK(upper_set(lat, point) == std::vector<int>{lat.top()});
  CHECK(lower_set(lat, point) == std::vector<int>{lat.top()});
  CHECK(labels_of(lat, {lat.top()}) == cat.empty_mask());
  CHECK(interval_nodes(lat, low).size() == 3);
  CHECK(all_intervals(lat).size() == 13);
}

TEST_CASE("interval counts equal comparable pairs") {
  for (const auto& e : corpus()) {
    const auto& cat = testing::catalog(e.name);
    const oracle::DefinitionalTables tables(cat);
    CHECK(all_intervals(testing::lattice(e.name)).size() == oracle::comparable_pairs(tables.torsion_classes()));
  }
}

TEST_CASE("torsion-free classes and the duality") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& cat = testing::catalog(e.name);
    const auto& lat = testing::lattice(e.name);
    const oracle::DefinitionalTables tables(cat);
    const auto d = dual_lattice(cat, lat);
    CHECK(d.torf.nodes == tables.torsion_free_classes());
    CHECK(arrow_pairs(d.torf) == covers(d.torf.nodes));
  }
  const auto& cat = testing::catalog("a2");
  const auto& lat = testing::lattice("a2");
  const auto d = dual_lattice(cat, lat);
  CHECK(d.torf.size() == 5);
  CHECK(d.torf.nodes[d.image[lat.bottom()]] == cat.full_mask());
  CHECK(d.torf.nodes[d.image[lat.top()]] == cat.empty_mask());
  // full -> {S1,P1} labeled S2 becomes {S2} -> 0 with the same label.
  auto a = d.torf.arrow_between(*d.torf.find(mask(cat, "S2")), *d.torf.find(cat.empty_mask()));
  REQUIRE(a);
  CHECK(d.torf.arrows[*a].label == cat.simple_index(1));
}

TEST_CASE("torsion classes of a wide subcategory") {
  const auto& cat = testing::catalog("a2");
  const auto small = tors_of_wide(cat, mask(cat, "P1"));
  CHECK(small.size() == 2);
  REQUIRE(small.arrows.size() == 1);
  CHECK(cat.names[small.arrows[0].label] == "11");
  CHECK(tors_of_wide(cat, cat.empty_mask()).size() == 1);
  const auto whole = tors_of_wide(cat, cat.full_mask());
  CHECK(whole.nodes == testing::lattice("a2").nodes);
  CHECK(whole.arrows == testing::lattice("a2").arrows);
  CHECK_THROWS_AS(tors_of_wide(cat, mask(cat, "S1,P1")), Error);
}

TEST_CASE("node budget") {
  Limits limits;
  limits.node_budget = 10;
  try {
    enumerate_tors(testing::catalog("a3"), limits);
    FAIL("expected LatticeBlowup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LatticeBlowup);
  }
  limits.node_budget = 14;
  CHECK(enumerate_tors(testing::catalog("a3"), limits).size() == 14);
}

TEST_CASE("DOT and JSON exports") {
  const auto& lat = testing::lattice("a2");
  const std::string dot = lattice_to_dot(lat);
  CHECK(dot ==
        "digraph tors {\n"
        "  \"0\";\n"
        "  \"{10}\";\n"
        "  \"{01}\";\n"
        "  \"{10,11}\";\n"
        "  \"{10,01,11}\";\n"
        "  \"{10}\" -> \"0\" [label=\"(1,0)#0\"];\n"
        "  \"{01}\" -> \"0\" [label=\"(0,1)#1\"];\n"
        "  \"{10,11}\" -> \"{10}\" [label=\"(1,1)#2\"];\n"
        "  \"{10,01,11}\" -> \"{01}\" [label=\"(1,0)#0\"];\n"
        "  \"{10,01,11}\" -> \"{10,11}\" [label=\"(0,1)#1\"];\n"
        "}\n");
  const auto j = nlohmann::json::parse(lattice_to_json(lat));
  CHECK(j["nodes"].size() == 5);
  CHECK(j["arrows"].size() == 5);
  CHECK(j["arrows"][2]["label"] == 2);
  for (const auto& e : corpus()) {
    const auto& cat = testing::catalog(e.name);
    const auto again = build_lattice(cat);
    CHECK(lattice_to_dot(again) == lattice_to_dot(testing::lattice(e.name)));
    CHECK(lattice_to_json(again) == lattice_to_json(testing::lattice(e.name)));
  }
}
