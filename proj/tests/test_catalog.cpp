#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "torslat/catalog.hpp"

using namespace torslat;

TEST_CASE("a2 catalog: order, names and aliases") {
  const auto& cat = testing::catalog("a2");
  REQUIRE(cat.size() == 3);
  CHECK(cat.names == std::vector<std::string>{"10", "01", "11"});
  CHECK(cat.dim_vector_string(2) == "(1,1)");
  CHECK(cat.simple_index(0) == 0);
  CHECK(cat.simple_index(1) == 1);
  CHECK(cat.parse_mask("S1,P1") == Mask(3, {0, 2}));
  CHECK(cat.parse_mask("{10, 11}") == Mask(3, {0, 2}));
  CHECK(cat.parse_mask("P2") == Mask(3, {1}));
  CHECK(cat.parse_mask("0") == Mask(3));
  CHECK(cat.parse_mask("\xE2\x88\x85") == Mask(3));
  CHECK(cat.parse_mask("full") == Mask::full(3));
  CHECK_FALSE(cat.parse_mask("S3").has_value());
  CHECK_FALSE(cat.parse_mask("12").has_value());
  CHECK(cat.mask_name(Mask(3, {0, 2})) == "{10,11}");
  CHECK(cat.mask_name(Mask(3)) == "0");
}

TEST_CASE("catalog sizes") {
  // Linear A_n: one indecomposable per interval of vertices.
  CHECK(testing::catalog("a2").size() == 3);
  CHECK(testing::catalog("a2-reversed").size() == 3);
  CHECK(testing::catalog("a3").size() == 6);
  CHECK(testing::catalog("a3-alt").size() == 6);
  CHECK(testing::catalog("a4").size() == 10);
  CHECK(testing::catalog("ss2").size() == 2);
  CHECK(testing::catalog("ppa2").size() == 4);
  CHECK(testing::catalog("nakayama3").size() == 6);
}

TEST_CASE("catalog members are pairwise non-isomorphic indecomposables") {
  for (const auto& e : corpus()) {
    const auto& cat = testing::catalog(e.name);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(is_indecomposable(cat.ind[i]));
      CHECK(cat.ind[i].satisfies_relations());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(is_isomorphic(cat.ind[i], cat.ind[j]));
    }
  }
}

TEST_CASE("disambiguating letters when dimension vectors collide") {
  // Both uniserial modules of length two have dimension vector (1,1).
  const auto alg = testing::algebra("vertices 2\narrow a 1 2\narrow b 2 1\nrelation a b a\nrelation b a b\n");
  const auto cat = build_catalog(alg);
  CHECK(cat.size() == 6);
  CHECK(std::count(cat.names.begin(), cat.names.end(), "11a") == 1);
  CHECK(std::count(cat.names.begin(), cat.names.end(), "11b") == 1);
  CHECK(cat.parse_mask("11a,11b").has_value());
}

TEST_CASE("tables agree with exhaustive Hom counting") {
  for (const std::string name : {"a3", "ppa2", "nakayama3"}) {
    const auto& cat = testing::catalog(name);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(cat.brick[i] == (oracle::hom_count(cat.ind[i], cat.ind[i]) == std::size_t(cat.algebra->field().order())));
      for (std::size_t j = 0; j < cat.size(); ++j)
        CHECK(cat.hom_nonzero[i][j] == (oracle::hom_count(cat.ind[i], cat.ind[j]) > 1));
    }
  }
}

TEST_CASE("dimension bound raises NotClosed") {
  Limits limits;
  limits.dim_bound = 3;
  try {
    build_catalog(testing::corpus_algebra("a4"), limits);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
  limits.dim_bound = 4;
  CHECK(build_catalog(testing::corpus_algebra("a4"), limits).size() == 10);
}

TEST_CASE("JSON round trip is byte-stable") {
  for (const auto& e : corpus()) {
    const auto& cat = testing::catalog(e.name);
    const std::string text = catalog_to_json(cat);
    const Catalog back = catalog_from_json(text);
    CHECK(catalog_to_json(back) == text);
    CHECK(back.names == cat.names);
    CHECK(back.hom_nonzero == cat.hom_nonzero);
    CHECK(catalog_to_json(build_catalog(testing::corpus_algebra(e.name))) == text);
  }
  CHECK_THROWS_AS(catalog_from_json("{}"), Error);
  CHECK_THROWS_AS(catalog_from_json("not json"), Error);
}

TEST_CASE("morphism atlas enumerates full Hom spaces") {
  const auto& cat = testing::catalog("a3");
  const MorphismAtlas atlas(cat);
  std::size_t total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j) {
      const auto& recs = atlas.between(int(i), int(j));
      CHECK(recs.size() == oracle::hom_count(cat.ind[i], cat.ind[j]));
      total += recs.size();
      REQUIRE_FALSE(recs.empty());
      CHECK(recs[0].zero);
    }
  CHECK(atlas.morphism_count() == total);
  // The projection P1 -> S1 of a2 has kernel S2.
  const auto& a2 = testing::catalog("a2");
  const MorphismAtlas a2_atlas(a2);
  const auto& recs = a2_atlas.between(2, 0);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].epi);
  CHECK(recs[1].kernel == Multiset{1});
}
