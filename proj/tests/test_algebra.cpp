#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "torslat/algebra.hpp"

using namespace torslat;

namespace {

ErrorKind build_error(const std::string& text, std::size_t path_bound = Limits{}.path_bound) {
  try {
    build_algebra(parse_algebra_spec(text, "x"), path_bound);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadSpec;
}

}  // namespace

TEST_CASE("parse the line format") {
  const auto spec = parse_algebra_spec("# comment\nvertices 2\narrow a 1 2  # trailing\nprime 3\n", "a2");
  CHECK(spec.name == "a2");
  CHECK(spec.quiver.vertex_count == 2);
  REQUIRE(spec.quiver.arrows.size() == 1);
  CHECK(spec.quiver.arrows[0].source == 0);
  CHECK(spec.quiver.arrows[0].target == 1);
  CHECK(spec.prime == 3);
  CHECK(parse_algebra_spec(format_algebra_spec(spec), "a2").quiver == spec.quiver);
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(parse_algebra_spec("vertices two\n"), Error);
  CHECK_THROWS_AS(parse_algebra_spec("vertices 2\nwibble 3\n"), Error);
  CHECK(build_error("vertices 2\narrow a 1 3\n") == ErrorKind::BadSpec);
  CHECK(build_error("vertices 2\narrow a 1 2\narrow a 2 1\n") == ErrorKind::BadSpec);
  CHECK(build_error("vertices 1\nprime 11\n") == ErrorKind::BadSpec);
  CHECK(build_error("vertices 1\nprime 4\n") == ErrorKind::BadSpec);
  CHECK(build_error("vertices 2\narrow a 1 2\nrelation a\n") == ErrorKind::BadRelation);
  CHECK(build_error("vertices 3\narrow a 1 2\narrow b 2 3\nrelation b a\n") == ErrorKind::BadRelation);
  CHECK(build_error("vertices 2\narrow a 1 2\nrelation a z\n") == ErrorKind::BadRelation);
}

TEST_CASE("infinite-dimensional algebras hit the path bound") {
  CHECK(build_error("vertices 1\narrow x 1 1\n") == ErrorKind::PathBlowup);
  CHECK(build_error("vertices 2\narrow a 1 2\narrow b 2 1\n") == ErrorKind::PathBlowup);
  CHECK(build_error("vertices 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\n", 5) == ErrorKind::PathBlowup);
}

TEST_CASE("path bases of the corpus") {
  // Linear A_n has n(n+1)/2 paths; the cyclic radical-square-zero algebra
  // keeps only vertices and arrows; ppa2 is e1, e2, a, b.
  CHECK(testing::corpus_algebra("a2")->dimension() == 3);
  CHECK(testing::corpus_algebra("a3")->dimension() == 6);
  CHECK(testing::corpus_algebra("a4")->dimension() == 10);
  CHECK(testing::corpus_algebra("a3-alt")->dimension() == 5);
  CHECK(testing::corpus_algebra("ss2")->dimension() == 2);
  CHECK(testing::corpus_algebra("ppa2")->dimension() == 4);
  CHECK(testing::corpus_algebra("nakayama3")->dimension() == 6);
  const auto trunc = testing::algebra("vertices 1\narrow x 1 1\nrelation x x x\n");
  CHECK(trunc->dimension() == 3);
}

TEST_CASE("basis order: trivial paths, then by length, then by arrow names") {
  const auto alg = testing::corpus_algebra("a3");
  std::vector<std::string> names;
  for (const auto& p : alg->path_basis()) names.push_back(alg->path_name(p));
  CHECK(names.size() == 6);
  CHECK(alg->path_basis()[0].length() == 0);
  CHECK(alg->path_basis()[2].length() == 0);
  CHECK(alg->path_basis()[3].length() == 1);
  CHECK(alg->path_basis()[5].length() == 2);
}

TEST_CASE("corpus texts match the data files") {
  for (const auto& e : corpus()) {
    const auto from_file = load_algebra_spec(std::string(TORSLAT_DATA_DIR) + "/corpus/" + e.name + ".alg");
    const auto embedded = parse_algebra_spec(e.text, e.name);
    CHECK(from_file.name == e.name);
    CHECK(from_file.quiver == embedded.quiver);
    CHECK(from_file.relations == embedded.relations);
    CHECK(from_file.prime == embedded.prime);
  }
  CHECK(corpus().size() == 8);
  CHECK_FALSE(corpus_spec("nope").has_value());
}
