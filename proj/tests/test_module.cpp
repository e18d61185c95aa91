#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "torslat/module.hpp"

using namespace torslat;

namespace {

// Y_v = g_v X_v, i.e. the same module written in another basis.
Module change_basis(const Module& x, const std::vector<Matrix>& g) {
  const auto& f = x.field();
  std::vector<Matrix> mats;
  for (int a = 0; a < x.algebra().arrow_count(); ++a) {
    const auto& ar = x.algebra().arrow(a);
    mats.push_back(multiply(f, multiply(f, g[ar.target], x.mat(a)), *inverse(f, g[ar.source])));
  }
  return Module(x.algebra_ptr(), x.dims(), mats);
}

Matrix mat(std::vector<std::vector<int>> rows) {
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m(r, c) = std::uint8_t(rows[r][c]);
  return m;
}

int log_p(std::size_t count, int p) {
  int e = 0;
  while (count > 1) {
    count /= std::size_t(p);
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("simple and projective modules") {
  const auto a3 = testing::corpus_algebra("a3");
  CHECK(simple_module(a3, 1).dims() == std::vector<int>{0, 1, 0});
  CHECK(projective_module(a3, 0).dims() == std::vector<int>{1, 1, 1});
  CHECK(projective_module(a3, 2).dims() == std::vector<int>{0, 0, 1});
  const auto nak = testing::corpus_algebra("nakayama3");
  CHECK(projective_module(nak, 0).dims() == std::vector<int>{1, 1, 0});
  CHECK(projective_module(nak, 2).dims() == std::vector<int>{1, 0, 1});
  const auto ppa = testing::corpus_algebra("ppa2");
  const Module p1 = projective_module(ppa, 0);
  CHECK(p1.dims() == std::vector<int>{1, 1});
  CHECK(p1.satisfies_relations());
  CHECK_THROWS(Module(a3, {1, 1}, {}));
  CHECK_THROWS(Module(a3, {1, 1, 1}, {Matrix(1, 1), Matrix(2, 1)}));
}

TEST_CASE("module violating a relation") {
  const auto ppa = testing::corpus_algebra("ppa2");
  Module bad(ppa, {1, 1}, {mat({{1}}), mat({{1}})});
  CHECK_FALSE(bad.satisfies_relations());
}

TEST_CASE("Hom dimensions agree with exhaustive map counting") {
  for (const std::string name : {"a3", "a3-alt", "ppa2", "nakayama3"}) {
    const auto& cat = testing::catalog(name);
    const int p = cat.algebra->field().order();
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const std::size_t count = oracle::hom_count(cat.ind[i], cat.ind[j]);
        CHECK(hom_dim(cat.ind[i], cat.ind[j]) == log_p(count, p));
        for (const auto& f : hom_basis(cat.ind[i], cat.ind[j])) CHECK(f.intertwines());
      }
  }
  const auto a3p3 = testing::algebra("vertices 3\narrow a 1 2\narrow b 2 3\nprime 3\n");
  const Module p1 = projective_module(a3p3, 0);
  const Module x = direct_sum(p1, simple_module(a3p3, 1));
  CHECK(hom_dim(x, x) == log_p(oracle::hom_count(x, x), 3));
}

TEST_CASE("decomposition recovers summands written in a mixed basis") {
  const auto a2 = testing::corpus_algebra("a2");
  const Module s1 = simple_module(a2, 0), s2 = simple_module(a2, 1), p1 = projective_module(a2, 0);
  const Module sum = direct_sum(std::vector<Module>{p1, s2, s1}, a2);
  const Module mixed = change_basis(sum, {mat({{1, 1}, {0, 1}}), mat({{1, 1}, {1, 0}})});
  const auto parts = decompose(mixed);
  REQUIRE(parts.size() == 3);
  int found_p = 0, found_s1 = 0, found_s2 = 0;
  for (const auto& m : parts) {
    CHECK(is_indecomposable(m));
    found_p += is_isomorphic(m, p1);
    found_s1 += is_isomorphic(m, s1);
    found_s2 += is_isomorphic(m, s2);
  }
  CHECK(found_p == 1);
  CHECK(found_s1 == 1);
  CHECK(found_s2 == 1);
  CHECK(is_isomorphic(mixed, sum));
  CHECK_FALSE(is_isomorphic(sum, direct_sum(std::vector<Module>{p1, p1}, a2)));
}

TEST_CASE("decomposition over F_5") {
  const auto a3 = testing::algebra("vertices 3\narrow a 1 2\narrow b 2 3\nprime 5\n");
  const Module x = direct_sum(projective_module(a3, 0), projective_module(a3, 1));
  const Module y = change_basis(x, {Matrix::identity(1), mat({{2, 3}, {1, 3}}), mat({{3, 1}, {4, 4}})});
  CHECK(decompose(y).size() == 2);
  CHECK(is_isomorphic(y, x));
}

TEST_CASE("bricks") {
  const auto trunc = testing::algebra("vertices 1\narrow x 1 1\nrelation x x x\n");
  CHECK(is_brick(simple_module(trunc, 0)));
  const Module p = projective_module(trunc, 0);
  CHECK(is_indecomposable(p));
  CHECK_FALSE(is_brick(p));
  const auto a2 = testing::corpus_algebra("a2");
  CHECK(is_brick(projective_module(a2, 0)));
  CHECK_FALSE(is_brick(direct_sum(simple_module(a2, 0), simple_module(a2, 0))));
}

TEST_CASE("submodule enumeration") {
  const auto a2 = testing::corpus_algebra("a2");
  CHECK(submodules(projective_module(a2, 0)).size() == 3);
  // Every subspace of F_p^2 at a vertex without arrows.
  const Module s11 = direct_sum(simple_module(a2, 0), simple_module(a2, 0));
  CHECK(submodules(s11).size() == 5);
  const auto a2p3 = testing::algebra("vertices 2\narrow a 1 2\nprime 3\n");
  CHECK(submodules(direct_sum(simple_module(a2p3, 1), simple_module(a2p3, 1))).size() == 6);
  Limits tight;
  tight.subspace_budget = 2;
  CHECK_THROWS_AS(submodules(s11, tight), Error);
}

TEST_CASE("kernel, image and cokernel") {
  const auto a2 = testing::corpus_algebra("a2");
  const Module s1 = simple_module(a2, 0), s2 = simple_module(a2, 1), p1 = projective_module(a2, 0);
  const auto basis = hom_basis(p1, s1);
  REQUIRE(basis.size() == 1);
  const auto kic = kernel_image_cokernel(basis[0]);
  CHECK(is_isomorphic(kic.kernel.module, s2));
  CHECK(is_isomorphic(kic.image.module, s1));
  CHECK(kic.cokernel.module.is_zero());
  CHECK(basis[0].is_surjective());
  CHECK_FALSE(basis[0].is_injective());
  CHECK(compose(basis[0], identity_morphism(p1)).comps == basis[0].comps);
}

TEST_CASE("extensions") {
  const auto a2 = testing::corpus_algebra("a2");
  const Module s1 = simple_module(a2, 0), s2 = simple_module(a2, 1), p1 = projective_module(a2, 0);
  CHECK(ext1_dim(s1, s2) == 1);
  CHECK(ext1_dim(s2, s1) == 0);
  CHECK(ext1_dim(p1, s2) == 0);
  const auto middles = all_extensions(s1, s2);
  REQUIRE(middles.size() == 2);
  CHECK(is_isomorphic(middles[0], direct_sum(s2, s1)));
  CHECK(is_isomorphic(middles[1], p1));

  const auto ppa = testing::corpus_algebra("ppa2");
  CHECK(ext1_dim(simple_module(ppa, 0), simple_module(ppa, 1)) == 1);
  CHECK(ext1_dim(simple_module(ppa, 1), simple_module(ppa, 0)) == 1);
  CHECK(ext1_dim(simple_module(ppa, 0), simple_module(ppa, 0)) == 0);

  // Self-extensions of the simple over k[x]/x^2 over F_3: one class up to
  // scalars, realized by the projective.
  const auto dual = testing::algebra("vertices 1\narrow x 1 1\nrelation x x\nprime 3\n");
  const Module s = simple_module(dual, 0);
  CHECK(ext1_dim(s, s) == 1);
  const auto self = all_extensions(s, s);
  REQUIRE(self.size() == 2);
  CHECK(is_isomorphic(self[1], projective_module(dual, 0)));
}

TEST_CASE("span enumeration respects the budget") {
  const auto a2 = testing::corpus_algebra("a2");
  const Module x = direct_sum(std::vector<Module>{simple_module(a2, 0), simple_module(a2, 0), simple_module(a2, 0)}, a2);
  const auto basis = hom_basis(x, x);
  CHECK(basis.size() == 9);
  std::size_t seen = 0;
  for_each_in_span(basis, x, x, 1u << 9, ErrorKind::IsoSearchBlowup, [&](const Morphism&) {
    ++seen;
    return true;
  });
  CHECK(seen == 512);
  CHECK_THROWS_AS(for_each_in_span(basis, x, x, 100, ErrorKind::IsoSearchBlowup, [](const Morphism&) { return true; }),
                  Error);
}
