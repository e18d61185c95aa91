#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "torslat/subcat.hpp"

using namespace torslat;
using testing::mask;

namespace {

std::vector<Mask> all_subsets(std::size_t n) {
  std::vector<Mask> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Mask m(n);
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1u) m.set(int(i));
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("a2 closure operators") {
  const auto& cat = testing::catalog("a2");
  CHECK(fac(cat, mask(cat, "P1")) == mask(cat, "S1,P1"));
  CHECK(sub_cl(cat, mask(cat, "P1")) == mask(cat, "S2,P1"));
  CHECK(filt(cat, mask(cat, "S1,S2")) == cat.full_mask());
  CHECK(filt(cat, mask(cat, "S1")) == mask(cat, "S1"));
  CHECK(filt_within(cat, mask(cat, "S1,S2"), mask(cat, "S1,S2")) == mask(cat, "S1,S2"));
  CHECK(tors_gen(cat, mask(cat, "P1")) == mask(cat, "S1,P1"));
  CHECK(tors_gen(cat, mask(cat, "S1,S2")) == cat.full_mask());
  CHECK(torf_gen(cat, mask(cat, "P1")) == mask(cat, "S2,P1"));
  CHECK(star(cat, mask(cat, "S2"), mask(cat, "S1")) == cat.full_mask());
  CHECK(star(cat, mask(cat, "S1"), mask(cat, "S2")) == mask(cat, "S1,S2"));
}

TEST_CASE("a2 perpendicular categories") {
  const auto& cat = testing::catalog("a2");
  CHECK(perp_right(cat, mask(cat, "S1")) == mask(cat, "S2,P1"));
  CHECK(perp_right(cat, mask(cat, "S1,P1")) == mask(cat, "S2"));
  CHECK(perp_left(cat, mask(cat, "S2")) == mask(cat, "S1,P1"));
  CHECK(perp_right(cat, cat.empty_mask()) == cat.full_mask());
  CHECK(perp_right(cat, cat.full_mask()) == cat.empty_mask());
  CHECK(TorsionPairWitness{mask(cat, "S1,P1"), mask(cat, "S2")}.holds(cat));
  CHECK_FALSE(TorsionPairWitness{mask(cat, "S1"), mask(cat, "S2")}.holds(cat));
}

TEST_CASE("perpendiculars agree with exhaustive Hom counting") {
  for (const std::string name : {"a3", "a3-alt", "ppa2", "nakayama3"}) {
    const auto& cat = testing::catalog(name);
    for (const auto& c : all_subsets(cat.size())) CHECK(perp_right(cat, c) == oracle::perp_right(cat, c));
  }
}

TEST_CASE("canonical sequences") {
  const auto& cat = testing::catalog("a2");
  const Module& p1 = cat.ind[2];
  const auto none = canonical_sequence(cat, p1, mask(cat, "S1"));
  CHECK(none.torsion_part.is_zero());
  CHECK(is_isomorphic(none.free_quotient, p1));
  const auto split = canonical_sequence(cat, p1, mask(cat, "S2"));
  CHECK(is_isomorphic(split.torsion_part, cat.ind[1]));
  CHECK(is_isomorphic(split.free_quotient, cat.ind[0]));
  CHECK(split.inclusion.is_injective());
}

TEST_CASE("canonical sequence pieces lie in T and its perpendicular") {
  for (const std::string name : {"a3", "ppa2"}) {
    const auto& cat = testing::catalog(name);
    const oracle::DefinitionalTables tables(cat);
    for (const auto& t : tables.torsion_classes()) {
      const Mask f = perp_right(cat, t);
      for (const auto& x : cat.ind) {
        const auto seq = canonical_sequence(cat, x, t);
        CHECK(cat.support(cat.classify(seq.torsion_part)).is_subset_of(t));
        CHECK(cat.support(cat.classify(seq.free_quotient)).is_subset_of(f));
        CHECK(seq.torsion_part.total_dim() + seq.free_quotient.total_dim() == x.total_dim());
      }
    }
  }
}

TEST_CASE("semibricks and wide subcategories of a2") {
  const auto& cat = testing::catalog("a2");
  CHECK(is_semibrick(cat, mask(cat, "S1,S2")));
  CHECK_FALSE(is_semibrick(cat, mask(cat, "S1,P1")));
  CHECK(is_wide(cat, mask(cat, "P1")));
  CHECK(is_wide(cat, cat.full_mask()));
  CHECK(is_wide(cat, cat.empty_mask()));
  CHECK_FALSE(is_wide(cat, mask(cat, "S1,P1")));
  CHECK_FALSE(is_wide(cat, mask(cat, "S1,S2")));
  CHECK(simples_of_wide(cat, cat.full_mask()) == mask(cat, "S1,S2"));
  CHECK_THROWS_AS(simples_of_wide(cat, mask(cat, "S1,P1")), Error);
  const auto serre = serre_list(cat, cat.full_mask());
  REQUIRE(serre.size() == 4);
  CHECK(serre[0] == cat.empty_mask());
  CHECK(serre[1] == mask(cat, "S1"));
  CHECK(serre[2] == mask(cat, "S2"));
  CHECK(serre[3] == cat.full_mask());
  const auto sb = all_semibricks(cat);
  CHECK(sb == std::vector<Mask>{cat.empty_mask(), mask(cat, "S1"), mask(cat, "S2"), mask(cat, "P1"), mask(cat, "S1,S2")});
}

TEST_CASE("torsion classes inside a wide subcategory") {
  const auto& cat = testing::catalog("a2");
  const Mask w = mask(cat, "P1");
  CHECK(fac_within(cat, w, w) == w);
  CHECK(tors_gen_within(cat, w, w) == w);
  CHECK(tors_gen_within(cat, cat.empty_mask(), w) == cat.empty_mask());
  const auto& a3 = testing::catalog("a3");
  const Mask full = a3.full_mask();
  for (const auto& c : all_subsets(a3.size())) CHECK(tors_gen_within(a3, c, full) == tors_gen(a3, c));
}

TEST_CASE("filt of semibricks gives exactly the wide subcategories") {
  for (const auto& e : corpus()) {
    const auto& cat = testing::catalog(e.name);
    const oracle::DefinitionalTables tables(cat);
    std::vector<Mask> from_semibricks;
    for (const auto& sb : all_semibricks(cat)) from_semibricks.push_back(filt(cat, sb));
    std::sort(from_semibricks.begin(), from_semibricks.end(), canonical_less);
    CHECK(from_semibricks == tables.wide_subcategories());
    std::vector<Mask> by_predicate;
    for (const auto& c : all_subsets(cat.size()))
      if (is_wide(cat, c)) by_predicate.push_back(c);
    std::sort(by_predicate.begin(), by_predicate.end(), canonical_less);
    CHECK(by_predicate == from_semibricks);
  }
}

TEST_CASE("closure laws on every subset") {
  for (const std::string name : {"a3", "a3-alt", "ppa2", "nakayama3"}) {
    const auto& cat = testing::catalog(name);
    const oracle::DefinitionalTables tables(cat);
    const auto tors = tables.torsion_classes();
    const auto torf = tables.torsion_free_classes();
    for (const auto& c : all_subsets(cat.size())) {
      CHECK(c.is_subset_of(fac(cat, c)));
      CHECK(fac(cat, fac(cat, c)) == fac(cat, c));
      CHECK(filt(cat, filt(cat, c)) == filt(cat, c));
      const Mask t = tors_gen(cat, c);
      CHECK(is_torsion_class(cat, t));
      CHECK(is_torsion_class(cat, c) == (std::find(tors.begin(), tors.end(), c) != tors.end()));
      CHECK(is_torsion_free_class(cat, c) == (std::find(torf.begin(), torf.end(), c) != torf.end()));
      // Smallest torsion class containing C.
      for (const auto& other : tors)
        if (c.is_subset_of(other)) CHECK(t.is_subset_of(other));
    }
  }
}
