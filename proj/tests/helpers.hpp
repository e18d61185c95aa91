#pragma once

#include <map>
#include <memory>
#include <string>

#include "torslat/catalog.hpp"
#include "torslat/corpus.hpp"
#include "torslat/lattice.hpp"

namespace testing {

inline std::shared_ptr<const torslat::Algebra> algebra(const std::string& text, const std::string& name = "test") {
  return torslat::build_algebra(torslat::parse_algebra_spec(text, name));
}

inline std::shared_ptr<const torslat::Algebra> corpus_algebra(const std::string& name) {
  return torslat::build_algebra(*torslat::corpus_spec(name));
}

// Catalogs and lattices are cached for the lifetime of the test binary;
// lattices keep a pointer to their catalog.
inline const torslat::Catalog& catalog(const std::string& name) {
  static std::map<std::string, std::unique_ptr<torslat::Catalog>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<torslat::Catalog>(torslat::build_catalog(corpus_algebra(name)));
  return *slot;
}

inline const torslat::TorsLattice& lattice(const std::string& name) {
  static std::map<std::string, std::unique_ptr<torslat::TorsLattice>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<torslat::TorsLattice>(torslat::build_lattice(catalog(name)));
  return *slot;
}

inline torslat::Mask mask(const torslat::Catalog& cat, const std::string& text) { return *cat.parse_mask(text); }

inline int node(const torslat::TorsLattice& lat, const std::string& text) {
  return *lat.find(mask(*lat.cat, text));
}

}  // namespace testing
