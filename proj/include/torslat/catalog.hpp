#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torslat/mask.hpp"
#include "torslat/module.hpp"

namespace torslat {

/// Sorted list of catalog indices with repetition: the iso classes of the
/// indecomposable summands of some module.
using Multiset = std::vector<int>;

struct SubfactorPair {
  Multiset sub;
  Multiset quotient;

  friend auto operator<=>(const SubfactorPair&, const SubfactorPair&) = default;
  friend bool operator==(const SubfactorPair&, const SubfactorPair&) = default;
};

/// Supports (as masks) of a nontrivial subfactor pair; used by the closure
/// operators.
struct SubfactorSupport {
  Mask sub;
  Mask quotient;
};

/// All indecomposables of a representation-finite algebra up to iso, with
/// the Hom-vanishing, quotient and subfactor tables.
class Catalog {
 public:
  std::shared_ptr<const Algebra> algebra;
  int dim_bound = 0;
  std::vector<Module> ind;
  std::vector<std::string> names;

  // Filled by build_tables.
  std::vector<std::vector<bool>> hom_nonzero;  // [i][j]: Hom(ind[i], ind[j]) != 0
  std::vector<bool> brick;
  std::vector<std::vector<Multiset>> quotients;
  std::vector<std::vector<SubfactorPair>> subfactors;

  // Derived from the tables (not serialized).
  std::vector<Mask> hom_out;  // j with Hom(i, j) != 0
  std::vector<Mask> hom_in;   // j with Hom(j, i) != 0
  std::vector<Mask> quotient_support;
  std::vector<Mask> sub_support;
  std::vector<std::vector<SubfactorSupport>> proper_subfactors;  // both parts nonempty

  std::size_t size() const { return ind.size(); }
  Mask empty_mask() const { return Mask(size()); }
  Mask full_mask() const { return Mask::full(size()); }
  bool has_tables() const { return !hom_nonzero.empty() || ind.empty(); }

  std::optional<int> find(const Module& m, const Limits& limits = {}) const;
  /// Catalog indices of the summands; throws NotClosed if one is missing.
  Multiset classify(const Module& m, const Limits& limits = {}) const;
  Mask support(const Multiset& ms) const;

  int simple_index(int vertex) const;
  Mask simples() const;

  std::string dim_vector_string(int i) const;  // e.g. "(1,1)"
  std::string mask_name(const Mask& m) const;  // e.g. "{10,11}", "0" when empty
  /// Parses comma-separated names ("10,11", "S1,P1", "0", "full").
  std::optional<Mask> parse_mask(const std::string& text) const;

  void rebuild_derived();
};

/// Fixpoint closure from the simples under middle terms of extensions
/// between catalog members and under submodules/quotients of members.
/// Throws NotClosed when an indecomposable exceeds the dimension bound.
Catalog enumerate_indecomposables(std::shared_ptr<const Algebra> algebra, const Limits& limits = {});

void build_tables(Catalog& cat, const Limits& limits = {});

/// enumerate_indecomposables followed by build_tables.
Catalog build_catalog(std::shared_ptr<const Algebra> algebra, const Limits& limits = {});

/// Byte-stable JSON document; catalog_from_json(catalog_to_json(c)) re-exports
/// to identical bytes.
std::string catalog_to_json(const Catalog& cat);
Catalog catalog_from_json(const std::string& text, const Limits& limits = {});

/// Kernel, image and cokernel summands of every morphism between catalog
/// members, enumerated over full Hom spaces.
struct MorphismRecord {
  bool zero = false;
  bool epi = false;
  bool mono = false;
  Multiset kernel;
  Multiset image;
  Multiset cokernel;
};

class MorphismAtlas {
 public:
  MorphismAtlas(const Catalog& cat, const Limits& limits = {});

  const std::vector<MorphismRecord>& between(int source, int target) const {
    return records_[std::size_t(source) * n_ + std::size_t(target)];
  }
  std::size_t morphism_count() const;

 private:
  std::size_t n_;
  std::vector<std::vector<MorphismRecord>> records_;
};

}  // namespace torslat
