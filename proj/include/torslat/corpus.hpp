#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torslat/algebra.hpp"

namespace torslat {

/// The bundled algebras. data/corpus/<name>.alg holds the same text.
struct CorpusEntry {
  std::string name;
  std::string text;
};

const std::vector<CorpusEntry>& corpus();
std::optional<AlgebraSpec> corpus_spec(const std::string& name);

}  // namespace torslat
