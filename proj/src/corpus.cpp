#include "torslat/corpus.hpp"

namespace torslat {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"a2", R"alg(# A2: 1 -> 2
vertices 2
arrow a 1 2
)alg"},
      {"a2-reversed", R"alg(# A2 with the arrow reversed: 2 -> 1
vertices 2
arrow a 2 1
)alg"},
      {"a3", R"alg(# linear A3: 1 -> 2 -> 3
vertices 3
arrow a 1 2
arrow b 2 3
)alg"},
      {"a3-alt", R"alg(# A3 with a sink in the middle: 1 -> 2 <- 3
vertices 3
arrow a 1 2
arrow b 3 2
)alg"},
      {"a4", R"alg(# linear A4: 1 -> 2 -> 3 -> 4
vertices 4
arrow a 1 2
arrow b 2 3
arrow c 3 4
)alg"},
      {"ss2", R"alg(# two vertices, no arrows
vertices 2
)alg"},
      {"ppa2", R"alg(# preprojective algebra of A2
vertices 2
arrow a 1 2
arrow b 2 1
relation a b
relation b a
)alg"},
      {"nakayama3", R"alg(# cyclic Nakayama algebra with radical square zero
vertices 3
arrow a 1 2
arrow b 2 3
arrow c 3 1
relation a b
relation b c
relation c a
)alg"},
  };
  return entries;
}

std::optional<AlgebraSpec> corpus_spec(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return parse_algebra_spec(e.text, e.name);
  return std::nullopt;
}

}  // namespace torslat
