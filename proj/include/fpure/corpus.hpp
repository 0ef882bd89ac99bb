#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpure/groebner.hpp"

namespace fpure {

struct CorpusEntry {
  std::string name;
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  bool monomial = false;

  Ring ring() const { return make_ring(p, vars); }
  Ideal ideal() const { return Ideal::parse(ring(), generators); }
};

/// Squarefree monomial ideals in at most four variables over p = 2 and p = 3,
/// plus x^2 - w^2(y^2+z^2) over p = 3 and the Fermat cubic over p = 7.
std::vector<CorpusEntry> builtin_corpus();

}  // namespace fpure
