#include "fpure/corpus.hpp"

namespace fpure {

std::vector<CorpusEntry> builtin_corpus() {
  struct Shape {
    const char* name;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
  };
  const std::vector<Shape> shapes = {
      {"zero", {"x", "y"}, {}},
      {"line", {"x", "y"}, {"x"}},
      {"node", {"x", "y"}, {"x*y"}},
      {"three-axes", {"x", "y", "z"}, {"x*y", "x*z", "y*z"}},
      {"three-planes", {"x", "y", "z"}, {"x*y*z"}},
      {"plane-and-line", {"x", "y", "z"}, {"x*y", "y*z"}},
      {"two-planes", {"x", "y", "z", "w"}, {"x*y", "z*w"}},
      {"path", {"x", "y", "z", "w"}, {"x*y", "y*z", "z*w"}},
      {"four-cycle", {"x", "y", "z", "w"}, {"x*y", "y*z", "z*w", "w*x"}},
      {"tetrahedron-boundary", {"x", "y", "z", "w"}, {"x*y*z", "x*y*w", "x*z*w", "y*z*w"}},
      {"four-axes", {"x", "y", "z", "w"}, {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"}},
      {"coordinate-hyperplanes", {"x", "y", "z", "w"}, {"x*y*z*w"}},
  };
  std::vector<CorpusEntry> out;
  for (std::uint32_t p : {2u, 3u})
    for (const Shape& s : shapes)
      out.push_back({std::string(s.name) + "/p" + std::to_string(p), p, s.vars, s.gens, true});
  out.push_back({"cone-x2-w2y2-w2z2/p3", 3, {"x", "y", "z", "w"}, {"x^2-w^2*(y^2+z^2)"}, false});
  out.push_back({"fermat-cubic/p7", 7, {"x", "y", "z"}, {"x^3+y^3+z^3"}, false});
  return out;
}

}  // namespace fpure
