#include "forcing/gamma.hpp"

#include <unordered_set>

#include "forcing/error.hpp"

namespace forcing {

GammaReport gamma_check(const GammaPresentation& g, std::size_t depth) {
  GammaReport report;
  report.depth = depth;
  std::unordered_set<Code> seen;
  for (std::size_t lvl = 0; lvl < depth; ++lvl) {
    const auto level = g.level(lvl);
    const std::size_t n = level.elements.size();
    if (level.relation.size() != n) {
      throw Error("malformed-level", "level " + std::to_string(lvl) + " relation has " +
                                         std::to_string(level.relation.size()) + " rows for " +
                                         std::to_string(n) + " elements",
                  {{"level", lvl}});
    }
    for (const auto& row : level.relation) {
      if (row.size() != n) {
        throw Error("malformed-level", "level " + std::to_string(lvl) + " has a ragged row",
                    {{"level", lvl}});
      }
    }
    const auto& r = level.relation;
    auto violation = [&](std::size_t a, std::size_t b, std::size_t c, const char* law) {
      return Error("not-a-preorder",
                   std::string(law) + " fails at level " + std::to_string(lvl),
                   {{"level", lvl},
                    {"law", law},
                    {"triple", {level.elements[a], level.elements[b], level.elements[c]}}});
    };
    for (std::size_t a = 0; a < n; ++a) {
      if (!r[a][a]) throw violation(a, a, a, "reflexivity");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (r[b][c] && !r[a][c]) throw violation(a, b, c, "transitivity");
        }
      }
    }
    report.level_sizes.push_back(n);
    for (Code e : level.elements) {
      if (!seen.insert(e).second) ++report.glued;
    }
  }
  report.union_size = seen.size();
  return report;
}

}  // namespace forcing
