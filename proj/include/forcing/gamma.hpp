#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "forcing/countable_set.hpp"

namespace forcing {

// relation[a][b] means elements[a] <= elements[b].
struct FinitePreorder {
  std::vector<Code> elements;
  std::vector<std::vector<bool>> relation;
};

// A countable union of finite pre-orders. Levels are meant to be disjoint;
// a shared code between levels is identified (glued) into one element.
struct GammaPresentation {
  std::string name;
  std::function<FinitePreorder(std::size_t)> level;
};

struct GammaReport {
  std::size_t depth = 0;
  std::vector<std::size_t> level_sizes;
  std::size_t union_size = 0;
  std::size_t glued = 0;
};

// Checks levels 0..depth-1 are pre-orders. Throws Error("not-a-preorder")
// with the witness triple (a, a, a for reflexivity) and
// Error("malformed-level") for a relation table of the wrong shape.
GammaReport gamma_check(const GammaPresentation& g, std::size_t depth);

}  // namespace forcing
