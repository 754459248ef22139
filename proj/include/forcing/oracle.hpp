#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "forcing/finite_poset.hpp"
#include "forcing/random.hpp"

namespace forcing {

// Random poset on 1..max_size elements: a random DAG on indices, closed.
FinitePoset random_finite_poset(Rng& rng, std::size_t max_size);
// Random subset patched to be dense: each element without a member below it
// gains one of its minimal lower bounds.
Mask random_dense_mask(const FinitePoset& p, Rng& rng);
Mask random_mask(const FinitePoset& p, Rng& rng);

// Density of d on the fragment of the first n elements, straight from the
// definition on bitmasks.
bool dense_on_fragment(const FinitePoset& p, Mask d, std::size_t n);

struct OracleTrial {
  std::size_t size = 0;
  std::size_t dense_sets = 0;
  // Bit j set when the filter meets dense set j.
  Mask engine_meets = 0;
  Mask brute_meets = 0;
  bool brute_found = false;
  bool density_agrees = true;

  bool ok() const { return brute_found && engine_meets == brute_meets && density_agrees; }
};

// One random poset with up to three honest dense sets: the engine's filter
// against brute_force_filter, and is_dense_on_truncation against
// dense_on_fragment for every fragment and a few random sets.
OracleTrial oracle_trial(Rng& rng, std::size_t max_size = 7, std::size_t max_dense = 3);

struct OracleSummary {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::vector<std::size_t> failures;

  bool ok() const { return agreements == trials; }
};

OracleSummary oracle_check(std::uint64_t seed, std::size_t trials);

}  // namespace forcing
