#include "forcing/oracle.hpp"

#include <bit>

#include "forcing/poset.hpp"

namespace forcing {

FinitePoset random_finite_poset(Rng& rng, std::size_t max_size) {
  const auto n = static_cast<std::size_t>(rng.between(1, max_size));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  // Edges only go from higher to lower index, so the closure is antisymmetric.
  // Labels are shuffled through a random permutation to avoid index bias.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.chance(1, 3)) rel.emplace_back(perm[b], perm[a]);
    }
  }
  return FinitePoset::from_relation(std::move(labels), rel);
}

Mask random_mask(const FinitePoset& p, Rng& rng) { return rng.next() & p.all(); }

Mask random_dense_mask(const FinitePoset& p, Rng& rng) {
  Mask d = rng.next() & rng.next() & p.all();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p.down(i) & d) != 0) continue;
    // Minimal elements below i.
    std::vector<std::size_t> minimal;
    for (auto q : mask_elements(p.down(i))) {
      if (p.down(q) == (Mask{1} << q)) minimal.push_back(q);
    }
    d |= Mask{1} << minimal[rng.below(minimal.size())];
  }
  return d;
}

bool dense_on_fragment(const FinitePoset& p, Mask d, std::size_t n) {
  const Mask frag = n >= 64 ? p.all() : ((Mask{1} << n) - 1) & p.all();
  for (auto e : mask_elements(frag)) {
    if ((p.down(e) & d & frag) == 0) return false;
  }
  return true;
}

OracleTrial oracle_trial(Rng& rng, std::size_t max_size, std::size_t max_dense) {
  const auto poset = random_finite_poset(rng, max_size);
  const auto k = static_cast<std::size_t>(rng.below(max_dense + 1));
  std::vector<Mask> dense;
  for (std::size_t j = 0; j < k; ++j) dense.push_back(random_dense_mask(poset, rng));

  OracleTrial t;
  t.size = poset.size();
  t.dense_sets = k;

  const auto pres = poset.presentation();
  const DenseFamily<std::size_t> family = [&](std::size_t j) {
    return finite_dense_set(poset, dense[j], "D" + std::to_string(j));
  };
  const auto start = static_cast<std::size_t>(rng.below(poset.size()));
  const auto run = rasiowa_sikorski(pres, family, start, k);
  const Mask engine_filter = poset.up(run.last());

  const auto brute = brute_force_filter(poset, dense);
  t.brute_found = brute.has_value();
  for (std::size_t j = 0; j < k; ++j) {
    if (poset.meets(engine_filter, dense[j])) t.engine_meets |= Mask{1} << j;
    if (brute && poset.meets(*brute, dense[j])) t.brute_meets |= Mask{1} << j;
  }

  std::vector<Mask> probes = dense;
  for (int r = 0; r < 3; ++r) probes.push_back(random_mask(poset, rng));
  for (Mask d : probes) {
    const auto ds = finite_dense_set(poset, d, "probe");
    for (std::size_t n = 0; n <= poset.size(); ++n) {
      if (is_dense_on_truncation(pres, ds, n).dense != dense_on_fragment(poset, d, n)) {
        t.density_agrees = false;
      }
    }
  }
  return t;
}

OracleSummary oracle_check(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  OracleSummary s;
  s.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    if (oracle_trial(rng).ok()) {
      ++s.agreements;
    } else {
      s.failures.push_back(i);
    }
  }
  return s;
}

}  // namespace forcing
