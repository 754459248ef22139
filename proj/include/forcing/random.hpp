#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <unordered_set>

#include "forcing/countable_set.hpp"
#include "forcing/error.hpp"

namespace forcing {

// mt19937_64 with a portable uniform draw, so seeded runs are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Uniform on [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// `len` distinct codes drawn from the first `alphabet` elements of x.
inline CodeSeq random_injective(Rng& rng, const CountableSet& x, std::size_t len,
                                std::size_t alphabet) {
  if (len > alphabet) {
    throw Error("bad-length", "cannot draw " + std::to_string(len) + " distinct values from " +
                                  std::to_string(alphabet),
                {{"length", len}, {"alphabet", alphabet}});
  }
  CodeSeq out;
  std::unordered_set<std::size_t> used;
  while (out.size() < len) {
    const auto idx = static_cast<std::size_t>(rng.below(alphabet));
    if (used.insert(idx).second) out.push_back(x.at(idx));
  }
  return out;
}

}  // namespace forcing
