#pragma once

#include <cstdint>
#include <utility>

namespace forcing {

// Cantor's diagonal pairing: (x, y) -> (x+y)(x+y+1)/2 + y.
// Throws Error("code-overflow") when the result does not fit in 64 bits.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

}  // namespace forcing
