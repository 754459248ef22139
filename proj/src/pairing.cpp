#include "forcing/pairing.hpp"

#include <cmath>

#include "forcing/error.hpp"

namespace forcing {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t isqrt(u128 v) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const u128 s = static_cast<u128>(x) + y;
  const u128 v = s * (s + 1) / 2 + y;
  if (v > UINT64_MAX) {
    throw Error("code-overflow", "cantor pairing exceeds 64 bits",
                {{"x", x}, {"y", y}});
  }
  return static_cast<std::uint64_t>(v);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  const std::uint64_t w = (isqrt(static_cast<u128>(n) * 8 + 1) - 1) / 2;
  const u128 t = static_cast<u128>(w) * (w + 1) / 2;
  const auto y = static_cast<std::uint64_t>(n - t);
  return {w - y, y};
}

}  // namespace forcing
