#include "forcing/countable_set.hpp"

#include <unordered_set>
#include <utility>

#include "forcing/error.hpp"
#include "forcing/pairing.hpp"

namespace forcing {

CountableSet::CountableSet(std::string name, Enumerator enumerate, Indexer index_of)
    : name_(std::move(name)),
      enumerate_(std::move(enumerate)),
      index_of_(std::move(index_of)) {}

std::size_t CountableSet::require_index(Code c) const {
  if (auto idx = index_of_(c)) return *idx;
  throw Error("not-in-set", "code " + std::to_string(c) + " is not in " + name_,
              {{"set", name_}, {"code", c}});
}

Code CountableSet::first_unused(std::span<const Code> used) const {
  const std::unordered_set<Code> seen(used.begin(), used.end());
  for (std::size_t n = 0;; ++n) {
    const Code c = enumerate_(n);
    if (!seen.contains(c)) return c;
  }
}

CountableSet naturals() {
  return CountableSet(
      "nat", [](std::size_t n) { return static_cast<Code>(n); },
      [](Code c) -> std::optional<std::size_t> { return static_cast<std::size_t>(c); });
}

CountableSet evens() {
  return CountableSet(
      "evens", [](std::size_t n) { return static_cast<Code>(2 * n); },
      [](Code c) -> std::optional<std::size_t> {
        if (c % 2 != 0) return std::nullopt;
        return static_cast<std::size_t>(c / 2);
      });
}

CountableSet pairs() {
  constexpr Code kLow = 0xffffffffULL;
  return CountableSet(
      "pairs",
      [](std::size_t n) {
        const auto [a, b] = cantor_unpair(n);
        if (a > kLow || b > kLow) {
          throw Error("code-overflow", "pair component exceeds 32 bits");
        }
        return static_cast<Code>((a << 32) | b);
      },
      [](Code c) -> std::optional<std::size_t> {
        return static_cast<std::size_t>(cantor_pair(c >> 32, c & kLow));
      });
}

CountableSet set_by_name(const std::string& name) {
  if (name == "nat") return naturals();
  if (name == "evens") return evens();
  if (name == "pairs") return pairs();
  throw Error("unknown-set", "no built-in set named '" + name + "'", {{"set", name}});
}

std::vector<std::string> builtin_set_names() { return {"nat", "evens", "pairs"}; }

bool is_injective(std::span<const Code> items) {
  std::unordered_set<Code> seen;
  seen.reserve(items.size());
  for (Code c : items) {
    if (!seen.insert(c).second) return false;
  }
  return true;
}

}  // namespace forcing
