#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace forcing {

using Code = std::uint64_t;
using CodeSeq = std::vector<Code>;

// An infinite set X presented by an injective enumeration N -> codes together
// with its inverse. Membership in X is "index_of(c) has a value".
class CountableSet {
 public:
  using Enumerator = std::function<Code(std::size_t)>;
  using Indexer = std::function<std::optional<std::size_t>(Code)>;

  CountableSet(std::string name, Enumerator enumerate, Indexer index_of);

  const std::string& name() const noexcept { return name_; }
  Code at(std::size_t n) const { return enumerate_(n); }
  std::optional<std::size_t> index_of(Code c) const { return index_of_(c); }
  bool contains(Code c) const { return index_of_(c).has_value(); }

  // Index of a code known to be in X; throws Error("not-in-set") otherwise.
  std::size_t require_index(Code c) const;

  // First code, in enumeration order, that does not occur in `used`.
  Code first_unused(std::span<const Code> used) const;

 private:
  std::string name_;
  Enumerator enumerate_;
  Indexer index_of_;
};

// "nat": identity enumeration of the naturals.
CountableSet naturals();
// "evens": n -> 2n.
CountableSet evens();
// "pairs": N x N enumerated along Cantor diagonals; the code of (a, b) is
// (a << 32) | b, so codes and indices differ.
CountableSet pairs();

// Built-in presentations by name; throws Error("unknown-set").
CountableSet set_by_name(const std::string& name);
std::vector<std::string> builtin_set_names();

bool is_injective(std::span<const Code> items);

}  // namespace forcing
