#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include <json.hpp>

#include "forcing/countable_set.hpp"
#include "forcing/poset.hpp"

namespace forcing {

// A finite sequence of pairwise distinct codes.
class InjSeq {
 public:
  InjSeq() = default;
  // Throws Error("not-injective") with the position of the first repeat.
  static InjSeq from(CodeSeq items);

  const CodeSeq& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  Code operator[](std::size_t i) const { return items_[i]; }

  friend bool operator==(const InjSeq&, const InjSeq&) = default;

 private:
  CodeSeq items_;
};

// g end-extends f.
bool extends(std::span<const Code> g, std::span<const Code> f);

// Conditions of Coll(w, X) are raw code sequences; the carrier rejects
// repeats and codes outside X. Enumeration order: the empty sequence, then
// shells b = 1, 2, ...: the injective sequences over enum indices < b that
// use index b-1, by length and then lexicographically.
PosetPresentation<CodeSeq> coll_poset(const CountableSet& x);

// n-th injective index sequence in the shell enumeration above.
std::vector<std::size_t> coll_index_sequence(std::size_t n);

// The same shell order restricted to a family of index sequences closed
// under restriction, given by admits(prefix, v): may prefix be extended by
// v. Each shell is built once by a pruned depth-first search and memoised;
// copies share the memo, so one enumerator must not be used from several
// threads at once.
class ShellEnumerator {
 public:
  using Admits = std::function<bool(const std::vector<std::size_t>& prefix, std::size_t v)>;

  explicit ShellEnumerator(Admits admits);
  // The family must be infinite, otherwise this does not terminate.
  const std::vector<std::size_t>& at(std::size_t n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// L_i = {f : i <= dom f}. A member is returned unchanged; otherwise
// extend(p) = p ⌢ enum(beta), ..., enum(beta + i - 1) where beta is the
// least bound with rge(p) inside rge(enum | beta).
DenseSet<CodeSeq> level_dense(const CountableSet& x, std::size_t i);
DenseFamily<CodeSeq> level_family(const CountableSet& x);

// Union of the chain, i.e. its last condition.
// Throws Error("not-a-chain") and Error("not-injective").
InjSeq generic_to_injection(const GenericRun<CodeSeq>& run);

// Chain <g|0, g|1, ..., g|n>, meeting L_i at position i.
// Throws Error("not-injective").
GenericRun<CodeSeq> injection_to_generic(const CountableSet& x,
                                         const std::function<Code(std::size_t)>& g,
                                         std::size_t n);

// {"set": name, "items": [codes]}
nlohmann::json injseq_json(const std::string& set, const InjSeq& f);
InjSeq injseq_from_json(const nlohmann::json& j);

}  // namespace forcing
