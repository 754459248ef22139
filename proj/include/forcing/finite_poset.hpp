#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcing/poset.hpp"

namespace forcing {

// Subsets of a finite poset as bitmasks over element indices.
using Mask = std::uint64_t;

// A finite poset (at most 64 elements) stored as up/down bitmasks of the
// reflexive-transitive closure of the given relation.
class FinitePoset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  // `leq_pairs` holds (q, p) with q <= p. Throws Error("not-a-poset") when the
  // closure is not antisymmetric and Error("poset-too-large").
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

  // Text format: one "elem p" or "p <= q" per line; '#' starts a comment.
  // Elements named only in relation lines are declared implicitly.
  // Throws Error("bad-poset-syntax").
  static FinitePoset parse(std::string_view text);
  std::string str() const;

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t q, std::size_t p) const { return (up_[q] >> p) & 1U; }
  Mask up(std::size_t i) const { return up_[i]; }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask all() const noexcept { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  Mask up_closure(Mask m) const;
  // Nonempty, upward closed, downward directed.
  bool is_filter(Mask m) const;
  bool is_dense(Mask m) const;
  bool meets(Mask filter, Mask d) const { return (filter & d) != 0; }

  PosetPresentation<std::size_t> presentation(std::string name = "finite") const;

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// Exhaustive search over all subsets for a filter meeting every listed set.
// Throws Error("oracle-limit") above 20 elements.
std::optional<Mask> brute_force_filter(const FinitePoset& p, std::span<const Mask> dense);

// Every filter of p, in increasing mask order (same size limit).
std::vector<Mask> all_filters(const FinitePoset& p);

// Dense set whose extender picks the least-index member below p. For a set
// that is not dense the extender has no honest choice and returns p itself.
DenseSet<std::size_t> finite_dense_set(const FinitePoset& p, Mask members, std::string name);

std::vector<std::size_t> mask_elements(Mask m);
Mask elements_mask(std::span<const std::size_t> elems);

}  // namespace forcing
