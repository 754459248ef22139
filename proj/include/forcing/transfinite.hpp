#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "forcing/error.hpp"
#include "forcing/ordinal.hpp"

namespace forcing {

// A sequence indexed by the ordinals below `length()`, given by a pure
// evaluator. An optional locator answers "least position holding this item"
// which is what makes range membership decidable for infinite sequences.
template <class Item>
class TransfiniteSeq {
 public:
  using Evaluator = std::function<Item(const Ordinal&)>;
  using Locator = std::function<std::optional<Ordinal>(const Item&)>;

  TransfiniteSeq() : TransfiniteSeq(Ordinal(), [](const Ordinal&) { return Item{}; }) {}
  TransfiniteSeq(Ordinal length, Evaluator eval, Locator locate = {})
      : length_(std::move(length)),
        eval_(std::make_shared<const Evaluator>(std::move(eval))),
        locate_(locate ? std::make_shared<const Locator>(std::move(locate)) : nullptr) {}

  static TransfiniteSeq from_vector(std::vector<Item> items) {
    auto data = std::make_shared<const std::vector<Item>>(std::move(items));
    return TransfiniteSeq(Ordinal(data->size()), [data](const Ordinal& o) {
      return (*data)[o.finite_value()];
    });
  }

  const Ordinal& length() const noexcept { return length_; }
  bool has_locator() const noexcept { return static_cast<bool>(locate_); }

  Item at(const Ordinal& o) const {
    if (o >= length_) {
      throw Error("out-of-domain", o.str() + " is not below length " + length_.str(),
                  {{"position", o.str()}, {"length", length_.str()}});
    }
    return (*eval_)(o);
  }
  Item operator()(const Ordinal& o) const { return at(o); }

  // Finite-length sequences are scanned; infinite ones need a locator.
  std::optional<Ordinal> position_of(const Item& item) const {
    if (locate_) return (*locate_)(item);
    if (!length_.is_finite()) {
      throw Error("range-undecidable",
                  "range membership needs a locator on a sequence of length " + length_.str());
    }
    const auto n = length_.finite_value();
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((*eval_)(Ordinal(i)) == item) return Ordinal(i);
    }
    return std::nullopt;
  }
  bool contains(const Item& item) const { return position_of(item).has_value(); }

  // g|beta for beta <= length.
  TransfiniteSeq restrict(const Ordinal& beta) const {
    if (beta > length_) {
      throw Error("out-of-domain", "restriction to " + beta.str() + " exceeds length " +
                                       length_.str());
    }
    Locator loc;
    if (locate_) {
      loc = [inner = locate_, beta](const Item& item) -> std::optional<Ordinal> {
        auto p = (*inner)(item);
        if (p && *p < beta) return p;
        return std::nullopt;
      };
    }
    return TransfiniteSeq(beta, eval_, std::move(loc));
  }

  // this ⌢ tail.
  TransfiniteSeq then(const TransfiniteSeq& tail) const {
    const Ordinal head_len = length_;
    auto head_eval = eval_;
    auto tail_eval = tail.eval_;
    Evaluator eval = [head_len, head_eval, tail_eval](const Ordinal& o) {
      if (o < head_len) return (*head_eval)(o);
      return (*tail_eval)(interval_type(head_len, o));
    };
    Locator loc;
    const bool decidable = (locate_ || length_.is_finite()) &&
                           (tail.locate_ || tail.length_.is_finite());
    if (decidable) {
      loc = [head = *this, tail, head_len](const Item& item) -> std::optional<Ordinal> {
        if (auto p = head.position_of(item)) return p;
        if (auto p = tail.position_of(item)) return head_len + *p;
        return std::nullopt;
      };
    }
    return TransfiniteSeq(length_ + tail.length_, std::move(eval), std::move(loc));
  }

  TransfiniteSeq with_locator(Locator loc) const {
    return TransfiniteSeq(length_, eval_, std::move(loc));
  }

  // Values at the finite positions 0..n-1 (n clipped to the length).
  std::vector<Item> prefix(std::size_t n) const {
    std::vector<Item> out;
    for (std::size_t i = 0; i < n && Ordinal(i) < length_; ++i) out.push_back((*eval_)(Ordinal(i)));
    return out;
  }

 private:
  // Shared so that copies and nested concatenations stay cheap.
  TransfiniteSeq(Ordinal length, std::shared_ptr<const Evaluator> eval, Locator locate)
      : length_(std::move(length)),
        eval_(std::move(eval)),
        locate_(locate ? std::make_shared<const Locator>(std::move(locate)) : nullptr) {}

  Ordinal length_;
  std::shared_ptr<const Evaluator> eval_;
  std::shared_ptr<const Locator> locate_;
};

// `count` consecutive components, each of order type `length`.
struct LengthRun {
  Ordinal count;
  Ordinal length;
};

// Component-length profile <tau_i : i < tau> of a sequence of sequences as a
// finite list of constant runs; this is what makes the offsets
// sigma_0 = 0, sigma_{i+1} = sigma_i + tau_i, sigma_lambda = sup computable.
class BlockLayout {
 public:
  // Throws Error("empty-component") for a zero length and drops zero counts.
  explicit BlockLayout(std::vector<LengthRun> runs);

  const std::vector<LengthRun>& runs() const noexcept { return runs_; }
  // tau, the number of components.
  const Ordinal& component_count() const noexcept { return count_; }
  // tau_i.
  Ordinal component_length(const Ordinal& i) const;
  // sigma_i for i <= tau.
  Ordinal offset(const Ordinal& i) const;
  // Length of the concatenation: sup {sigma_i : i < tau*}.
  const Ordinal& total_length() const noexcept { return total_; }

  struct Position {
    Ordinal component;
    Ordinal offset;
  };
  // The (i, j) with beta = sigma_i + j, j < tau_i.
  Position locate(const Ordinal& beta) const;

  // {sigma_i : i < tau*} with tau* = tau + 1 for successor tau, tau otherwise.
  std::vector<OrdinalProgression> offsets() const;

  // Layout of the first n components (n finite, n <= tau).
  BlockLayout take(std::uint64_t n) const;

  // Layout read off the component lengths of a finite list.
  static BlockLayout from_lengths(const std::vector<Ordinal>& lengths);

 private:
  std::vector<LengthRun> runs_;
  std::vector<Ordinal> first_component_;
  std::vector<Ordinal> first_offset_;
  Ordinal count_;
  Ordinal total_;
};

// Concatenation t^c with t^c(sigma_i + j) = t_i(j). Component lengths are
// checked against the layout as components are evaluated.
// Throws Error("bad-layout") on a mismatch.
template <class Item>
TransfiniteSeq<Item> concat(const TransfiniteSeq<TransfiniteSeq<Item>>& t,
                            const BlockLayout& layout) {
  if (t.length() != layout.component_count()) {
    throw Error("bad-layout", "sequence has " + t.length().str() + " components, layout " +
                                  layout.component_count().str());
  }
  return TransfiniteSeq<Item>(layout.total_length(), [t, layout](const Ordinal& beta) {
    const auto pos = layout.locate(beta);
    const auto component = t.at(pos.component);
    const auto expected = layout.component_length(pos.component);
    if (component.length() != expected) {
      throw Error("bad-layout", "component " + pos.component.str() + " has length " +
                                    component.length().str() + ", layout says " + expected.str(),
                  {{"component", pos.component.str()}});
    }
    return component.at(pos.offset);
  });
}

// Concatenation of finitely many components.
// Throws Error("empty-component") if some component has length 0.
template <class Item>
TransfiniteSeq<Item> concat(const std::vector<TransfiniteSeq<Item>>& parts) {
  std::vector<Ordinal> lengths;
  lengths.reserve(parts.size());
  for (const auto& p : parts) lengths.push_back(p.length());
  const auto layout = BlockLayout::from_lengths(lengths);

  auto shared = std::make_shared<const std::vector<TransfiniteSeq<Item>>>(parts);
  TransfiniteSeq<TransfiniteSeq<Item>> outer(Ordinal(parts.size()), [shared](const Ordinal& i) {
    return (*shared)[i.finite_value()];
  });
  return concat(outer, layout);
}

}  // namespace forcing
