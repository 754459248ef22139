#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcing/countable_set.hpp"
#include "forcing/ordinal.hpp"
#include "forcing/transfinite.hpp"

namespace forcing {

// An increasing continuous w-sequence <alpha_xi> with alpha_0 = 0 and
// supremum alpha, stored as the block layout gamma_xi = otp[alpha_xi, alpha_xi+1).
struct CofinalPresentation {
  Ordinal alpha;
  BlockLayout layout;
  TransfiniteSeq<Ordinal> stages;

  // Requires w components of length at most w summing to alpha.
  // Throws Error("bad-cofinal").
  static CofinalPresentation from_layout(const Ordinal& alpha, BlockLayout layout);
  // w*k: k-1 blocks of length w, then singletons. w^2: blocks of length w.
  // Throws Error("unsupported-alpha") for anything else.
  static CofinalPresentation canonical(const Ordinal& alpha);

  Ordinal gamma(std::uint64_t xi) const { return layout.component_length(Ordinal(xi)); }
};

using CodeTSeq = TransfiniteSeq<Code>;

// F on transfinite sequences. `hint`, when present, names the only position
// at which select would ever place a code; sequences built from select use
// it as their locator.
struct TransfiniteFunctional {
  std::string name;
  std::function<bool(const CodeTSeq& t, Code x)> member;
  std::function<Code(const CodeTSeq& t)> select;
  std::function<std::optional<Ordinal>(Code)> hint;
};

// F(t) = X minus rge(t) for sequences of length < alpha; select places
// enum(n) at the position the omega bijection of alpha sends to n.
TransfiniteFunctional transfinite_f_seq(const CountableSet& x, const Ordinal& alpha);

// Builds one block of length gamma (finite or w) after `prefix`.
using BlockWitnessBuilder = std::function<CodeTSeq(const Ordinal& gamma, const TransfiniteFunctional& f,
                                                   const CodeTSeq& prefix)>;

// s(j) = select(prefix ⌢ s|j), evaluated lazily and memoised.
BlockWitnessBuilder select_builder();

struct LevyRun {
  CofinalPresentation cof;
  // h(xi) is block xi.
  TransfiniteSeq<CodeTSeq> h;
  // g = concat(h), of length alpha.
  CodeTSeq g;

  // concat(h | xi), with a locator when f has a hint.
  CodeTSeq prefix(std::uint64_t xi) const;
};

// h(xi) = builder(gamma_xi, f, concat(h | xi)). The first blocks are
// validated eagerly; later blocks are length-checked when evaluated.
// Throws Error("bad-block") on a length mismatch and
// Error("bad-block-witness") with the position of a non-member.
LevyRun levy_lift(const CofinalPresentation& cof, const TransfiniteFunctional& f,
                  const BlockWitnessBuilder& builder = select_builder());

// g(beta) in F(g | beta) at every sample. Throws Error("out-of-domain").
bool check_transfinite_witness(const TransfiniteFunctional& f, const CodeTSeq& g,
                               const std::vector<Ordinal>& samples);

// 0, 5, block boundaries sigma_xi for xi <= 5, sigma_xi + 7 and + 50 inside
// the w-blocks among them, and the limits w*m < alpha for m = 1, 2. Sorted.
std::vector<Ordinal> mandated_samples(const CofinalPresentation& cof);

// {"alpha": ..., "blocks": [{"xi", "gamma"}], "samples": [{"beta", "ok"}]}
nlohmann::json levy_report(const LevyRun& run, const TransfiniteFunctional& f,
                           const std::vector<Ordinal>& samples, std::uint64_t blocks);

}  // namespace forcing
