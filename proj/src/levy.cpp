#include "forcing/levy.hpp"

#include <algorithm>
#include <memory>

#include "forcing/error.hpp"

namespace forcing {

namespace {

const Ordinal kOmega = Ordinal::omega();

// Blocks validated eagerly by levy_lift, and the in-block positions checked.
constexpr std::uint64_t kEagerBlocks = 6;
constexpr std::uint64_t kEagerPositions = 8;
constexpr std::uint64_t kDeepPosition = 50;

}  // namespace

CofinalPresentation CofinalPresentation::from_layout(const Ordinal& alpha, BlockLayout layout) {
  if (layout.component_count() != kOmega) {
    throw Error("bad-cofinal", "cofinal sequences have length w, got " +
                                   layout.component_count().str());
  }
  for (const auto& r : layout.runs()) {
    if (r.length > kOmega) {
      throw Error("bad-cofinal", "block length " + r.length.str() + " exceeds w");
    }
  }
  if (layout.total_length() != alpha) {
    throw Error("bad-cofinal", "blocks sum to " + layout.total_length().str() + ", not " +
                                   alpha.str());
  }
  TransfiniteSeq<Ordinal> stages(kOmega, [layout](const Ordinal& xi) { return layout.offset(xi); });
  return {alpha, std::move(layout), std::move(stages)};
}

CofinalPresentation CofinalPresentation::canonical(const Ordinal& alpha) {
  const auto& t = alpha.terms();
  if (t.size() == 1 && t[0].exponent == 1) {
    const Ordinal blocks(t[0].coefficient - 1);
    return from_layout(alpha, BlockLayout({{blocks, kOmega}, {kOmega, Ordinal(1)}}));
  }
  if (t.size() == 1 && t[0].exponent == 2 && t[0].coefficient == 1) {
    return from_layout(alpha, BlockLayout({{kOmega, kOmega}}));
  }
  throw Error("unsupported-alpha", "no canonical cofinal sequence for " + alpha.str() +
                                       "; supported: w*k and w^2",
              {{"alpha", alpha.str()}});
}

TransfiniteFunctional transfinite_f_seq(const CountableSet& x, const Ordinal& alpha) {
  auto bij = std::make_shared<const OmegaBijection>(alpha);
  TransfiniteFunctional f;
  f.name = "seq";
  f.member = [x, alpha](const CodeTSeq& t, Code v) {
    return t.length() < alpha && x.contains(v) && !t.contains(v);
  };
  f.select = [x, bij](const CodeTSeq& t) { return x.at(bij->forward(t.length())); };
  f.hint = [x, bij](Code v) -> std::optional<Ordinal> {
    const auto idx = x.index_of(v);
    if (!idx) return std::nullopt;
    return bij->backward(*idx);
  };
  return f;
}

namespace {

// Locator trusting f.hint: the code can only sit where select would put it.
CodeTSeq::Locator hint_locator(const TransfiniteFunctional& f, Ordinal offset, Ordinal length,
                               CodeTSeq::Evaluator eval) {
  if (!f.hint) return {};
  return [hint = f.hint, offset, length, eval](Code v) -> std::optional<Ordinal> {
    const auto p = hint(v);
    if (!p || *p < offset) return std::nullopt;
    auto j = interval_type(offset, *p);
    if (j >= length || eval(j) != v) return std::nullopt;
    return j;
  };
}

}  // namespace

BlockWitnessBuilder select_builder() {
  return [](const Ordinal& gamma, const TransfiniteFunctional& f, const CodeTSeq& prefix) {
    if (gamma.is_finite()) {
      std::vector<Code> vals;
      const auto n = gamma.finite_value();
      for (std::uint64_t j = 0; j < n; ++j) {
        vals.push_back(f.select(prefix.then(CodeTSeq::from_vector(vals))));
      }
      return CodeTSeq::from_vector(std::move(vals));
    }
    if (gamma != kOmega) {
      throw Error("bad-block", "blocks longer than w need a custom builder",
                  {{"gamma", gamma.str()}});
    }
    // Not safe to evaluate from several threads at once.
    auto memo = std::make_shared<std::vector<Code>>();
    CodeTSeq::Evaluator eval = [memo, f, prefix](const Ordinal& j) {
      const auto n = j.finite_value();
      while (memo->size() <= n) {
        const Code v = f.select(prefix.then(CodeTSeq::from_vector(*memo)));
        memo->push_back(v);
      }
      return (*memo)[n];
    };
    return CodeTSeq(kOmega, eval, hint_locator(f, prefix.length(), kOmega, eval));
  };
}

namespace {

struct LiftState {
  CofinalPresentation cof;
  TransfiniteFunctional f;
  BlockWitnessBuilder builder;
  std::vector<CodeTSeq> blocks;
  // prefixes[k] = concat of blocks 0..k-1.
  std::vector<CodeTSeq> prefixes{CodeTSeq::from_vector({})};

  void validate(std::uint64_t xi, const CodeTSeq& block) const {
    const auto& prefix = prefixes[xi];
    std::vector<std::uint64_t> positions;
    for (std::uint64_t j = 0; j < kEagerPositions; ++j) positions.push_back(j);
    positions.push_back(kDeepPosition);
    for (auto j : positions) {
      const Ordinal pos(j);
      if (pos >= block.length()) break;
      const Code v = block.at(pos);
      if (!f.member(prefix.then(block.restrict(pos)), v)) {
        const auto beta = prefix.length() + pos;
        throw Error("bad-block-witness",
                    "block " + std::to_string(xi) + " position " + std::to_string(j) +
                        " is not in F of its prefix",
                    {{"xi", xi}, {"position", j}, {"beta", beta.str()}});
      }
    }
  }

  const CodeTSeq& block(std::uint64_t xi) {
    while (blocks.size() <= xi) {
      const std::uint64_t k = blocks.size();
      const auto gamma = cof.gamma(k);
      auto b = builder(gamma, f, prefixes[k]);
      if (b.length() != gamma) {
        throw Error("bad-block", "block " + std::to_string(k) + " has length " + b.length().str() +
                                     ", expected " + gamma.str(),
                    {{"xi", k}, {"length", b.length().str()}, {"gamma", gamma.str()}});
      }
      if (k < kEagerBlocks) validate(k, b);
      prefixes.push_back(prefixes[k].then(b));
      blocks.push_back(std::move(b));
    }
    return blocks[xi];
  }
};

}  // namespace

CodeTSeq LevyRun::prefix(std::uint64_t xi) const {
  auto out = CodeTSeq::from_vector({});
  for (std::uint64_t k = 0; k < xi; ++k) out = out.then(h.at(Ordinal(k)));
  return out;
}

LevyRun levy_lift(const CofinalPresentation& cof, const TransfiniteFunctional& f,
                  const BlockWitnessBuilder& builder) {
  auto state = std::make_shared<LiftState>(LiftState{cof, f, builder, {}});
  for (std::uint64_t k = 0; k < kEagerBlocks; ++k) state->block(k);

  TransfiniteSeq<CodeTSeq> h(kOmega, [state](const Ordinal& xi) {
    return state->block(xi.finite_value());
  });
  auto g = concat(h, cof.layout);
  CodeTSeq::Evaluator eval = [g](const Ordinal& beta) { return g.at(beta); };
  g = g.with_locator(hint_locator(f, Ordinal(), cof.alpha, eval));
  return {cof, std::move(h), std::move(g)};
}

bool check_transfinite_witness(const TransfiniteFunctional& f, const CodeTSeq& g,
                               const std::vector<Ordinal>& samples) {
  for (const auto& beta : samples) {
    if (beta >= g.length()) {
      throw Error("out-of-domain", "sample " + beta.str() + " is not below " + g.length().str(),
                  {{"beta", beta.str()}});
    }
  }
  return std::all_of(samples.begin(), samples.end(), [&](const Ordinal& beta) {
    return f.member(g.restrict(beta), g.at(beta));
  });
}

std::vector<Ordinal> mandated_samples(const CofinalPresentation& cof) {
  std::vector<Ordinal> out{Ordinal(0), Ordinal(5)};
  for (std::uint64_t xi = 0; xi <= 5; ++xi) {
    const auto start = cof.layout.offset(Ordinal(xi));
    out.push_back(start);
    if (cof.gamma(xi) == kOmega) {
      out.push_back(start + Ordinal(7));
      out.push_back(start + Ordinal(kDeepPosition));
    }
  }
  for (std::uint64_t m = 1; m <= 2; ++m) out.push_back(Ordinal::omega_power(1, m));
  std::erase_if(out, [&](const Ordinal& o) { return o >= cof.alpha; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json levy_report(const LevyRun& run, const TransfiniteFunctional& f,
                           const std::vector<Ordinal>& samples, std::uint64_t blocks) {
  nlohmann::json bj = nlohmann::json::array();
  for (std::uint64_t xi = 0; xi < blocks; ++xi) {
    bj.push_back({{"xi", xi}, {"gamma", run.h.at(Ordinal(xi)).length().str()}});
  }
  nlohmann::json sj = nlohmann::json::array();
  for (const auto& beta : samples) {
    sj.push_back({{"beta", beta.str()}, {"ok", check_transfinite_witness(f, run.g, {beta})}});
  }
  return {{"alpha", run.cof.alpha.str()}, {"blocks", std::move(bj)}, {"samples", std::move(sj)}};
}

}  // namespace forcing
