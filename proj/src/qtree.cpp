#include "forcing/qtree.hpp"

#include <algorithm>
#include <unordered_set>

#include "forcing/error.hpp"

namespace forcing {

FiniteSet make_set(std::vector<Code> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

bool is_proper_subset(const FiniteSet& a, const FiniteSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::string qseq_violation(const QSeq& t, std::size_t& stage) {
  const FiniteSet* prev = nullptr;
  for (stage = 0; stage < t.stages.size(); ++stage) {
    const auto& s = t.stages[stage];
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return "stage is not a sorted set";
    }
    // Stages are nested, so the union of the earlier ones is the previous one.
    if (prev && !std::includes(s.begin(), s.end(), prev->begin(), prev->end())) {
      return "stage does not contain the previous stage";
    }
    const std::size_t before = prev ? prev->size() : 0;
    if (s.size() != before + 1) {
      return "stage adds " + std::to_string(s.size() - std::min(s.size(), before)) +
             " new elements";
    }
    prev = &s;
  }
  return {};
}

}  // namespace

void validate_qseq(const QSeq& t) {
  std::size_t stage = 0;
  const auto why = qseq_violation(t, stage);
  if (!why.empty()) {
    throw Error("not-a-qseq", "stage " + std::to_string(stage) + ": " + why, {{"stage", stage}});
  }
}

bool is_qseq(const QSeq& t) {
  std::size_t stage = 0;
  return qseq_violation(t, stage).empty();
}

bool q_extends(const QSeq& longer, const QSeq& shorter) {
  return shorter.stages.size() <= longer.stages.size() &&
         std::equal(shorter.stages.begin(), shorter.stages.end(), longer.stages.begin());
}

QSeq coll_to_q(std::span<const Code> f) {
  const auto checked = InjSeq::from(CodeSeq(f.begin(), f.end()));
  QSeq t;
  t.stages.reserve(f.size());
  FiniteSet range;
  for (Code c : checked.items()) {
    range.insert(std::upper_bound(range.begin(), range.end(), c), c);
    t.stages.push_back(range);
  }
  return t;
}

InjSeq q_to_coll(const QSeq& t) {
  validate_qseq(t);
  CodeSeq f;
  f.reserve(t.stages.size());
  const FiniteSet empty;
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const auto& prev = i == 0 ? empty : t.stages[i - 1];
    std::vector<Code> fresh;
    std::set_difference(t.stages[i].begin(), t.stages[i].end(), prev.begin(), prev.end(),
                        std::back_inserter(fresh));
    f.push_back(fresh.front());
  }
  return InjSeq::from(std::move(f));
}

nlohmann::json qseq_json(const QSeq& t) { return {{"stages", t.stages}}; }

QSeq qseq_from_json(const nlohmann::json& j) {
  QSeq t{j.at("stages").get<std::vector<FiniteSet>>()};
  validate_qseq(t);
  return t;
}

LatticeOracle<FiniteSet> finite_subset_lattice(const CountableSet& x) {
  LatticeOracle<FiniteSet> l;
  l.name = "Fin(" + x.name() + ")";
  l.carrier = [x](const FiniteSet& s) {
    return !s.empty() && std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end() &&
           std::all_of(s.begin(), s.end(), [&](Code c) { return x.contains(c); });
  };
  l.lt = [](const FiniteSet& s, const FiniteSet& t) { return is_proper_subset(t, s); };
  l.meet = [](const FiniteSet& a, const FiniteSet& b) -> std::optional<FiniteSet> {
    FiniteSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
  };
  l.join = [](const FiniteSet& a, const FiniteSet& b) -> std::optional<FiniteSet> {
    FiniteSet i;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
    if (i.empty()) return std::nullopt;
    return i;
  };
  l.uppers = [](const FiniteSet& s) {
    if (s.size() >= 63) {
      throw Error("set-too-large", "uppers of a set with " + std::to_string(s.size()) +
                                       " elements");
    }
    std::vector<FiniteSet> out;
    const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      FiniteSet sub;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (mask >> b & 1) sub.push_back(s[b]);
      }
      out.push_back(std::move(sub));
    }
    return out;
  };
  l.has_lower = [x](const FiniteSet& s) {
    auto out = s;
    const Code fresh = x.first_unused(s);
    out.insert(std::upper_bound(out.begin(), out.end(), fresh), fresh);
    return out;
  };
  // Bit b of n + 1 selects enum(b).
  l.enumerate = [x](std::size_t n) {
    FiniteSet s;
    std::uint64_t bits = static_cast<std::uint64_t>(n) + 1;
    for (std::size_t b = 0; bits != 0; ++b, bits >>= 1) {
      if (bits & 1) s.push_back(x.at(b));
    }
    return make_set(std::move(s));
  };
  return l;
}

std::vector<FiniteSet> q_into_lambda(const CountableSet& x, const QSeq& t) {
  const auto l = finite_subset_lattice(x);
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    if (!l.carrier(t.stages[i])) {
      throw Error("not-in-lambda", "stage " + std::to_string(i) + " is not a nonempty subset of " +
                                       x.name(),
                  {{"stage", i}});
    }
    if (i > 0 && !l.lt(t.stages[i], t.stages[i - 1])) {
      throw Error("not-in-lambda", "stage " + std::to_string(i) + " does not strictly grow",
                  {{"stage", i}});
    }
  }
  return t.stages;
}

}  // namespace forcing
