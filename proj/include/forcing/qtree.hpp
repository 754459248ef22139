#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcing/collapse.hpp"
#include "forcing/countable_set.hpp"
#include "forcing/poset.hpp"

namespace forcing {

// Sorted, duplicate-free codes.
using FiniteSet = std::vector<Code>;

FiniteSet make_set(std::vector<Code> codes);
bool is_proper_subset(const FiniteSet& a, const FiniteSet& b);

// A condition of Q^X_w: stages t(0) ⊆ t(1) ⊆ ... where every stage adds
// exactly one new element.
struct QSeq {
  std::vector<FiniteSet> stages;

  friend bool operator==(const QSeq&, const QSeq&) = default;
};

// Throws Error("not-a-qseq") with the first offending stage.
void validate_qseq(const QSeq& t);
bool is_qseq(const QSeq& t);
// t' end-extends t.
bool q_extends(const QSeq& longer, const QSeq& shorter);

// t^f(i) = rge(f | i+1). Throws Error("not-injective").
QSeq coll_to_q(std::span<const Code> f);
// f^t(i) = the unique element of t(i) minus the earlier stages.
InjSeq q_to_coll(const QSeq& t);

// {"stages": [[codes]]}
nlohmann::json qseq_json(const QSeq& t);
QSeq qseq_from_json(const nlohmann::json& j);

// A strict lattice with the finite predecessor property, queried through
// oracles. lt(a, b) reads "a is strictly below b"; uppers(a) lists every b
// with lt(a, b). meet and join may be partial.
template <class Elem>
struct LatticeOracle {
  std::string name;
  std::function<bool(const Elem&)> carrier;
  std::function<bool(const Elem&, const Elem&)> lt;
  std::function<std::optional<Elem>(const Elem&, const Elem&)> meet;
  std::function<std::optional<Elem>(const Elem&, const Elem&)> join;
  std::function<std::vector<Elem>(const Elem&)> uppers;
  std::function<Elem(const Elem&)> has_lower;
  std::function<Elem(std::size_t)> enumerate;
};

// Strictly decreasing finite sequences from the lattice, ordered by
// end-extension, enumerated in the shell order on index sequences.
template <class Elem>
PosetPresentation<std::vector<Elem>> lambda_tree(const LatticeOracle<Elem>& l) {
  using Node = std::vector<Elem>;
  PosetPresentation<Node> p;
  p.name = "Lambda(" + l.name + ")";
  auto carrier = [l](const Node& s) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!l.carrier(s[j])) return false;
      if (j > 0 && !l.lt(s[j], s[j - 1])) return false;
    }
    return true;
  };
  p.carrier = carrier;
  p.leq = [](const Node& g, const Node& f) {
    return f.size() <= g.size() && std::equal(f.begin(), f.end(), g.begin());
  };
  ShellEnumerator shells([l](const std::vector<std::size_t>& prefix, std::size_t v) {
    const Elem e = l.enumerate(v);
    return l.carrier(e) && (prefix.empty() || l.lt(e, l.enumerate(prefix.back())));
  });
  p.enumerate = [l, shells](std::size_t n) -> std::optional<Node> {
    Node s;
    for (auto idx : shells.at(n)) s.push_back(l.enumerate(idx));
    return s;
  };
  p.root = Node{};
  return p;
}

// s ⌢ has_lower(last s), or <enumerate(0)> for the root.
template <class Elem>
std::vector<Elem> lambda_extend(const LatticeOracle<Elem>& l, const std::vector<Elem>& s) {
  auto out = s;
  out.push_back(s.empty() ? l.enumerate(0) : l.has_lower(s.back()));
  return out;
}

struct LatticeReport {
  bool strict = true;
  bool transitive = true;
  bool uppers_exact = true;
  bool no_minimal = true;
  bool meet_law = true;
  bool join_law = true;
  std::string first_failure;

  bool ok() const {
    return strict && transitive && uppers_exact && no_minimal && meet_law && join_law;
  }
};

// Spot-checks the lattice laws on all pairs and triples from `sample`.
template <class Elem>
LatticeReport check_lattice(const LatticeOracle<Elem>& l, std::span<const Elem> sample) {
  LatticeReport r;
  auto fail = [&r](bool& flag, std::string what) {
    if (flag && r.first_failure.empty()) r.first_failure = std::move(what);
    flag = false;
  };
  const std::size_t n = sample.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& x = sample[a];
    if (l.lt(x, x)) fail(r.strict, "lt is reflexive at sample " + std::to_string(a));
    const auto low = l.has_lower(x);
    if (!l.carrier(low) || !l.lt(low, x)) {
      fail(r.no_minimal, "has_lower is not strictly below sample " + std::to_string(a));
    }
    const auto ups = l.uppers(x);
    for (const auto& u : ups) {
      if (!l.lt(x, u)) fail(r.uppers_exact, "uppers lists a non-predecessor of sample " + std::to_string(a));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!l.lt(x, sample[b])) continue;
      if (std::find(ups.begin(), ups.end(), sample[b]) == ups.end()) {
        fail(r.uppers_exact, "uppers misses a predecessor of sample " + std::to_string(a));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool ab = l.lt(sample[a], sample[b]);
      for (std::size_t c = 0; c < n; ++c) {
        const auto& x = sample[a];
        const auto& y = sample[b];
        const auto& z = sample[c];
        if (ab && l.lt(y, z) && !l.lt(x, z)) fail(r.transitive, "lt is not transitive");
        // Greatest lower bound: x below y and z implies x <= y ∧ z.
        if (l.lt(x, y) && l.lt(x, z)) {
          const auto m = l.meet(y, z);
          if (!m || !(*m == x || l.lt(x, *m))) fail(r.meet_law, "meet law fails");
        }
        // Least upper bound: y and z below x implies y ∨ z <= x.
        if (l.lt(y, x) && l.lt(z, x)) {
          const auto j = l.join(y, z);
          if (!j || !(*j == x || l.lt(*j, x))) fail(r.join_law, "join law fails");
        }
      }
    }
  }
  return r;
}

// Nonempty finite subsets of X; lt(s, t) iff t is a proper subset of s, so
// decreasing sequences grow under inclusion. meet = union,
// join = intersection (partial: undefined when disjoint).
LatticeOracle<FiniteSet> finite_subset_lattice(const CountableSet& x);

// t as a node of lambda_tree(finite_subset_lattice(x)).
// Throws Error("not-in-lambda").
std::vector<FiniteSet> q_into_lambda(const CountableSet& x, const QSeq& t);

}  // namespace forcing
