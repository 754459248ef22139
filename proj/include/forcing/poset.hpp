#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "forcing/error.hpp"

namespace forcing {

// A countable poset given by predicates. Order convention: leq(q, p) means
// q is stronger than (extends) p.
template <class Elem>
struct PosetPresentation {
  std::string name;
  std::function<bool(const Elem&)> carrier;
  std::function<bool(const Elem& q, const Elem& p)> leq;
  // Injective enumeration of the carrier; nullopt past the end of a finite one.
  std::function<std::optional<Elem>(std::size_t)> enumerate;
  std::optional<Elem> root;

  std::vector<Elem> prefix(std::size_t n) const {
    std::vector<Elem> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto e = enumerate(i);
      if (!e) break;
      out.push_back(std::move(*e));
    }
    return out;
  }
};

// A dense set together with a constructive witness of density:
// extend(p) must be <= p and a member.
template <class Elem>
struct DenseSet {
  std::string name;
  std::function<bool(const Elem&)> member;
  std::function<Elem(const Elem&)> extend;
};

template <class Elem>
using DenseFamily = std::function<DenseSet<Elem>(std::size_t)>;

struct Meeting {
  std::size_t dense_index;
  std::size_t position;

  friend bool operator==(const Meeting&, const Meeting&) = default;
};

// A descending chain p_0 >= p_1 >= ...; the filter is its upward closure.
template <class Elem>
struct GenericRun {
  std::string poset;
  std::vector<Elem> chain;
  std::vector<Meeting> met;

  const Elem& start() const { return chain.front(); }
  const Elem& last() const { return chain.back(); }
};

// Meets D_k, ..., D_{k+more-1} where k = run.met.size(), continuing from the
// last condition. Throws Error("bad-extender") with the offending index.
template <class Elem>
void continue_run(const PosetPresentation<Elem>& p, const DenseFamily<Elem>& ds,
                  GenericRun<Elem>& run, std::size_t more) {
  const std::size_t first = run.met.size();
  run.chain.reserve(run.chain.size() + more);
  for (std::size_t i = first; i < first + more; ++i) {
    const auto d = ds(i);
    // Copy: push_back may reallocate.
    const Elem current = run.chain.back();
    Elem next = d.extend(current);
    const char* why = nullptr;
    if (!p.carrier(next)) {
      why = "output is not a condition";
    } else if (!p.leq(next, current)) {
      why = "output is not below its input";
    } else if (!d.member(next)) {
      why = "output is not a member";
    }
    if (why) {
      throw Error("bad-extender", d.name + ": " + why,
                  {{"index", i}, {"dense_set", d.name}});
    }
    run.chain.push_back(std::move(next));
    run.met.push_back({i, run.chain.size() - 1});
  }
}

// chain(0) = start, chain(i+1) = ds(i).extend(chain(i)) for i < n.
template <class Elem>
GenericRun<Elem> rasiowa_sikorski(const PosetPresentation<Elem>& p, const DenseFamily<Elem>& ds,
                                  Elem start, std::size_t n) {
  if (!p.carrier(start)) {
    throw Error("not-in-carrier", "start is not a condition of " + p.name);
  }
  GenericRun<Elem> run{p.name, {std::move(start)}, {}};
  continue_run(p, ds, run, n);
  return run;
}

template <class Elem>
void require_chain(const PosetPresentation<Elem>& p, const std::vector<Elem>& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!p.leq(chain[k], chain[k - 1])) {
      throw Error("not-a-chain", "element " + std::to_string(k) + " is not below its predecessor",
                  {{"position", k}});
    }
  }
}

// Upward closure of a descending chain inside the first `truncation`
// enumerated conditions, in enumeration order.
template <class Elem>
std::vector<Elem> filter_from_chain(const PosetPresentation<Elem>& p,
                                    const std::vector<Elem>& chain, std::size_t truncation) {
  require_chain(p, chain);
  std::vector<Elem> out;
  if (chain.empty()) return out;
  for (auto& e : p.prefix(truncation)) {
    if (p.leq(chain.back(), e)) out.push_back(std::move(e));
  }
  return out;
}

template <class Elem>
struct DensityReport {
  bool dense = true;
  std::size_t fragment = 0;
  std::optional<Elem> counterexample;
};

// Density evidence on the fragment of the first n enumerated conditions:
// every one of them has a member of d below it inside the fragment.
template <class Elem>
DensityReport<Elem> is_dense_on_truncation(const PosetPresentation<Elem>& p,
                                           const DenseSet<Elem>& d, std::size_t n) {
  const auto fragment = p.prefix(n);
  std::vector<const Elem*> members;
  for (const auto& e : fragment) {
    if (d.member(e)) members.push_back(&e);
  }
  DensityReport<Elem> report;
  report.fragment = fragment.size();
  for (const auto& e : fragment) {
    bool found = false;
    for (const Elem* m : members) {
      if (p.leq(*m, e)) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.dense = false;
      report.counterexample = e;
      break;
    }
  }
  return report;
}

struct OrderLawViolation {
  std::string law;
  std::vector<std::size_t> positions;
};

// Reflexivity, antisymmetry and transitivity of leq on the first n
// enumerated conditions (O(n^3)). Also checks carrier membership.
template <class Elem>
std::optional<OrderLawViolation> check_order_laws(const PosetPresentation<Elem>& p, std::size_t n) {
  const auto xs = p.prefix(n);
  const std::size_t m = xs.size();
  std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    if (!p.carrier(xs[a])) return OrderLawViolation{"carrier", {a}};
    for (std::size_t b = 0; b < m; ++b) le[a][b] = p.leq(xs[a], xs[b]) ? 1 : 0;
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!le[a][a]) return OrderLawViolation{"reflexivity", {a}};
    for (std::size_t b = a + 1; b < m; ++b) {
      if (le[a][b] && le[b][a]) return OrderLawViolation{"antisymmetry", {a, b}};
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!le[a][b]) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (le[b][c] && !le[a][c]) return OrderLawViolation{"transitivity", {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

// {"poset": name, "start": code, "steps": [{"i": n, "condition": code, "meets": [...]}]}
template <class Elem>
nlohmann::json trace_json(const GenericRun<Elem>& run) {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t k = 0; k < run.chain.size(); ++k) {
    nlohmann::json meets = nlohmann::json::array();
    for (const auto& m : run.met) {
      if (m.position == k) meets.push_back(m.dense_index);
    }
    steps.push_back({{"i", k}, {"condition", run.chain[k]}, {"meets", std::move(meets)}});
  }
  return {{"poset", run.poset}, {"start", run.chain.front()}, {"steps", std::move(steps)}};
}

}  // namespace forcing
