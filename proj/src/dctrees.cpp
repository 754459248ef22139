#include "forcing/dctrees.hpp"

#include <algorithm>
#include <unordered_map>

#include "forcing/collapse.hpp"
#include "forcing/error.hpp"
#include "forcing/pairing.hpp"

namespace forcing {

namespace {

bool in_range(std::span<const Code> t, Code v) { return std::find(t.begin(), t.end(), v) != t.end(); }

std::uint64_t occurrences(std::span<const Code> t, Code v) {
  return static_cast<std::uint64_t>(std::count(t.begin(), t.end(), v));
}

bool obeys(const ChoiceFunctional& f, std::span<const Code> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!f.member(g.first(i), g[i])) return false;
  }
  return true;
}

}  // namespace

ChoiceFunctional f_seq(const CountableSet& x) {
  return {"seq",
          [x](std::span<const Code> t, Code v) { return x.contains(v) && !in_range(t, v); },
          [x](std::span<const Code> t) { return x.first_unused(t); }, true};
}

ChoiceFunctional evens_only(const CountableSet& x) {
  return {"evens-only",
          [x](std::span<const Code> t, Code v) {
            const auto idx = x.index_of(v);
            return idx && *idx % 2 == 0 && !in_range(t, v);
          },
          [x](std::span<const Code> t) {
            for (std::size_t n = 0;; n += 2) {
              if (!in_range(t, x.at(n))) return x.at(n);
            }
          },
          true};
}

ChoiceFunctional skip_functional(const CountableSet& x) {
  return {"skip",
          [x](std::span<const Code> t, Code v) {
            const auto idx = x.index_of(v);
            if (!idx) return false;
            if (t.empty()) return true;
            const auto last = x.index_of(t.back());
            return last && *idx > *last;
          },
          [x](std::span<const Code> t) {
            return t.empty() ? x.at(0) : x.at(x.require_index(t.back()) + 2);
          },
          true};
}

ChoiceFunctional constant_functional(const CountableSet& x) {
  return {"constant", [x](std::span<const Code>, Code v) { return v == x.at(0); },
          [x](std::span<const Code>) { return x.at(0); }, false};
}

ChoiceFunctional window_functional(const CountableSet& x) {
  return {"window",
          [x](std::span<const Code>, Code v) {
            const auto idx = x.index_of(v);
            return idx && *idx < 3;
          },
          [x](std::span<const Code> t) { return x.at(t.size() % 3); }, false};
}

ChoiceFunctional stairs_functional(const CountableSet& x) {
  return {"stairs", [x](std::span<const Code> t, Code v) { return v == x.at(t.size() / 2); },
          [x](std::span<const Code> t) { return x.at(t.size() / 2); }, false};
}

std::vector<std::string> functional_names() {
  return {"seq", "evens-only", "skip", "constant", "window", "stairs"};
}

ChoiceFunctional functional_by_name(const CountableSet& x, const std::string& name) {
  if (name == "seq") return f_seq(x);
  if (name == "evens-only") return evens_only(x);
  if (name == "skip") return skip_functional(x);
  if (name == "constant") return constant_functional(x);
  if (name == "window") return window_functional(x);
  if (name == "stairs") return stairs_functional(x);
  throw Error("unknown-functional", "no functional named '" + name + "'", {{"functional", name}});
}

bool check_dc_witness(const ChoiceFunctional& f, std::span<const Code> g) { return obeys(f, g); }

PosetPresentation<CodeSeq> t_of_f(const CountableSet& x, const ChoiceFunctional& f) {
  if (!f.injective_mode) {
    throw Error("not-injective-mode", f.name + " allows repetitions; T(F) needs injective mode",
                {{"functional", f.name}});
  }
  const auto coll = coll_poset(x);
  auto carrier = [coll, f](const CodeSeq& t) { return coll.carrier(t) && obeys(f, t); };

  PosetPresentation<CodeSeq> p;
  p.name = "T(" + f.name + ")";
  p.carrier = carrier;
  p.leq = coll.leq;
  ShellEnumerator shells([x, f](const std::vector<std::size_t>& prefix, std::size_t v) {
    CodeSeq t;
    t.reserve(prefix.size());
    for (auto i : prefix) t.push_back(x.at(i));
    return f.member(t, x.at(v));
  });
  p.enumerate = [x, shells](std::size_t n) -> std::optional<CodeSeq> {
    CodeSeq t;
    for (auto i : shells.at(n)) t.push_back(x.at(i));
    return t;
  };
  p.root = CodeSeq{};
  return p;
}

ChoiceFunctional modified_functional(const CountableSet& x, const ChoiceFunctional& f,
                                     const CodeSeq& t) {
  const bool in_tree = f.injective_mode ? t_of_f(x, f).carrier(t) : obeys(f, t);
  if (!in_tree) {
    throw Error("not-in-tree", "condition is not in T(" + f.name + ")", {{"condition", t}});
  }
  // s is t|i for some i < lh(t).
  auto forced = [t](std::span<const Code> s) {
    return s.size() < t.size() && std::equal(s.begin(), s.end(), t.begin());
  };
  ChoiceFunctional g;
  g.name = f.name + "|t";
  g.injective_mode = f.injective_mode;
  g.member = [f, t, forced](std::span<const Code> s, Code v) {
    if (forced(s)) return v == t[s.size()];
    return f.member(s, v);
  };
  g.select = [f, t, forced](std::span<const Code> s) {
    if (forced(s)) return t[s.size()];
    return f.select(s);
  };
  return g;
}

DenseSet<CodeSeq> tree_level(const ChoiceFunctional& f, std::size_t i) {
  DenseSet<CodeSeq> d;
  d.name = "L_" + std::to_string(i);
  d.member = [i](const CodeSeq& t) { return t.size() >= i; };
  d.extend = [f, i](const CodeSeq& p) {
    CodeSeq q = p;
    while (q.size() < i) {
      const Code v = f.select(q);
      if (!f.member(q, v)) {
        throw Error("bad-selector", f.name + " selected a non-member at length " +
                                        std::to_string(q.size()),
                    {{"functional", f.name}, {"position", q.size()}, {"code", v}});
      }
      q.push_back(v);
    }
    return q;
  };
  return d;
}

GenericRun<CodeSeq> dc_run(const CountableSet& x, const ChoiceFunctional& f, std::size_t n) {
  const auto tree = t_of_f(x, f);
  const DenseFamily<CodeSeq> levels = [f](std::size_t i) { return tree_level(f, i); };
  return rasiowa_sikorski(tree, levels, CodeSeq{}, n + 1);
}

CodeSeq dc_witness(const CountableSet& x, const ChoiceFunctional& f, std::size_t n) {
  return dc_run(x, f, n).last();
}

CountableSet marked_product(const CountableSet& x) {
  return CountableSet(
      x.name() + "xw", [](std::size_t n) { return static_cast<Code>(n); },
      [](Code c) -> std::optional<std::size_t> { return static_cast<std::size_t>(c); });
}

Code encode_marked(const CountableSet& x, const MarkedElement& e) {
  return cantor_pair(x.require_index(e.base), e.marker);
}

MarkedElement decode_marked(const CountableSet& x, Code c) {
  const auto [idx, marker] = cantor_unpair(c);
  return {x.at(static_cast<std::size_t>(idx)), marker};
}

std::vector<MarkedElement> decode_witness(const CountableSet& x, std::span<const Code> g) {
  std::vector<MarkedElement> out;
  out.reserve(g.size());
  for (Code c : g) out.push_back(decode_marked(x, c));
  return out;
}

CodeSeq unmark(std::span<const MarkedElement> g) {
  CodeSeq out;
  out.reserve(g.size());
  for (const auto& e : g) out.push_back(e.base);
  return out;
}

namespace {

// The base sequence t when every marker counts the earlier occurrences of its
// base, i.e. when u = u^t.
std::optional<CodeSeq> consistent_bases(const CountableSet& x, std::span<const Code> u) {
  CodeSeq bases;
  bases.reserve(u.size());
  std::unordered_map<Code, std::uint64_t> counts;
  for (Code c : u) {
    const auto e = decode_marked(x, c);
    auto& seen = counts[e.base];
    if (e.marker != seen) return std::nullopt;
    ++seen;
    bases.push_back(e.base);
  }
  return bases;
}

}  // namespace

ChoiceFunctional marker_reduction(const CountableSet& x, const ChoiceFunctional& f) {
  const auto xw = marked_product(x);
  const auto fresh = f_seq(xw);
  ChoiceFunctional g;
  g.name = "marked(" + f.name + ")";
  g.injective_mode = true;
  g.member = [x, f, fresh](std::span<const Code> u, Code c) {
    const auto t = consistent_bases(x, u);
    if (!t) return fresh.member(u, c);
    const auto e = decode_marked(x, c);
    return f.member(*t, e.base) && e.marker == occurrences(*t, e.base);
  };
  g.select = [x, f, fresh](std::span<const Code> u) {
    const auto t = consistent_bases(x, u);
    if (!t) return fresh.select(u);
    const Code v = f.select(*t);
    return encode_marked(x, {v, occurrences(*t, v)});
  };
  return g;
}

nlohmann::json witness_json(const std::string& functional, std::span<const Code> values) {
  return {{"functional", functional},
          {"length", values.size()},
          {"values", CodeSeq(values.begin(), values.end())}};
}

nlohmann::json witness_json(const std::string& functional, std::span<const MarkedElement> g) {
  std::vector<std::uint64_t> markers;
  markers.reserve(g.size());
  for (const auto& e : g) markers.push_back(e.marker);
  auto j = witness_json(functional, unmark(g));
  j["markers"] = std::move(markers);
  return j;
}

}  // namespace forcing
