#include "forcing/collapse.hpp"

#include <algorithm>
#include <unordered_set>

#include "forcing/error.hpp"

namespace forcing {

namespace {

__extension__ using u128 = unsigned __int128;

// a! / (a - r)!, zero when r > a.
u128 falling(std::size_t a, std::size_t r) {
  if (r > a) return 0;
  u128 v = 1;
  for (std::size_t i = 0; i < r; ++i) v *= a - i;
  return v;
}

// Injective sequences of length k over {0..b-1} that contain b-1.
u128 shell_count(std::size_t b, std::size_t k) { return falling(b, k) - falling(b - 1, k); }

std::string coll_name(const CountableSet& x) { return "Coll(w," + x.name() + ")"; }

}  // namespace

InjSeq InjSeq::from(CodeSeq items) {
  std::unordered_set<Code> seen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!seen.insert(items[i]).second) {
      throw Error("not-injective", "repeated code " + std::to_string(items[i]) + " at position " +
                                       std::to_string(i),
                  {{"position", i}, {"code", items[i]}});
    }
  }
  InjSeq s;
  s.items_ = std::move(items);
  return s;
}

bool extends(std::span<const Code> g, std::span<const Code> f) {
  return f.size() <= g.size() && std::equal(f.begin(), f.end(), g.begin());
}

std::vector<std::size_t> coll_index_sequence(std::size_t n) {
  if (n == 0) return {};
  u128 rank = n - 1;
  std::size_t b = 1;
  while (true) {
    u128 total = 0;
    for (std::size_t k = 1; k <= b; ++k) total += shell_count(b, k);
    if (rank < total) break;
    rank -= total;
    ++b;
  }
  std::size_t k = 1;
  while (rank >= shell_count(b, k)) {
    rank -= shell_count(b, k);
    ++k;
  }

  std::vector<std::size_t> out;
  std::vector<bool> used(b, false);
  bool has_top = false;
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t remaining = k - pos - 1;
    const std::size_t avail = b - pos - 1;
    for (std::size_t v = 0; v < b; ++v) {
      if (used[v]) continue;
      const bool covered = has_top || v == b - 1;
      const u128 completions =
          covered ? falling(avail, remaining) : falling(avail, remaining) - falling(avail - 1, remaining);
      if (rank < completions) {
        out.push_back(v);
        used[v] = true;
        has_top = covered;
        break;
      }
      rank -= completions;
    }
  }
  return out;
}

struct ShellEnumerator::State {
  Admits admits;
  std::vector<std::vector<std::size_t>> items{{}};
  std::size_t next_shell = 1;

  void grow() {
    const std::size_t b = next_shell++;
    std::vector<std::vector<std::size_t>> shell;
    std::vector<std::size_t> path;
    std::vector<bool> used(b, false);
    // Preorder with ascending children is lexicographic order.
    std::function<void(bool)> dfs = [&](bool has_top) {
      if (has_top) shell.push_back(path);
      for (std::size_t v = 0; v < b; ++v) {
        if (used[v] || !admits(path, v)) continue;
        used[v] = true;
        path.push_back(v);
        dfs(has_top || v == b - 1);
        path.pop_back();
        used[v] = false;
      }
    };
    dfs(false);
    std::stable_sort(shell.begin(), shell.end(),
                     [](const auto& a, const auto& c) { return a.size() < c.size(); });
    for (auto& s : shell) items.push_back(std::move(s));
  }
};

ShellEnumerator::ShellEnumerator(Admits admits) : state_(std::make_shared<State>()) {
  state_->admits = std::move(admits);
}

const std::vector<std::size_t>& ShellEnumerator::at(std::size_t n) const {
  while (state_->items.size() <= n) state_->grow();
  return state_->items[n];
}

PosetPresentation<CodeSeq> coll_poset(const CountableSet& x) {
  PosetPresentation<CodeSeq> p;
  p.name = coll_name(x);
  p.carrier = [x](const CodeSeq& f) {
    return std::all_of(f.begin(), f.end(), [&](Code c) { return x.contains(c); }) &&
           is_injective(f);
  };
  p.leq = [](const CodeSeq& g, const CodeSeq& f) { return extends(g, f); };
  p.enumerate = [x](std::size_t n) -> std::optional<CodeSeq> {
    CodeSeq f;
    for (auto idx : coll_index_sequence(n)) f.push_back(x.at(idx));
    return f;
  };
  p.root = CodeSeq{};
  return p;
}

DenseSet<CodeSeq> level_dense(const CountableSet& x, std::size_t i) {
  DenseSet<CodeSeq> d;
  d.name = "L_" + std::to_string(i);
  d.member = [i](const CodeSeq& f) { return f.size() >= i; };
  d.extend = [x, i](const CodeSeq& p) {
    if (p.size() >= i) return p;
    std::size_t beta = 0;
    for (Code c : p) beta = std::max(beta, x.require_index(c) + 1);
    CodeSeq q = p;
    q.reserve(p.size() + i);
    for (std::size_t k = 0; k < i; ++k) q.push_back(x.at(beta + k));
    return q;
  };
  return d;
}

DenseFamily<CodeSeq> level_family(const CountableSet& x) {
  return [x](std::size_t i) { return level_dense(x, i); };
}

InjSeq generic_to_injection(const GenericRun<CodeSeq>& run) {
  for (std::size_t k = 1; k < run.chain.size(); ++k) {
    if (!extends(run.chain[k], run.chain[k - 1])) {
      throw Error("not-a-chain", "condition " + std::to_string(k) + " does not extend its predecessor",
                  {{"position", k}});
    }
  }
  if (run.chain.empty()) return InjSeq{};
  return InjSeq::from(run.chain.back());
}

GenericRun<CodeSeq> injection_to_generic(const CountableSet& x,
                                         const std::function<Code(std::size_t)>& g,
                                         std::size_t n) {
  CodeSeq values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    values.push_back(g(i));
    x.require_index(values.back());
  }
  const auto injection = InjSeq::from(values);

  GenericRun<CodeSeq> run{coll_name(x), {}, {}};
  run.chain.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    run.chain.emplace_back(injection.items().begin(),
                           injection.items().begin() + static_cast<std::ptrdiff_t>(i));
    run.met.push_back({i, i});
  }
  return run;
}

nlohmann::json injseq_json(const std::string& set, const InjSeq& f) {
  return {{"set", set}, {"items", f.items()}};
}

InjSeq injseq_from_json(const nlohmann::json& j) {
  return InjSeq::from(j.at("items").get<CodeSeq>());
}

}  // namespace forcing
