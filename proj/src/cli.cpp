#include "forcing/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcing/collapse.hpp"
#include "forcing/countable_set.hpp"
#include "forcing/dctrees.hpp"
#include "forcing/error.hpp"
#include "forcing/levy.hpp"
#include "forcing/oracle.hpp"
#include "forcing/qtree.hpp"
#include "forcing/random.hpp"

namespace forcing::cli {

namespace {

using nlohmann::json;
using Params = std::map<std::string, std::string>;

// Raised for configuration problems; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Params>& defaults_table() {
  static const std::map<std::string, Params> table = {
      {"coll-run", {{"set", "nat"}, {"n", "5"}}},
      {"iso-roundtrip", {{"set", "nat"}, {"len", "10"}, {"seed", "0"}}},
      {"dc-run", {{"set", "nat"}, {"n", "5"}, {"functional", "seq"}}},
      {"marker-run", {{"set", "nat"}, {"n", "5"}, {"functional", "constant"}}},
      {"levy-run", {{"set", "nat"}, {"alpha", "w*2"}}},
      {"density-check", {{"set", "nat"}, {"i", "3"}, {"frag", "200"}}},
      {"oracle-check", {{"seed", "0"}, {"trials", "200"}}},
  };
  return table;
}

std::uint64_t to_u64(const Params& p, const std::string& key) {
  const auto& s = p.at(key);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ConfigError("--" + key + " expects a natural number, got '" + s + "'");
  }
  return v;
}

CountableSet set_param(const Params& p) {
  try {
    return set_by_name(p.at("set"));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

json coll_run(const Params& p) {
  const auto x = set_param(p);
  const auto n = to_u64(p, "n");
  const auto run = rasiowa_sikorski(coll_poset(x), level_family(x), CodeSeq{}, n + 1);
  const auto g = generic_to_injection(run);
  const CodeSeq items(g.items().begin(), g.items().begin() + static_cast<std::ptrdiff_t>(n));
  auto out = injseq_json(x.name(), InjSeq::from(items));
  out["union_length"] = g.size();
  out["trace"] = trace_json(run);
  return out;
}

json iso_roundtrip(const Params& p) {
  const auto x = set_param(p);
  const auto len = to_u64(p, "len");
  Rng rng(to_u64(p, "seed"));
  std::optional<std::string> failure;
  auto expect = [&](bool cond, std::uint64_t case_len, const char* what) {
    if (!cond && !failure) failure = std::string(what) + " at length " + std::to_string(case_len);
  };
  for (std::uint64_t l = 1; l <= len; ++l) {
    const auto alphabet = std::max<std::size_t>(1000, 2 * l);
    const auto f = random_injective(rng, x, l, alphabet);
    const auto t = coll_to_q(f);
    expect(q_to_coll(t).items() == f, l, "q_to_coll(coll_to_q(f)) != f");
    expect(coll_to_q(q_to_coll(t).items()) == t, l, "coll_to_q(q_to_coll(t)) != t");
    q_into_lambda(x, t);
    const auto k = static_cast<std::size_t>(rng.below(l + 1));
    const CodeSeq head(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    expect(q_extends(t, coll_to_q(head)), l, "prefix not preserved");
    const auto other = random_injective(rng, x, static_cast<std::size_t>(rng.below(l + 1)), alphabet);
    expect(extends(f, other) == q_extends(t, coll_to_q(other)), l, "extension not reflected");
  }
  json out = {{"ok", !failure}, {"cases", len}};
  if (failure) out["first_failure"] = *failure;
  return out;
}

ChoiceFunctional functional_param(const CountableSet& x, const Params& p) {
  try {
    return functional_by_name(x, p.at("functional"));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

json dc_run_cmd(const Params& p) {
  const auto x = set_param(p);
  const auto f = functional_param(x, p);
  const auto g = dc_witness(x, f, to_u64(p, "n"));
  auto out = witness_json(f.name, g);
  out["valid"] = check_dc_witness(f, g);
  return out;
}

json marker_run(const Params& p) {
  const auto x = set_param(p);
  const auto f = functional_param(x, p);
  const auto g = dc_witness(marked_product(x), marker_reduction(x, f), to_u64(p, "n"));
  const auto marked = decode_witness(x, g);
  auto out = witness_json(f.name, std::span<const MarkedElement>(marked));
  out["valid"] = check_dc_witness(f, unmark(marked));
  out["pairs_injective"] = is_injective(g);
  return out;
}

json levy_run(const Params& p) {
  const auto x = set_param(p);
  Ordinal alpha;
  try {
    alpha = Ordinal::parse(p.at("alpha"));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  const auto cof = CofinalPresentation::canonical(alpha);
  const auto f = transfinite_f_seq(x, alpha);
  const auto run = levy_lift(cof, f);
  return levy_report(run, f, mandated_samples(cof), 6);
}

json density_check(const Params& p) {
  const auto x = set_param(p);
  const auto report = is_dense_on_truncation(coll_poset(x), level_dense(x, to_u64(p, "i")),
                                             to_u64(p, "frag"));
  json out = {{"dense", report.dense}, {"fragment", report.fragment}, {"counterexample", nullptr}};
  if (report.counterexample) out["counterexample"] = *report.counterexample;
  return out;
}

json oracle_check_cmd(const Params& p) {
  const auto s = oracle_check(to_u64(p, "seed"), to_u64(p, "trials"));
  return {{"ok", s.ok()}, {"trials", s.trials}, {"agreements", s.agreements}, {"failures", s.failures}};
}

const std::map<std::string, std::function<json(const Params&)>>& handlers() {
  static const std::map<std::string, std::function<json(const Params&)>> table = {
      {"coll-run", coll_run},         {"iso-roundtrip", iso_roundtrip},
      {"dc-run", dc_run_cmd},         {"marker-run", marker_run},
      {"levy-run", levy_run},         {"density-check", density_check},
      {"oracle-check", oracle_check_cmd},
  };
  return table;
}

int emit(const RunConfig& cfg, const json& doc, std::ostream& out, std::ostream& err) {
  const auto text = doc.dump() + "\n";
  if (!cfg.output_path) {
    out << text;
    return kOk;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) {
    err << "cannot open " << *cfg.output_path << " for writing\n";
    return kBadConfig;
  }
  file << text;
  return kOk;
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"coll-run", "Generic run on Coll(w,X); reports its first n values"},
      {"iso-roundtrip", "Round trips between Coll(w,X) and Q on random injections"},
      {"dc-run", "Dependent-choice witness for an injective-mode functional"},
      {"marker-run", "Witness for a repetition-allowing functional via markers"},
      {"levy-run", "Transfinite witness of length alpha built block by block"},
      {"density-check", "Density of level i on a finite fragment of Coll(w,X)"},
      {"oracle-check", "Engine against the brute-force filter oracle on random posets"},
  };
  return d;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : defaults_table()) out.push_back(name);
  return out;
}

std::map<std::string, std::string> command_defaults(const std::string& command) {
  const auto& table = defaults_table();
  auto it = table.find(command);
  return it == table.end() ? Params{} : it->second;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& table = defaults_table();
  auto it = table.find(cfg.command);
  if (it == table.end()) {
    err << "unknown command '" << cfg.command << "'\n";
    return kBadConfig;
  }
  Params params = it->second;
  for (const auto& [key, value] : cfg.params) {
    if (!params.contains(key)) {
      err << "unknown key '" << key << "' for " << cfg.command << "\n";
      return kBadConfig;
    }
    params[key] = value;
  }

  int code = kOk;
  json doc;
  try {
    doc = handlers().at(cfg.command)(params);
    if (doc.contains("ok") && !doc["ok"].get<bool>()) code = kContractViolation;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    doc = {{"error", e.name()}, {"message", e.what()}, {"detail", e.detail()}};
    code = kContractViolation;
  }
  const int written = emit(cfg, doc, out, err);
  return written != kOk ? written : code;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic filters, collapses and dependent-choice witnesses", "forcing-lab"};
  app.require_subcommand(1);

  std::string output;
  app.add_option("-o,--output", output, "Write the JSON document to this file");

  std::map<std::string, Params> given;
  for (const auto& [command, keys] : defaults_table()) {
    auto* sub = app.add_subcommand(command, descriptions().at(command));
    for (const auto& [key, def] : keys) {
      sub->add_option("--" + key, given[command][key], "default: " + def);
    }
    sub->add_option("-o,--output", output, "Write the JSON document to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }

  RunConfig cfg;
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (const auto& [key, value] : given[cfg.command]) {
      if (sub->count("--" + key) > 0) cfg.params[key] = value;
    }
  }
  if (!output.empty()) cfg.output_path = output;
  return run(cfg, out, err);
}

}  // namespace forcing::cli
