// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path-to-forcing-lab>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "forcing/collapse.hpp"
#include "forcing/dctrees.hpp"
#include "forcing/error.hpp"
#include "forcing/levy.hpp"
#include "forcing/oracle.hpp"
#include "forcing/ordinal.hpp"
#include "forcing/qtree.hpp"
#include "forcing/random.hpp"
#include "forcing/transfinite.hpp"
#include "oracles.hpp"

using namespace forcing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks keep running but the message sticks.
struct Checker {
  Outcome out;
  std::size_t checks = 0;

  bool expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && out.pass) {
      out.pass = false;
      out.detail = what;
    }
    return cond;
  }
};

bool pairwise_distinct(const CodeSeq& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) return false;
    }
  }
  return true;
}

// Shared between AC3 and AC4.
std::vector<CodeSeq> iso_samples() {
  Rng rng(2024);
  const auto x = naturals();
  std::vector<CodeSeq> out;
  for (int i = 0; i < 10000; ++i) out.push_back(random_injective(rng, x, rng.below(51), 1000));
  return out;
}

Outcome ac1() {
  Checker c;
  const auto start = Clock::now();
  const auto x = naturals();
  const auto run = rasiowa_sikorski(coll_poset(x), level_family(x), CodeSeq{}, 1000);
  const auto g = generic_to_injection(run);
  const double t = seconds_since(start);
  c.expect(run.met.size() == 1000, "did not meet L_0..L_999");
  c.expect(g.size() >= 1000, "injection has length " + std::to_string(g.size()));
  c.expect(pairwise_distinct(g.items()), "repeated value");
  c.expect(t < 2.0, "took " + std::to_string(t) + " s");
  if (c.out.pass) {
    std::ostringstream d;
    d << "length " << g.size() << ", " << t << " s";
    c.out.detail = d.str();
  }
  return c.out;
}

Outcome ac2() {
  Checker c;
  std::size_t cases = 0;
  for (const auto& name : builtin_set_names()) {
    const auto x = set_by_name(name);
    const auto coll = coll_poset(x);
    // Every injective sequence of length <= 5 over the first 10 codes.
    std::vector<CodeSeq> frontier{{}}, all{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<CodeSeq> next;
      for (const auto& p : frontier) {
        for (std::size_t k = 0; k < 10; ++k) {
          const Code v = x.at(k);
          if (std::find(p.begin(), p.end(), v) != p.end()) continue;
          auto q = p;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (std::size_t i = 0; i <= 8; ++i) {
      const auto d = level_dense(x, i);
      for (const auto& p : all) {
        const auto q = d.extend(p);
        ++cases;
        if (!c.expect(coll.leq(q, p) && coll.carrier(q) && d.member(q),
                      name + ": extender contract fails at i = " + std::to_string(i))) {
          return c.out;
        }
      }
    }
  }
  c.out.detail = std::to_string(cases) + " cases, 0 failures";
  return c.out;
}

Outcome ac3(const std::vector<CodeSeq>& samples) {
  Checker c;
  const auto start = Clock::now();
  for (const auto& f : samples) {
    const auto t = coll_to_q(f);
    c.expect(q_to_coll(t).items() == f, "q_to_coll . coll_to_q is not the identity");
    c.expect(coll_to_q(q_to_coll(t).items()) == t, "coll_to_q . q_to_coll is not the identity");
  }
  Rng rng(77);
  const auto x = naturals();
  std::size_t related = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& f = samples[rng.below(samples.size())];
    CodeSeq g;
    if (rng.chance(1, 2)) {
      g.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(rng.below(f.size() + 1)));
    } else {
      g = random_injective(rng, x, rng.below(5), 4);
    }
    const auto tf = coll_to_q(f);
    const auto tg = coll_to_q(g);
    related += extends(f, g) ? 1 : 0;
    c.expect(extends(f, g) == q_extends(tf, tg), "extension not preserved/reflected (f over g)");
    c.expect(extends(g, f) == q_extends(tg, tf), "extension not preserved/reflected (g over f)");
    c.expect(extends(q_to_coll(tf).items(), q_to_coll(tg).items()) == q_extends(tf, tg),
             "q_to_coll does not preserve extension");
  }
  const double t = seconds_since(start);
  c.expect(t < 5.0, "took " + std::to_string(t) + " s");
  if (c.out.pass) {
    std::ostringstream d;
    d << samples.size() << " round trips, 10000 pairs (" << related << " related), " << t << " s";
    c.out.detail = d.str();
  }
  return c.out;
}

Outcome ac4(const std::vector<CodeSeq>& samples) {
  Checker c;
  const auto x = naturals();
  const auto tree = lambda_tree(finite_subset_lattice(x));
  for (const auto& f : samples) {
    try {
      c.expect(tree.carrier(q_into_lambda(x, coll_to_q(f))), "image outside the Lambda carrier");
    } catch (const Error& e) {
      c.expect(false, e.what());
    }
  }
  const auto l = finite_subset_lattice(x);
  std::vector<FiniteSet> sample;
  for (std::size_t k = 0; k < 100; ++k) sample.push_back(l.enumerate(k));
  const auto r = check_lattice<FiniteSet>(l, sample);
  c.expect(r.strict && r.transitive, "lt is not a strict order: " + r.first_failure);
  c.expect(r.uppers_exact, "uppers is not exact (fpp): " + r.first_failure);
  c.expect(r.no_minimal, "has_lower fails: " + r.first_failure);
  for (const auto& s : sample) {
    c.expect(l.uppers(s).size() == (std::size_t{1} << s.size()) - 2, "uppers count is not 2^|s|-2");
  }
  if (c.out.pass) c.out.detail = std::to_string(samples.size()) + " images, 100-set lattice sample";
  return c.out;
}

Outcome ac5() {
  Checker c;
  const auto x = naturals();
  Rng rng(505);
  for (const auto& f : {f_seq(x), evens_only(x), skip_functional(x)}) {
    const auto g = dc_witness(x, f, 500);
    c.expect(g.size() == 500, f.name + ": witness has length " + std::to_string(g.size()));
    c.expect(check_dc_witness(f, g), f.name + ": 500-step witness fails");
    for (int trial = 0; trial < 100; ++trial) {
      CodeSeq t;
      const auto len = rng.below(11);
      while (t.size() < len) {
        const Code candidate = x.at(rng.below(40));
        t.push_back(f.member(t, candidate) ? candidate : f.select(t));
      }
      const auto ft = modified_functional(x, f, t);
      const auto w = dc_witness(x, ft, len + 10);
      c.expect(extends(w, t), f.name + ": F_t witness does not extend t");
      c.expect(check_dc_witness(f, w), f.name + ": F_t witness is not an F-witness");
    }
  }
  if (c.out.pass) c.out.detail = "3 functionals x (500 steps + 100 random t)";
  return c.out;
}

Outcome ac6() {
  Checker c;
  const auto x = naturals();
  for (const auto& f : {constant_functional(x), window_functional(x), stairs_functional(x)}) {
    const auto g = dc_witness(marked_product(x), marker_reduction(x, f), 200);
    const auto marked = decode_witness(x, g);
    c.expect(g.size() == 200, f.name + ": witness length");
    c.expect(check_dc_witness(f, unmark(marked)), f.name + ": unmarked witness fails for F");
    std::vector<std::pair<Code, std::uint64_t>> ps;
    for (const auto& e : marked) ps.emplace_back(e.base, e.marker);
    std::sort(ps.begin(), ps.end());
    c.expect(std::adjacent_find(ps.begin(), ps.end()) == ps.end(), f.name + ": repeated pair");
  }
  if (c.out.pass) c.out.detail = "constant, window, stairs; 200 steps each";
  return c.out;
}

Outcome ac7() {
  Checker c;
  const auto x = naturals();
  for (const char* a : {"w*2", "w*3"}) {
    const auto alpha = Ordinal::parse(a);
    const auto f = transfinite_f_seq(x, alpha);
    const auto cof = CofinalPresentation::canonical(alpha);
    const auto run = levy_lift(cof, f);
    const auto samples = mandated_samples(cof);
    c.expect(check_transfinite_witness(f, run.g, samples), std::string(a) + ": sampled witness fails");
    // Hand-derived block types: a-1 blocks of type w, then singletons.
    const auto w_blocks = alpha.terms()[0].coefficient - 1;
    for (std::uint64_t xi = 0; xi <= 50; ++xi) {
      const auto expected = xi < w_blocks ? Ordinal::omega() : Ordinal(1);
      c.expect(run.h.at(Ordinal(xi)).length() == expected,
               std::string(a) + ": block " + std::to_string(xi) + " has the wrong order type");
      c.expect(run.prefix(xi).length() == cof.layout.offset(Ordinal(xi)),
               std::string(a) + ": prefix length mismatch at " + std::to_string(xi));
    }
  }
  if (c.out.pass) c.out.detail = "w*2 and w*3, mandated samples, blocks xi <= 50";
  return c.out;
}

Outcome ac8() {
  Checker c;
  const auto s = oracle_check(8, 200);
  c.expect(s.ok(), std::to_string(s.trials - s.agreements) + " disagreements");
  c.out.detail = std::to_string(s.agreements) + "/" + std::to_string(s.trials) + " trials agree";
  return c.out;
}

Outcome ac9() {
  Checker c;
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const auto a = test::random_ordinal(rng);
    const auto b = test::random_ordinal(rng);
    const auto d = test::random_ordinal(rng);
    c.expect((a + b) + d == a + (b + d), "associativity fails");
  }
  const auto w = Ordinal::omega();
  c.expect(Ordinal(1) + w == w, "1 + w != w");
  c.expect(w + Ordinal(1) != w, "w + 1 == w");
  for (const char* bound : {"w*2", "w^2 + w*3 + 5"}) {
    const auto bnd = Ordinal::parse(bound);
    const OmegaBijection bij(bnd);
    for (int i = 0; i < 1000; ++i) {
      const auto o = test::random_below(rng, bnd);
      c.expect(bij.backward(bij.forward(o)) == o, std::string(bound) + ": backward . forward");
      const std::uint64_t k = rng.below(1000000);
      c.expect(bij.forward(bij.backward(k)) == k, std::string(bound) + ": forward . backward");
    }
  }
  // Offset law: sigma_{xi+1} = sigma_xi + gamma_xi with the sum taken by the
  // block oracle, and the concatenation puts h(xi)(j) at sigma_xi + j.
  for (const char* a : {"w*2", "w*3", "w^2"}) {
    const auto cof = CofinalPresentation::canonical(Ordinal::parse(a));
    using Seq = TransfiniteSeq<std::uint64_t>;
    TransfiniteSeq<Seq> h(w, [cof](const Ordinal& xi) {
      const auto k = xi.finite_value();
      return Seq(cof.gamma(k), [k](const Ordinal& j) { return k * 1000 + j.finite_value(); });
    });
    const auto g = concat(h, cof.layout);
    Ordinal sigma;
    for (std::uint64_t xi = 0; xi <= 50; ++xi) {
      c.expect(cof.layout.offset(Ordinal(xi)) == sigma, std::string(a) + ": offset mismatch");
      for (std::uint64_t j : {0, 1, 7}) {
        if (Ordinal(j) < cof.gamma(xi)) {
          c.expect(g.at(test::oracle_add(sigma, Ordinal(j))) == xi * 1000 + j,
                   std::string(a) + ": concat misplaces a value");
        }
      }
      sigma = test::oracle_add(sigma, cof.gamma(xi));
    }
  }
  if (c.out.pass) c.out.detail = std::to_string(c.checks) + " checks";
  return c.out;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {status, out};
}

Outcome ac10(const std::string& binary) {
  Checker c;
  if (!c.expect(!binary.empty(), "no CLI path given")) return c.out;
  const std::vector<std::pair<std::string, int>> commands = {
      {"coll-run --set nat --n 5", 0},
      {"coll-run --set pairs --n 40", 0},
      {"iso-roundtrip --len 10 --seed 7", 0},
      {"iso-roundtrip --len 50 --seed 1 --set evens", 0},
      {"dc-run --set nat --n 5 --functional seq", 0},
      {"dc-run --set evens --n 30 --functional skip", 0},
      {"marker-run --set nat --n 25 --functional stairs", 0},
      {"levy-run --alpha 'w*2'", 0},
      {"levy-run --alpha 'w^2' --set pairs", 0},
      {"density-check --set nat --i 3 --frag 200", 0},
      {"oracle-check --seed 3", 0},
      {"dc-run --functional constant", 1},
      {"coll-run --bogus 1", 2},
  };
  for (const auto& [args, expected] : commands) {
    const auto cmd = "'" + binary + "' " + args + " 2>/dev/null";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    const int code = WIFEXITED(a.first) ? WEXITSTATUS(a.first) : -1;
    c.expect(code == expected, args + ": exit " + std::to_string(code));
    c.expect(a == b, args + ": output differs between runs");
    c.expect(expected == 2 || !a.second.empty(), args + ": no output");
  }
  if (c.out.pass) c.out.detail = std::to_string(commands.size()) + " commands run twice";
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  std::vector<CodeSeq> samples;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 generic run on Coll(w,N) meets L_0..L_999", ac1},
      {"AC2 level extender contract, exhaustive", ac2},
      {"AC3 Coll/Q isomorphism round trips and order",
       [&] {
         samples = iso_samples();
         return ac3(samples);
       }},
      {"AC4 Q conditions land in Lambda; subset lattice laws", [&] { return ac4(samples); }},
      {"AC5 T(F) witnesses and F_t prefixes", ac5},
      {"AC6 marker reduction for repetition-allowing F", ac6},
      {"AC7 lifting through w*2 and w*3", ac7},
      {"AC8 engine vs brute-force filter oracle", ac8},
      {"AC9 ordinal arithmetic, omega bijections, offset law", ac9},
      {"AC10 CLI determinism", [&] { return ac10(binary); }},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
