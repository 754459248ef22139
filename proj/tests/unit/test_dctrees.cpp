#include <gtest/gtest.h>

#include "forcing/collapse.hpp"
#include "forcing/dctrees.hpp"
#include "forcing/random.hpp"
#include "support.hpp"

using namespace forcing;
using forcing::test::expect_error;

TEST(FSeq, Examples) {
  for (const auto& name : builtin_set_names()) {
    const auto x = set_by_name(name);
    const auto f = f_seq(x);
    EXPECT_EQ(f.select(CodeSeq{}), x.at(0));
    EXPECT_EQ(f.select(CodeSeq{x.at(0), x.at(1)}), x.at(2));
    EXPECT_FALSE(f.member(CodeSeq{x.at(0)}, x.at(0)));
    EXPECT_TRUE(f.member(CodeSeq{x.at(0)}, x.at(5)));
    EXPECT_TRUE(f.injective_mode);
  }
}

TEST(CheckDcWitness, Examples) {
  const auto x = naturals();
  EXPECT_TRUE(check_dc_witness(f_seq(x), CodeSeq{}));
  EXPECT_FALSE(check_dc_witness(f_seq(x), CodeSeq{0, 0}));
  EXPECT_TRUE(check_dc_witness(constant_functional(x), CodeSeq{0, 0, 0}));
  EXPECT_FALSE(check_dc_witness(stairs_functional(x), CodeSeq{0, 1}));
}

TEST(TOfF, SeqGivesTheWholeCollapse) {
  const auto x = naturals();
  const auto tree = t_of_f(x, f_seq(x));
  const auto coll = coll_poset(x);
  for (std::size_t k = 0; k < 300; ++k) {
    ASSERT_EQ(*tree.enumerate(k), *coll.enumerate(k));
  }
  expect_error("not-injective-mode", [&] { t_of_f(x, constant_functional(x)); });
}

TEST(TOfF, EvensOnly) {
  const auto x = naturals();
  const auto tree = t_of_f(x, evens_only(x));
  EXPECT_TRUE(tree.carrier({0, 2}));
  EXPECT_FALSE(tree.carrier({1}));
  EXPECT_FALSE(tree.carrier({2, 2}));
}

TEST(TOfF, ClosedUnderRestriction) {
  const auto x = naturals();
  for (const auto& f : {f_seq(x), evens_only(x), skip_functional(x)}) {
    const auto tree = t_of_f(x, f);
    for (std::size_t k = 0; k < 1000; ++k) {
      const auto t = *tree.enumerate(k);
      for (std::size_t i = 0; i <= t.size(); ++i) {
        ASSERT_TRUE(tree.carrier(CodeSeq(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i))))
            << f.name;
      }
    }
  }
}

TEST(DcWitness, HandTraces) {
  const auto x = naturals();
  EXPECT_EQ(dc_witness(x, f_seq(x), 5), (CodeSeq{0, 1, 2, 3, 4}));
  EXPECT_EQ(dc_witness(x, evens_only(x), 3), (CodeSeq{0, 2, 4}));
  EXPECT_EQ(dc_witness(x, skip_functional(x), 4), (CodeSeq{0, 2, 4, 6}));
  EXPECT_EQ(dc_witness(x, f_seq(x), 0), CodeSeq{});
}

TEST(DcWitness, SeqAgreesWithCollapseRun) {
  const auto x = pairs();
  const auto run = dc_run(x, f_seq(x), 40);
  EXPECT_EQ(InjSeq::from(run.last()), generic_to_injection(run));
  EXPECT_TRUE(is_injective(run.last()));
  EXPECT_EQ(run.last().size(), 40U);
}

TEST(DcWitness, LongRunsPass) {
  const auto x = evens();
  for (const auto& f : {f_seq(x), evens_only(x), skip_functional(x)}) {
    const auto g = dc_witness(x, f, 200);
    ASSERT_EQ(g.size(), 200U);
    EXPECT_TRUE(check_dc_witness(f, g)) << f.name;
  }
}

TEST(DcWitness, BadSelectorIsNamed) {
  const auto x = naturals();
  auto f = f_seq(x);
  f.select = [](std::span<const Code>) { return Code{0}; };
  expect_error("bad-selector", [&] { dc_witness(x, f, 3); });
}

TEST(ModifiedFunctional, Examples) {
  const auto x = naturals();
  const auto f = f_seq(x);
  const auto same = modified_functional(x, f, {});
  EXPECT_EQ(same.select(CodeSeq{3}), f.select(CodeSeq{3}));
  const auto forced = modified_functional(x, f, {7, 2});
  EXPECT_EQ(forced.select(CodeSeq{7}), 2U);
  EXPECT_FALSE(forced.member(CodeSeq{7}, 0));
  EXPECT_TRUE(forced.member(CodeSeq{7, 2}, 0));
  expect_error("not-in-tree", [&] { modified_functional(x, evens_only(x), {1}); });
}

TEST(ModifiedFunctional, WitnessExtendsT) {
  const auto x = naturals();
  Rng rng(2);
  for (const auto& f : {f_seq(x), evens_only(x), skip_functional(x)}) {
    const auto tree = t_of_f(x, f);
    for (int trial = 0; trial < 40; ++trial) {
      // A random node: random walk down from the root along members.
      CodeSeq t;
      const auto len = rng.below(11);
      while (t.size() < len) {
        const Code candidate = f.select(t) + 2 * rng.below(4);
        t.push_back(f.member(t, candidate) ? candidate : f.select(t));
      }
      ASSERT_TRUE(tree.carrier(t));
      const auto ft = modified_functional(x, f, t);
      const auto g = dc_witness(x, ft, len + 5);
      ASSERT_TRUE(extends(g, t)) << f.name;
      EXPECT_TRUE(check_dc_witness(f, g));
    }
  }
}

TEST(Markers, EncodeDecode) {
  const auto x = pairs();
  for (std::size_t i = 0; i < 50; ++i) {
    const MarkedElement e{x.at(i), i % 7};
    EXPECT_EQ(decode_marked(x, encode_marked(x, e)), e);
  }
  const std::vector<MarkedElement> g{{5, 0}, {5, 1}};
  EXPECT_EQ(unmark(g), (CodeSeq{5, 5}));
  EXPECT_TRUE(unmark(std::vector<MarkedElement>{}).empty());
}

TEST(Markers, ConstantFunctional) {
  const auto x = naturals();
  const auto f = constant_functional(x);
  const auto g = dc_witness(marked_product(x), marker_reduction(x, f), 6);
  const auto marked = decode_witness(x, g);
  ASSERT_EQ(marked.size(), 6U);
  for (std::uint64_t i = 0; i < 6; ++i) EXPECT_EQ(marked[i], (MarkedElement{0, i}));
  EXPECT_TRUE(check_dc_witness(f, unmark(marked)));
}

TEST(Markers, SeqLiftHasZeroMarkers) {
  const auto x = naturals();
  const auto g = dc_witness(marked_product(x), marker_reduction(x, f_seq(x)), 20);
  for (const auto& e : decode_witness(x, g)) EXPECT_EQ(e.marker, 0U);
}

TEST(Markers, InconsistentSequencesUseFreshPairs) {
  const auto x = naturals();
  const auto g = marker_reduction(x, constant_functional(x));
  // (0, 1) first: the marker does not count earlier occurrences.
  const CodeSeq u{encode_marked(x, {0, 1})};
  EXPECT_TRUE(g.member(u, encode_marked(x, {4, 4})));
  EXPECT_FALSE(g.member(u, u[0]));
  EXPECT_EQ(g.select(u), 0U);  // first unused code of X x w, the pair (0, 0)
  // Consistent sequence: only (0, 1) is allowed next.
  const CodeSeq v{encode_marked(x, {0, 0})};
  EXPECT_TRUE(g.member(v, encode_marked(x, {0, 1})));
  EXPECT_FALSE(g.member(v, encode_marked(x, {0, 2})));
  EXPECT_FALSE(g.member(v, encode_marked(x, {1, 0})));
}

TEST(Markers, RepetitionFixtures) {
  for (const auto& name : builtin_set_names()) {
    const auto x = set_by_name(name);
    for (const auto& f : {constant_functional(x), window_functional(x), stairs_functional(x)}) {
      const auto g = dc_witness(marked_product(x), marker_reduction(x, f), 60);
      EXPECT_TRUE(is_injective(g));
      EXPECT_TRUE(check_dc_witness(f, unmark(decode_witness(x, g)))) << name << "/" << f.name;
    }
  }
}

TEST(WitnessJson, Shapes) {
  EXPECT_EQ(witness_json("seq", CodeSeq{0, 1}).dump(),
            R"({"functional":"seq","length":2,"values":[0,1]})");
  const std::vector<MarkedElement> g{{3, 0}, {3, 1}};
  EXPECT_EQ(witness_json("constant", std::span<const MarkedElement>(g)).dump(),
            R"({"functional":"constant","length":2,"markers":[0,1],"values":[3,3]})");
}

TEST(Functionals, ByName) {
  const auto x = naturals();
  for (const auto& n : functional_names()) EXPECT_EQ(functional_by_name(x, n).name, n);
  expect_error("unknown-functional", [&] { functional_by_name(x, "nope"); });
}
