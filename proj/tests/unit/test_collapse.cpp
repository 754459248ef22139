#include <gtest/gtest.h>

#include <set>

#include "forcing/collapse.hpp"
#include "forcing/countable_set.hpp"
#include "support.hpp"

using namespace forcing;
using forcing::test::expect_error;

TEST(CountableSet, BuiltinsAreInjective) {
  for (const auto& name : builtin_set_names()) {
    const auto x = set_by_name(name);
    std::set<Code> seen;
    for (std::size_t i = 0; i < 10000; ++i) {
      const Code c = x.at(i);
      ASSERT_TRUE(seen.insert(c).second) << name << " repeats at " << i;
      ASSERT_EQ(x.index_of(c), i) << name;
    }
  }
  expect_error("unknown-set", [] { set_by_name("reals"); });
}

TEST(CountableSet, Presentations) {
  const auto e = evens();
  EXPECT_EQ(e.at(3), 6U);
  EXPECT_FALSE(e.contains(7));
  expect_error("not-in-set", [&] { e.require_index(7); });
  const auto p = pairs();
  // Diagonal order: (0,0), (1,0), (0,1), ...
  EXPECT_EQ(p.at(0), 0U);
  EXPECT_EQ(p.at(1), Code{1} << 32);
  EXPECT_EQ(p.at(2), 1U);
  const CodeSeq used{0, 2, 4};
  EXPECT_EQ(e.first_unused(used), 6U);
}

TEST(InjSeq, RejectsRepeats) {
  EXPECT_EQ(InjSeq::from({3, 1, 4}).size(), 3U);
  try {
    InjSeq::from({3, 1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "not-injective");
    EXPECT_EQ(e.detail().at("position"), 2);
  }
}

TEST(CollPoset, OrderAndCarrier) {
  const auto coll = coll_poset(naturals());
  EXPECT_TRUE(coll.leq(CodeSeq{1, 2}, CodeSeq{1}));
  EXPECT_FALSE(coll.leq(CodeSeq{1}, CodeSeq{2}));
  EXPECT_FALSE(coll.carrier(CodeSeq{1, 1}));
  EXPECT_FALSE(coll_poset(evens()).carrier(CodeSeq{3}));
  EXPECT_EQ(coll.root, CodeSeq{});
}

TEST(CollPoset, EnumerationIsBijectiveOnShells) {
  // Shell b holds the injective index sequences over {0..b-1} that use b-1.
  std::set<std::vector<std::size_t>> seen;
  std::size_t expected = 1;  // the empty sequence
  for (std::size_t b = 1; b <= 5; ++b) {
    std::size_t all = 0, smaller = 0, f = 1, g = 1;
    for (std::size_t k = 1; k <= b; ++k) {
      f *= b - k + 1;
      all += f;
      if (k < b) {
        g *= b - k;
        smaller += g;
      }
    }
    expected += all - smaller;
  }
  for (std::size_t i = 0; i < expected; ++i) {
    const auto s = coll_index_sequence(i);
    ASSERT_TRUE(seen.insert(s).second) << "repeat at " << i;
    ASSERT_TRUE(is_injective(std::vector<Code>(s.begin(), s.end())));
    for (auto v : s) ASSERT_LT(v, 5U);
  }
  EXPECT_EQ(seen.size(), expected);
  // Every injective sequence over {0..4}: sum_k 5!/(5-k)! plus the empty one.
  EXPECT_EQ(expected, 1U + 5 + 20 + 60 + 120 + 120);
  EXPECT_EQ(coll_index_sequence(0), std::vector<std::size_t>{});
  EXPECT_EQ(coll_index_sequence(1), std::vector<std::size_t>{0});
  EXPECT_EQ(coll_index_sequence(2), std::vector<std::size_t>{1});
}

TEST(LevelDense, Examples) {
  const auto x = naturals();
  EXPECT_EQ(level_dense(x, 0).extend({4, 9}), (CodeSeq{4, 9}));
  EXPECT_EQ(level_dense(x, 3).extend({5}), (CodeSeq{5, 6, 7, 8}));
  EXPECT_EQ(level_dense(x, 2).extend({}), (CodeSeq{0, 1}));
  const auto e = evens();
  EXPECT_EQ(level_dense(e, 2).extend({4}), (CodeSeq{4, 6, 8}));
}

TEST(LevelDense, ExtenderContractOnSmallConditions) {
  const auto x = pairs();
  const auto coll = coll_poset(x);
  for (std::size_t k = 0; k < 400; ++k) {
    const auto p = *coll.enumerate(k);
    for (std::size_t i = 0; i <= 6; ++i) {
      const auto d = level_dense(x, i);
      const auto q = d.extend(p);
      ASSERT_TRUE(coll.leq(q, p));
      ASSERT_TRUE(coll.carrier(q));
      ASSERT_TRUE(d.member(q));
    }
  }
}

TEST(GenericToInjection, Chains) {
  const auto x = naturals();
  EXPECT_EQ(generic_to_injection({"c", {CodeSeq{}}, {}}).size(), 0U);
  EXPECT_EQ(generic_to_injection({"c", {CodeSeq{}, {7}, {7, 3}}, {}}).items(), (CodeSeq{7, 3}));
  expect_error("not-a-chain", [] { generic_to_injection({"c", {CodeSeq{1}, {2}}, {}}); });

  const auto run = rasiowa_sikorski(coll_poset(x), level_family(x), CodeSeq{}, 100);
  const auto g = generic_to_injection(run);
  EXPECT_GE(g.size(), 99U);
  EXPECT_TRUE(is_injective(g.items()));
}

TEST(InjectionToGeneric, RoundTrip) {
  const auto x = naturals();
  const auto zero = injection_to_generic(x, [](std::size_t i) { return Code(i); }, 0);
  EXPECT_EQ(zero.chain, std::vector<CodeSeq>{CodeSeq{}});

  const auto three = injection_to_generic(x, [](std::size_t i) { return Code(i); }, 3);
  EXPECT_EQ(three.chain, (std::vector<CodeSeq>{{}, {0}, {0, 1}, {0, 1, 2}}));
  ASSERT_EQ(three.met.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(level_dense(x, i).member(three.chain[three.met[i].position]));
  }

  const auto run = rasiowa_sikorski(coll_poset(x), level_family(x), CodeSeq{}, 20);
  const auto g = generic_to_injection(run);
  const auto back =
      injection_to_generic(x, [&](std::size_t i) { return g[i]; }, g.size());
  EXPECT_EQ(generic_to_injection(back), g);
  expect_error("not-injective",
               [&] { injection_to_generic(x, [](std::size_t i) { return Code(i % 2); }, 3); });
}

TEST(InjSeqJson, RoundTrip) {
  const auto f = InjSeq::from({4, 0, 9});
  const auto j = injseq_json("nat", f);
  EXPECT_EQ(j.dump(), R"({"items":[4,0,9],"set":"nat"})");
  EXPECT_EQ(injseq_from_json(j), f);
  expect_error("not-injective", [] { injseq_from_json(nlohmann::json::parse(R"({"items":[1,1]})")); });
}
