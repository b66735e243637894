#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ranklab/error.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/rng.hpp"

using namespace ranklab;

namespace {

VertexId V(const char* s) { return VertexId(s); }

}  // namespace

TEST(VertexId, RejectsBadTokens) {
  EXPECT_THROW(VertexId(""), InvalidInput);
  EXPECT_THROW(VertexId("a b"), InvalidInput);
  EXPECT_THROW(VertexId("a#"), InvalidInput);
  EXPECT_THROW(VertexId("tab\t"), InvalidInput);
  EXPECT_NO_THROW(VertexId("(0,1)"));
}

TEST(Edge, NeedsTwoEndpoints) {
  EXPECT_THROW(Edge("a", "a"), InvalidInput);
  EXPECT_EQ(Edge("b", "a"), Edge("a", "b"));
  EXPECT_EQ(Edge("a", "b").other(V("a")), V("b"));
  EXPECT_THROW(Edge("a", "b").other(V("c")), NotAMember);
}

TEST(Neighbors, Examples) {
  const Graph g{{"a", "b"}, {"a", "c"}};
  EXPECT_EQ(neighbors(g, V("a")), (VertexSet{V("b"), V("c")}));
  EXPECT_TRUE(neighbors(Graph{{"a", "b"}}, V("c")).empty());
  EXPECT_EQ(neighbors(fixtures::fig1().graph(), V("u1")), (VertexSet{V("v1"), V("v3"), V("v5")}));
}

TEST(IsBipartite, Examples) {
  EXPECT_TRUE(is_bipartite(Graph{{"v", "u"}}, {V("v")}, {V("u")}));
  EXPECT_FALSE(is_bipartite(Graph{{"v", "v'"}}, {V("v"), V("v'")}, {}));
  const auto f = fixtures::fig1();
  EXPECT_TRUE(is_bipartite(f.graph(), f.sigma().members(), f.pi().members()));
  EXPECT_FALSE(is_bipartite(Graph{{"a", "b"}}, {V("a")}, {}));  // b in neither party
}

TEST(IsMatching, Examples) {
  EXPECT_TRUE(is_matching({}));
  EXPECT_TRUE(is_matching({Edge("a", "b"), Edge("c", "d")}));
  EXPECT_FALSE(is_matching({Edge("a", "b"), Edge("a", "c")}));
  EXPECT_THROW(Matching({Edge("a", "b"), Edge("a", "c")}), InvalidInput);
}

TEST(IsMaximalMatching, Examples) {
  EXPECT_TRUE(is_maximal_matching(Graph{{"a", "b"}}, Matching{{"a", "b"}}));
  EXPECT_FALSE(is_maximal_matching(Graph{{"a", "b"}, {"c", "d"}}, Matching{{"a", "b"}}));
  EXPECT_THROW(is_maximal_matching(Graph{{"a", "b"}}, Matching{{"c", "d"}}), PreconditionError);
  const auto f = fixtures::fig1();
  // checked edge by edge against the matching's vertex set
  const Matching m = online_match(f);
  for (const auto& e : f.graph()) EXPECT_TRUE(m.covers(e.first()) || m.covers(e.second())) << e;
  EXPECT_TRUE(is_maximal_matching(f.graph(), m));
}

TEST(Partner, Examples) {
  const Matching m{{"a", "b"}};
  EXPECT_EQ(partner(m, V("a")), V("b"));
  EXPECT_FALSE(partner(m, V("c")).has_value());
  EXPECT_EQ(partner(fixtures::fig5_perfect(), V("v3")), V("u1"));
}

TEST(RemoveVertices, Examples) {
  const Graph g{{"a", "b"}, {"c", "d"}};
  EXPECT_EQ(remove_vertices(g, {V("a")}), (Graph{{"c", "d"}}));
  EXPECT_EQ(remove_vertices(g, {}), g);
  const auto f = fixtures::fig1();
  const Graph h = remove_vertices(f.graph(), {V("u2")});
  EXPECT_EQ(h.size(), f.graph().size() - 3);
  EXPECT_FALSE(h.vertices().count(V("u2")));
  for (const auto& e : h) EXPECT_TRUE(f.graph().contains(e));
}

TEST(SymmetricDifference, Examples) {
  EXPECT_TRUE(symmetric_difference({Edge("a", "b")}, {Edge("a", "b")}).empty());
  EXPECT_EQ(symmetric_difference({}, {Edge("a", "b")}), (EdgeSet{Edge("a", "b")}));
  const auto f = fixtures::fig1();
  const Matching m = online_match(f);
  const Matching m2 = online_match(remove_vertices(f.graph(), {V("u2")}), f.pi(), f.sigma());
  const EdgeSet expected{Edge("u2", "v2"), Edge("u3", "v2"), Edge("u3", "v4"),
                         Edge("u5", "v4"), Edge("u5", "v5"), Edge("u6", "v5")};
  EXPECT_EQ(symmetric_difference(m.edges(), m2.edges()), expected);
}

TEST(VertexPath, DistinctAndEdges) {
  EXPECT_THROW(VertexPath({"a", "b", "a"}), InvalidInput);
  EXPECT_TRUE(VertexPath({"a"}).edges().empty());
  EXPECT_TRUE(VertexPath().edges().empty());
  const VertexPath p{"a", "b", "c"};
  ASSERT_EQ(p.edges().size(), 2U);
  EXPECT_EQ(p.edges()[1], Edge("b", "c"));
  EXPECT_EQ(to_string(p), "[a,b,c]");
  EXPECT_EQ(p.reversed(), (VertexPath{"c", "b", "a"}));
}

TEST(IsAlternatingPath, Examples) {
  EXPECT_TRUE(is_alternating_path(VertexPath{"a", "b"}, {}));
  EXPECT_TRUE(is_alternating_path(VertexPath{"v1", "u1", "v2"}, {Edge("v1", "u1")}));
  EXPECT_FALSE(is_alternating_path(VertexPath{"a", "b", "c"}, {Edge("a", "b"), Edge("b", "c")}));
  // phase starting outside the set
  EXPECT_TRUE(is_alternating_path(VertexPath{"a", "b", "c", "d"}, {Edge("b", "c")}));
  EXPECT_FALSE(is_alternating_path(VertexPath{"a", "b", "c", "d"}, {Edge("c", "d")}));
}

TEST(IsAugmentingPath, Examples) {
  EXPECT_TRUE(is_augmenting_path(VertexPath{"a", "b"}, Matching{}));
  EXPECT_TRUE(is_augmenting_path(VertexPath{"v2", "u1", "v1", "u2"}, Matching{{"u1", "v1"}}));
  EXPECT_FALSE(is_augmenting_path(VertexPath{"a", "b"}, Matching{{"b", "c"}}));
  EXPECT_FALSE(is_augmenting_path(VertexPath{"a"}, Matching{}));
}

TEST(FindAugmentingPath, Examples) {
  auto p = find_augmenting_path(Graph{{"a", "b"}}, Matching{});
  ASSERT_TRUE(p);
  EXPECT_TRUE(*p == (VertexPath{"a", "b"}) || *p == (VertexPath{"b", "a"}));
  EXPECT_FALSE(find_augmenting_path(Graph{{"a", "b"}}, Matching{{"a", "b"}}));

  const Graph g = fixtures::two_by_two().graph();
  const Matching m{{"u1", "v1"}};
  // exhaustive path enumeration: exactly one augmenting path up to reversal
  std::vector<VertexPath> augmenting;
  oracles::for_each_path(g, [&](const std::vector<VertexId>& vs) {
    VertexPath path(vs);
    if (is_augmenting_path(path, m)) augmenting.push_back(path);
  });
  ASSERT_EQ(augmenting.size(), 2U);
  const VertexPath expected{"v2", "u1", "v1", "u2"};
  for (const auto& a : augmenting) EXPECT_TRUE(a == expected || a == expected.reversed());
  p = find_augmenting_path(g, m);
  ASSERT_TRUE(p);
  EXPECT_TRUE(*p == expected || *p == expected.reversed()) << *p;
}

TEST(FindAugmentingPath, RejectsOddCycle) {
  EXPECT_THROW(find_augmenting_path(Graph{{"a", "b"}, {"b", "c"}, {"a", "c"}}, Matching{}), InvalidInput);
}

TEST(Augment, RequiresAugmentingPath) {
  const Matching m{{"u1", "v1"}};
  const Matching bigger = augment(m, VertexPath{"v2", "u1", "v1", "u2"});
  EXPECT_EQ(bigger, (Matching{{"u1", "v2"}, {"u2", "v1"}}));
  EXPECT_THROW(augment(m, VertexPath{"u1", "v1"}), PreconditionError);
}

TEST(MaxCardMatching, Examples) {
  EXPECT_EQ(max_card_matching(Graph{{"a", "b"}}), (Matching{{"a", "b"}}));
  EXPECT_EQ(max_card_matching(fixtures::two_by_two().graph()).size(), 2U);
  EXPECT_EQ(max_card_matching(Graph{}).size(), 0U);
  const Graph f = fixtures::fig1().graph();
  // v6 has no edges, so 5 is the most possible; brute force agrees
  EXPECT_EQ(oracles::max_matching_size(f), 5U);
  EXPECT_EQ(max_card_matching(f).size(), 5U);
}

TEST(MakePerfectMatching, Examples) {
  EXPECT_EQ(make_perfect_matching(Graph{{"a", "b"}}, Matching{{"a", "b"}}), (Graph{{"a", "b"}}));
  const Graph g = fixtures::two_by_two().graph();
  EXPECT_EQ(make_perfect_matching(g, Matching{{"u1", "v2"}, {"u2", "v1"}}), g);
  EXPECT_EQ(make_perfect_matching(g, Matching{{"u1", "v1"}}), (Graph{{"u1", "v1"}}));
}

class GraphProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GraphProperties, MatchingMachinery) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    const std::uint64_t seed = GetParam() * 1000 + k;
    SplitMix64 rng(seed);
    const std::size_t a = 1 + uniform_below(rng, 4), b = 1 + uniform_below(rng, 4);
    const Graph g = gen_random(a, b, 0.2 + 0.6 * uniform01(rng), seed).graph();

    const Matching max = max_card_matching(g);
    ASSERT_TRUE(is_subset(max.edges(), g.edges()));
    EXPECT_FALSE(find_augmenting_path(g, max)) << "seed " << seed;
    EXPECT_EQ(max.size(), oracles::max_matching_size(g)) << "seed " << seed;

    // every smaller matching can be augmented, by exactly one edge
    oracles::for_each_matching(g, [&](const EdgeSet& s) {
      const Matching m(s);
      auto p = find_augmenting_path(g, m);
      if (g.size() <= 9) {
        bool brute = false;
        oracles::for_each_path(g, [&](const std::vector<VertexId>& vs) {
          if (is_augmenting_path(VertexPath(vs), m)) brute = true;
        });
        ASSERT_EQ(p.has_value(), brute) << "seed " << seed;
      }
      ASSERT_EQ(p.has_value(), m.size() < max.size());
      if (p) {
        EXPECT_TRUE(is_path(g, *p));
        EXPECT_EQ(augment(m, *p).size(), m.size() + 1);
      }
    });

    const Graph h = make_perfect_matching(g, max);
    EXPECT_TRUE(is_subset(max.edges(), h.edges()));
    EXPECT_TRUE(is_perfect_matching(h, max));
    EXPECT_EQ(oracles::max_matching_size(h), max.size());
  }
}

TEST_P(GraphProperties, SymmetricDifferenceLaws) {
  SplitMix64 rng(GetParam());
  auto random_set = [&] {
    EdgeSet s;
    for (const char* a : {"a", "b", "c"}) {
      for (const char* b : {"x", "y", "z"}) {
        if (rng() & 1U) s.emplace(VertexId(a), VertexId(b));
      }
    }
    return s;
  };
  for (int k = 0; k < 50; ++k) {
    const EdgeSet x = random_set(), y = random_set(), z = random_set();
    EXPECT_EQ(symmetric_difference(x, y), symmetric_difference(y, x));
    EXPECT_EQ(symmetric_difference(symmetric_difference(x, y), z),
              symmetric_difference(x, symmetric_difference(y, z)));
    EXPECT_EQ(symmetric_difference(x, {}), x);
    EXPECT_TRUE(symmetric_difference(x, x).empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Values(1, 2, 3));
