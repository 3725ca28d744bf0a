#include <gtest/gtest.h>

#include <map>
#include <set>

#include "starmap/counting.hpp"
#include "starmap/error.hpp"
#include "starmap/oracle.hpp"
#include "starmap/serialize.hpp"
#include "starmap/structures.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace starmap {
namespace {

using K = SlotKind;

TEST(Map, Example21) {
  const BlackPartitionedMap m = fixtures::example21_map();
  EXPECT_EQ(m.alpha().to_cycle_string(), "(1 2 6 7 4 5 3)");
  EXPECT_TRUE(m.is_star());
  EXPECT_EQ(type_of_map(m), (Partition{4, 2, 1}));
}

TEST(Map, IdentityWithSingletons) {
  const BlackPartitionedMap m = new_map(Permutation(3), SetPartition::singletons(3));
  EXPECT_EQ(m.alpha(), canonical_long_cycle(3));
  EXPECT_TRUE(m.is_star());
}

TEST(Map, RejectsSplitCycle) {
  try {
    new_map(Permutation::from_images({2, 1, 3}), SetPartition::singletons(3));
    FAIL() << "expected rejection";
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("(1 2)"), std::string::npos) << what;
    EXPECT_NE(what.find("{1}"), std::string::npos) << what;
    EXPECT_NE(what.find("{2}"), std::string::npos) << what;
  }
  EXPECT_THROW(new_map(Permutation(3), SetPartition::singletons(4)), InvalidInput);
}

TEST(Map, EnumerationMatchesCounts) {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      BigInt all = 0;
      BigInt stars = 0;
      for_each_map(lambda, false, [&](const BlackPartitionedMap& m) {
        ++all;
        EXPECT_EQ(m.type(), lambda);
        if (m.is_star()) ++stars;
      });
      BigInt only_stars = 0;
      for_each_map(lambda, true, [&](const BlackPartitionedMap&) { ++only_stars; });
      EXPECT_EQ(all, count_C(lambda));
      EXPECT_EQ(stars, count_D(lambda));
      EXPECT_EQ(only_stars, stars);
    }
  }
}

TEST(Tree, Validation) {
  EXPECT_NO_THROW(StarThornTree({K::Edge, K::Thorn}, {1}));
  EXPECT_THROW(StarThornTree({K::Edge, K::Thorn}, {0}), InvalidInput);
  EXPECT_THROW(StarThornTree({K::Edge, K::Edge}, {1}), InvalidInput);
  EXPECT_THROW(StarThornTree({K::Edge}, {-1}), InvalidInput);
  const StarThornTree tree({K::Edge, K::Thorn}, {1});
  EXPECT_THROW(PermutedThornTree(tree, {}), InvalidInput);
  EXPECT_THROW(PermutedThornTree(tree, {1}), InvalidInput);
  const StarThornTree two({K::Thorn, K::Edge, K::Thorn}, {2});
  EXPECT_THROW(PermutedThornTree(two, {0, 0}), InvalidInput);
}

TEST(Tree, Orientation) {
  // One vertex with thorns counter-clockwise t0 t1 t2: the clockwise reading
  // goes t2 t1 t0 and ends on the edge.
  const StarThornTree tree({K::Edge, K::Thorn, K::Thorn, K::Thorn}, {3});
  const std::vector<BlackElement> cw{{0, 2}, {0, 1}, {0, 0}, {0, BlackElement::kEdge}};
  EXPECT_EQ(tree.clockwise(0), cw);
  const std::vector<BlackElement> ccw{{0, 0}, {0, 1}, {0, 2}};
  EXPECT_EQ(tree.counter_clockwise(0), ccw);
  EXPECT_EQ(type_of_tree(tree), Partition{4});
}

TEST(Tree, BlackThornOrdinals) {
  const StarThornTree tree({K::Edge, K::Thorn, K::Edge, K::Thorn, K::Thorn, K::Edge}, {1, 0, 2});
  for (int o = 0; o < tree.thorn_count(); ++o) EXPECT_EQ(tree.black_thorn_ordinal(tree.black_thorn_at(o)), o);
  EXPECT_EQ(tree.black_thorn_at(1), (BlackElement{2, 0}));
  EXPECT_THROW(tree.black_thorn_at(3), InvalidInput);
  EXPECT_THROW(tree.black_thorn_ordinal({1, 0}), InvalidInput);
}

TEST(Tree, AllPermutedTreesSmallCounts) {
  EXPECT_EQ(all_permuted_trees(Partition{1}).size(), 1u);
  EXPECT_EQ(all_permuted_trees(Partition{2, 1}).size(), 6u);
  EXPECT_EQ(all_permuted_trees(Partition{2, 2}).size(), 12u);
}

TEST(Tree, AllPermutedTreesMatchOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::set<PermutedThornTree> seen;
      for_each_permuted_tree(lambda, [&](const PermutedThornTree& t) {
        EXPECT_EQ(t.type(), lambda);
        // Rebuilding from parts re-runs every validator.
        EXPECT_EQ(PermutedThornTree(StarThornTree(t.tree().white(), t.tree().black_thorns()), t.sigma()), t);
        seen.insert(t);
      });
      const BigInt want = factorial(static_cast<unsigned>(n - lambda.length())) * enumerate_ST(lambda);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(seen.size())), want) << lambda.to_string();
      EXPECT_EQ(BigInt(static_cast<unsigned long>(all_star_thorn_trees(lambda).size())), count_ST(lambda));
    }
  }
  EXPECT_THROW(all_permuted_trees(Partition{7}), BudgetExceeded);
}

TEST(Tree, LabeledValidation) {
  const StarThornTree tree({K::Edge, K::Thorn}, {1});
  EXPECT_NO_THROW(LabeledThornTree(tree, {2, 1}, {{1}}));
  EXPECT_THROW(LabeledThornTree(tree, {2, 2}, {{1}}), InvalidInput);
  EXPECT_THROW(LabeledThornTree(tree, {2, 1}, {{2}}), InvalidInput);
  EXPECT_THROW(LabeledThornTree(tree, {2, 1}, {{1, 2}}), InvalidInput);
  const LabeledThornTree labeled(tree, {2, 1}, {{1}});
  EXPECT_EQ(labeled.right_to_left(), (std::vector<int>{1, 2}));
  EXPECT_EQ(labeled.clockwise_labels(0), (std::vector<int>{1, 2}));
  EXPECT_EQ(labeled.strip().sigma(), std::vector<int>{0});
}

TEST(Lift, OnSingleVertexGivesNextType) {
  for (int n = 1; n <= 4; ++n) {
    for_each_permuted_tree(Partition{n}, [&](const PermutedThornTree& t) {
      for (int w = 0; w <= n; ++w) {
        for (int c = 0; c <= n - 1; ++c) EXPECT_EQ(lift(t, {w, 0, c}).type(), Partition{n + 1});
      }
    });
  }
}

TEST(Lift, RejectsBadCoordinates) {
  const PermutedThornTree t = all_permuted_trees(Partition{2, 1}).front();
  EXPECT_THROW(lift(t, {4, 0, 0}), InvalidInput);
  EXPECT_THROW(lift(t, {0, 2, 0}), InvalidInput);
  EXPECT_THROW(lift(t, {0, 0, 3}), InvalidInput);
  EXPECT_THROW(drop(t, {0, BlackElement::kEdge}), InvalidInput);
}

// Lifting is a bijection between (tree of type lambda, site on a
// vertex of degree i) and (tree of type lambda^{up(i)}, marked thorn on a
// vertex of degree i+1).
TEST(Lift, BijectionWithMarkedThorns) {
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int i : lambda.distinct_parts()) {
        const Partition mu = partition_up(lambda, i);
        std::set<std::pair<PermutedThornTree, BlackElement>> lifted;
        BigInt sites = 0;
        for_each_permuted_tree(lambda, [&](const PermutedThornTree& t) {
          for (int v = 0; v < t.tree().black_count(); ++v) {
            if (t.tree().degree(v) != i) continue;
            for (int w = 0; w <= n; ++w) {
              for (int c = 0; c <= t.tree().thorns_of(v); ++c) {
                ++sites;
                const LiftSite site{w, v, c};
                const PermutedThornTree up = lift(t, site);
                ASSERT_EQ(up.type(), mu);
                const auto [down, back] = drop(up, {v, c});
                EXPECT_EQ(down, t);
                EXPECT_EQ(back, site);
                lifted.insert({up, {v, c}});
              }
            }
          }
        });
        BigInt marked = 0;
        for_each_permuted_tree(mu, [&](const PermutedThornTree& t) {
          for (int v = 0; v < t.tree().black_count(); ++v) {
            if (t.tree().degree(v) != i + 1) continue;
            for (int c = 0; c < t.tree().thorns_of(v); ++c) {
              ++marked;
              EXPECT_EQ(lifted.count({t, {v, c}}), 1u);
              const auto [down, site] = drop(t, {v, c});
              EXPECT_EQ(lift(down, site), t);
            }
          }
        });
        EXPECT_EQ(BigInt(static_cast<unsigned long>(lifted.size())), sites);
        EXPECT_EQ(sites, marked);
        const int p = lambda.length();
        EXPECT_EQ(sites, factorial(static_cast<unsigned>(n - p)) * count_ST(lambda) * (n + 1) * i * lambda.multiplicity(i));
      }
    }
  }
}

TEST(Sketch, RoundTrip) {
  gen::Engine rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const PermutedThornTree t = gen::permuted_tree(rng, gen::partition(rng, gen::uniform(rng, 1, 9)));
    EXPECT_EQ(from_sketch(to_sketch(t)), t);
  }
}

TEST(Serialize, MapJson) {
  const BlackPartitionedMap m = fixtures::example21_map();
  const std::string text = serialize(m);
  EXPECT_EQ(text, R"({"n":7,"beta":[1,5,7,4,2,6,3],"pi":[[1,3,6,7],[2,5],[4]]})");
  EXPECT_EQ(deserialize_map(text), m);
}

TEST(Serialize, TreeJson) {
  const PermutedThornTree t = fixtures::ex1_tree();
  const std::string text = serialize(t);
  EXPECT_EQ(text,
            R"({"n":5,"white":[{"edge":0},{"thorn":0},{"edge":1},{"thorn":1},{"thorn":2}],)"
            R"("blacks":[{"thorns":1},{"thorns":2}],"sigma":[[1,[0,0]],[3,[1,1]],[4,[1,0]]]})");
  EXPECT_EQ(deserialize_tree(text), t);
  EXPECT_EQ(serialize(deserialize_tree(text)), text);
}

TEST(Serialize, RandomTreesRoundTrip) {
  gen::Engine rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const PermutedThornTree t = gen::permuted_tree(rng, gen::partition(rng, gen::uniform(rng, 1, 10)));
    const std::string text = serialize(t);
    EXPECT_EQ(deserialize_tree(text), t);
    EXPECT_EQ(serialize(deserialize_tree(text)), text);
  }
}

TEST(Serialize, RandomMapsRoundTrip) {
  gen::Engine rng(100);
  for (int trial = 0; trial < 200; ++trial) {
    const BlackPartitionedMap m = gen::star_map(rng, gen::uniform(rng, 1, 9));
    EXPECT_EQ(deserialize_map(serialize(m)), m);
  }
}

TEST(Serialize, SigmaOrderIsIrrelevantOnInput) {
  const std::string shuffled =
      R"({"n":5,"white":[{"edge":0},{"thorn":0},{"edge":1},{"thorn":1},{"thorn":2}],)"
      R"("blacks":[{"thorns":1},{"thorns":2}],"sigma":[[4,[1,0]],[1,[0,0]],[3,[1,1]]]})";
  EXPECT_EQ(deserialize_tree(shuffled), fixtures::ex1_tree());
}

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

TEST(Serialize, SyntaxErrorsCarryByteOffset) {
  EXPECT_EQ(where_of([] { deserialize_map(R"({"n":3,"beta":[1,2)"); }), "byte 19");
  EXPECT_EQ(where_of([] { deserialize_map("{\"n\":3,,}"); }), "byte 8");
}

TEST(Serialize, SchemaErrorsCarryPointer) {
  EXPECT_EQ(where_of([] { deserialize_map(R"({"n":3,"beta":[1,2,"x"],"pi":[[1],[2],[3]]})"); }), "/beta/2");
  EXPECT_EQ(where_of([] { deserialize_map(R"({"n":3,"beta":[1,2,3]})"); }), "/pi");
  EXPECT_EQ(where_of([] { deserialize_map(R"({"n":2,"beta":[1,2,3],"pi":[[1]]})"); }), "/beta");
  EXPECT_EQ(where_of([] { deserialize_map(R"({"n":1,"beta":[1],"pi":[[1]],"x":0})"); }), "/x");
  EXPECT_EQ(where_of([] {
              deserialize_tree(R"({"n":2,"white":[{"edge":0},{"thorn":1}],"blacks":[{"thorns":1}],"sigma":[[1,[0,0]]]})");
            }),
            "/white/1/thorn");
  EXPECT_EQ(where_of([] {
              deserialize_tree(R"({"n":2,"white":[{"edge":0},{"thorn":0}],"blacks":[{"thorns":1}],"sigma":[[0,[0,0]]]})");
            }),
            "/sigma/0/0");
  EXPECT_EQ(where_of([] {
              deserialize_tree(R"({"n":2,"white":[{"edge":0},{"thorn":0}],"blacks":[{"thorns":1}],"sigma":[]})");
            }),
            "/sigma");
  EXPECT_EQ(where_of([] { detect_kind(Json::parse(R"({"n":1})")); }), "/");
}

TEST(Serialize, DomainErrorsAreInvalidInput) {
  EXPECT_THROW(deserialize_map(R"({"n":2,"beta":[2,1],"pi":[[1],[2]]})"), InvalidInput);
  EXPECT_THROW(deserialize_map(R"({"n":2,"beta":[1,1],"pi":[[1,2]]})"), InvalidInput);
  EXPECT_THROW(
      deserialize_tree(R"({"n":2,"white":[{"edge":0},{"thorn":0}],"blacks":[{"thorns":1}],"sigma":[[1,[0,5]]]})"),
      InvalidInput);
}

TEST(Serialize, ElementJson) {
  EXPECT_EQ(to_json(BlackElement{2, 1}).dump(), R"({"vertex":2,"thorn":1})");
  EXPECT_EQ(to_json(BlackElement{0, BlackElement::kEdge}).dump(), R"({"vertex":0,"edge":true})");
  EXPECT_EQ(element_from_json(Json::parse(R"({"vertex":2,"thorn":1})")), (BlackElement{2, 1}));
  EXPECT_THROW(element_from_json(Json::parse(R"({"vertex":2})")), ParseError);
}

}  // namespace
}  // namespace starmap
