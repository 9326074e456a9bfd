#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitmerge/examples.hpp"
#include "support.hpp"

using namespace splitmerge;
using namespace splitmerge::worked;

namespace {

RegularVine vine(std::size_t n, std::initializer_list<std::string_view> ws) {
  return RegularVine::from_words(GroundSet::letters(n), ws);
}

}  // namespace

TEST(VineValidate, ValidExamples) {
  EXPECT_TRUE(validate_vine(k4_vine()).ok());
  EXPECT_TRUE(validate_vine(k5_vine()).ok());
  EXPECT_TRUE(validate_vine(vine(2, {"a", "b", "ab"})).ok());
  EXPECT_TRUE(validate_vine(vine(1, {"a"})).ok());
}

TEST(VineValidate, ReplacingBdByCdGivesTheDVine) {
  const auto v = vine(4, {"a", "b", "c", "d", "ab", "bc", "cd", "abc", "bcd", "abcd"});
  EXPECT_TRUE(validate_vine(v).ok());
  EXPECT_TRUE(is_d_vine(v));
}

TEST(VineValidate, EachAxiomHasAWitness) {
  EXPECT_TRUE(validate_vine(vine(4, {"b", "c", "d", "ab", "bc", "bd", "abc", "bcd", "abcd"})).has("vine.atoms"));
  EXPECT_TRUE(
      validate_vine(vine(4, {"a", "b", "c", "d", "ab", "bc", "bd", "cd", "abc", "bcd", "abcd"})).has("vine.rank_sizes"));
  const auto broken = validate_vine(vine(4, {"a", "b", "c", "d", "ab", "ad", "bc", "abc", "bcd", "abcd"}));
  EXPECT_TRUE(broken.has("vine.graded"));
  EXPECT_TRUE(validate_vine(vine(4, {"a", "b", "c", "d", "ab", "bc", "bd", "abc", "acd", "abcd"})).has("vine.two_covers"));
  EXPECT_TRUE(validate_vine(vine(4, {"a", "b", "c", "d", "ab", "ac", "bc", "abc", "abd", "abcd"})).has("vine.tree"));
  const auto prox = validate_vine(
      vine(5, {"a", "b", "c", "d", "e", "ac", "bc", "bd", "ce", "abc", "ace", "bde", "abce", "abde", "abcde"}));
  EXPECT_TRUE(prox.has("vine.proximity"));
  EXPECT_FALSE(prox.ok());
}

TEST(VineConstruct, RejectsBadNodes) {
  const auto g = GroundSet::letters(3);
  EXPECT_THROW(RegularVine(g, {0}), InputError);
  EXPECT_THROW(RegularVine(g, {1, 1}), InputError);
  EXPECT_THROW(RegularVine(g, {Mask{1} << 5}), InputError);
}

TEST(AssociatedTree, IntroFirstLevelIsAStarAtB) {
  const auto t = associated_tree(k4_vine(), 1);
  const auto g = k4_vine().ground();
  ASSERT_EQ(t.edges.size(), 3u);
  for (auto [x, y] : t.edges) EXPECT_TRUE(x == g.parse_subset("b") || y == g.parse_subset("b"));
  const auto top = associated_tree(k4_vine(), 3);
  EXPECT_EQ(top.vertices.size(), 2u);
  EXPECT_EQ(top.edges.size(), 1u);
  EXPECT_THROW(associated_tree(k4_vine(), 4), ArgumentError);
}

TEST(AssociatedTree, FiveVineFirstLevelHasDegreeThreeAtC) {
  const auto t = associated_tree(k5_vine(), 1);
  const Mask c = k5_vine().ground().parse_subset("c");
  int deg = 0;
  for (auto [x, y] : t.edges) deg += (x == c) + (y == c);
  EXPECT_EQ(deg, 3);
}

TEST(VineShape, DAndCFlags) {
  EXPECT_FALSE(is_d_vine(k5_vine()));
  EXPECT_FALSE(is_c_vine(k5_vine()));
  EXPECT_TRUE(is_c_vine(k4_vine()));
  EXPECT_FALSE(is_d_vine(k4_vine()));
  const auto two = vine(2, {"a", "b", "ab"});
  EXPECT_TRUE(is_d_vine(two));
  EXPECT_TRUE(is_c_vine(two));
}

TEST(VineShape, DVineFlagMatchesPathOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : testing_support::all_vines(n)) ASSERT_EQ(is_d_vine(v), oracle::all_trees_are_paths(v));
}

TEST(VineChains, IntroChains) {
  const auto v = k4_vine();
  const auto chains = maximal_chains(v);
  ASSERT_EQ(chains.size(), 8u);
  const auto& g = v.ground();
  const std::vector<Mask> want{g.parse_subset("c"), g.parse_subset("bc"), g.parse_subset("bcd"), g.parse_subset("abcd")};
  EXPECT_NE(std::find(chains.begin(), chains.end(), want), chains.end());
  EXPECT_EQ(maximal_chains(vine(1, {"a"})).size(), 1u);
}

TEST(VineChains, FigureChainSpellsCdbea) {
  const auto v = k5_vine();
  const auto& g = v.ground();
  const std::vector<Mask> chain{g.parse_subset("c"), g.parse_subset("cd"), g.parse_subset("bcd"), g.parse_subset("bcde"),
                                g.full()};
  const auto chains = maximal_chains(v);
  EXPECT_EQ(chains.size(), 16u);
  EXPECT_NE(std::find(chains.begin(), chains.end(), chain), chains.end());
  EXPECT_EQ(g.format(chain_to_ordering(chain)), "cdbea");
}

TEST(VineChains, MatchPermutationOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : testing_support::all_vines(n)) {
      std::set<Ordering> got;
      for (const auto& c : maximal_chains(v)) got.insert(chain_to_ordering(c));
      ASSERT_EQ(got, oracle::chain_orderings(v));
    }
}

TEST(VineChains, ChainCountsFromAtoms) {
  const auto d41 = domain_to_vine(four_domain_path());
  const auto d42 = domain_to_vine(four_domain_star());
  EXPECT_EQ(chain_counts_from_atoms(d41), (std::vector<std::uint64_t>{1, 3, 3, 1}));
  EXPECT_EQ(chain_counts_from_atoms(d42), (std::vector<std::uint64_t>{4, 2, 1, 1}));
  EXPECT_EQ(chain_counts_from_atoms(k4_vine()), (std::vector<std::uint64_t>{1, 4, 2, 1}));
}

TEST(VineJoin, Examples) {
  const auto v5 = k5_vine();
  EXPECT_EQ(join_node(v5, "a", "d"), v5.ground().parse_subset("abcd"));
  EXPECT_EQ(join_node(vine(2, {"a", "b", "ab"}), "a", "b"), Mask{3});
  EXPECT_EQ(join_node(k4_vine(), "c", "d"), k4_vine().ground().parse_subset("bcd"));
  EXPECT_THROW(join_node(k4_vine(), "a", "a"), ArgumentError);
}

TEST(VineRichness, Examples) {
  EXPECT_EQ(richness_via_vine(domain_to_vine(four_domain_path())), 3);
  EXPECT_EQ(richness_via_vine(domain_to_vine(four_domain_star())), 2);
  EXPECT_EQ(richness_via_vine(vine(1, {"a"})), 1);
}

TEST(VineSplit, FigureExample) {
  const auto s = split_vine(k5_vine());
  EXPECT_EQ(s.a1, "a");
  EXPECT_EQ(s.a2, "e");
  EXPECT_EQ(s.first, RegularVine::from_words(GroundSet({"b", "c", "d", "e"}),
                                             {"b", "c", "d", "e", "bc", "cd", "ce", "bcd", "cde", "bcde"}));
  EXPECT_EQ(s.second, RegularVine::from_words(GroundSet({"a", "b", "c", "d"}),
                                              {"a", "b", "c", "d", "ab", "bc", "cd", "abc", "bcd", "abcd"}));
  EXPECT_EQ(s.common, RegularVine::from_words(GroundSet({"b", "c", "d"}), {"b", "c", "d", "bc", "cd", "bcd"}));
  EXPECT_EQ(merge_vines(s.first, s.second), k5_vine());
}

TEST(VineSplit, TwoElements) {
  const auto s = split_vine(vine(2, {"a", "b", "ab"}));
  EXPECT_EQ(s.first.size(), 1);
  EXPECT_EQ(s.common.size(), 0);
  EXPECT_TRUE(s.common.nodes().empty());
}

TEST(VineSplit, PartsOfAllFiveElementVinesAreValid) {
  for (const auto& v : testing_support::all_vines(5)) {
    const auto s = split_vine(v);
    ASSERT_TRUE(validate_vine(s.first).ok());
    ASSERT_TRUE(validate_vine(s.second).ok());
    ASSERT_TRUE(validate_vine(s.common).ok());
  }
}

TEST(VineMerge, Singletons) {
  const auto m = merge_vines(RegularVine::from_words(GroundSet({"a"}), {"a"}), RegularVine::from_words(GroundSet({"b"}), {"b"}));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, vine(2, {"a", "b", "ab"}));
}

TEST(VineMerge, DifferentPairNodeIsAbsent) {
  // On {a,b,c} the pair node through {b,c} is missing; on {b,c,d} it is present.
  const auto v1 = RegularVine::from_words(GroundSet({"a", "b", "c"}), {"a", "b", "c", "ab", "ac", "abc"});
  const auto v2 = RegularVine::from_words(GroundSet({"b", "c", "d"}), {"b", "c", "d", "bc", "cd", "bcd"});
  EXPECT_FALSE(merge_vines(v2, v1));
  EXPECT_FALSE(merge_checked<VineSpecies>(v2, v1));
}

TEST(VineMerge, LiftedThreeElementPairs) {
  const auto threes = testing_support::all_vines(3);
  const GroundSet big = GroundSet::letters(4);
  int merged = 0, absent = 0;
  for (const auto& x : threes)
    for (const auto& y : threes) {
      // x on bcd, y on abc via index shifts.
      const auto vx = x.relabel(Relabeling(x.ground(), {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
      const auto vy = y;
      const auto m = merge_checked<VineSpecies>(vx, vy);
      if (m) {
        ++merged;
        EXPECT_TRUE(validate_vine(*m).ok());
        EXPECT_EQ(m->ground(), big);
      } else {
        ++absent;
      }
    }
  EXPECT_GT(merged, 0);
  EXPECT_GT(absent, 0);
}

TEST(VineStaircase, DVineOnly) {
  const auto d = vine(4, {"a", "b", "c", "d", "ab", "bc", "cd", "abc", "bcd", "abcd"});
  const auto s = staircase_order(d);
  ASSERT_TRUE(s);
  EXPECT_EQ(d.ground().format(*s), "abcd");
  EXPECT_FALSE(staircase_order(k4_vine()));
}

TEST(VineSpeciesProximity, HoldsEverywhere) {
  EXPECT_TRUE(check_proximity<MatGraphSpecies>(k4_graph()));
  EXPECT_TRUE(check_proximity<VineSpecies>(vine(2, {"a", "b", "ab"})));
  for (const auto& v : testing_support::all_vines(5)) ASSERT_TRUE(check_proximity<VineSpecies>(v));
}
