#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitmerge/examples.hpp"
#include "support.hpp"

using namespace splitmerge;
using namespace splitmerge::worked;

namespace {

PreferenceDomain dom(std::size_t n, std::initializer_list<std::string_view> ws) {
  return PreferenceDomain::from_words(GroundSet::letters(n), ws);
}

PreferenceDomain dom_on(std::vector<std::string> labels, std::initializer_list<std::string_view> ws) {
  return PreferenceDomain::from_words(GroundSet(std::move(labels)), ws);
}

}  // namespace

TEST(Domain, RejectsNonPermutationsAndDuplicates) {
  EXPECT_THROW(dom(3, {"abb"}), InputError);
  EXPECT_THROW(dom(3, {"ab"}), InputError);
  EXPECT_THROW(dom(3, {"abc", "abc"}), InputError);
}

TEST(Domain, Restrict) {
  const auto d = four_domain_path();
  const auto r = restrict_domain(d, d.alternatives().parse_subset("abc"));
  EXPECT_EQ(r, dom(3, {"abc", "bac", "bca", "cba"}));
  EXPECT_EQ(restrict_domain(d, d.alternatives().full()), d);
  EXPECT_EQ(restrict_domain(d, d.alternatives().parse_subset("c")).count(), 1u);
}

TEST(Condorcet, Examples) {
  const auto cyc = find_condorcet_cycle(dom(3, {"abc", "bca", "cab"}));
  ASSERT_TRUE(cyc);
  EXPECT_FALSE(find_condorcet_cycle(dom(3, {"abc", "acb", "cab", "cba"})));
  EXPECT_FALSE(find_condorcet_cycle(PreferenceDomain(GroundSet::letters(3), {})));
}

TEST(Aspd, Examples) {
  EXPECT_FALSE(is_aspd(dom(3, {"abc", "acb", "cab", "cba"})).aspd);
  EXPECT_TRUE(is_aspd(three_domain()).aspd);
  EXPECT_TRUE(is_aspd(dom(2, {"ab", "ba"})).aspd);
  EXPECT_TRUE(is_aspd(dom(1, {"a"})).aspd);
}

TEST(Aspd, NeverBottomMatchesOracleOnAllSmallDomains) {
  // Every domain on three alternatives.
  const auto perms = oracle::permutations(3);
  for (unsigned mask = 0; mask < (1u << perms.size()); ++mask) {
    std::vector<Ordering> prefs;
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (mask >> i & 1U) prefs.push_back(perms[i]);
    const PreferenceDomain d(GroundSet::letters(3), prefs);
    ASSERT_EQ(is_aspd(d).aspd, oracle::never_bottom_everywhere(d));
  }
}

TEST(Bspd, Examples) {
  const auto axis = is_bspd(three_domain());
  ASSERT_TRUE(axis);
  EXPECT_EQ(three_domain().alternatives().format(*axis), "abc");
  EXPECT_FALSE(is_bspd(four_domain_star()));
  EXPECT_TRUE(is_bspd(dom(3, {"abc"})));
}

TEST(Bspd, AxisMatchesBruteForceOnAllSmallMaximalDomains) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& v : testing_support::all_vines(n)) {
      const auto d = vine_to_domain(v);
      const auto axes = oracle::bspd_axes(d);
      const auto got = is_bspd(d);
      ASSERT_EQ(got.has_value(), !axes.empty());
      if (got) {
        ASSERT_NE(std::find(axes.begin(), axes.end(), *got), axes.end());
      }
    }
}

TEST(Bottoms, Examples) {
  const auto d = four_domain_path();
  EXPECT_EQ(bottom_alternatives(d), d.alternatives().parse_subset("ad"));
  const auto single = dom(3, {"abc"});
  EXPECT_EQ(bottom_alternatives(single), single.alternatives().parse_subset("c"));
  for (const auto& v : testing_support::all_vines(5)) ASSERT_EQ(cardinality(bottom_alternatives(vine_to_domain(v))), 2);
}

TEST(MaximalAspd, Examples) {
  EXPECT_TRUE(is_maximal_aspd(four_domain_path()));
  EXPECT_TRUE(is_maximal_aspd(four_domain_star()));
  EXPECT_TRUE(is_maximal_aspd(three_domain()));
  EXPECT_FALSE(is_maximal_aspd(dom(3, {"abc", "bac", "bca"})));
}

TEST(MaximalAspd, SizeCriterionMatchesExtensionCheck) {
  for (int n = 1; n <= 4; ++n) {
    // Every maximal domain by the size criterion is maximal by extension.
    for (const auto& v : testing_support::all_vines(n)) ASSERT_TRUE(is_maximal_aspd_by_extension(vine_to_domain(v)));
    // Non-maximal ASPDs: drop one preference.
    for (const auto& v : testing_support::all_vines(n)) {
      auto prefs = vine_to_domain(v).preferences();
      if (prefs.size() < 2) continue;
      prefs.pop_back();
      const PreferenceDomain d(v.ground(), prefs);
      ASSERT_FALSE(is_maximal_aspd(d));
      ASSERT_FALSE(is_maximal_aspd_by_extension(d));
    }
  }
}

TEST(DomainSplit, SectionExample) {
  const auto s = split_domain(k5_domain());
  EXPECT_EQ(s.a1, "a");
  EXPECT_EQ(s.a2, "e");
  const auto d1 = dom(4, {"abcd", "bacd", "bcad", "cbad", "bcda", "cbda", "cdba", "dcba"});
  const auto d2 = dom_on({"b", "c", "d", "e"}, {"bcde", "cbde", "cdbe", "dcbe", "cdeb", "dceb", "cedb", "ecdb"});
  const auto dp = dom_on({"b", "c", "d"}, {"bcd", "cbd", "cdb", "dcb"});
  EXPECT_EQ(s.second, d1);
  EXPECT_EQ(s.first, d2);
  EXPECT_EQ(s.common, dp);
  EXPECT_EQ(merge_domains(d1, d2), k5_domain());
  EXPECT_EQ(merge_domains(d2, d1), k5_domain());
}

TEST(DomainSplit, ThreeAlternatives) {
  const auto s = split_domain(three_domain());
  EXPECT_EQ(s.first.size(), 2);
  EXPECT_EQ(s.second.size(), 2);
  EXPECT_EQ(s.common.size(), 1);
}

TEST(DomainSplit, PartsOfSampledSixAlternativeDomainsAreMaximal) {
  for (const auto& v : testing_support::instances(6)) {
    const auto s = split_domain(vine_to_domain(v));
    ASSERT_TRUE(is_maximal_aspd(s.first));
    ASSERT_TRUE(is_maximal_aspd(s.second));
    ASSERT_TRUE(is_maximal_aspd(s.common));
  }
}

TEST(DomainMerge, Singletons) {
  const auto m = merge_domains(dom_on({"a"}, {"a"}), dom_on({"b"}, {"b"}));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, dom(2, {"ab", "ba"}));
}

TEST(DomainMerge, ConflictingBlocksAreAbsent) {
  // Both halves are maximal, but d is never ranked last in the second one.
  const auto d1 = dom_on({"a", "b", "c"}, {"abc", "bac", "bca", "cba"});
  const auto d2 = dom_on({"b", "c", "d"}, {"bdc", "dbc", "dcb", "cdb"});
  EXPECT_FALSE(merge_domains(d1, d2));
  EXPECT_FALSE(merge_checked<DomainSpecies>(d1, d2));
}

TEST(Contiguous, Examples) {
  EXPECT_EQ(topmost_contiguous_position(k5_domain(), "a", "c"), 2);
  EXPECT_EQ(topmost_contiguous_position(dom(2, {"ab", "ba"}), "a", "b"), 1);
  EXPECT_EQ(topmost_contiguous_position(k4_domain(), "c", "d"), 2);
  try {
    topmost_contiguous_position(dom(3, {"abc"}), "a", "c");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "domain.contiguous");
  }
}

TEST(FirstRank, Examples) {
  EXPECT_EQ(first_rank_distribution(four_domain_path()), (std::vector<std::uint64_t>{1, 3, 3, 1}));
  EXPECT_EQ(first_rank_distribution(four_domain_star()), (std::vector<std::uint64_t>{4, 2, 1, 1}));
  EXPECT_EQ(first_rank_distribution(dom(3, {"bca"})), (std::vector<std::uint64_t>{0, 1, 0}));
}

TEST(Richness, Examples) {
  EXPECT_EQ(richness_direct(four_domain_path()), 3);
  EXPECT_EQ(richness_direct(four_domain_star()), 2);
  EXPECT_EQ(richness_direct(dom(1, {"a"})), 1);
  EXPECT_EQ(richness_direct(dom(2, {"ab", "ba"})), 2);
  for (const auto& v : testing_support::all_vines(5)) {
    const auto d = vine_to_domain(v);
    ASSERT_EQ(richness_direct(d), oracle::richness(d));
  }
}

TEST(DomainSpecies, TrivialAndValidate) {
  EXPECT_EQ(DomainSpecies::trivial(GroundSet({"x"})).count(), 1u);
  EXPECT_EQ(DomainSpecies::trivial(GroundSet(std::vector<std::string>{})).count(), 1u);
  EXPECT_TRUE(DomainSpecies::validate(dom(3, {"abc", "bac", "bca"})).has("domain.maximal"));
  EXPECT_TRUE(DomainSpecies::validate(dom(3, {"abc", "acb", "cab", "cba"})).has("domain.aspd"));
}
