#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitmerge/examples.hpp"
#include "support.hpp"

using namespace splitmerge;
using namespace splitmerge::worked;

TEST(Correspond, IntroExampleAllDirections) {
  EXPECT_EQ(graph_to_vine(k4_graph()), k4_vine());
  EXPECT_EQ(vine_to_graph(k4_vine()), k4_graph());
  EXPECT_EQ(graph_to_domain(k4_graph()), k4_domain());
  EXPECT_EQ(domain_to_graph(k4_domain()), k4_graph());
  EXPECT_EQ(vine_to_domain(k4_vine()), k4_domain());
  EXPECT_EQ(domain_to_vine(k4_domain()), k4_vine());
}

TEST(Correspond, FiveElementExampleAllDirections) {
  EXPECT_EQ(graph_to_vine(k5_graph()), k5_vine());
  EXPECT_EQ(vine_to_graph(k5_vine()), k5_graph());
  EXPECT_EQ(graph_to_domain(k5_graph()), k5_domain());
  EXPECT_EQ(domain_to_graph(k5_domain()), k5_graph());
  EXPECT_EQ(vine_to_domain(k5_vine()), k5_domain());
  EXPECT_EQ(domain_to_vine(k5_domain()), k5_vine());
}

TEST(Correspond, PrincipalCliques) {
  const auto g = k4_graph();
  const auto& v = g.vertices();
  EXPECT_EQ(principal_clique(g, v.index("a"), v.index("d")), v.full());
  EXPECT_EQ(principal_clique(g, v.index("a"), v.index("c")), v.parse_subset("abc"));
  EXPECT_EQ(principal_clique(g, v.index("c"), v.index("d")), v.parse_subset("bcd"));
  EXPECT_EQ(principal_clique(g, v.index("b"), v.index("d")), v.parse_subset("bd"));
}

TEST(Correspond, RejectsInvalidInput) {
  const MatLabeledGraph bad(GroundSet::letters(3), {{"a", "b", 1}, {"a", "c", 1}, {"b", "c", 1}});
  EXPECT_THROW(graph_to_vine(bad), ValidationError);
  EXPECT_THROW(graph_to_domain(bad), ValidationError);
  const auto not_max = PreferenceDomain::from_words(GroundSet::letters(3), {"abc", "bac", "bca"});
  EXPECT_THROW(domain_to_vine(not_max), ValidationError);
  EXPECT_THROW(domain_to_graph(not_max), ValidationError);
  const auto broken = RegularVine::from_words(GroundSet::letters(4), {"a", "b", "c", "d", "ab", "ad", "bc", "abc", "bcd", "abcd"});
  EXPECT_THROW(vine_to_graph(broken), ValidationError);
}

class CorrespondAllSmall : public ::testing::TestWithParam<int> {};

TEST_P(CorrespondAllSmall, MapsAreMutuallyInverseAndCommute) {
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto g = vine_to_graph(v);
    const auto d = vine_to_domain(v);
    ASSERT_TRUE(validate_mat_labeling(g).ok());
    ASSERT_TRUE(oracle::literal_mat_labeling(g));
    ASSERT_TRUE(is_maximal_aspd(d));
    ASSERT_EQ(graph_to_vine(g), v);
    ASSERT_EQ(domain_to_vine(d), v);
    ASSERT_EQ(graph_to_domain(g), d);
    ASSERT_EQ(domain_to_graph(d), g);
  }
}

TEST_P(CorrespondAllSmall, TransportAgreesWithExplicitMaps) {
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto g = vine_to_graph(v);
    const auto d = vine_to_domain(v);
    ASSERT_EQ((transport<VineSpecies, MatGraphSpecies>(v)), g);
    ASSERT_EQ((transport<VineSpecies, DomainSpecies>(v)), d);
    ASSERT_EQ((transport<MatGraphSpecies, VineSpecies>(g)), v);
    ASSERT_EQ((transport<DomainSpecies, MatGraphSpecies>(d)), g);
  }
}

INSTANTIATE_TEST_SUITE_P(N, CorrespondAllSmall, ::testing::Values(1, 2, 3, 4, 5));
