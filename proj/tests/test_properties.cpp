// Exhaustive for n ≤ 5, seeded samples of 1000 for n = 6 and 7.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace splitmerge;

namespace {

constexpr int kRelabelings = 50;

template <class S>
void expect_merge_inverts_split(const typename S::structure_type& x) {
  const auto s = S::split(x);
  const auto merged = S::merge(s.first, s.second);
  ASSERT_TRUE(merged);
  ASSERT_EQ(*merged, x);
  const auto swapped = S::merge(s.second, s.first);
  ASSERT_TRUE(swapped);
  ASSERT_EQ(*swapped, x);
  ASSERT_TRUE(check_proximity<S>(x));
  // The common part is what the halves split off towards each other.
  if (S::ground(x).size() >= 3) {
    const auto back = S::split(s.first);
    const auto fwd = S::split(s.second);
    ASSERT_TRUE(back.first == s.common || back.second == s.common);
    ASSERT_TRUE(fwd.first == s.common || fwd.second == s.common);
  }
}

template <class S>
void expect_split_natural(const typename S::structure_type& x, const Relabeling& h) {
  const auto s = S::split(x);
  const SplitPair<typename S::structure_type> want(S::relabel(s.first, h.restrict(S::ground(s.first))), h(s.a1),
                                                   S::relabel(s.second, h.restrict(S::ground(s.second))), h(s.a2));
  ASSERT_TRUE(split_pair<S>(S::relabel(x, h)) == want);
}

class Properties : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(Properties, MergeInvertsSplitInEverySpecies) {
  if (GetParam() < 2) GTEST_SKIP();
  for (const auto& v : testing_support::instances(GetParam())) {
    expect_merge_inverts_split<VineSpecies>(v);
    expect_merge_inverts_split<MatGraphSpecies>(vine_to_graph(v));
    expect_merge_inverts_split<DomainSpecies>(vine_to_domain(v));
  }
}

TEST_P(Properties, MapsAreInverseAndCommute) {
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto g = vine_to_graph(v);
    const auto d = vine_to_domain(v);
    ASSERT_EQ(graph_to_vine(g), v);
    ASSERT_EQ(domain_to_vine(d), v);
    ASSERT_EQ(graph_to_domain(g), d);
    ASSERT_EQ(domain_to_graph(d), g);
    ASSERT_EQ(lattice_to_vine(vine_to_lattice(v)), v);
  }
}

TEST_P(Properties, TransportMatchesExplicitMaps) {
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto g = vine_to_graph(v);
    const auto d = vine_to_domain(v);
    ASSERT_EQ((transport<VineSpecies, MatGraphSpecies>(v)), g);
    ASSERT_EQ((transport<VineSpecies, DomainSpecies>(v)), d);
    ASSERT_EQ((transport<MatGraphSpecies, DomainSpecies>(g)), d);
    ASSERT_EQ((transport<DomainSpecies, VineSpecies>(d)), v);
  }
}

TEST_P(Properties, NaturalUnderRelabeling) {
  auto gen = testing_support::rng(100 + static_cast<std::uint64_t>(GetParam()));
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto g = vine_to_graph(v);
    const auto d = vine_to_domain(v);
    for (int r = 0; r < kRelabelings; ++r) {
      const auto h = testing_support::random_relabeling(v.ground(), gen);
      const auto hv = v.relabel(h);
      const auto hg = g.relabel(h);
      const auto hd = d.relabel(h);
      ASSERT_EQ(vine_to_graph(hv), hg);
      ASSERT_EQ(vine_to_domain(hv), hd);
      ASSERT_EQ(graph_to_vine(hg), hv);
      ASSERT_EQ(domain_to_vine(hd), hv);
      ASSERT_EQ(graph_to_domain(hg), hd);
      ASSERT_EQ(domain_to_graph(hd), hg);
      ASSERT_EQ(vine_to_lattice(hv), vine_to_lattice(v).relabel(h));
      if (v.size() >= 2) {
        expect_split_natural<VineSpecies>(v, h);
        expect_split_natural<MatGraphSpecies>(g, h);
        expect_split_natural<DomainSpecies>(d, h);
      }
    }
  }
}

TEST_P(Properties, InvariantsUnderRelabeling) {
  auto gen = testing_support::rng(200 + static_cast<std::uint64_t>(GetParam()));
  for (const auto& v : testing_support::instances(GetParam())) {
    const auto h = testing_support::random_permutation(v.ground(), gen);
    const auto hv = v.relabel(h);
    ASSERT_EQ(canonical_form(hv), canonical_form(v));
    ASSERT_EQ(richness_via_vine(hv), richness_via_vine(v));
    ASSERT_EQ(is_d_vine(hv), is_d_vine(v));
    ASSERT_EQ(is_c_vine(hv), is_c_vine(v));
    ASSERT_EQ(is_bspd(vine_to_domain(hv)).has_value(), is_bspd(vine_to_domain(v)).has_value());
  }
}

TEST_P(Properties, GeneratedStructuresSatisfyTheirAxioms) {
  const std::size_t n = static_cast<std::size_t>(GetParam());
  for (const auto& v : testing_support::instances(GetParam())) {
    ASSERT_TRUE(validate_vine(v).ok());
    const auto d = vine_to_domain(v);
    ASSERT_EQ(d.count(), std::size_t{1} << (n == 0 ? 0 : n - 1));
    ASSERT_TRUE(is_aspd(d).aspd);
    if (n >= 2) {
      ASSERT_EQ(cardinality(bottom_alternatives(d)), 2);
    }
    ASSERT_TRUE(validate_mat_labeling(vine_to_graph(v)).ok());
    ASSERT_EQ(v.size() == 0 ? 0u : v.nodes().size(), n * (n + 1) / 2);
  }
}

INSTANTIATE_TEST_SUITE_P(N, Properties, ::testing::Values(1, 2, 3, 4, 5, 6, 7));
