#include <gtest/gtest.h>

#include "splitmerge/core.hpp"

using namespace splitmerge;

TEST(GroundSet, SortsLabelsAndRejectsDuplicates) {
  GroundSet g({"c", "a", "b"});
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(GroundSet({"a", "a"}), InputError);
}

TEST(GroundSet, CompactFormattingOnlyForSingleCharacterLabels) {
  const auto g = GroundSet::letters(4);
  EXPECT_EQ(g.format(g.parse_subset("bd")), "bd");
  GroundSet wide({"x1", "x2"});
  EXPECT_NE(wide.format(wide.full()), "x1x2");
}

TEST(GroundSet, ParsesOrderings) {
  const auto g = GroundSet::letters(3);
  EXPECT_EQ(g.parse_ordering("cab"), (Ordering{2, 0, 1}));
  EXPECT_THROW(g.parse_ordering("caa"), InputError);
  EXPECT_THROW(g.parse_subset("az"), InputError);
}

TEST(GroundSet, LetterLabelsContinuePastZ) {
  EXPECT_EQ(GroundSet::letter_label(0), "a");
  EXPECT_EQ(GroundSet::letter_label(25), "z");
  EXPECT_NE(GroundSet::letter_label(26), GroundSet::letter_label(27));
}

TEST(GroundSet, RestrictAndEmbed) {
  const auto g = GroundSet::letters(5);
  const auto sub = g.without("b");
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"a", "c", "d", "e"}));
  EXPECT_EQ(g.embedding_of(sub), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(g.mask_of_subset(sub), g.parse_subset("acde"));
}

TEST(CoatomLabels, IdentifiesRemovedElements) {
  const auto g = GroundSet::letters(4);
  const auto r = coatom_labels(g.without("a"), g.without("c"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, "a");
  EXPECT_EQ(r->second, "c");
  EXPECT_FALSE(coatom_labels(g.without("a"), g.without("a")));
  EXPECT_FALSE(coatom_labels(g, g.without("a")));
}

TEST(Relabeling, ComposeAndInverse) {
  const auto g = GroundSet::letters(3);
  const Relabeling h(g, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
  EXPECT_EQ(h("b"), "y");
  EXPECT_EQ(h.apply(g.parse_subset("ac")), h.codomain().parse_subset("xz"));
  const auto id = compose(h.inverse(), h);
  for (const auto& l : g.labels()) EXPECT_EQ(id(l), l);
  EXPECT_THROW(Relabeling(g, {{"a", "x"}, {"b", "x"}, {"c", "z"}}), ArgumentError);
  EXPECT_THROW(Relabeling(g, {{"a", "x"}}), ArgumentError);
}

TEST(ValidationReport, ThrowsFirstViolation) {
  ValidationReport r;
  EXPECT_TRUE(r.ok());
  r.add("vine.tree", "w1");
  r.add("vine.graded", "w2");
  EXPECT_TRUE(r.has("vine.graded"));
  try {
    r.throw_if_invalid();
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "vine.tree");
    EXPECT_EQ(e.witness(), "w1");
  }
}
