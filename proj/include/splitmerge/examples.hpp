#pragma once

// Small named structures used by the self-test, the sample program and the tests.

#include "splitmerge/domain.hpp"
#include "splitmerge/matgraph.hpp"
#include "splitmerge/vine.hpp"

namespace splitmerge::worked {

inline MatLabeledGraph k4_graph() {
  return MatLabeledGraph(GroundSet::letters(4), {{"a", "b", 1}, {"a", "c", 2}, {"a", "d", 3},
                                                 {"b", "c", 1}, {"b", "d", 1}, {"c", "d", 2}});
}

inline RegularVine k4_vine() {
  return RegularVine::from_words(GroundSet::letters(4), {"a", "b", "c", "d", "ab", "bc", "bd", "abc", "bcd", "abcd"});
}

inline PreferenceDomain k4_domain() {
  return PreferenceDomain::from_words(GroundSet::letters(4),
                                      {"abcd", "bacd", "bcad", "cbad", "bcda", "cbda", "bdca", "dbca"});
}

inline RegularVine k5_vine() {
  return RegularVine::from_words(GroundSet::letters(5), {"a", "b", "c", "d", "e", "ab", "bc", "cd", "ce", "abc", "bcd",
                                                         "cde", "abcd", "bcde", "abcde"});
}

inline MatLabeledGraph k5_graph() {
  return MatLabeledGraph(GroundSet::letters(5), {{"a", "b", 1}, {"a", "c", 2}, {"a", "d", 3}, {"a", "e", 4},
                                                 {"b", "c", 1}, {"b", "d", 2}, {"b", "e", 3},
                                                 {"c", "d", 1}, {"c", "e", 1}, {"d", "e", 2}});
}

inline PreferenceDomain k5_domain() {
  return PreferenceDomain::from_words(GroundSet::letters(5),
                                      {"abcde", "bacde", "bcade", "cbade", "bcdae", "cbdae", "cdbae", "dcbae",
                                       "bcdea", "cbdea", "cdbea", "dcbea", "cdeba", "dceba", "cedba", "ecdba"});
}

inline PreferenceDomain three_domain() {
  return PreferenceDomain::from_words(GroundSet::letters(3), {"abc", "bac", "bca", "cba"});
}

/// The maximal BSPD on four alternatives.
inline PreferenceDomain four_domain_path() {
  return PreferenceDomain::from_words(GroundSet::letters(4),
                                      {"abcd", "bacd", "bcad", "cbad", "bcda", "cbda", "cdba", "dcba"});
}

/// The maximal ASPD on four alternatives that is not a BSPD.
inline PreferenceDomain four_domain_star() {
  return PreferenceDomain::from_words(GroundSet::letters(4),
                                      {"acbd", "cabd", "bacd", "abcd", "badc", "abdc", "adbc", "dabc"});
}

}  // namespace splitmerge::worked
