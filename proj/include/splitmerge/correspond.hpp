#pragma once

// Direct (non-recursive) bijections between MAT-labeled complete graphs,
// regular vines and maximal ASPDs.

#include <algorithm>
#include <vector>

#include "splitmerge/domain.hpp"
#include "splitmerge/matgraph.hpp"
#include "splitmerge/vine.hpp"

namespace splitmerge {

/// C_e = {a, b} ∪ {c : λ(a,c) < λ(e) and λ(b,c) < λ(e)}.
inline Mask principal_clique(const MatLabeledGraph& g, int a, int b) {
  const int k = g.label(a, b);
  Mask clique = bit(a) | bit(b);
  for (int c = 0; c < g.size(); ++c)
    if (c != a && c != b && g.label(a, c) < k && g.label(b, c) < k) clique |= bit(c);
  return clique;
}

inline RegularVine graph_to_vine(const MatLabeledGraph& g) {
  detail::require_complete_valid(g);
  std::vector<Mask> nodes;
  for (int a = 0; a < g.size(); ++a) nodes.push_back(bit(a));
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b) nodes.push_back(principal_clique(g, a, b));
  return RegularVine(g.vertices(), std::move(nodes));
}

/// λ(a,b) = |join(a,b)| − 1.
inline MatLabeledGraph vine_to_graph(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  return MatLabeledGraph::complete(v.ground(), [&](int a, int b) { return cardinality(join_node(v, a, b)) - 1; });
}

/// The MAT-PEOs of g, each read as a preference with the first vertex ranked first.
inline PreferenceDomain graph_to_domain(const MatLabeledGraph& g) {
  detail::require_complete_valid(g);
  return PreferenceDomain(g.vertices(), enumerate_mat_peos(g));
}

/// λ(a,b) = topmost position at which a and b are adjacent in some preference.
inline MatLabeledGraph domain_to_graph(const PreferenceDomain& d) {
  detail::require_maximal_aspd(d);
  auto g = MatLabeledGraph::complete(d.alternatives(),
                                     [&](int a, int b) { return topmost_contiguous_position(d, a, b); });
  validate_mat_labeling(g).throw_if_invalid();
  return g;
}

/// One preference per maximal chain.
inline PreferenceDomain vine_to_domain(const RegularVine& v) {
  std::vector<Ordering> prefs;
  for (const auto& chain : maximal_chains(v)) prefs.push_back(chain_to_ordering(chain));
  return PreferenceDomain(v.ground(), std::move(prefs));
}

/// All preference prefixes {ω(1), …, ω(k)}, k ≥ 1.
inline RegularVine domain_to_vine(const PreferenceDomain& d) {
  detail::require_maximal_aspd(d);
  std::vector<Mask> nodes;
  for (const auto& p : d.preferences()) {
    Mask prefix = 0;
    for (int x : p) {
      prefix |= bit(x);
      nodes.push_back(prefix);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return RegularVine(d.alternatives(), std::move(nodes));
}

}  // namespace splitmerge
