#pragma once

// Regular vines in poset form: a graded family of subsets of a ground set.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitmerge/core.hpp"
#include "splitmerge/species.hpp"

namespace splitmerge {

class RegularVine {
 public:
  RegularVine() = default;

  /// Node masks are indices into `ground`. Rejects empty, duplicate or foreign subsets.
  RegularVine(GroundSet ground, std::vector<Mask> nodes) : ground_(std::move(ground)), nodes_(std::move(nodes)) {
    for (Mask m : nodes_) {
      if (m == 0) throw InputError("vine node is the empty set");
      if (!is_subset(m, ground_.full())) throw InputError("vine node is not a subset of the ground set");
    }
    sort_nodes(nodes_);
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) throw InputError("duplicate vine node");
  }

  /// Nodes spelled as words of single-character labels, e.g. {"a", "ab"}.
  static RegularVine from_words(GroundSet ground, std::initializer_list<std::string_view> words) {
    std::vector<Mask> nodes;
    for (auto w : words) nodes.push_back(ground.parse_subset(w));
    return RegularVine(std::move(ground), std::move(nodes));
  }

  static RegularVine from_labels(GroundSet ground, const std::vector<std::vector<std::string>>& nodes) {
    std::vector<Mask> masks;
    for (const auto& n : nodes) {
      const Mask m = ground.mask_of(n);
      if (cardinality(m) != static_cast<int>(n.size())) throw InputError("repeated label inside a vine node");
      masks.push_back(m);
    }
    return RegularVine(std::move(ground), std::move(masks));
  }

  const GroundSet& ground() const noexcept { return ground_; }
  /// Nodes ordered by cardinality, then lexicographically.
  const std::vector<Mask>& nodes() const noexcept { return nodes_; }
  int size() const noexcept { return static_cast<int>(ground_.size()); }

  bool contains(Mask m) const { return std::binary_search(nodes_.begin(), nodes_.end(), m, node_order_less); }

  /// 𝒱(k): the nodes of cardinality k.
  std::vector<Mask> rank(int k) const {
    std::vector<Mask> out;
    for (Mask m : nodes_)
      if (cardinality(m) == k) out.push_back(m);
    return out;
  }

  /// The principal ideal below `top`, re-expressed over the labels of `top`.
  RegularVine ideal(Mask top) const {
    const auto idx = members(top);
    std::vector<Mask> out;
    for (Mask m : nodes_)
      if (is_subset(m, top)) out.push_back(pullback(m, idx));
    return RegularVine(ground_.restrict(top), std::move(out));
  }

  RegularVine relabel(const Relabeling& h) const {
    if (!(h.domain() == ground_)) throw ArgumentError("relabeling domain differs from vine ground set");
    std::vector<Mask> out;
    out.reserve(nodes_.size());
    for (Mask m : nodes_) out.push_back(h.apply(m));
    return RegularVine(h.codomain(), std::move(out));
  }

  std::vector<std::string> words() const {
    std::vector<std::string> out;
    for (Mask m : nodes_) out.push_back(ground_.format(m));
    return out;
  }

  bool operator==(const RegularVine&) const = default;

 private:
  GroundSet ground_;
  std::vector<Mask> nodes_;
};

namespace detail {

/// For each node, the indices of the nodes it covers in the subset order.
inline std::vector<std::vector<int>> cover_lists(const std::vector<Mask>& nodes) {
  const int m = static_cast<int>(nodes.size());
  std::vector<int> by_size(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) by_size[static_cast<std::size_t>(i)] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int a, int b) { return cardinality(nodes[static_cast<std::size_t>(a)]) > cardinality(nodes[static_cast<std::size_t>(b)]); });
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    const Mask big = nodes[static_cast<std::size_t>(s)];
    auto& cs = covers[static_cast<std::size_t>(s)];
    for (int t : by_size) {
      const Mask small = nodes[static_cast<std::size_t>(t)];
      if (small == big || !is_subset(small, big)) continue;
      const bool below_known = std::any_of(cs.begin(), cs.end(), [&](int c) {
        return is_subset(small, nodes[static_cast<std::size_t>(c)]);
      });
      if (!below_known) cs.push_back(t);
    }
    std::sort(cs.begin(), cs.end());
  }
  return covers;
}

inline bool is_tree(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != vertices - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [a, b] : edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

}  // namespace detail

/// Checks the five vine axioms. Axiom identifiers:
/// vine.atoms, vine.rank_sizes, vine.graded, vine.two_covers, vine.tree, vine.proximity.
inline ValidationReport validate_vine(const RegularVine& v) {
  ValidationReport report;
  const auto& g = v.ground();
  const auto& nodes = v.nodes();
  const int n = v.size();

  for (int a = 0; a < n; ++a)
    if (!v.contains(bit(a))) report.add("vine.atoms", "singleton " + g.label(a) + " is missing");

  for (int k = 1; k <= n; ++k) {
    const int have = static_cast<int>(v.rank(k).size());
    if (have != n + 1 - k)
      report.add("vine.rank_sizes", "rank " + std::to_string(k) + " has " + std::to_string(have) + " nodes, expected " +
                                        std::to_string(n + 1 - k));
  }

  const auto covers = detail::cover_lists(nodes);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const Mask node = nodes[s];
    if (cardinality(node) < 2) continue;
    for (int c : covers[s])
      if (cardinality(nodes[static_cast<std::size_t>(c)]) != cardinality(node) - 1)
        report.add("vine.graded", g.format(node) + " covers " + g.format(nodes[static_cast<std::size_t>(c)]) +
                                      ", which is not one rank below");
    if (covers[s].size() != 2)
      report.add("vine.two_covers", g.format(node) + " covers " + std::to_string(covers[s].size()) + " nodes");
  }

  for (int i = 1; i < n; ++i) {
    std::vector<int> level;
    for (std::size_t s = 0; s < nodes.size(); ++s)
      if (cardinality(nodes[s]) == i) level.push_back(static_cast<int>(s));
    auto pos = [&](int node_index) {
      auto it = std::find(level.begin(), level.end(), node_index);
      return it == level.end() ? -1 : static_cast<int>(it - level.begin());
    };
    std::vector<std::pair<int, int>> edges;
    bool well_formed = true;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      if (cardinality(nodes[s]) != i + 1) continue;
      const auto& cs = covers[s];
      if (cs.size() != 2 || pos(cs[0]) < 0 || pos(cs[1]) < 0) {
        well_formed = false;
        continue;
      }
      edges.emplace_back(pos(cs[0]), pos(cs[1]));
    }
    if (!well_formed || !detail::is_tree(static_cast<int>(level.size()), edges))
      report.add("vine.tree", "level " + std::to_string(i) + " cover graph is not a tree");
  }

  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const auto& cs = covers[s];
    for (std::size_t x = 0; x < cs.size(); ++x)
      for (std::size_t y = x + 1; y < cs.size(); ++y) {
        const auto& cx = covers[static_cast<std::size_t>(cs[x])];
        const auto& cy = covers[static_cast<std::size_t>(cs[y])];
        if (cardinality(nodes[static_cast<std::size_t>(cs[x])]) < 2) continue;
        const bool common = std::any_of(cx.begin(), cx.end(),
                                        [&](int c) { return std::find(cy.begin(), cy.end(), c) != cy.end(); });
        if (!common)
          report.add("vine.proximity", g.format(nodes[static_cast<std::size_t>(cs[x])]) + " and " +
                                           g.format(nodes[static_cast<std::size_t>(cs[y])]) + " are covered by " +
                                           g.format(nodes[s]) + " but cover no common node");
      }
  }
  return report;
}

struct AssociatedTree {
  int level = 0;
  std::vector<Mask> vertices;                // 𝒱(i)
  std::vector<Mask> edge_nodes;              // 𝒱(i+1)
  std::vector<std::pair<Mask, Mask>> edges;  // the pair covered by each edge node
};

inline AssociatedTree associated_tree(const RegularVine& v, int i) {
  if (i < 1 || i >= v.size()) throw ArgumentError("associated tree level out of range");
  validate_vine(v).throw_if_invalid();
  AssociatedTree t;
  t.level = i;
  t.vertices = v.rank(i);
  t.edge_nodes = v.rank(i + 1);
  for (Mask e : t.edge_nodes) {
    std::vector<Mask> below;
    for (int x : members(e))
      if (v.contains(e & ~bit(x))) below.push_back(e & ~bit(x));
    sort_nodes(below);
    t.edges.emplace_back(below.at(0), below.at(1));
  }
  return t;
}

namespace detail {

inline std::vector<int> tree_degrees(const AssociatedTree& t) {
  std::vector<int> deg(t.vertices.size(), 0);
  auto idx = [&](Mask m) { return static_cast<std::size_t>(std::find(t.vertices.begin(), t.vertices.end(), m) - t.vertices.begin()); };
  for (auto [a, b] : t.edges) {
    ++deg[idx(a)];
    ++deg[idx(b)];
  }
  return deg;
}

}  // namespace detail

inline bool is_d_vine(const RegularVine& v) {
  for (int i = 1; i < v.size(); ++i) {
    const auto deg = detail::tree_degrees(associated_tree(v, i));
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; })) return false;
  }
  return true;
}

inline bool is_c_vine(const RegularVine& v) {
  for (int i = 1; i < v.size(); ++i) {
    const auto t = associated_tree(v, i);
    const auto deg = detail::tree_degrees(t);
    if (std::none_of(deg.begin(), deg.end(), [&](int d) { return d == static_cast<int>(t.edges.size()); })) return false;
  }
  return true;
}

/// Nodes A∖{a1} and A∖{a2} covered by the top, split into their principal ideals.
inline Split<RegularVine> split_vine(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  const int n = v.size();
  if (n < 2) throw ArgumentError("splitting needs at least two ground elements");
  const Mask full = v.ground().full();
  std::vector<int> removed;
  for (int a = 0; a < n; ++a)
    if (v.contains(full & ~bit(a))) removed.push_back(a);
  if (removed.size() != 2) throw InternalError("top node does not cover two co-atoms");
  const int a1 = removed[0];
  const int a2 = removed[1];
  return {v.ideal(full & ~bit(a1)), v.ideal(full & ~bit(a2)), v.ideal(full & ~bit(a1) & ~bit(a2)),
          v.ground().label(a1), v.ground().label(a2)};
}

/// 𝒱₁ ∪ 𝒱₂ ∪ {A} when 𝒱₁ ∩ 𝒱₂ is a vine on A∖{a1,a2}; otherwise nullopt.
inline std::optional<RegularVine> merge_vines(const RegularVine& v1, const RegularVine& v2) {
  const auto removed = coatom_labels(v1.ground(), v2.ground());
  if (!removed) throw ArgumentError("ground sets are not two co-atoms of a common set");
  validate_vine(v1).throw_if_invalid();
  validate_vine(v2).throw_if_invalid();
  const GroundSet all = unite(v1.ground(), v2.ground());
  const auto e1 = all.embedding_of(v1.ground());
  const auto e2 = all.embedding_of(v2.ground());
  std::vector<Mask> lifted1;
  std::vector<Mask> lifted2;
  for (Mask m : v1.nodes()) lifted1.push_back(remap(m, e1));
  for (Mask m : v2.nodes()) lifted2.push_back(remap(m, e2));

  const Mask common_ground = all.full() & ~bit(all.index(removed->first)) & ~bit(all.index(removed->second));
  std::vector<Mask> common;
  for (Mask m : lifted1)
    if (std::find(lifted2.begin(), lifted2.end(), m) != lifted2.end()) common.push_back(pullback(m, members(common_ground)));
  const RegularVine middle(all.restrict(common_ground), common);
  if (!validate_vine(middle).ok()) return std::nullopt;

  std::vector<Mask> nodes = lifted1;
  for (Mask m : lifted2)
    if (std::find(lifted1.begin(), lifted1.end(), m) == lifted1.end()) nodes.push_back(m);
  nodes.push_back(all.full());
  return RegularVine(all, std::move(nodes));
}

namespace detail {

inline void extend_chains(const RegularVine& v, std::vector<Mask>& chain, std::vector<std::vector<Mask>>& out) {
  const Mask cur = chain.back();
  if (cur == v.ground().full()) {
    out.push_back(chain);
    return;
  }
  for (int x = 0; x < v.size(); ++x) {
    if (cur & bit(x)) continue;
    if (!v.contains(cur | bit(x))) continue;
    chain.push_back(cur | bit(x));
    extend_chains(v, chain, out);
    chain.pop_back();
  }
}

}  // namespace detail

/// All maximal chains, singleton to A, ordered by the preference each spells.
inline std::vector<std::vector<Mask>> maximal_chains(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  std::vector<std::vector<Mask>> out;
  if (v.size() == 0) {
    out.emplace_back();
    return out;
  }
  for (int a = 0; a < v.size(); ++a) {
    std::vector<Mask> chain{bit(a)};
    detail::extend_chains(v, chain, out);
  }
  return out;
}

/// The preference ω with {ω(1..k)} = chain[k−1].
inline Ordering chain_to_ordering(const std::vector<Mask>& chain) {
  Ordering out;
  Mask prev = 0;
  for (Mask m : chain) {
    out.push_back(lowest(m & ~prev));
    prev = m;
  }
  return out;
}

/// For each atom, the number of maximal chains starting there.
inline std::vector<std::uint64_t> chain_counts_from_atoms(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  const auto& nodes = v.nodes();
  std::vector<std::uint64_t> count(nodes.size(), 0);
  // Nodes are sorted by cardinality, so walk downwards from the top.
  for (std::size_t s = nodes.size(); s-- > 0;) {
    if (nodes[s] == v.ground().full()) {
      count[s] = 1;
      continue;
    }
    for (std::size_t t = s + 1; t < nodes.size(); ++t)
      if (cardinality(nodes[t]) == cardinality(nodes[s]) + 1 && is_subset(nodes[s], nodes[t])) count[s] += count[t];
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(v.size()), 0);
  for (std::size_t s = 0; s < nodes.size(); ++s)
    if (cardinality(nodes[s]) == 1) out[static_cast<std::size_t>(lowest(nodes[s]))] = count[s];
  return out;
}

/// The least node containing atoms a and b.
inline Mask join_node(const RegularVine& v, int a, int b) {
  if (a == b) throw ArgumentError("join_node needs two distinct atoms");
  if (a < 0 || b < 0 || a >= v.size() || b >= v.size()) throw ArgumentError("atom out of range");
  const Mask want = bit(a) | bit(b);
  for (Mask m : v.nodes())
    if (is_subset(want, m)) return m;
  throw ValidationError("vine.join", "no node contains both atoms");
}

inline Mask join_node(const RegularVine& v, std::string_view a, std::string_view b) {
  return join_node(v, v.ground().index(a), v.ground().index(b));
}

/// The least k for which the rank-k nodes have a common element.
inline int richness_via_vine(const RegularVine& v) {
  for (int k = 1; k <= v.size(); ++k) {
    Mask meet = v.ground().full();
    for (Mask m : v.nodes())
      if (cardinality(m) == k) meet &= m;
    if (meet != 0) return k;
  }
  return 0;
}

/// For a D-vine, the order c1..cn such that both c1⊂c1c2⊂… and cn⊂c(n−1)cn⊂…
/// are maximal chains, oriented with c1 < cn. nullopt when no such pair exists.
inline std::optional<Ordering> staircase_order(const RegularVine& v) {
  if (v.size() < 2) return std::nullopt;
  const auto chains = maximal_chains(v);
  std::vector<Ordering> prefs;
  for (const auto& c : chains) prefs.push_back(chain_to_ordering(c));
  std::sort(prefs.begin(), prefs.end());
  for (const auto& p : prefs) {
    if (p.front() > p.back()) continue;
    Ordering rev(p.rbegin(), p.rend());
    if (std::binary_search(prefs.begin(), prefs.end(), rev)) return p;
  }
  return std::nullopt;
}

struct VineSpecies {
  using structure_type = RegularVine;

  static constexpr std::string_view name() { return "vine"; }
  static const GroundSet& ground(const RegularVine& v) { return v.ground(); }
  static RegularVine trivial(const GroundSet& a) {
    std::vector<Mask> nodes;
    if (a.size() == 1) nodes.push_back(1);
    if (a.size() > 1) throw ArgumentError("trivial vine needs at most one element");
    return RegularVine(a, nodes);
  }
  static Split<RegularVine> split(const RegularVine& v) { return split_vine(v); }
  static std::optional<RegularVine> merge(const RegularVine& a, const RegularVine& b) { return merge_vines(a, b); }
  static RegularVine relabel(const RegularVine& v, const Relabeling& h) { return v.relabel(h); }
  static ValidationReport validate(const RegularVine& v) { return validate_vine(v); }
};

}  // namespace splitmerge
