#pragma once

// Edge-labeled simple graphs, the MAT-labeling conditions, MAT-simplicial
// vertices, MAT-PEOs, and splitting/merging of MAT-labeled complete graphs.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "splitmerge/core.hpp"
#include "splitmerge/species.hpp"

namespace splitmerge {

struct LabeledEdge {
  std::string u;
  std::string v;
  int label = 0;

  bool operator==(const LabeledEdge&) const = default;
};

/// A simple graph on a ground set with positive integer edge labels.
/// Internally a dense n×n label table; 0 marks a missing edge.
class MatLabeledGraph {
 public:
  MatLabeledGraph() = default;

  MatLabeledGraph(GroundSet vertices, const std::vector<LabeledEdge>& edges)
      : vertices_(std::move(vertices)), table_(vertices_.size() * vertices_.size(), 0) {
    for (const auto& e : edges) {
      const auto u = vertices_.find(e.u);
      const auto v = vertices_.find(e.v);
      if (!u || !v) throw InputError("edge {" + e.u + "," + e.v + "} uses an unknown vertex");
      if (*u == *v) throw InputError("self-loop at '" + e.u + "'");
      if (e.label <= 0) throw InputError("edge {" + e.u + "," + e.v + "} has non-positive label");
      if (at(*u, *v) != 0) throw InputError("duplicate edge {" + e.u + "," + e.v + "}");
      set(*u, *v, e.label);
    }
  }

  /// Complete graph from a label function on index pairs i < j.
  template <class F>
  static MatLabeledGraph complete(GroundSet vertices, F&& label_of) {
    MatLabeledGraph g;
    g.vertices_ = std::move(vertices);
    const int n = static_cast<int>(g.vertices_.size());
    g.table_.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int l = label_of(i, j);
        if (l <= 0) throw InputError("non-positive edge label");
        g.set(i, j, l);
      }
    return g;
  }

  const GroundSet& vertices() const noexcept { return vertices_; }
  const GroundSet& ground() const noexcept { return vertices_; }
  int size() const noexcept { return static_cast<int>(vertices_.size()); }

  /// Label of edge {i,j}, or 0 when absent.
  int label(int i, int j) const { return at(i, j); }
  int label(std::string_view a, std::string_view b) const { return at(vertices_.index(a), vertices_.index(b)); }
  bool adjacent(int i, int j) const { return i != j && at(i, j) != 0; }

  bool is_complete() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (at(i, j) == 0) return false;
    return true;
  }

  int max_label() const { return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end()); }

  /// Edges sorted by (u, v) with u < v in label order.
  std::vector<LabeledEdge> edges() const {
    std::vector<LabeledEdge> out;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (at(i, j) != 0) out.push_back({vertices_.label(i), vertices_.label(j), at(i, j)});
    return out;
  }

  Mask neighbors(int v) const {
    Mask m = 0;
    for (int j = 0; j < size(); ++j)
      if (adjacent(v, j)) m |= bit(j);
    return m;
  }

  /// The induced labeled subgraph on the vertices in `keep`.
  MatLabeledGraph induced(Mask keep) const {
    MatLabeledGraph g;
    g.vertices_ = vertices_.restrict(keep);
    const auto idx = members(keep & vertices_.full());
    const int m = static_cast<int>(idx.size());
    g.table_.assign(static_cast<std::size_t>(m * m), 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g.table_[static_cast<std::size_t>(i * m + j)] = at(idx[i], idx[j]);
    return g;
  }

  MatLabeledGraph relabel(const Relabeling& h) const {
    if (!(h.domain() == vertices_)) throw ArgumentError("relabeling domain differs from vertex set");
    MatLabeledGraph g;
    g.vertices_ = h.codomain();
    g.table_.assign(table_.size(), 0);
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        g.table_[static_cast<std::size_t>(h.image_index(i) * size() + h.image_index(j))] = at(i, j);
    return g;
  }

  bool operator==(const MatLabeledGraph&) const = default;

 private:
  int at(int i, int j) const { return table_[static_cast<std::size_t>(i * size() + j)]; }
  void set(int i, int j, int l) {
    table_[static_cast<std::size_t>(i * size() + j)] = l;
    table_[static_cast<std::size_t>(j * size() + i)] = l;
  }

  GroundSet vertices_;
  std::vector<int> table_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline std::string edge_name(const GroundSet& g, int i, int j) {
  return "{" + g.label(static_cast<std::size_t>(i)) + "," + g.label(static_cast<std::size_t>(j)) + "}";
}

}  // namespace detail

/// Checks both MAT-labeling conditions at every label level k:
///  - "matgraph.cycle": π_k ∪ {e'} contains a cycle for some e' ∈ π_{≤k};
///  - "matgraph.triangles": an edge of π_k does not close exactly k−1
///    triangles with pairs of edges from π_{<k}.
inline ValidationReport validate_mat_labeling(const MatLabeledGraph& g) {
  ValidationReport report;
  const int n = g.size();
  const auto& vs = g.vertices();
  const int top = g.max_label();
  for (int k = 1; k <= top; ++k) {
    detail::UnionFind forest(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.label(i, j) == k && !forest.unite(i, j))
          report.add("matgraph.cycle", "level " + std::to_string(k) + ": edge " + detail::edge_name(vs, i, j) +
                                           " closes a cycle inside its own level");
    // A lower edge joining two vertices already connected at level k closes a cycle.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int l = g.label(i, j);
        if (l != 0 && l < k && forest.find(i) == forest.find(j))
          report.add("matgraph.cycle", "level " + std::to_string(k) + ": lower edge " + detail::edge_name(vs, i, j) +
                                           " closes a cycle with level-" + std::to_string(k) + " edges");
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (g.label(i, j) != k) continue;
        int triangles = 0;
        for (int c = 0; c < n; ++c) {
          const int li = g.label(i, c);
          const int lj = g.label(j, c);
          if (c != i && c != j && li != 0 && lj != 0 && li < k && lj < k) ++triangles;
        }
        if (triangles != k - 1)
          report.add("matgraph.triangles", "edge " + detail::edge_name(vs, i, j) + " with label " + std::to_string(k) +
                                               " closes " + std::to_string(triangles) + " lower triangles");
      }
  }
  return report;
}

/// The three MAT-simplicial conditions for `v` inside the induced subgraph on `within`.
inline bool is_mat_simplicial_within(const MatLabeledGraph& g, int v, Mask within) {
  const Mask nbrs = g.neighbors(v) & within & ~bit(v);
  const auto nb = members(nbrs);
  const int deg = static_cast<int>(nb.size());
  Mask seen = 0;
  for (int b : nb) {
    const int l = g.label(v, b);
    if (l > deg || (seen & bit(l - 1))) return false;
    seen |= bit(l - 1);
  }
  for (std::size_t x = 0; x < nb.size(); ++x)
    for (std::size_t y = x + 1; y < nb.size(); ++y) {
      const int bc = g.label(nb[x], nb[y]);
      if (bc == 0) return false;  // neighborhood not a clique
      if (bc >= std::max(g.label(nb[x], v), g.label(nb[y], v))) return false;
    }
  return true;
}

inline bool is_mat_simplicial(const MatLabeledGraph& g, int v) {
  return is_mat_simplicial_within(g, v, g.vertices().full());
}

/// All MAT-simplicial vertices. Throws ValidationError when g is not MAT-labeled.
inline Mask mat_simplicial_vertices(const MatLabeledGraph& g) {
  validate_mat_labeling(g).throw_if_invalid();
  Mask out = 0;
  for (int v = 0; v < g.size(); ++v)
    if (is_mat_simplicial(g, v)) out |= bit(v);
  return out;
}

inline bool is_mat_peo(const MatLabeledGraph& g, std::span<const int> ord) {
  const int n = g.size();
  Mask seen = 0;
  for (int v : ord) {
    if (v < 0 || v >= n || (seen & bit(v))) throw ArgumentError("ordering is not a permutation of the vertices");
    seen |= bit(v);
  }
  if (static_cast<int>(ord.size()) != n) throw ArgumentError("ordering is not a permutation of the vertices");
  Mask prefix = 0;
  for (int v : ord) {
    prefix |= bit(v);
    if (!is_mat_simplicial_within(g, v, prefix)) return false;
  }
  return true;
}

inline bool is_mat_peo(const MatLabeledGraph& g, const std::vector<std::string>& ord) {
  Ordering idx;
  for (const auto& l : ord) idx.push_back(g.vertices().index(l));
  return is_mat_peo(g, idx);
}

namespace detail {

inline void extend_peos(const MatLabeledGraph& g, Ordering& prefix, Mask used, std::vector<Ordering>& out) {
  const int n = g.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used & bit(v)) continue;
    if (!is_mat_simplicial_within(g, v, used | bit(v))) continue;
    prefix.push_back(v);
    extend_peos(g, prefix, used | bit(v), out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Every MAT-PEO, in lexicographic order, grown one admissible vertex at a time.
inline std::vector<Ordering> enumerate_mat_peos(const MatLabeledGraph& g) {
  validate_mat_labeling(g).throw_if_invalid();
  std::vector<Ordering> out;
  Ordering prefix;
  detail::extend_peos(g, prefix, 0, out);
  return out;
}

namespace detail {

inline void require_complete_valid(const MatLabeledGraph& g) {
  if (!g.is_complete()) throw ValidationError("matgraph.complete", "graph is not complete");
  validate_mat_labeling(g).throw_if_invalid();
}

}  // namespace detail

inline Split<MatLabeledGraph> split_graph(const MatLabeledGraph& g) {
  detail::require_complete_valid(g);
  if (g.size() < 2) throw ArgumentError("splitting needs at least two vertices");
  const Mask simp = mat_simplicial_vertices(g);
  if (cardinality(simp) != 2)
    throw InternalError("complete MAT-labeled graph with " + std::to_string(cardinality(simp)) +
                        " MAT-simplicial vertices");
  const int a1 = lowest(simp);
  const int a2 = lowest(simp & (simp - 1));
  const Mask full = g.vertices().full();
  return {g.induced(full & ~bit(a1)), g.induced(full & ~bit(a2)), g.induced(full & ~bit(a1) & ~bit(a2)),
          g.vertices().label(a1), g.vertices().label(a2)};
}

/// Merges graphs on A∖{a1} and A∖{a2}; absent when they disagree on A∖{a1,a2}.
inline std::optional<MatLabeledGraph> merge_graphs(const MatLabeledGraph& g1, const MatLabeledGraph& g2) {
  const auto removed = coatom_labels(g1.vertices(), g2.vertices());
  if (!removed) throw ArgumentError("vertex sets are not two co-atoms of a common set");
  detail::require_complete_valid(g1);
  detail::require_complete_valid(g2);
  const GroundSet all = unite(g1.vertices(), g2.vertices());
  const auto e1 = all.embedding_of(g1.vertices());
  const auto e2 = all.embedding_of(g2.vertices());
  const int n = static_cast<int>(all.size());
  std::vector<int> table(static_cast<std::size_t>(n * n), 0);
  auto put = [&](const MatLabeledGraph& part, const std::vector<int>& emb) {
    bool agree = true;
    for (int i = 0; i < part.size(); ++i)
      for (int j = i + 1; j < part.size(); ++j) {
        auto& slot = table[static_cast<std::size_t>(emb[i] * n + emb[j])];
        if (slot != 0 && slot != part.label(i, j)) agree = false;
        slot = part.label(i, j);
      }
    return agree;
  };
  if (!put(g1, e1) || !put(g2, e2)) return std::nullopt;
  const int a1 = all.index(removed->first);
  const int a2 = all.index(removed->second);
  table[static_cast<std::size_t>(std::min(a1, a2) * n + std::max(a1, a2))] = n - 1;
  return MatLabeledGraph::complete(all, [&](int i, int j) { return table[static_cast<std::size_t>(i * n + j)]; });
}

/// Species adapter for MAT-labeled complete graphs.
struct MatGraphSpecies {
  using structure_type = MatLabeledGraph;

  static constexpr std::string_view name() { return "matgraph"; }
  static const GroundSet& ground(const MatLabeledGraph& g) { return g.vertices(); }
  static MatLabeledGraph trivial(const GroundSet& a) {
    if (a.size() > 1) throw ArgumentError("trivial graph needs at most one vertex");
    return MatLabeledGraph(a, {});
  }
  static Split<MatLabeledGraph> split(const MatLabeledGraph& g) { return split_graph(g); }
  static std::optional<MatLabeledGraph> merge(const MatLabeledGraph& a, const MatLabeledGraph& b) {
    return merge_graphs(a, b);
  }
  static MatLabeledGraph relabel(const MatLabeledGraph& g, const Relabeling& h) { return g.relabel(h); }
  static ValidationReport validate(const MatLabeledGraph& g) {
    ValidationReport r;
    if (!g.is_complete()) r.add("matgraph.complete", "graph is not complete");
    r.append(validate_mat_labeling(g));
    return r;
  }
};

}  // namespace splitmerge
