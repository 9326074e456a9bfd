#pragma once

// Exhaustive labeled generation of regular vines, closed-form and recursive
// counts, and isomorphism classification.

#include <atomic>
#include <functional>
#include <map>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "splitmerge/canonical.hpp"
#include "splitmerge/core.hpp"
#include "splitmerge/lattice.hpp"
#include "splitmerge/vine.hpp"

namespace splitmerge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultGenerationCap = 7;

namespace detail {

/// Decodes a Prüfer sequence over {0..d−1} into the d−1 edges of a labeled tree.
inline void prufer_edges(std::span<const int> seq, int d, std::vector<std::pair<int, int>>& out) {
  out.clear();
  if (d < 2) return;
  if (d == 2) {
    out.emplace_back(0, 1);
    return;
  }
  std::array<int, 64> degree{};
  for (int i = 0; i < d; ++i) degree[static_cast<std::size_t>(i)] = 1;
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  for (int x : seq) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    out.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(x)];
  }
  int u = -1;
  for (int i = 0; i < d; ++i)
    if (degree[static_cast<std::size_t>(i)] == 1) {
      if (u < 0) u = i;
      else out.emplace_back(u, i);
    }
}

/// Advances an odometer with digits in [0, base); false after the last value.
inline bool next_sequence(std::vector<int>& seq, int base) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (++seq[i] < base) return true;
    seq[i] = 0;
  }
  return false;
}

/// Generates every vine that extends a fixed first associated tree.
///
/// The line graph of a tree is a block graph whose blocks are the cliques of
/// edges meeting at a vertex, and a spanning tree of a block graph is a choice
/// of spanning tree inside every block. So each level is a product of
/// per-vertex Prüfer choices and no candidate is ever rejected.
class VineBuilder {
 public:
  using Visitor = std::function<void(std::span<const Mask>)>;

  VineBuilder(int n, Visitor visit) : n_(n), visit_(std::move(visit)) {
    for (int a = 0; a < n; ++a) nodes_.push_back(bit(a));
  }

  /// `edges` are pairs of indices into the singletons.
  void run_from_first_tree(const std::vector<std::pair<int, int>>& edges) {
    std::vector<Mask> verts(nodes_.begin(), nodes_.begin() + n_);
    build(verts, edges);
  }

 private:
  void build(const std::vector<Mask>& verts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Mask> next;
    next.reserve(edges.size());
    for (auto [a, b] : edges) next.push_back(verts[static_cast<std::size_t>(a)] | verts[static_cast<std::size_t>(b)]);
    const std::size_t mark = nodes_.size();
    nodes_.insert(nodes_.end(), next.begin(), next.end());
    if (next.size() <= 1) {
      visit_(nodes_);
    } else {
      // Blocks: for every current vertex, the next-level nodes (edges) that meet it.
      std::vector<std::vector<int>> blocks;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        std::vector<int> inc;
        for (std::size_t e = 0; e < edges.size(); ++e)
          if (edges[e].first == static_cast<int>(v) || edges[e].second == static_cast<int>(v)) inc.push_back(static_cast<int>(e));
        if (inc.size() >= 2) blocks.push_back(std::move(inc));
      }
      std::vector<std::pair<int, int>> chosen;
      choose(blocks, 0, next, chosen);
    }
    nodes_.resize(mark);
  }

  void choose(const std::vector<std::vector<int>>& blocks, std::size_t b, const std::vector<Mask>& verts,
              std::vector<std::pair<int, int>>& chosen) {
    if (b == blocks.size()) {
      build(verts, chosen);
      return;
    }
    const auto& blk = blocks[b];
    const int d = static_cast<int>(blk.size());
    std::vector<int> seq(static_cast<std::size_t>(std::max(d - 2, 0)), 0);
    std::vector<std::pair<int, int>> local;
    const std::size_t mark = chosen.size();
    do {
      prufer_edges(seq, d, local);
      for (auto [x, y] : local) chosen.emplace_back(blk[static_cast<std::size_t>(x)], blk[static_cast<std::size_t>(y)]);
      choose(blocks, b + 1, verts, chosen);
      chosen.resize(mark);
    } while (next_sequence(seq, d));
  }

  int n_;
  Visitor visit_;
  std::vector<Mask> nodes_;
};

inline std::uint64_t first_tree_count(int n) {
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

/// Edges of the first tree with the given index in lexicographic Prüfer order.
inline std::vector<std::pair<int, int>> first_tree(int n, std::uint64_t index) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (std::size_t i = seq.size(); i-- > 0;) {
    seq[i] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  prufer_edges(seq, n, edges);
  return edges;
}

inline void check_cap(int n, int cap) {
  if (n < 0) throw ArgumentError("negative ground-set size");
  if (n > cap) throw ArgumentError("ground-set size " + std::to_string(n) + " exceeds the generation cap " + std::to_string(cap));
}

}  // namespace detail

/// Calls visit(nodes) once per labeled regular vine on {0..n−1}. Nodes arrive
/// level by level (not in node order). Deterministic order.
template <class Visit>
void for_each_vine(int n, Visit&& visit, int cap = kDefaultGenerationCap) {
  detail::check_cap(n, cap);
  if (n == 0) {
    visit(std::span<const Mask>{});
    return;
  }
  detail::VineBuilder builder(n, [&](std::span<const Mask> nodes) { visit(nodes); });
  const auto trees = detail::first_tree_count(n);
  for (std::uint64_t t = 0; t < trees; ++t) builder.run_from_first_tree(detail::first_tree(n, t));
}

/// Parallel variant: first trees are dealt out to `threads` workers, and
/// visit(worker, nodes) may run concurrently for different workers.
template <class Visit>
void for_each_vine_parallel(int n, unsigned threads, Visit&& visit, int cap = kDefaultGenerationCap) {
  detail::check_cap(n, cap);
  if (threads <= 1 || n < 3) {
    for_each_vine(n, [&](std::span<const Mask> nodes) { visit(0u, nodes); }, cap);
    return;
  }
  const auto trees = detail::first_tree_count(n);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      detail::VineBuilder builder(n, [&](std::span<const Mask> nodes) { visit(w, nodes); });
      for (std::uint64_t t; (t = next.fetch_add(1)) < trees;) builder.run_from_first_tree(detail::first_tree(n, t));
    });
  for (auto& t : pool) t.join();
}

/// Number of labeled vines on n elements, by exhaustive generation.
inline std::uint64_t count_vines(int n, unsigned threads = 1, int cap = kDefaultGenerationCap) {
  std::vector<std::uint64_t> per(std::max(threads, 1u), 0);
  for_each_vine_parallel(n, threads, [&](unsigned w, std::span<const Mask>) { ++per[w]; }, cap);
  std::uint64_t total = 0;
  for (auto c : per) total += c;
  return total;
}

/// Every labeled vine on A, materialized.
inline std::vector<RegularVine> generate_vines(const GroundSet& a, int cap = kDefaultGenerationCap) {
  std::vector<RegularVine> out;
  for_each_vine(static_cast<int>(a.size()),
                [&](std::span<const Mask> nodes) { out.emplace_back(a, std::vector<Mask>(nodes.begin(), nodes.end())); },
                cap);
  return out;
}

// ---------------------------------------------------------------------------
// Counting

namespace detail {

inline BigRational pow2(long e) {
  BigInt p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt require_integer(const BigRational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) throw InternalError(std::string(what) + " is not an integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace detail

/// 1 for n ≤ 1, else 2^((n−2)(n−3)/2 − 1)·n!.
inline BigInt labeled_count_formula(int n) {
  if (n < 0) throw ArgumentError("negative n");
  if (n <= 1) return 1;
  const long e = static_cast<long>(n - 2) * (n - 3) / 2 - 1;
  return detail::require_integer(detail::pow2(e) * BigRational(detail::factorial(n)), "labeled count");
}

inline BigInt unlabeled_count_formula(int n) {
  if (n < 0) throw ArgumentError("negative n");
  if (n <= 3) return 1;
  const int last = n / 2 - 1;
  BigRational sum = 0;
  for (int k = 0; k <= last; ++k) sum += (k == last ? 2 : 1) * detail::pow2(-static_cast<long>(k) * (n - k - 2));
  const long e = static_cast<long>(n - 2) * (n - 3) / 2 - 1;
  return detail::require_integer(detail::pow2(e) * sum, "unlabeled count");
}

/// (p_n, q_n): isomorphism classes with automorphism group of order 2 and 1.
inline std::pair<BigInt, BigInt> recursive_pq_counts(int n) {
  if (n < 1) throw ArgumentError("recursive counts start at n = 1");
  std::vector<std::pair<BigRational, BigRational>> pq(static_cast<std::size_t>(n) + 1);
  pq[1] = {0, 1};
  if (n >= 2) pq[2] = {1, 0};
  for (int m = 3; m <= n; ++m) {
    const auto& [p, q] = pq[static_cast<std::size_t>(m - 2)];
    const BigRational a = detail::pow2(m - 3);
    const BigRational c = detail::pow2(m - 4) * (detail::pow2(m - 4) - 1);
    const BigRational d = detail::pow2(m - 4) * (detail::pow2(m - 3) - 1);
    pq[static_cast<std::size_t>(m)] = {a * p + a * q, c * p + d * q};
  }
  const auto& [p, q] = pq[static_cast<std::size_t>(n)];
  return {detail::require_integer(p, "p_n"), detail::require_integer(q, "q_n")};
}

struct CountRow {
  int n = 0;
  BigInt labeled;
  BigInt unlabeled;
  BigInt p;
  BigInt q;
};

inline CountRow count_row(int n) {
  auto [p, q] = recursive_pq_counts(n);
  return {n, labeled_count_formula(n), unlabeled_count_formula(n), p, q};
}

// ---------------------------------------------------------------------------
// Classification

struct VineClass {
  CanonicalForm form;
  RegularVine representative;  // canonical labeling over a, b, c, …
  int automorphisms = 0;
  std::uint64_t orbit_size = 0;  // n! / |Aut|
  std::uint64_t members = 0;     // labeled vines seen in this class
};

namespace detail {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline VineClass make_class(int n, const Canonicalization& c) {
  VineClass k;
  k.form = c.form;
  k.representative = RegularVine(GroundSet::letters(static_cast<std::size_t>(n)), c.form.nodes);
  k.automorphisms = c.automorphisms;
  if (c.automorphisms < 1 || c.automorphisms > 2)
    throw InternalError("vine with automorphism group of order " + std::to_string(c.automorphisms));
  k.orbit_size = factorial_u64(n) / static_cast<std::uint64_t>(c.automorphisms);
  return k;
}

}  // namespace detail

/// Groups vines on same-size ground sets by canonical form, in canonical order.
inline std::vector<VineClass> classify(const std::vector<RegularVine>& vines) {
  std::map<CanonicalForm, VineClass> classes;
  for (const auto& v : vines) {
    if (!vines.empty() && v.size() != vines.front().size()) throw ArgumentError("classify needs vines of one size");
    const auto c = canonicalize(v);
    auto it = classes.find(c.form);
    if (it == classes.end()) it = classes.emplace(c.form, detail::make_class(v.size(), c)).first;
    ++it->second.members;
  }
  std::vector<VineClass> out;
  for (auto& [f, k] : classes) out.push_back(std::move(k));
  return out;
}

/// Generates every labeled vine on n elements and classifies them. Checks that
/// each class holds exactly n!/|Aut| labeled vines.
inline std::vector<VineClass> classify_all(int n, int cap = kDefaultGenerationCap) {
  std::map<CanonicalForm, VineClass> classes;
  std::vector<Mask> sorted;
  for_each_vine(
      n,
      [&](std::span<const Mask> nodes) {
        sorted.assign(nodes.begin(), nodes.end());
        sort_nodes(sorted);
        const auto c = canonicalize_nodes(n, sorted);
        auto it = classes.find(c.form);
        if (it == classes.end()) it = classes.emplace(c.form, detail::make_class(n, c)).first;
        ++it->second.members;
      },
      cap);
  std::vector<VineClass> out;
  for (auto& [f, k] : classes) {
    if (k.members != k.orbit_size)
      throw InternalError("class orbit of size " + std::to_string(k.members) + " but n!/|Aut| = " +
                          std::to_string(k.orbit_size));
    out.push_back(std::move(k));
  }
  return out;
}

/// Classes on n+1 elements obtained by doubling every maximal chain of every
/// given class lattice. Every extremal lattice arises from a smaller one by
/// doubling, so a complete list of classes on n yields a complete list on n+1.
inline std::vector<VineClass> classes_by_doubling(const std::vector<VineClass>& smaller) {
  std::map<CanonicalForm, VineClass> classes;
  for (const auto& k : smaller) {
    const auto lattice = vine_to_lattice(k.representative);
    for (const auto& chain : maximal_chains(k.representative)) {
      std::vector<Mask> with_bottom{0};
      with_bottom.insert(with_bottom.end(), chain.begin(), chain.end());
      const auto doubled = lattice_to_vine(doubling(lattice, with_bottom));
      const auto c = canonicalize(doubled);
      if (!classes.count(c.form)) classes.emplace(c.form, detail::make_class(doubled.size(), c));
    }
  }
  std::vector<VineClass> out;
  for (auto& [f, k] : classes) out.push_back(std::move(k));
  return out;
}

/// (classes with |Aut| = 2, classes with |Aut| = 1), to compare with (p_n, q_n).
inline std::pair<std::uint64_t, std::uint64_t> automorphism_tally(const std::vector<VineClass>& classes) {
  std::pair<std::uint64_t, std::uint64_t> t{0, 0};
  for (const auto& c : classes) ++(c.automorphisms == 2 ? t.first : t.second);
  return t;
}

/// One representative per isomorphism class: exhaustive classification up to
/// `exhaustive_limit`, then repeated doubling.
inline std::vector<VineClass> class_representatives(int n, int exhaustive_limit = 6) {
  if (n <= exhaustive_limit) return classify_all(n);
  auto classes = classify_all(exhaustive_limit);
  for (int m = exhaustive_limit; m < n; ++m) classes = classes_by_doubling(classes);
  return classes;
}

}  // namespace splitmerge
