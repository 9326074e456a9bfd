#pragma once

// Canonical forms and automorphism counts of regular vines.
//
// Every maximal chain c of a vine spells an order ω_c of the ground set, and
// relabeling ω_c(i) ↦ i maps the vine onto some node family over {0..n−1}.
// The set of such families is invariant under relabeling, so its minimum is
// a complete isomorphism invariant, and the number of chains reaching the
// minimum equals the order of the automorphism group.

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

#include "splitmerge/core.hpp"
#include "splitmerge/vine.hpp"

namespace splitmerge {

struct CanonicalForm {
  int n = 0;
  std::vector<Mask> nodes;  // relabeled onto {0..n−1}, in node order

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct Canonicalization {
  CanonicalForm form;
  int automorphisms = 0;
  Ordering labeling;  // a minimizing order: labeling[i] is sent to i
};

namespace detail {

inline std::vector<Mask> relabel_sorted(std::span<const Mask> nodes, std::span<const int> perm) {
  std::vector<Mask> out;
  out.reserve(nodes.size());
  for (Mask m : nodes) out.push_back(remap(m, perm));
  sort_nodes(out);
  return out;
}

inline bool contains_sorted(std::span<const Mask> sorted_nodes, Mask m) {
  return std::binary_search(sorted_nodes.begin(), sorted_nodes.end(), m, node_order_less);
}

template <class F>
void for_each_chain_order(int n, std::span<const Mask> sorted_nodes, F&& f) {
  Ordering ord;
  ord.reserve(static_cast<std::size_t>(n));
  const Mask full = low_bits(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, Mask cur) -> void {
    if (cur == full) {
      f(ord);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if ((cur & bit(x)) || !contains_sorted(sorted_nodes, cur | bit(x))) continue;
      ord.push_back(x);
      self(self, cur | bit(x));
      ord.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Canonicalizes a node family over {0..n−1} given in node order. The family
/// is assumed to be a valid vine.
inline Canonicalization canonicalize_nodes(int n, std::span<const Mask> sorted_nodes) {
  Canonicalization best;
  best.form.n = n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  bool first = true;
  detail::for_each_chain_order(n, sorted_nodes, [&](const Ordering& ord) {
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;
    auto enc = detail::relabel_sorted(sorted_nodes, perm);
    if (first || enc < best.form.nodes) {
      best.form.nodes = std::move(enc);
      best.automorphisms = 1;
      best.labeling = ord;
      first = false;
    } else if (enc == best.form.nodes) {
      ++best.automorphisms;
    }
  });
  if (n == 0) best.automorphisms = 1;
  return best;
}

inline Canonicalization canonicalize(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  return canonicalize_nodes(v.size(), v.nodes());
}

inline CanonicalForm canonical_form(const RegularVine& v) { return canonicalize(v).form; }

/// The canonical representative, labeled a, b, c, … .
inline RegularVine canonical_vine(const RegularVine& v) {
  const auto c = canonicalize(v);
  return RegularVine(GroundSet::letters(static_cast<std::size_t>(v.size())), c.form.nodes);
}

/// Number of ground-set permutations fixing the node family; at most 2 for any vine.
inline int automorphism_group_order(const RegularVine& v) {
  const int aut = canonicalize(v).automorphisms;
  if (aut < 1 || aut > 2) throw InternalError("vine with automorphism group of order " + std::to_string(aut));
  return aut;
}

}  // namespace splitmerge
