#pragma once

// Lattices realized as subset families, B(3)-freeness, extremality, chain
// doubling and its inverse, and the binary-matrix view with triangle search.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitmerge/core.hpp"
#include "splitmerge/vine.hpp"

namespace splitmerge {

/// A family of subsets of a ground set ordered by inclusion. May contain ∅.
class SubsetLattice {
 public:
  SubsetLattice() = default;

  SubsetLattice(GroundSet ground, std::vector<Mask> elements)
      : ground_(std::move(ground)), elements_(std::move(elements)) {
    for (Mask m : elements_)
      if (!is_subset(m, ground_.full())) throw InputError("lattice element is not a subset of the ground set");
    sort_nodes(elements_);
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw InputError("duplicate lattice element");
  }

  /// Elements spelled as words of single-character labels; "" is the empty set.
  static SubsetLattice from_words(GroundSet ground, std::initializer_list<std::string_view> words) {
    std::vector<Mask> els;
    for (auto w : words) els.push_back(ground.parse_subset(w));
    return SubsetLattice(std::move(ground), std::move(els));
  }

  const GroundSet& ground() const noexcept { return ground_; }
  const std::vector<Mask>& elements() const noexcept { return elements_; }
  std::size_t count() const noexcept { return elements_.size(); }
  bool contains(Mask m) const { return std::binary_search(elements_.begin(), elements_.end(), m, node_order_less); }

  SubsetLattice relabel(const Relabeling& h) const {
    std::vector<Mask> out;
    for (Mask m : elements_) out.push_back(h.apply(m));
    return SubsetLattice(h.codomain(), std::move(out));
  }

  bool operator==(const SubsetLattice&) const = default;

 private:
  GroundSet ground_;
  std::vector<Mask> elements_;
};

/// Least element of the family above both x and y, if unique.
inline std::optional<Mask> lattice_join(const SubsetLattice& l, Mask x, Mask y) {
  std::optional<Mask> best;
  for (Mask m : l.elements())
    if (is_subset(x | y, m) && (!best || is_subset(m, *best))) best = m;
  if (!best) return std::nullopt;
  for (Mask m : l.elements())
    if (is_subset(x | y, m) && !is_subset(*best, m)) return std::nullopt;
  return best;
}

inline std::optional<Mask> lattice_meet(const SubsetLattice& l, Mask x, Mask y) {
  std::optional<Mask> best;
  for (Mask m : l.elements())
    if (is_subset(m, x & y) && (!best || is_subset(*best, m))) best = m;
  if (!best) return std::nullopt;
  for (Mask m : l.elements())
    if (is_subset(m, x & y) && !is_subset(m, *best)) return std::nullopt;
  return best;
}

inline bool is_lattice(const SubsetLattice& l) {
  if (l.count() == 0) return false;
  const auto& e = l.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!lattice_join(l, e[i], e[j]) || !lattice_meet(l, e[i], e[j])) return false;
  return true;
}

/// Eight elements forming an induced B(3): bottom, three atoms, their pairwise
/// joins (12, 13, 23) and top.
struct B3Witness {
  std::array<Mask, 8> elements{};
};

namespace detail {

inline void require_lattice(const SubsetLattice& l) {
  if (!is_lattice(l)) throw ArgumentError("subset family is not a lattice");
}

inline Mask bottom_of(const SubsetLattice& l) { return l.elements().front(); }
inline Mask top_of(const SubsetLattice& l) { return l.elements().back(); }

}  // namespace detail

/// Direct search for T1, T2, T3 pairwise incomparable with no Tk below the
/// join of the other two. Such a triple exists iff the lattice has an
/// induced B(3), and together with bottom, the three joins and top it is one.
inline std::optional<B3Witness> find_b3_direct(const SubsetLattice& l) {
  detail::require_lattice(l);
  const auto& e = l.elements();
  const std::size_t m = e.size();
  auto incomparable = [](Mask a, Mask b) { return !is_subset(a, b) && !is_subset(b, a); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!incomparable(e[i], e[j])) continue;
      const Mask jij = *lattice_join(l, e[i], e[j]);
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!incomparable(e[i], e[k]) || !incomparable(e[j], e[k])) continue;
        if (is_subset(e[k], jij)) continue;
        const Mask jik = *lattice_join(l, e[i], e[k]);
        if (is_subset(e[j], jik)) continue;
        const Mask jjk = *lattice_join(l, e[j], e[k]);
        if (is_subset(e[i], jjk)) continue;
        return B3Witness{{detail::bottom_of(l), e[i], e[j], e[k], jij, jik, jjk, detail::top_of(l)}};
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Binary matrices

/// Rows are ground elements, columns are distinct subsets (characteristic vectors).
class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  BinaryMatrix(GroundSet rows, std::vector<Mask> columns) : rows_(std::move(rows)), cols_(std::move(columns)) {
    for (Mask c : cols_)
      if (!is_subset(c, rows_.full())) throw InputError("matrix column has a 1 outside the row range");
    sort_nodes(cols_);
    if (std::adjacent_find(cols_.begin(), cols_.end()) != cols_.end()) throw InputError("duplicate matrix column");
  }

  const GroundSet& rows() const noexcept { return rows_; }
  const std::vector<Mask>& columns() const noexcept { return cols_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  std::size_t column_count() const noexcept { return cols_.size(); }
  bool entry(int row, std::size_t col) const { return (cols_.at(col) & bit(row)) != 0; }

  bool operator==(const BinaryMatrix&) const = default;

 private:
  GroundSet rows_;
  std::vector<Mask> cols_;
};

/// Rows r[0..2] and columns c[0..2] realizing the triangle: c[0] ⊇ {r0,r1}
/// without r2, c[1] ⊇ {r0,r2} without r1, c[2] ⊇ {r1,r2} without r0.
struct TriangleWitness {
  std::array<int, 3> rows{};
  std::array<Mask, 3> columns{};
};

/// Least triangle over row triples in lexicographic order, if any.
inline std::optional<TriangleWitness> find_triangle(const BinaryMatrix& m) {
  const int n = m.row_count();
  for (int r0 = 0; r0 < n; ++r0)
    for (int r1 = r0 + 1; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2) {
        const Mask t = bit(r0) | bit(r1) | bit(r2);
        std::array<std::optional<Mask>, 3> found;
        for (Mask c : m.columns()) {
          const Mask s = c & t;
          if (s == (bit(r0) | bit(r1)) && !found[0]) found[0] = c;
          if (s == (bit(r0) | bit(r2)) && !found[1]) found[1] = c;
          if (s == (bit(r1) | bit(r2)) && !found[2]) found[2] = c;
        }
        if (found[0] && found[1] && found[2]) return TriangleWitness{{r0, r1, r2}, {*found[0], *found[1], *found[2]}};
      }
  return std::nullopt;
}

inline bool has_no_triangles(const BinaryMatrix& m) { return !find_triangle(m).has_value(); }

inline std::size_t extremal_size(std::size_t n) { return 1 + n + n * (n - 1) / 2; }

inline bool is_extremal_matrix(const BinaryMatrix& m) {
  return m.column_count() == extremal_size(static_cast<std::size_t>(m.row_count())) && has_no_triangles(m);
}

inline BinaryMatrix lattice_to_matrix(const SubsetLattice& l) { return BinaryMatrix(l.ground(), l.elements()); }
inline SubsetLattice matrix_to_lattice(const BinaryMatrix& m) { return SubsetLattice(m.rows(), m.columns()); }

// ---------------------------------------------------------------------------
// B(3)-freeness and extremality

inline bool has_all_singletons(const SubsetLattice& l) {
  for (int a = 0; a < static_cast<int>(l.ground().size()); ++a)
    if (!l.contains(bit(a))) return false;
  return true;
}

/// An induced B(3), or nullopt when the lattice is B(3)-free. With all
/// singletons present the triangle criterion is used; otherwise the direct search.
inline std::optional<B3Witness> find_b3(const SubsetLattice& l) {
  detail::require_lattice(l);
  if (!has_all_singletons(l)) return find_b3_direct(l);
  const auto t = find_triangle(lattice_to_matrix(l));
  if (!t) return std::nullopt;
  const auto& r = t->rows;
  return B3Witness{{detail::bottom_of(l), bit(r[0]), bit(r[1]), bit(r[2]), t->columns[0], t->columns[1], t->columns[2],
                    detail::top_of(l)}};
}

inline bool is_b3_free(const SubsetLattice& l) { return !find_b3(l).has_value(); }

/// Elements (other than the bottom) with exactly one lower cover.
inline std::vector<Mask> join_irreducibles(const SubsetLattice& l) {
  const auto& e = l.elements();
  const auto covers = detail::cover_lists(e);
  std::vector<Mask> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (covers[i].size() == 1) out.push_back(e[i]);
  return out;
}

struct LatticeDiagnostics {
  bool lattice = false;
  bool b3_free = false;
  std::size_t size = 0;
  std::size_t join_irreducible_count = 0;
  bool graded = false;                   // all maximal chains have equal length
  bool irreducibles_are_atoms = false;   // every join-irreducible covers the bottom
};

inline LatticeDiagnostics lattice_diagnostics(const SubsetLattice& l) {
  LatticeDiagnostics d;
  d.size = l.count();
  d.lattice = is_lattice(l);
  if (!d.lattice) return d;
  d.b3_free = is_b3_free(l);
  const auto ji = join_irreducibles(l);
  d.join_irreducible_count = ji.size();
  const Mask bottom = detail::bottom_of(l);
  d.irreducibles_are_atoms = std::all_of(ji.begin(), ji.end(), [&](Mask x) {
    return std::none_of(l.elements().begin(), l.elements().end(),
                        [&](Mask y) { return y != bottom && y != x && is_subset(bottom, y) && is_subset(y, x); });
  });
  // Graded: longest and shortest cover paths from bottom agree at every element.
  const auto& e = l.elements();
  const auto covers = detail::cover_lists(e);
  std::vector<int> lo(e.size(), 0);
  std::vector<int> hi(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (covers[i].empty()) continue;
    lo[i] = 1 << 29;
    for (int c : covers[i]) {
      lo[i] = std::min(lo[i], lo[static_cast<std::size_t>(c)] + 1);
      hi[i] = std::max(hi[i], hi[static_cast<std::size_t>(c)] + 1);
    }
  }
  d.graded = lo == hi;
  return d;
}

/// A lattice with at most n join-irreducibles, no induced B(3), and 1+n+C(n,2) elements.
inline bool is_extremal_lattice(const SubsetLattice& l, std::size_t n) {
  if (l.count() != extremal_size(n) || !is_lattice(l)) return false;
  return join_irreducibles(l).size() <= n && is_b3_free(l);
}

inline SubsetLattice vine_to_lattice(const RegularVine& v) {
  validate_vine(v).throw_if_invalid();
  auto els = v.nodes();
  els.push_back(0);
  return SubsetLattice(v.ground(), std::move(els));
}

inline RegularVine lattice_to_vine(const SubsetLattice& l) {
  if (!is_extremal_lattice(l, l.ground().size()))
    throw ValidationError("lattice.extremal", "not an extremal lattice on the ground set");
  if (detail::bottom_of(l) != 0) throw ValidationError("lattice.bottom", "bottom element is not the empty set");
  std::vector<Mask> nodes(l.elements().begin() + 1, l.elements().end());
  RegularVine v(l.ground(), std::move(nodes));
  validate_vine(v).throw_if_invalid();
  return v;
}

/// Axiom-tagged check that `l` is a regular vine plus the empty bottom.
inline ValidationReport validate_extremal_lattice(const SubsetLattice& l) {
  ValidationReport r;
  const auto& g = l.ground();
  if (!is_lattice(l)) {
    r.add("lattice.lattice", "some pair has no join or no meet");
    return r;
  }
  if (detail::bottom_of(l) != 0) r.add("lattice.bottom", "bottom is " + g.format(detail::bottom_of(l)));
  if (auto w = find_b3(l)) {
    std::string s;
    for (int i = 1; i <= 3; ++i) s += (i > 1 ? "," : "") + g.format(w->elements[static_cast<std::size_t>(i)]);
    r.add("lattice.b3", "induced B(3) on " + s);
  }
  const auto ji = join_irreducibles(l).size();
  if (ji > g.size()) r.add("lattice.irreducibles", std::to_string(ji) + " join-irreducibles");
  if (l.count() != extremal_size(g.size()))
    r.add("lattice.extremal", std::to_string(l.count()) + " elements, expected " + std::to_string(extremal_size(g.size())));
  return r;
}

inline ValidationReport validate_extremal_matrix(const BinaryMatrix& m) {
  ValidationReport r;
  const auto& g = m.rows();
  if (auto t = find_triangle(m)) {
    r.add("matrix.triangle", "rows " + g.label(static_cast<std::size_t>(t->rows[0])) + "," +
                                 g.label(static_cast<std::size_t>(t->rows[1])) + "," +
                                 g.label(static_cast<std::size_t>(t->rows[2])));
  }
  const auto want = extremal_size(g.size());
  if (m.column_count() != want)
    r.add("matrix.extremal", std::to_string(m.column_count()) + " columns, expected " + std::to_string(want));
  return r;
}

// ---------------------------------------------------------------------------
// Doubling

/// Smallest label in the a, b, …, z, aa, ab, … sequence not in `g`.
inline std::string fresh_label(const GroundSet& g) {
  for (std::size_t i = 0;; ++i) {
    auto l = GroundSet::letter_label(i);
    if (!g.contains(l)) return l;
  }
}

inline bool is_maximal_chain(const SubsetLattice& l, const std::vector<Mask>& chain) {
  if (chain.empty() || chain.front() != detail::bottom_of(l) || chain.back() != detail::top_of(l)) return false;
  const auto& e = l.elements();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (!l.contains(chain[k])) return false;
    if (k == 0) continue;
    const Mask lo = chain[k - 1];
    const Mask hi = chain[k];
    if (lo == hi || !is_subset(lo, hi)) return false;
    for (Mask m : e)
      if (m != lo && m != hi && is_subset(lo, m) && is_subset(m, hi)) return false;
  }
  return true;
}

/// Adjoins a copy x ∪ {fresh} of every chain element x.
inline SubsetLattice doubling(const SubsetLattice& l, const std::vector<Mask>& chain, const std::string& fresh) {
  if (!is_maximal_chain(l, chain)) throw ArgumentError("doubling needs a maximal chain of the lattice");
  if (l.ground().contains(fresh)) throw ArgumentError("doubling label '" + fresh + "' is already in use");
  auto labels = l.ground().labels();
  labels.push_back(fresh);
  const GroundSet big(labels);
  const auto emb = big.embedding_of(l.ground());
  const Mask f = bit(big.index(fresh));
  std::vector<Mask> els;
  for (Mask m : l.elements()) els.push_back(remap(m, emb));
  for (Mask m : chain) els.push_back(remap(m, emb) | f);
  return SubsetLattice(big, std::move(els));
}

inline SubsetLattice doubling(const SubsetLattice& l, const std::vector<Mask>& chain) {
  return doubling(l, chain, fresh_label(l.ground()));
}

struct Undoubling {
  SubsetLattice base;
  std::vector<Mask> chain;  // maximal chain of `base`, bottom to top
  std::string removed;      // the label whose elements formed the doubled copy
};

/// Splits off the copy of a maximal chain. Of the two co-atoms below the top,
/// the one missing the lexicographically smaller label is kept as the base.
inline Undoubling undouble(const SubsetLattice& l) {
  const std::size_t n = l.ground().size();
  if (n < 2) throw ArgumentError("undoubling needs at least two atoms");
  const RegularVine v = lattice_to_vine(l);
  const auto parts = split_vine(v);
  const int r = l.ground().index(parts.a1);
  const Mask keep = l.ground().full() & ~bit(r);
  const auto idx = members(keep);
  std::vector<Mask> base;
  std::vector<Mask> chain;
  for (Mask m : l.elements()) {
    if (m & bit(r)) chain.push_back(pullback(m & ~bit(r), idx));
    else base.push_back(pullback(m, idx));
  }
  sort_nodes(chain);
  Undoubling out{SubsetLattice(l.ground().restrict(keep), std::move(base)), std::move(chain), parts.a1};
  if (!is_maximal_chain(out.base, out.chain)) throw InternalError("undoubled copy is not a maximal chain");
  return out;
}

}  // namespace splitmerge
