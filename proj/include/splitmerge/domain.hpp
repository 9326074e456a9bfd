#pragma once

// Preference domains: restriction, Condorcet cycles, Arrow's and Black's
// single-peakedness, maximality, splitting/merging of maximal ASPDs, and the
// position-based analytics.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitmerge/core.hpp"
#include "splitmerge/species.hpp"

namespace splitmerge {

/// A set of linear orders on a common alternative set; ω[0] is ranked first.
class PreferenceDomain {
 public:
  PreferenceDomain() = default;

  PreferenceDomain(GroundSet alternatives, std::vector<Ordering> prefs)
      : alts_(std::move(alternatives)), prefs_(std::move(prefs)) {
    const int n = static_cast<int>(alts_.size());
    for (const auto& p : prefs_) {
      if (static_cast<int>(p.size()) != n) throw InputError("preference does not rank every alternative");
      Mask seen = 0;
      for (int x : p) {
        if (x < 0 || x >= n || (seen & bit(x))) throw InputError("preference is not a permutation");
        seen |= bit(x);
      }
    }
    std::sort(prefs_.begin(), prefs_.end());
    if (std::adjacent_find(prefs_.begin(), prefs_.end()) != prefs_.end()) throw InputError("duplicate preference");
  }

  /// Preferences spelled as words of single-character labels, e.g. {"abc", "bac"}.
  static PreferenceDomain from_words(GroundSet alternatives, std::initializer_list<std::string_view> words) {
    std::vector<Ordering> prefs;
    for (auto w : words) prefs.push_back(alternatives.parse_ordering(w));
    return PreferenceDomain(std::move(alternatives), std::move(prefs));
  }

  static PreferenceDomain from_labels(GroundSet alternatives, const std::vector<std::vector<std::string>>& prefs) {
    std::vector<Ordering> out;
    for (const auto& p : prefs) {
      Ordering o;
      for (const auto& l : p) o.push_back(alternatives.index(l));
      out.push_back(std::move(o));
    }
    return PreferenceDomain(std::move(alternatives), std::move(out));
  }

  const GroundSet& alternatives() const noexcept { return alts_; }
  const GroundSet& ground() const noexcept { return alts_; }
  /// Lexicographically sorted preferences.
  const std::vector<Ordering>& preferences() const noexcept { return prefs_; }
  int size() const noexcept { return static_cast<int>(alts_.size()); }
  std::size_t count() const noexcept { return prefs_.size(); }

  bool contains(const Ordering& p) const { return std::binary_search(prefs_.begin(), prefs_.end(), p); }

  PreferenceDomain relabel(const Relabeling& h) const {
    if (!(h.domain() == alts_)) throw ArgumentError("relabeling domain differs from alternative set");
    std::vector<Ordering> out;
    for (const auto& p : prefs_) {
      Ordering q;
      for (int x : p) q.push_back(h.image_index(x));
      out.push_back(std::move(q));
    }
    return PreferenceDomain(h.codomain(), std::move(out));
  }

  std::vector<std::string> words() const {
    std::vector<std::string> out;
    for (const auto& p : prefs_) out.push_back(alts_.format(p));
    return out;
  }

  bool operator==(const PreferenceDomain&) const = default;

 private:
  GroundSet alts_;
  std::vector<Ordering> prefs_;
};

inline Ordering reversed(const Ordering& p) { return Ordering(p.rbegin(), p.rend()); }

/// Induced orders on the alternatives in `keep`, deduplicated.
inline PreferenceDomain restrict_domain(const PreferenceDomain& d, Mask keep) {
  if (!is_subset(keep, d.alternatives().full())) throw ArgumentError("restriction set is not a subset of the alternatives");
  const auto idx = members(keep);
  std::vector<int> pos(static_cast<std::size_t>(d.size()), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[static_cast<std::size_t>(idx[i])] = static_cast<int>(i);
  std::vector<Ordering> out;
  for (const auto& p : d.preferences()) {
    Ordering q;
    for (int x : p)
      if (keep & bit(x)) q.push_back(pos[static_cast<std::size_t>(x)]);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return PreferenceDomain(d.alternatives().restrict(keep), std::move(out));
}

namespace detail {

/// Positions of every alternative in every preference: pos[p][x].
inline std::vector<std::vector<int>> position_table(const PreferenceDomain& d) {
  std::vector<std::vector<int>> pos;
  pos.reserve(d.count());
  for (const auto& p : d.preferences()) {
    std::vector<int> row(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) row[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    pos.push_back(std::move(row));
  }
  return pos;
}

template <class F>
void for_each_triple(int n, F&& f) {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) f(x, y, z);
}

}  // namespace detail

struct CondorcetCycle {
  Mask triple = 0;
  std::array<Ordering, 3> preferences;  // witnesses for a>b>c, b>c>a, c>a>b
};

inline std::optional<CondorcetCycle> find_condorcet_cycle(const PreferenceDomain& d) {
  const auto pos = detail::position_table(d);
  std::optional<CondorcetCycle> found;
  detail::for_each_triple(d.size(), [&](int x, int y, int z) {
    if (found) return;
    // Two cyclic orientations: (x,y,z) and (x,z,y).
    for (const std::array<int, 3> t : {std::array<int, 3>{x, y, z}, std::array<int, 3>{x, z, y}}) {
      std::array<int, 3> witness{-1, -1, -1};
      for (std::size_t p = 0; p < pos.size(); ++p)
        for (int r = 0; r < 3; ++r) {
          const int a = t[static_cast<std::size_t>(r)];
          const int b = t[static_cast<std::size_t>((r + 1) % 3)];
          const int c = t[static_cast<std::size_t>((r + 2) % 3)];
          if (witness[static_cast<std::size_t>(r)] < 0 && pos[p][static_cast<std::size_t>(a)] < pos[p][static_cast<std::size_t>(b)] &&
              pos[p][static_cast<std::size_t>(b)] < pos[p][static_cast<std::size_t>(c)])
            witness[static_cast<std::size_t>(r)] = static_cast<int>(p);
        }
      if (std::all_of(witness.begin(), witness.end(), [](int w) { return w >= 0; })) {
        CondorcetCycle cyc;
        cyc.triple = bit(x) | bit(y) | bit(z);
        for (std::size_t r = 0; r < 3; ++r) cyc.preferences[r] = d.preferences()[static_cast<std::size_t>(witness[r])];
        found = cyc;
        return;
      }
    }
  });
  return found;
}

/// Alternatives ranked last by at least one preference.
inline Mask bottom_alternatives(const PreferenceDomain& d) {
  Mask m = 0;
  for (const auto& p : d.preferences())
    if (!p.empty()) m |= bit(p.back());
  return m;
}

struct AspdCheck {
  bool aspd = true;
  std::optional<Mask> violating_triple;  // a triple in which every alternative is somewhere bottom

  explicit operator bool() const noexcept { return aspd; }
};

/// Never-bottom criterion on every triple.
inline AspdCheck is_aspd(const PreferenceDomain& d) {
  const auto pos = detail::position_table(d);
  AspdCheck result;
  detail::for_each_triple(d.size(), [&](int x, int y, int z) {
    if (!result.aspd) return;
    Mask bottoms = 0;
    for (const auto& row : pos) {
      const int px = row[static_cast<std::size_t>(x)];
      const int py = row[static_cast<std::size_t>(y)];
      const int pz = row[static_cast<std::size_t>(z)];
      const int last = std::max({px, py, pz});
      bottoms |= last == px ? bit(x) : last == py ? bit(y) : bit(z);
    }
    if (cardinality(bottoms) == 3) {
      result.aspd = false;
      result.violating_triple = bottoms;
    }
  });
  return result;
}

inline bool is_maximal_aspd(const PreferenceDomain& d) {
  const int n = d.size();
  if (n == 0) return d.count() == 1;
  if (n > 63 || d.count() != (std::size_t{1} << (n - 1))) return false;
  return is_aspd(d).aspd;
}

/// Definitional maximality: d is an ASPD and adding any missing order breaks it.
/// Visits all n! orders, so only meant for small n.
inline bool is_maximal_aspd_by_extension(const PreferenceDomain& d) {
  if (!is_aspd(d)) return false;
  Ordering w(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) w[static_cast<std::size_t>(i)] = i;
  do {
    if (d.contains(w)) continue;
    auto prefs = d.preferences();
    prefs.push_back(w);
    if (is_aspd(PreferenceDomain(d.alternatives(), std::move(prefs)))) return false;
  } while (std::next_permutation(w.begin(), w.end()));
  return true;
}

/// True when every prefix of every preference is a contiguous block of `axis`.
inline bool is_single_peaked_on(const PreferenceDomain& d, const Ordering& axis) {
  std::vector<int> where(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) where[static_cast<std::size_t>(axis[i])] = static_cast<int>(i);
  for (const auto& p : d.preferences()) {
    int lo = where[static_cast<std::size_t>(p[0])];
    int hi = lo;
    for (std::size_t k = 1; k < p.size(); ++k) {
      const int w = where[static_cast<std::size_t>(p[k])];
      if (w == lo - 1) lo = w;
      else if (w == hi + 1) hi = w;
      else return false;
    }
  }
  return true;
}

namespace detail {

inline Ordering oriented(Ordering axis) {
  if (axis.size() >= 2 && axis.front() > axis.back()) std::reverse(axis.begin(), axis.end());
  return axis;
}

/// Lexicographically first axis (with first < last) found by trying every
/// order whose endpoints include all bottom alternatives.
inline std::optional<Ordering> bspd_axis_search(const PreferenceDomain& d) {
  const int n = d.size();
  const Mask bottoms = bottom_alternatives(d);
  if (cardinality(bottoms) > 2) return std::nullopt;
  Ordering axis(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = i;
  if (n <= 1) return axis;
  do {
    if (axis.front() > axis.back()) continue;
    if (!is_subset(bottoms, bit(axis.front()) | bit(axis.back()))) continue;
    if (is_single_peaked_on(d, axis)) return axis;
  } while (std::next_permutation(axis.begin(), axis.end()));
  return std::nullopt;
}

}  // namespace detail

/// A societal axis for d, oriented so its first label precedes its last.
/// For maximal ASPDs only preferences whose reversal is also present are tried.
inline std::optional<Ordering> is_bspd(const PreferenceDomain& d) {
  if (d.size() >= 2 && is_maximal_aspd(d)) {
    for (const auto& p : d.preferences())
      if (d.contains(reversed(p)) && is_single_peaked_on(d, p)) return detail::oriented(p);
    return std::nullopt;
  }
  return detail::bspd_axis_search(d);
}

namespace detail {

inline void require_maximal_aspd(const PreferenceDomain& d) {
  if (!is_maximal_aspd(d)) {
    const auto check = is_aspd(d);
    if (!check.aspd)
      throw ValidationError("domain.aspd", "every alternative of " + d.alternatives().format(*check.violating_triple) +
                                               " is bottom somewhere");
    throw ValidationError("domain.maximal", "domain has " + std::to_string(d.count()) + " preferences, expected 2^(n-1)");
  }
}

/// Preferences of d whose last alternative is x, with x removed, over A∖{x}.
inline PreferenceDomain bottom_block(const PreferenceDomain& d, int x) {
  const Mask keep = d.alternatives().full() & ~bit(x);
  const auto idx = members(keep);
  std::vector<int> pos(static_cast<std::size_t>(d.size()), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[static_cast<std::size_t>(idx[i])] = static_cast<int>(i);
  std::vector<Ordering> out;
  for (const auto& p : d.preferences()) {
    if (p.back() != x) continue;
    Ordering q;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) q.push_back(pos[static_cast<std::size_t>(p[k])]);
    out.push_back(std::move(q));
  }
  return PreferenceDomain(d.alternatives().restrict(keep), std::move(out));
}

}  // namespace detail

inline Split<PreferenceDomain> split_domain(const PreferenceDomain& d) {
  detail::require_maximal_aspd(d);
  if (d.size() < 2) throw ArgumentError("splitting needs at least two alternatives");
  const Mask bottoms = bottom_alternatives(d);
  if (cardinality(bottoms) != 2) throw InternalError("maximal ASPD without exactly two bottom alternatives");
  const int a1 = lowest(bottoms);
  const int a2 = lowest(bottoms & (bottoms - 1));
  auto d1 = detail::bottom_block(d, a1);
  auto d2 = detail::bottom_block(d, a2);
  auto common = detail::bottom_block(d1, d1.alternatives().index(d.alternatives().label(a2)));
  return {std::move(d1), std::move(d2), std::move(common), d.alternatives().label(a1), d.alternatives().label(a2)};
}

/// Appends a1 below every preference of d1 and a2 below every preference of
/// d2, provided the second-level blocks agree.
inline std::optional<PreferenceDomain> merge_domains(const PreferenceDomain& d1, const PreferenceDomain& d2) {
  const auto removed = coatom_labels(d1.alternatives(), d2.alternatives());
  if (!removed) throw ArgumentError("alternative sets are not two co-atoms of a common set");
  detail::require_maximal_aspd(d1);
  detail::require_maximal_aspd(d2);
  const int a2_in_1 = d1.alternatives().index(removed->second);
  const int a1_in_2 = d2.alternatives().index(removed->first);
  if (!(bottom_alternatives(d1) & bit(a2_in_1)) || !(bottom_alternatives(d2) & bit(a1_in_2))) return std::nullopt;
  if (!(detail::bottom_block(d1, a2_in_1) == detail::bottom_block(d2, a1_in_2))) return std::nullopt;

  const GroundSet all = unite(d1.alternatives(), d2.alternatives());
  std::vector<Ordering> prefs;
  auto append = [&](const PreferenceDomain& part, const std::string& below) {
    const auto emb = all.embedding_of(part.alternatives());
    for (const auto& p : part.preferences()) {
      Ordering q;
      for (int x : p) q.push_back(emb[static_cast<std::size_t>(x)]);
      q.push_back(all.index(below));
      prefs.push_back(std::move(q));
    }
  };
  append(d1, removed->first);
  append(d2, removed->second);
  return PreferenceDomain(all, std::move(prefs));
}

/// Smallest 1-based i with {x, y} = {ω(i), ω(i+1)} for some ω.
inline int topmost_contiguous_position(const PreferenceDomain& d, int x, int y) {
  if (x == y) throw ArgumentError("topmost contiguous position needs two distinct alternatives");
  if (x < 0 || y < 0 || x >= d.size() || y >= d.size()) throw ArgumentError("alternative out of range");
  int best = 0;
  for (const auto& p : d.preferences())
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if ((p[k] == x && p[k + 1] == y) || (p[k] == y && p[k + 1] == x)) {
        const int i = static_cast<int>(k) + 1;
        if (best == 0 || i < best) best = i;
        break;
      }
  if (best == 0)
    throw ValidationError("domain.contiguous", d.alternatives().label(x) + " and " + d.alternatives().label(y) +
                                                   " are never adjacent");
  return best;
}

inline int topmost_contiguous_position(const PreferenceDomain& d, std::string_view x, std::string_view y) {
  return topmost_contiguous_position(d, d.alternatives().index(x), d.alternatives().index(y));
}

/// t_a: how many preferences rank a first, indexed by alternative.
inline std::vector<std::uint64_t> first_rank_distribution(const PreferenceDomain& d) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(d.size()), 0);
  for (const auto& p : d.preferences())
    if (!p.empty()) ++out[static_cast<std::size_t>(p.front())];
  return out;
}

/// Largest k such that every position j ≤ k is occupied by every alternative somewhere.
inline int richness_direct(const PreferenceDomain& d) {
  const int n = d.size();
  for (int k = 0; k < n; ++k) {
    Mask seen = 0;
    for (const auto& p : d.preferences()) seen |= bit(p[static_cast<std::size_t>(k)]);
    if (seen != d.alternatives().full()) return k;
  }
  return n;
}

struct DomainSpecies {
  using structure_type = PreferenceDomain;

  static constexpr std::string_view name() { return "domain"; }
  static const GroundSet& ground(const PreferenceDomain& d) { return d.alternatives(); }
  static PreferenceDomain trivial(const GroundSet& a) {
    if (a.size() > 1) throw ArgumentError("trivial domain needs at most one alternative");
    Ordering only;
    if (a.size() == 1) only.push_back(0);
    return PreferenceDomain(a, {only});
  }
  static Split<PreferenceDomain> split(const PreferenceDomain& d) { return split_domain(d); }
  static std::optional<PreferenceDomain> merge(const PreferenceDomain& a, const PreferenceDomain& b) {
    return merge_domains(a, b);
  }
  static PreferenceDomain relabel(const PreferenceDomain& d, const Relabeling& h) { return d.relabel(h); }
  static ValidationReport validate(const PreferenceDomain& d) {
    ValidationReport r;
    try {
      detail::require_maximal_aspd(d);
    } catch (const ValidationError& e) {
      r.add(e.axiom(), e.witness());
    }
    return r;
  }
};

}  // namespace splitmerge
