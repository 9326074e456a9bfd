#pragma once

// Ground sets, subset masks, relabelings and the error/report types shared by
// every structure family.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitmerge {

/// Subset of a ground set, bit i standing for the i-th label in sorted order.
using Mask = std::uint64_t;

/// Sequence of ground-set indices (a vertex ordering or a preference).
using Ordering = std::vector<int>;

inline constexpr std::size_t kMaxGroundSize = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr int cardinality(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(m)));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

/// Lexicographic comparison of the sorted index sequences of two subsets.
constexpr bool subset_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = lowest(a);
    const int lb = lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Canonical node order: by cardinality, then lexicographically.
constexpr bool node_order_less(Mask a, Mask b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  return subset_lex_less(a, b);
}

inline void sort_nodes(std::vector<Mask>& nodes) {
  std::sort(nodes.begin(), nodes.end(), node_order_less);
}

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: duplicate labels, non-positive edge labels, bad subsets.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Signals a broken invariant that the underlying theory guarantees.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A structure failed its family validator; carries the first violated axiom.
class ValidationError : public Error {
 public:
  ValidationError(std::string axiom, std::string witness)
      : Error(axiom + ": " + witness), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

struct Violation {
  std::string axiom;  // machine-readable identifier, e.g. "vine.proximity"
  std::string witness;

  bool operator==(const Violation&) const = default;
};

class ValidationReport {
 public:
  bool ok() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string axiom, std::string witness) {
    violations_.push_back({std::move(axiom), std::move(witness)});
  }
  void append(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const Violation& first() const { return violations_.front(); }

  bool has(std::string_view axiom) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
  }

  void throw_if_invalid() const {
    if (!ok()) throw ValidationError(first().axiom, first().witness);
  }

 private:
  std::vector<Violation> violations_;
};

// ---------------------------------------------------------------------------
// GroundSet

/// A finite set of distinct string labels, iterated in lexicographic order.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
      throw InputError("duplicate label in ground set");
    if (labels_.size() > kMaxGroundSize)
      throw InputError("ground set larger than " + std::to_string(kMaxGroundSize));
    for (const auto& l : labels_)
      if (l.empty()) throw InputError("empty label in ground set");
  }

  GroundSet(std::initializer_list<std::string> labels)
      : GroundSet(std::vector<std::string>(labels)) {}

  /// The first n labels of a, b, c, ... (then aa, ab, ...).
  static GroundSet letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(letter_label(i));
    return GroundSet(std::move(out));
  }

  /// Bijective base-26 spelling: 0 -> a, 25 -> z, 26 -> aa.
  static std::string letter_label(std::size_t i) {
    std::string s;
    ++i;
    while (i > 0) {
      --i;
      s.insert(s.begin(), static_cast<char>('a' + i % 26));
      i /= 26;
    }
    return s;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Mask full() const noexcept { return low_bits(labels_.size()); }

  std::optional<int> find(std::string_view l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }
  bool contains(std::string_view l) const { return find(l).has_value(); }

  int index(std::string_view l) const {
    if (auto i = find(l)) return *i;
    throw ArgumentError("label '" + std::string(l) + "' not in ground set");
  }

  template <class Range>
  Mask mask_of(const Range& ls) const {
    Mask m = 0;
    for (const auto& l : ls) m |= bit(static_cast<std::size_t>(index(l)));
    return m;
  }

  /// True when every label is a single character, so words like "abc" parse.
  bool single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.size() == 1; });
  }

  Mask parse_subset(std::string_view word) const {
    Mask m = 0;
    for (char c : word) {
      const Mask b = bit(static_cast<std::size_t>(parse_label(c, word)));
      if (m & b) throw InputError("repeated label in '" + std::string(word) + "'");
      m |= b;
    }
    return m;
  }

  Ordering parse_ordering(std::string_view word) const {
    Ordering out;
    Mask seen = 0;
    for (char c : word) {
      const int x = parse_label(c, word);
      if (seen & bit(x)) throw InputError("repeated label in '" + std::string(word) + "'");
      seen |= bit(x);
      out.push_back(x);
    }
    return out;
  }

  std::vector<std::string> subset_labels(Mask m) const {
    std::vector<std::string> out;
    for (int i : members(m)) out.push_back(labels_[static_cast<std::size_t>(i)]);
    return out;
  }

  std::string format(Mask m) const {
    if (m == 0) return "{}";
    std::string s;
    const bool compact = single_char_labels();
    if (!compact) s += '{';
    bool first = true;
    for (int i : members(m)) {
      if (!compact && !first) s += ',';
      s += labels_[static_cast<std::size_t>(i)];
      first = false;
    }
    if (!compact) s += '}';
    return s;
  }

  std::string format(std::span<const int> ord) const {
    std::string s;
    const bool compact = single_char_labels();
    for (std::size_t k = 0; k < ord.size(); ++k) {
      if (!compact && k) s += ' ';
      s += labels_.at(static_cast<std::size_t>(ord[k]));
    }
    return s;
  }

  GroundSet restrict(Mask m) const {
    std::vector<std::string> out;
    for (int i : members(m & full())) out.push_back(labels_[static_cast<std::size_t>(i)]);
    return GroundSet(std::move(out));
  }

  GroundSet without(std::string_view l) const { return restrict(full() & ~bit(static_cast<std::size_t>(index(l)))); }

  /// For each index of `sub`, its index in *this. `sub` must be a subset.
  std::vector<int> embedding_of(const GroundSet& sub) const {
    std::vector<int> out;
    out.reserve(sub.size());
    for (const auto& l : sub.labels()) {
      auto i = find(l);
      if (!i) throw ArgumentError("'" + l + "' is not in the enclosing ground set");
      out.push_back(*i);
    }
    return out;
  }

  /// Mask of the labels of `sub` inside *this.
  Mask mask_of_subset(const GroundSet& sub) const { return mask_of(sub.labels()); }

  bool operator==(const GroundSet&) const = default;
  auto operator<=>(const GroundSet&) const = default;

 private:
  int parse_label(char c, std::string_view word) const {
    const auto x = find(std::string_view(&c, 1));
    if (!x) throw InputError("unknown label '" + std::string(1, c) + "' in '" + std::string(word) + "'");
    return *x;
  }

  std::vector<std::string> labels_;
};

/// Maps each set bit i of `m` to bit map[i].
inline Mask remap(Mask m, std::span<const int> map) {
  Mask out = 0;
  for (; m != 0; m &= m - 1) out |= bit(static_cast<std::size_t>(map[static_cast<std::size_t>(lowest(m))]));
  return out;
}

/// Inverse of remap for a subset embedding: bits of `m` (over the big set)
/// that lie in the image of `map` are pulled back; other bits are dropped.
inline Mask pullback(Mask m, std::span<const int> map) {
  Mask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (m & bit(static_cast<std::size_t>(map[i]))) out |= bit(i);
  return out;
}

inline GroundSet unite(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> ls = a.labels();
  for (const auto& l : b.labels())
    if (!a.contains(l)) ls.push_back(l);
  return GroundSet(std::move(ls));
}

/// When `g1` = A\{a1} and `g2` = A\{a2} for some set A and distinct a1, a2,
/// returns (a1, a2). Otherwise nullopt.
inline std::optional<std::pair<std::string, std::string>> coatom_labels(const GroundSet& g1,
                                                                        const GroundSet& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  std::vector<std::string> only1;
  std::vector<std::string> only2;
  for (const auto& l : g1.labels())
    if (!g2.contains(l)) only1.push_back(l);
  for (const auto& l : g2.labels())
    if (!g1.contains(l)) only2.push_back(l);
  if (only1.size() != 1 || only2.size() != 1) return std::nullopt;
  // g1 lacks a1, which is the label only g2 has.
  return std::make_pair(only2.front(), only1.front());
}

// ---------------------------------------------------------------------------
// Relabeling

/// A bijection between two ground sets.
class Relabeling {
 public:
  Relabeling() = default;

  Relabeling(const GroundSet& domain, const std::map<std::string, std::string>& mapping) : domain_(domain) {
    std::vector<std::string> image;
    image.reserve(domain.size());
    for (const auto& l : domain.labels()) {
      auto it = mapping.find(l);
      if (it == mapping.end()) throw ArgumentError("relabeling undefined on '" + l + "'");
      image.push_back(it->second);
    }
    if (mapping.size() != domain.size()) throw ArgumentError("relabeling defined outside its domain");
    try {
      codomain_ = GroundSet(image);
    } catch (const InputError&) {
      throw ArgumentError("relabeling is not injective");
    }
    index_map_.reserve(image.size());
    for (const auto& l : image) index_map_.push_back(codomain_.index(l));
  }

  /// domain index i maps to codomain index perm[i].
  static Relabeling from_permutation(const GroundSet& domain, const GroundSet& codomain,
                                     std::span<const int> perm) {
    if (perm.size() != domain.size() || codomain.size() != domain.size())
      throw ArgumentError("permutation size mismatch");
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= codomain.size())
        throw ArgumentError("permutation entry out of range");
      m[domain.label(i)] = codomain.label(static_cast<std::size_t>(perm[i]));
    }
    return Relabeling(domain, m);
  }

  static Relabeling identity(const GroundSet& g) {
    std::map<std::string, std::string> m;
    for (const auto& l : g.labels()) m[l] = l;
    return Relabeling(g, m);
  }

  const GroundSet& domain() const noexcept { return domain_; }
  const GroundSet& codomain() const noexcept { return codomain_; }
  std::span<const int> index_map() const noexcept { return index_map_; }
  int image_index(int i) const { return index_map_.at(static_cast<std::size_t>(i)); }

  const std::string& operator()(std::string_view l) const {
    return codomain_.label(static_cast<std::size_t>(index_map_[static_cast<std::size_t>(domain_.index(l))]));
  }

  Mask apply(Mask m) const { return remap(m, index_map_); }

  /// h restricted to `sub` (a subset of the domain).
  Relabeling restrict(const GroundSet& sub) const {
    std::map<std::string, std::string> m;
    for (const auto& l : sub.labels()) m[l] = (*this)(l);
    return Relabeling(sub, m);
  }

  Relabeling inverse() const {
    std::map<std::string, std::string> m;
    for (const auto& l : domain_.labels()) m[(*this)(l)] = l;
    return Relabeling(codomain_, m);
  }

  /// outer ∘ inner.
  friend Relabeling compose(const Relabeling& outer, const Relabeling& inner) {
    if (!(inner.codomain() == outer.domain())) throw ArgumentError("relabelings do not compose");
    std::map<std::string, std::string> m;
    for (const auto& l : inner.domain().labels()) m[l] = outer(inner(l));
    return Relabeling(inner.domain(), m);
  }

 private:
  GroundSet domain_;
  GroundSet codomain_;
  std::vector<int> index_map_;
};

}  // namespace splitmerge
