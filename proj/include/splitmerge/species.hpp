#pragma once

// The split/merge species contract, proximity and checked merging, and the
// recursive transport between two conforming species.

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "splitmerge/core.hpp"

namespace splitmerge {

/// Result of splitting a structure on A: `first` lives on A∖{a1}, `second`
/// on A∖{a2}, `common` on A∖{a1,a2}, with a1 < a2.
template <class T>
struct Split {
  T first;
  T second;
  T common;
  std::string a1;
  std::string a2;
};

/// Unordered pair of structures on two co-atoms of a common ground set.
/// Stored with the half missing the smaller label first, so comparison
/// ignores the order in which the halves were supplied.
template <class T>
class SplitPair {
 public:
  SplitPair(T a, std::string removed_a, T b, std::string removed_b) {
    if (removed_a == removed_b) throw ArgumentError("split pair needs two distinct removed labels");
    if (removed_b < removed_a) {
      std::swap(a, b);
      std::swap(removed_a, removed_b);
    }
    left_ = std::move(a);
    right_ = std::move(b);
    a1_ = std::move(removed_a);
    a2_ = std::move(removed_b);
  }

  explicit SplitPair(Split<T> s) : SplitPair(std::move(s.first), std::move(s.a1), std::move(s.second), std::move(s.a2)) {}

  const T& left() const noexcept { return left_; }
  const T& right() const noexcept { return right_; }
  const std::string& removed_left() const noexcept { return a1_; }
  const std::string& removed_right() const noexcept { return a2_; }

  bool operator==(const SplitPair&) const = default;

 private:
  T left_;
  T right_;
  std::string a1_;
  std::string a2_;
};

template <class S>
concept SplitMergeSpecies = requires(const typename S::structure_type& x, const GroundSet& a, const Relabeling& h) {
  typename S::structure_type;
  { S::name() } -> std::convertible_to<std::string_view>;
  { S::ground(x) } -> std::convertible_to<const GroundSet&>;
  { S::trivial(a) } -> std::same_as<typename S::structure_type>;
  { S::split(x) } -> std::same_as<Split<typename S::structure_type>>;
  { S::merge(x, x) } -> std::same_as<std::optional<typename S::structure_type>>;
  { S::relabel(x, h) } -> std::same_as<typename S::structure_type>;
  { S::validate(x) } -> std::same_as<ValidationReport>;
  { x == x } -> std::convertible_to<bool>;
};

template <SplitMergeSpecies S>
SplitPair<typename S::structure_type> split_pair(const typename S::structure_type& x) {
  return SplitPair<typename S::structure_type>(S::split(x));
}

template <SplitMergeSpecies S>
typename S::structure_type relabel(const typename S::structure_type& x, const Relabeling& h) {
  return S::relabel(x, h);
}

namespace detail {

/// Number of structures shared by the split images of two structures of size ≥ 2.
template <SplitMergeSpecies S>
int shared_split_parts(const typename S::structure_type& x, const typename S::structure_type& y) {
  const auto sx = S::split(x);
  const auto sy = S::split(y);
  int shared = 0;
  for (const auto* p : {&sx.first, &sx.second})
    for (const auto* q : {&sy.first, &sy.second})
      if (S::ground(*p) == S::ground(*q) && *p == *q) ++shared;
  return shared;
}

/// |σ(x) △ σ(y)| for the two halves of a split; singleton halves are their own image.
template <SplitMergeSpecies S>
int split_image_difference(const typename S::structure_type& x, const typename S::structure_type& y) {
  if (S::ground(x).size() <= 1) return S::ground(x) == S::ground(y) ? 0 : 2;
  return 4 - 2 * shared_split_parts<S>(x, y);
}

}  // namespace detail

/// True when the two halves of split(x) have split images differing in exactly two structures.
template <SplitMergeSpecies S>
bool check_proximity(const typename S::structure_type& x) {
  S::validate(x).throw_if_invalid();
  if (S::ground(x).size() < 2) throw ArgumentError("proximity needs a ground set with at least two elements");
  const auto s = S::split(x);
  return detail::split_image_difference<S>(s.first, s.second) == 2;
}

/// The unique structure whose split is {x, y}, or nullopt when the split
/// images of x and y do not overlap in exactly one structure.
template <SplitMergeSpecies S>
std::optional<typename S::structure_type> merge_checked(const typename S::structure_type& x,
                                                        const typename S::structure_type& y) {
  S::validate(x).throw_if_invalid();
  S::validate(y).throw_if_invalid();
  if (!coatom_labels(S::ground(x), S::ground(y)))
    throw ArgumentError("ground sets are not two co-atoms of a common set");
  if (detail::split_image_difference<S>(x, y) != 2) return std::nullopt;
  auto merged = S::merge(x, y);
  if (!merged) throw InternalError(std::string(S::name()) + ": compatible pair failed to merge");
  return merged;
}

/// Carries a structure of species F to the corresponding structure of
/// species G by splitting in F and merging the transported halves in G.
/// Results are memoized per sub-ground-set: within one recursion the
/// structure on a given subset is always the same one.
template <SplitMergeSpecies F, SplitMergeSpecies G>
typename G::structure_type transport(const typename F::structure_type& x) {
  using Source = typename F::structure_type;
  using Target = typename G::structure_type;
  F::validate(x).throw_if_invalid();
  const GroundSet& top = F::ground(x);
  std::unordered_map<Mask, Target> memo;

  auto rec = [&](auto&& self, const Source& s) -> Target {
    const GroundSet& a = F::ground(s);
    const Mask key = top.mask_of_subset(a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Target out;
    if (a.size() <= 1) {
      out = G::trivial(a);
    } else {
      const auto parts = F::split(s);
      Target t1 = self(self, parts.first);
      Target t2 = self(self, parts.second);
      auto merged = G::merge(t1, t2);
      if (!merged)
        throw InternalError(std::string(G::name()) + ": transported halves over " + a.format(a.full()) +
                            " failed to merge");
      out = std::move(*merged);
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(rec, x);
}

}  // namespace splitmerge
