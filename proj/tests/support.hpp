#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "splitmerge/splitmerge.hpp"

namespace testing_support {

using namespace splitmerge;

/// Seed for randomized suites; set from --seed=N by the test main.
inline std::uint64_t& seed() {
  static std::uint64_t s = 20240611;
  return s;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

/// Every labeled vine on letters(n).
inline std::vector<RegularVine> all_vines(int n) { return generate_vines(GroundSet::letters(static_cast<std::size_t>(n))); }

/// `count` labeled vines on letters(n), drawn uniformly by reservoir sampling
/// over the full stream (deterministic for a given seed).
inline std::vector<RegularVine> sample_vines(int n, std::size_t count, std::uint64_t salt = 0) {
  auto gen = rng(salt + static_cast<std::uint64_t>(n));
  std::vector<std::vector<Mask>> reservoir;
  std::uint64_t seen = 0;
  for_each_vine(n, [&](std::span<const Mask> nodes) {
    ++seen;
    if (reservoir.size() < count) {
      reservoir.emplace_back(nodes.begin(), nodes.end());
      return;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, seen - 1);
    const auto j = pick(gen);
    if (j < count) reservoir[static_cast<std::size_t>(j)].assign(nodes.begin(), nodes.end());
  });
  const auto g = GroundSet::letters(static_cast<std::size_t>(n));
  std::vector<RegularVine> out;
  for (auto& r : reservoir) out.emplace_back(g, std::move(r));
  return out;
}

/// Exhaustive for n ≤ 5, otherwise a cached sample of 1000.
inline const std::vector<RegularVine>& instances(int n) {
  static std::map<int, std::vector<RegularVine>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, n <= 5 ? all_vines(n) : sample_vines(n, 1000)).first;
  return it->second;
}

/// A random bijection from `g` onto a shuffled set of fresh labels.
inline Relabeling random_relabeling(const GroundSet& g, std::mt19937_64& gen) {
  std::vector<std::string> targets;
  for (std::size_t i = 0; i < g.size(); ++i) targets.push_back("x" + std::to_string(i));
  std::shuffle(targets.begin(), targets.end(), gen);
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < g.size(); ++i) m[g.label(i)] = targets[i];
  return Relabeling(g, m);
}

/// A random permutation of `g` onto itself.
inline Relabeling random_permutation(const GroundSet& g, std::mt19937_64& gen) {
  std::vector<int> perm(g.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), gen);
  return Relabeling::from_permutation(g, g, perm);
}

/// Intersection closure of random subsets plus the empty set, the singletons and the top.
inline SubsetLattice random_closed_family(int n, std::mt19937_64& gen) {
  const Mask full = (Mask{1} << n) - 1;
  std::set<Mask> fam{0, full};
  for (int a = 0; a < n; ++a) fam.insert(Mask{1} << a);
  std::uniform_int_distribution<Mask> pick(0, full);
  std::uniform_int_distribution<int> how_many(0, 2 * n);
  for (int k = how_many(gen); k > 0; --k) fam.insert(pick(gen));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> cur(fam.begin(), fam.end());
    for (Mask x : cur)
      for (Mask y : cur) grew |= fam.insert(x & y).second;
  }
  return SubsetLattice(GroundSet::letters(static_cast<std::size_t>(n)), {fam.begin(), fam.end()});
}

}  // namespace testing_support
