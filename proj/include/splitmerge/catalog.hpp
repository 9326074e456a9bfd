#pragma once

// Per-class catalog of all five representations, in canonical-form order.

#include <sstream>
#include <string>
#include <vector>

#include "splitmerge/canonical.hpp"
#include "splitmerge/correspond.hpp"
#include "splitmerge/enumerate.hpp"
#include "splitmerge/io.hpp"
#include "splitmerge/lattice.hpp"

namespace splitmerge {

struct CatalogEntry {
  int n = 0;
  int index = 0;  // 1-based within n
  int automorphisms = 0;
  std::uint64_t orbit_size = 0;
  RegularVine vine;
  MatLabeledGraph graph;
  PreferenceDomain domain;
  SubsetLattice lattice;
  BinaryMatrix matrix;
  int richness = 0;
  std::vector<std::uint64_t> first_rank;
  bool d_vine = false;
  bool c_vine = false;
  std::optional<Ordering> bspd_axis;
};

inline CatalogEntry make_catalog_entry(const VineClass& c, int index) {
  CatalogEntry e;
  e.vine = c.representative;
  e.n = e.vine.size();
  e.index = index;
  e.automorphisms = c.automorphisms;
  e.orbit_size = c.orbit_size;
  e.graph = vine_to_graph(e.vine);
  e.domain = vine_to_domain(e.vine);
  e.lattice = vine_to_lattice(e.vine);
  e.matrix = lattice_to_matrix(e.lattice);
  e.richness = richness_via_vine(e.vine);
  e.first_rank = chain_counts_from_atoms(e.vine);
  e.d_vine = is_d_vine(e.vine);
  e.c_vine = is_c_vine(e.vine);
  e.bspd_axis = is_bspd(e.domain);
  return e;
}

inline std::vector<CatalogEntry> generate_catalog(int n) {
  std::vector<CatalogEntry> out;
  int index = 0;
  for (const auto& c : class_representatives(n)) out.push_back(make_catalog_entry(c, ++index));
  return out;
}

inline Json catalog_json(const CatalogEntry& e) {
  Json axis = nullptr;
  if (e.bspd_axis) axis = e.domain.alternatives().format(*e.bspd_axis);
  return {{"n", e.n},
          {"index", e.index},
          {"automorphisms", e.automorphisms},
          {"orbit_size", e.orbit_size},
          {"vine", e.vine.words()},
          {"graph", to_json(e.graph)["edges"]},
          {"domain", e.domain.words()},
          {"lattice_size", e.lattice.count()},
          {"matrix", matrix_rows(e.matrix)},
          {"richness", e.richness},
          {"first_rank", e.first_rank},
          {"d_vine", e.d_vine},
          {"c_vine", e.c_vine},
          {"bspd_axis", axis}};
}

/// JSON-lines: one class per line.
inline std::string catalog_jsonl(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += catalog_json(e).dump() + "\n";
  return out;
}

inline std::string catalog_text(int n, const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "Regular vines on " << n << " elements: " << entries.size()
     << " isomorphism class" << (entries.size() == 1 ? "" : "es") << ", listed in canonical-form order\n";
  for (const auto& e : entries) {
    const auto& g = e.vine.ground();
    os << "\n[" << n << "." << e.index << "] |Aut| = " << e.automorphisms << ", " << e.orbit_size
       << " labeled cop" << (e.orbit_size == 1 ? "y" : "ies") << "\n";
    os << "  vine      ";
    for (int k = 1; k <= n; ++k) {
      if (k > 1) os << " |";
      for (Mask m : e.vine.rank(k)) os << " " << g.format(m);
    }
    os << "\n  graph     ";
    for (const auto& edge : e.graph.edges()) os << " " << edge.u << edge.v << ":" << edge.label;
    os << "\n  domain\n";
    std::istringstream table(to_text(e.domain));
    std::string line;
    std::getline(table, line);  // header
    while (std::getline(table, line)) os << "    " << line << "\n";
    os << "  first-rank";
    for (auto c : e.first_rank) os << " " << c;
    os << "\n  richness   " << e.richness << "\n";
    os << "  D-vine     " << (e.d_vine ? "yes" : "no") << "\n";
    os << "  C-vine     " << (e.c_vine ? "yes" : "no") << "\n";
    os << "  BSPD       " << (e.bspd_axis ? "yes, axis " + g.format(*e.bspd_axis) : std::string("no")) << "\n";
    os << "  lattice    " << e.lattice.count() << " elements\n";
    os << "  matrix\n";
    for (const auto& r : matrix_rows(e.matrix)) os << "    " << r << "\n";
  }
  return os.str();
}

}  // namespace splitmerge
