#pragma once

// Command-line front end. run_cli is the whole program; tools/main.cpp only forwards.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "splitmerge/catalog.hpp"
#include "splitmerge/examples.hpp"
#include "splitmerge/species.hpp"

namespace splitmerge::cli {

enum Exit : int { kOk = 0, kFailure = 1, kInputFailure = 2 };

inline const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"matgraph", "vine", "domain", "lattice", "matrix"};
  return k;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Structure load_structure(const std::string& path, const std::string& expected_kind = "") {
  Structure s = parse_structure(read_file(path));
  if (!expected_kind.empty() && kind_of(s) != expected_kind)
    throw InputError("expected kind " + expected_kind + ", file holds " + kind_of(s));
  return s;
}

// ---------------------------------------------------------------------------
// Conversions

/// Explicit maps into the vine representation. Validates the input.
inline RegularVine to_vine(const Structure& s) {
  struct V {
    RegularVine operator()(const MatLabeledGraph& g) const { return graph_to_vine(g); }
    RegularVine operator()(const RegularVine& v) const {
      validate_vine(v).throw_if_invalid();
      return v;
    }
    RegularVine operator()(const PreferenceDomain& d) const { return domain_to_vine(d); }
    RegularVine operator()(const SubsetLattice& l) const { return lattice_to_vine(l); }
    RegularVine operator()(const BinaryMatrix& m) const {
      validate_extremal_matrix(m).throw_if_invalid();
      return lattice_to_vine(matrix_to_lattice(m));
    }
  };
  return std::visit(V{}, s);
}

inline Structure from_vine(const RegularVine& v, const std::string& kind) {
  if (kind == "matgraph") return vine_to_graph(v);
  if (kind == "vine") return v;
  if (kind == "domain") return vine_to_domain(v);
  if (kind == "lattice") return vine_to_lattice(v);
  if (kind == "matrix") return lattice_to_matrix(vine_to_lattice(v));
  throw ArgumentError("unknown kind \"" + kind + "\"");
}

/// Explicit correspondence maps; graph and domain talk to each other directly.
inline Structure convert_direct(const Structure& s, const std::string& kind) {
  if (auto g = std::get_if<MatLabeledGraph>(&s); g && kind == "domain") return graph_to_domain(*g);
  if (auto d = std::get_if<PreferenceDomain>(&s); d && kind == "matgraph") return domain_to_graph(*d);
  return from_vine(to_vine(s), kind);
}

namespace detail {

template <SplitMergeSpecies F>
Structure transport_to(const typename F::structure_type& x, const std::string& core) {
  if (core == "matgraph") return transport<F, MatGraphSpecies>(x);
  if (core == "vine") return transport<F, VineSpecies>(x);
  return transport<F, DomainSpecies>(x);
}

}  // namespace detail

/// The generic split/merge recursion between graphs, vines and domains.
/// Lattices and matrices enter and leave through their vine.
inline Structure convert_transport(const Structure& s, const std::string& kind) {
  if (std::find(kinds().begin(), kinds().end(), kind) == kinds().end())
    throw ArgumentError("unknown kind \"" + kind + "\"");
  const bool layered = kind == "lattice" || kind == "matrix";
  const std::string core = layered ? "vine" : kind;
  Structure out;
  if (auto g = std::get_if<MatLabeledGraph>(&s)) out = detail::transport_to<MatGraphSpecies>(*g, core);
  else if (auto d = std::get_if<PreferenceDomain>(&s)) out = detail::transport_to<DomainSpecies>(*d, core);
  else out = detail::transport_to<VineSpecies>(to_vine(s), core);
  if (layered) return from_vine(std::get<RegularVine>(out), kind);
  return out;
}

inline Structure convert(const Structure& s, const std::string& kind, const std::string& via) {
  if (via == "transport") return convert_transport(s, kind);
  return convert_direct(s, kind);
}

inline bool same_structure(const Structure& a, const Structure& b) { return to_json(a) == to_json(b); }

// ---------------------------------------------------------------------------
// Verification

inline ValidationReport validate_structure(const Structure& s) {
  struct V {
    ValidationReport operator()(const MatLabeledGraph& g) const { return MatGraphSpecies::validate(g); }
    ValidationReport operator()(const RegularVine& v) const { return validate_vine(v); }
    ValidationReport operator()(const PreferenceDomain& d) const { return DomainSpecies::validate(d); }
    ValidationReport operator()(const SubsetLattice& l) const { return validate_extremal_lattice(l); }
    ValidationReport operator()(const BinaryMatrix& m) const { return validate_extremal_matrix(m); }
  };
  return std::visit(V{}, s);
}

/// Converts to every kind by both routes, checks they agree and lead back.
inline ValidationReport strict_round_trips(const Structure& s) {
  ValidationReport r;
  const RegularVine hub = to_vine(s);
  for (const auto& k : kinds()) {
    const Structure direct = convert_direct(s, k);
    const Structure carried = convert_transport(s, k);
    if (!same_structure(direct, carried)) r.add("roundtrip." + k, "direct and transported conversions differ");
    if (!same_structure(Structure(to_vine(direct)), Structure(hub)))
      r.add("roundtrip." + k, "conversion does not return to the same vine");
    if (!same_structure(convert_direct(direct, kind_of(s)), s))
      r.add("roundtrip." + k, "converting back does not reproduce the input");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Analytics

struct Analysis {
  std::string kind;
  GroundSet ground;
  int richness = 0;
  std::vector<std::uint64_t> first_rank;
  Mask bottoms = 0;
  bool d_vine = false;
  bool c_vine = false;
  std::optional<Ordering> bspd_axis;
  std::optional<Ordering> staircase;
  int automorphisms = 0;
};

inline Analysis analyze(const Structure& s) {
  Analysis a;
  a.kind = kind_of(s);
  const RegularVine v = to_vine(s);
  const PreferenceDomain d = vine_to_domain(v);
  a.ground = v.ground();
  a.richness = richness_via_vine(v);
  a.first_rank = chain_counts_from_atoms(v);
  a.bottoms = bottom_alternatives(d);
  a.d_vine = is_d_vine(v);
  a.c_vine = is_c_vine(v);
  a.bspd_axis = is_bspd(d);
  a.staircase = staircase_order(v);
  a.automorphisms = automorphism_group_order(v);
  if (auto in = std::get_if<PreferenceDomain>(&s)) {
    if (first_rank_distribution(*in) != a.first_rank)
      throw InternalError("first-rank distribution disagrees with the vine chain counts");
    if (richness_direct(*in) != a.richness) throw InternalError("richness disagrees with the vine computation");
    if (bottom_alternatives(*in) != a.bottoms) throw InternalError("bottom alternatives disagree");
  }
  return a;
}

inline Json analysis_json(const Analysis& a) {
  const auto& g = a.ground;
  const int n = static_cast<int>(g.size());
  Json fr = Json::object();
  for (int i = 0; i < n; ++i) fr[g.label(static_cast<std::size_t>(i))] = a.first_rank[static_cast<std::size_t>(i)];
  Json j{{"kind", a.kind},
         {"n", n},
         {"richness", a.richness},
         {"richness_bounds_apply", n >= 3},
         {"first_rank", a.first_rank},
         {"first_rank_by_alternative", fr},
         {"bottom_alternatives", g.subset_labels(a.bottoms)},
         {"d_vine", a.d_vine},
         {"c_vine", a.c_vine},
         {"bspd", a.bspd_axis.has_value()},
         {"automorphisms", a.automorphisms}};
  j["bspd_axis"] = a.bspd_axis ? Json(g.format(*a.bspd_axis)) : Json(nullptr);
  j["staircase_order"] = a.staircase ? Json(g.format(*a.staircase)) : Json(nullptr);
  return j;
}

inline std::string analysis_text(const Analysis& a) {
  const auto& g = a.ground;
  const int n = static_cast<int>(g.size());
  std::ostringstream os;
  os << "kind:                " << a.kind << "\n";
  os << "alternatives:        " << n << "\n";
  os << "richness:            " << a.richness;
  if (n < 3) os << " (richness bounds apply only for n >= 3)";
  else os << " (bounds 2.." << n / 2 + 1 << ")";
  os << "\nfirst-rank:          {";
  for (std::size_t i = 0; i < a.first_rank.size(); ++i) os << (i ? "," : "") << a.first_rank[i];
  os << "}";
  for (int i = 0; i < n; ++i)
    os << " " << g.label(static_cast<std::size_t>(i)) << "=" << a.first_rank[static_cast<std::size_t>(i)];
  os << "\nbottom alternatives: " << g.format(a.bottoms) << "\n";
  os << "D-vine:              " << (a.d_vine ? "true" : "false") << "\n";
  os << "C-vine:              " << (a.c_vine ? "true" : "false") << "\n";
  os << "BSPD:                " << (a.bspd_axis ? "true (axis " + g.format(*a.bspd_axis) + ")" : std::string("false"))
     << "\n";
  os << "|Aut|:               " << a.automorphisms << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Counting

inline constexpr int kCountCap = 64;

inline Json count_json(int n, const std::string& mode, const std::optional<std::uint64_t>& generated,
                       const std::optional<std::array<std::uint64_t, 3>>& classes) {
  const auto row = count_row(n);
  Json j{{"n", n}, {"mode", mode}};
  if (mode == "formula") {
    j["labeled"] = row.labeled.str();
    j["unlabeled"] = row.unlabeled.str();
  } else if (mode == "recursive") {
    j["p"] = row.p.str();
    j["q"] = row.q.str();
    j["unlabeled"] = BigInt(row.p + row.q).str();
  } else {
    j["labeled"] = std::to_string(*generated);
    if (classes) {
      j["unlabeled"] = std::to_string((*classes)[0]);
      j["p"] = std::to_string((*classes)[1]);
      j["q"] = std::to_string((*classes)[2]);
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Self-test

struct SelfCheck {
  std::string name;
  std::function<bool()> run;
};

inline int run_selftest(std::ostream& out) {
  using namespace worked;
  const std::vector<SelfCheck> checks{
      {"intro graph -> vine (direct, transport)",
       [] {
         const Structure g = k4_graph();
         return same_structure(convert_direct(g, "vine"), k4_vine()) &&
                same_structure(convert_transport(g, "vine"), k4_vine());
       }},
      {"intro vine -> domain (direct, transport)",
       [] {
         const Structure v = k4_vine();
         return same_structure(convert_direct(v, "domain"), k4_domain()) &&
                same_structure(convert_transport(v, "domain"), k4_domain());
       }},
      {"five-element triple round trips",
       [] {
         const Structure g = k5_graph();
         return same_structure(convert_direct(g, "vine"), k5_vine()) &&
                same_structure(convert_transport(g, "domain"), k5_domain()) &&
                same_structure(convert_transport(Structure(k5_domain()), "matgraph"), k5_graph());
       }},
      {"labeled counts n<=5 by generation",
       [] {
         for (int n = 1; n <= 5; ++n)
           if (BigInt(count_vines(n)) != labeled_count_formula(n)) return false;
         return true;
       }},
      {"class counts n<=5 by classification",
       [] {
         for (int n = 1; n <= 5; ++n)
           if (BigInt(classify_all(n).size()) != unlabeled_count_formula(n)) return false;
         return true;
       }},
      {"formula and recursion agree n<=12",
       [] {
         for (int n = 1; n <= 12; ++n) {
           const auto r = count_row(n);
           if (r.p + r.q != r.unlabeled) return false;
         }
         return true;
       }},
      {"four-alternative analytics",
       [] {
         const auto a = analyze(four_domain_path());
         const auto b = analyze(four_domain_star());
         return a.richness == 3 && a.bspd_axis && b.richness == 2 && !b.bspd_axis;
       }},
  };
  int failures = 0;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// Entry point

inline void emit(std::ostream& out, const Structure& s, const std::string& format) {
  if (format == "json") out << to_json(s).dump(2) << "\n";
  else if (format == "dot") out << to_dot(s);
  else out << to_text(s);
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split/merge species toolkit: MAT-labeled graphs, regular vines, maximal ASPDs, extremal lattices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "splitmerge 1.0");

  std::string path, kind, to_kind, via = "direct", format, out_dir;
  bool strict = false;
  int n = -1;
  std::vector<int> catalog_ns;
  std::string mode = "formula";
  unsigned threads = default_threads();

  const std::vector<std::string> all_kinds = kinds();
  auto* verify = app.add_subcommand("verify", "Validate a structure file");
  verify->add_option("path", path, "Structure file")->required();
  verify->add_option("--kind", kind, "Expected kind")->check(CLI::IsMember(all_kinds));
  verify->add_flag("--strict", strict, "Also run cross-representation round trips");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* conv = app.add_subcommand("convert", "Convert a structure to another kind");
  conv->add_option("path", path, "Structure file")->required();
  conv->add_option("--to", to_kind, "Target kind")->required()->check(CLI::IsMember(all_kinds));
  conv->add_option("--via", via, "direct maps or the generic transport")->check(CLI::IsMember({"direct", "transport"}));
  conv->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));

  auto* an = app.add_subcommand("analyze", "Social-choice and structural analytics");
  an->add_option("path", path, "Structure file")->required();
  an->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* cnt = app.add_subcommand("count", "Labeled and unlabeled counts");
  cnt->add_option("--n", n, "Ground-set size")->required()->check(CLI::PositiveNumber);
  cnt->add_option("--mode", mode, "formula, recursive or generate")
      ->check(CLI::IsMember({"formula", "recursive", "generate"}));
  cnt->add_option("--threads", threads, "Worker threads for generation")->check(CLI::PositiveNumber);
  cnt->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* cat = app.add_subcommand("catalog", "One entry per isomorphism class");
  cat->add_option("--n", catalog_ns, "Ground-set size(s)")->required()->check(CLI::Range(1, kDefaultGenerationCap));
  cat->add_option("--out", out_dir, "Directory for catalog-n<N>.jsonl and catalog-n<N>.txt");
  cat->add_option("--format", format, "Format when writing to standard output")->check(CLI::IsMember({"text", "json"}));

  auto* self = app.add_subcommand("selftest", "Quick built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputFailure;
  }

  try {
    if (verify->parsed()) {
      const Structure s = load_structure(path, kind);
      ValidationReport r = validate_structure(s);
      if (r.ok() && strict) r.append(strict_round_trips(s));
      if (format == "json") {
        Json vs = Json::array();
        for (const auto& v : r.violations()) vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
        out << Json{{"kind", kind_of(s)}, {"valid", r.ok()}, {"strict", strict}, {"violations", vs}}.dump(2) << "\n";
      } else if (r.ok()) {
        out << "valid " << kind_of(s) << " on " << ground_of(s).size() << (ground_of(s).size() == 1 ? " element" : " elements")
            << (strict ? " (round trips checked)" : "") << "\n";
      } else {
        out << "invalid " << kind_of(s) << "\n";
        for (const auto& v : r.violations()) out << "  " << v.axiom << ": " << v.witness << "\n";
      }
      return r.ok() ? kOk : kFailure;
    }
    if (conv->parsed()) {
      const Structure s = load_structure(path);
      emit(out, convert(s, to_kind, via), format.empty() ? "json" : format);
      return kOk;
    }
    if (an->parsed()) {
      const auto a = analyze(load_structure(path));
      if (format == "json") out << analysis_json(a).dump(2) << "\n";
      else out << analysis_text(a);
      return kOk;
    }
    if (cnt->parsed()) {
      std::optional<std::uint64_t> generated;
      std::optional<std::array<std::uint64_t, 3>> classes;
      bool reconciled = true;
      if (mode == "generate") {
        splitmerge::detail::check_cap(n, kDefaultGenerationCap);
        err << "generating labeled vines on " << n << " elements with " << threads << " thread(s)\n";
        generated = count_vines(n, threads);
        err << "generated " << *generated << " labeled vines; classifying\n";
        const auto reps = class_representatives(n);
        const auto [sym, asym] = automorphism_tally(reps);
        const std::array<std::uint64_t, 3> tally{reps.size(), sym, asym};
        classes = tally;
        const auto row = count_row(n);
        reconciled = BigInt(*generated) == row.labeled && BigInt(tally[0]) == row.unlabeled &&
                     BigInt(tally[1]) == row.p && BigInt(tally[2]) == row.q;
        err << "reconciliation against formulas: " << (reconciled ? "ok" : "MISMATCH") << "\n";
      } else if (n > kCountCap) {
        throw ArgumentError("n = " + std::to_string(n) + " exceeds the counting cap " + std::to_string(kCountCap));
      }
      const Json j = count_json(n, mode, generated, classes);
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "n=" << n;
        for (const char* key : {"labeled", "unlabeled", "p", "q"})
          if (j.contains(key)) out << " " << key << "=" << j[key].get<std::string>();
        out << "\n";
      }
      return reconciled ? kOk : kFailure;
    }
    if (cat->parsed()) {
      for (int cn : catalog_ns) {
        const auto entries = generate_catalog(cn);
        if (out_dir.empty()) {
          out << (format == "json" ? catalog_jsonl(entries) : catalog_text(cn, entries));
          continue;
        }
        std::filesystem::create_directories(out_dir);
        const auto base = std::filesystem::path(out_dir) / ("catalog-n" + std::to_string(cn));
        for (const auto& [ext, body] : {std::pair{".jsonl", catalog_jsonl(entries)},
                                        std::pair{".txt", catalog_text(cn, entries)}}) {
          std::ofstream f(base.string() + ext, std::ios::binary);
          f << body;
          if (!f) throw InputError("cannot write " + base.string() + ext);
        }
        out << "n=" << cn << ": " << entries.size() << " entries -> " << base.string() << ".{jsonl,txt}\n";
      }
      return kOk;
    }
    if (self->parsed()) return run_selftest(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.axiom() << ": " << e.witness() << "\n";
    return kFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace splitmerge::cli
