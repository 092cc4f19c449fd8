#include "run.hpp"

#include "tilecoh/approximant.hpp"
#include "tilecoh/cohomology.hpp"
#include "tilecoh/collaring.hpp"
#include "tilecoh/language.hpp"
#include "tilecoh/tiling.hpp"
#include "tilecoh/tower.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

namespace tilecoh::cli {
namespace {

using nlohmann::json;

json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json torsion_json(const std::vector<Int>& torsion) {
  json out = json::array();
  for (const Int& e : torsion) out.push_back(int_json(e));
  return out;
}

json group_json(const AbelianGroupPresentation& g) {
  return json{{"degree", g.degree},
              {"free_rank", g.free_rank},
              {"torsion", torsion_json(g.torsion)},
              {"rendering", group_to_string(g)}};
}

const char* provenance_name(LanguageProvenance p) {
  switch (p) {
    case LanguageProvenance::SubstitutionClosure: return "substitution_closure";
    case LanguageProvenance::Explicit: return "explicit";
    default: return "periodic";
  }
}

json envelope(const RunConfig& c, const TilingDefinition& def) {
  json out{{"command", c.command},
           {"name", def.name},
           {"dimension", def.dimension},
           {"symmetry", def.symmetry == Symmetry::Discrete ? "discrete" : "continuous"}};
  if (def.symmetry == Symmetry::Discrete) out["note"] = "degree-0 only";
  return out;
}

void write_text(const RunConfig& c, const std::string& body) {
  if (c.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(c.out_path);
  if (!out) throw std::runtime_error("cannot write output file: " + c.out_path);
  out << body;
}

void write_report(const RunConfig& c, const json& report) {
  write_text(c, report.dump(2) + "\n");
}

std::string render_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << "\n";
  }
  return out.str();
}

int run_language(const RunConfig& c, const TilingDefinition& def) {
  if (c.width == 0) {
    std::cerr << "language: --width is required and must be positive\n";
    return 2;
  }
  if (def.dimension == 1 && c.height != 1) {
    std::cerr << "language: height must be 1 for one dimensional definitions\n";
    return 2;
  }
  const WindowLanguage lang =
      factor_language(def, WindowShape{c.width, def.dimension == 1 ? 1 : c.height});
  if (c.pretty) {
    std::ostringstream out;
    for (const Pattern& p : lang.patterns) out << pattern_to_string(p, def) << "\n";
    write_text(c, out.str());
    return 0;
  }
  json report = envelope(c, def);
  report["shape"] = json{{"width", lang.shape.width}, {"height", lang.shape.height}};
  report["provenance"] = provenance_name(lang.provenance);
  if (lang.provenance == LanguageProvenance::SubstitutionClosure)
    report["closure_order"] = lang.closure_order;
  report["count"] = lang.size();
  json patterns = json::array();
  for (const Pattern& p : lang.patterns) patterns.push_back(pattern_to_string(p, def));
  report["patterns"] = std::move(patterns);
  write_report(c, report);
  return 0;
}

int run_collar(const RunConfig& c, const TilingDefinition& def) {
  const auto tiles = collar(def, c.depth);
  const auto rels = adjacency(def, c.depth);
  if (c.pretty) {
    std::ostringstream out;
    for (const CollaredTile& t : tiles)
      out << t.id << ": " << pattern_to_string(t.collar, def) << "\n";
    for (const AdjacencyRelation& rel : rels)
      for (const auto& [a, b] : rel.pairs)
        out << direction_name(rel.direction) << ": " << a << " -> " << b << "\n";
    write_text(c, out.str());
    return 0;
  }
  json report = envelope(c, def);
  report["depth"] = c.depth;
  json tiles_json = json::array();
  for (const CollaredTile& t : tiles)
    tiles_json.push_back(json{{"id", t.id},
                              {"center", t.center},
                              {"pattern", pattern_to_string(t.collar, def)}});
  report["tiles"] = std::move(tiles_json);
  json rels_json = json::array();
  for (const AdjacencyRelation& rel : rels) {
    json pairs = json::array();
    for (const auto& [a, b] : rel.pairs) pairs.push_back(json::array({a, b}));
    rels_json.push_back(
        json{{"direction", direction_name(rel.direction)}, {"pairs", std::move(pairs)}});
  }
  report["adjacencies"] = std::move(rels_json);
  write_report(c, report);
  return 0;
}

int run_complex(const RunConfig& c, const TilingDefinition& def) {
  const CWComplex k = build_approximant(def, c.depth);

  if (!c.dot_path.empty()) {
    const std::string dot = export_dot(k);
    if (c.dot_path == "-") {
      std::cout << dot;
    } else {
      std::ofstream out(c.dot_path);
      if (!out) throw std::runtime_error("cannot write DOT file: " + c.dot_path);
      out << dot;
    }
  }
  // DOT on stdout leaves no room for the report there; keep stdout clean
  // unless an explicit report file was named.
  if (c.dot_path == "-" && c.out_path.empty()) return 0;

  if (c.pretty) {
    std::ostringstream out;
    out << "K_" << c.depth << ": dimension " << k.dimension << "\n";
    for (std::size_t d = 0; d < k.cell_tags.size(); ++d)
      out << "cells degree " << d << ": " << k.cell_count(d) << "\n";
    for (std::size_t d = 1; d <= static_cast<std::size_t>(k.dimension); ++d) {
      const IntMatrix& b = k.boundary_matrix(d);
      out << "boundary " << d << ": " << b.rows() << "x" << b.cols() << "\n"
          << render_matrix_text(b);
    }
    out << "euler: " << k.euler_characteristic() << "\n";
    write_text(c, out.str());
    return 0;
  }
  json report = envelope(c, def);
  report["depth"] = c.depth;
  report["complex_dimension"] = k.dimension;
  report["euler"] = k.euler_characteristic();
  json cells = json::array();
  for (std::size_t d = 0; d < k.cell_tags.size(); ++d)
    cells.push_back(json{{"degree", d}, {"count", k.cell_count(d)}, {"tags", k.cell_tags[d]}});
  report["cells"] = std::move(cells);
  json boundaries = json::array();
  for (std::size_t d = 1; d <= static_cast<std::size_t>(k.dimension); ++d)
    boundaries.push_back(json{{"degree", d}, {"matrix", matrix_json(k.boundary_matrix(d))}});
  report["boundaries"] = std::move(boundaries);
  write_report(c, report);
  return 0;
}

int run_cohomology(const RunConfig& c, const TilingDefinition& def) {
  const std::size_t start = c.include_k0 ? 0 : 1;
  json levels = json::array();
  std::ostringstream text;
  for (std::size_t n = start; n <= c.depth; ++n) {
    const CWComplex k = build_approximant(def, n);
    json groups = json::array();
    text << "K_" << n << ":";
    for (std::size_t d = 0; d <= static_cast<std::size_t>(k.dimension); ++d) {
      const AbelianGroupPresentation g = cohomology(k, d);
      groups.push_back(group_json(g));
      text << (d ? "," : "") << " H^" << d << " = " << group_to_string(g);
    }
    text << "\n";
    levels.push_back(json{{"level", n},
                          {"euler", k.euler_characteristic()},
                          {"groups", std::move(groups)}});
  }
  if (c.pretty) {
    write_text(c, text.str());
    return 0;
  }
  json report = envelope(c, def);
  report["depth"] = c.depth;
  report["include_k0"] = c.include_k0;
  report["levels"] = std::move(levels);
  write_report(c, report);
  return 0;
}

int run_limit(const RunConfig& c, const TilingDefinition& def) {
  const std::size_t start = c.include_k0 ? 0 : 1;
  std::vector<CellularMap> forgetful;
  for (std::size_t n = start + 1; n <= c.depth; ++n)
    forgetful.push_back(forgetful_map(def, n));
  const std::size_t top_degree =
      def.symmetry == Symmetry::Discrete ? 0 : static_cast<std::size_t>(def.dimension);

  json degrees = json::array();
  std::ostringstream text;
  bool any_unclassified = false;
  for (std::size_t deg = 0; deg <= top_degree; ++deg) {
    // One cohomology computation per level, shared by the two maps that
    // touch it; the heavy Smith forms dominate everything else here.
    std::vector<AbelianGroupPresentation> groups;
    groups.reserve(forgetful.size() + 1);
    groups.push_back(cohomology(forgetful.front().target, deg));
    for (const CellularMap& f : forgetful) groups.push_back(cohomology(f.source, deg));
    std::vector<GroupMap> maps;
    maps.reserve(forgetful.size());
    for (std::size_t i = 0; i < forgetful.size(); ++i)
      maps.push_back(induced_cohomology_map(forgetful[i], deg, groups[i], groups[i + 1]));
    const DirectLimitPresentation lim = analyze_tower(maps, c.stab_window);
    any_unclassified |= lim.classification == TowerClass::Unclassified;

    json tower = json::array();
    for (std::size_t i = 0; i < lim.groups.size(); ++i) {
      json g = group_json(lim.groups[i]);
      g["level"] = start + i;
      tower.push_back(std::move(g));
    }
    json maps_json = json::array();
    for (std::size_t i = 0; i < lim.step_matrices.size(); ++i)
      maps_json.push_back(
          json{{"level", start + i + 1}, {"matrix", matrix_json(lim.step_matrices[i])}});

    json entry{{"degree", deg},
               {"tower", std::move(tower)},
               {"maps", std::move(maps_json)},
               {"classification", tower_class_name(lim.classification)},
               {"rendering", lim.rendering}};
    if (lim.classification != TowerClass::Unclassified)
      entry["stabilization_depth"] = start + lim.stabilization_depth - 1;
    if (lim.classification == TowerClass::FinitelyGenerated)
      entry["stable_group"] = group_json(lim.stable_group);
    if (lim.classification == TowerClass::EventualTransition) {
      json transition{{"kind", transition_kind_name(lim.transition_kind)},
                      {"rank", lim.transition_rank},
                      {"diagonal", torsion_json(lim.transition_diagonal)},
                      {"torsion", torsion_json(lim.transition_torsion)},
                      {"closed_form", lim.closed_form}};
      if (!lim.basis_changes.empty()) {
        json bases = json::array();
        for (const IntMatrix& b : lim.basis_changes) bases.push_back(matrix_json(b));
        transition["basis_changes"] = std::move(bases);
      }
      entry["transition"] = std::move(transition);
    }
    degrees.push_back(std::move(entry));

    text << "degree " << deg << "\n  tower:";
    for (std::size_t i = 0; i < lim.groups.size(); ++i)
      text << (i ? " -> " : " ") << group_to_string(lim.groups[i]);
    text << "\n  classification: " << tower_class_name(lim.classification);
    if (lim.classification == TowerClass::EventualTransition)
      text << " (" << transition_kind_name(lim.transition_kind) << ")";
    text << "\n";
    if (lim.classification != TowerClass::Unclassified)
      text << "  stabilization depth: " << start + lim.stabilization_depth - 1 << "\n";
    text << "  limit: " << lim.rendering << "\n";
  }

  if (c.pretty) {
    write_text(c, text.str());
  } else {
    json report = envelope(c, def);
    report["depth"] = c.depth;
    report["stab_window"] = c.stab_window;
    report["include_k0"] = c.include_k0;
    report["degrees"] = std::move(degrees);
    write_report(c, report);
  }
  return any_unclassified ? 3 : 0;
}

int validate(const RunConfig& c) {
  if (c.command != "language") {
    if (c.depth < 1) {
      std::cerr << "depth must be at least 1\n";
      return 2;
    }
    if (c.depth > 8 && !c.unsafe_depth) {
      std::cerr << "depth " << c.depth
                << " exceeds the cap of 8; pass --unsafe-depth to override\n";
      return 2;
    }
  }
  if (c.command == "limit") {
    if (c.stab_window < 2) {
      std::cerr << "stabilization window must be at least 2\n";
      return 2;
    }
    const std::size_t levels = c.depth + (c.include_k0 ? 1 : 0);
    if (c.depth < c.stab_window || levels < c.stab_window + 1) {
      std::cerr << "tower too short for the stabilization window: " << levels
                << " levels, window " << c.stab_window << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config) {
  const int invalid = validate(config);
  if (invalid) return invalid;

  std::ifstream in(config.definition_path);
  if (!in) {
    std::cerr << "cannot read definition file: " << config.definition_path << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  TilingDefinition def;
  try {
    def = parse_definition(buffer.str());
  } catch (const DefinitionError& e) {
    std::cerr << "definition error (" << e.field() << "): " << e.what() << "\n";
    return 2;
  }

  try {
    if (config.command == "language") return run_language(config, def);
    if (config.command == "collar") return run_collar(config, def);
    if (config.command == "complex") return run_complex(config, def);
    if (config.command == "cohomology") return run_cohomology(config, def);
    if (config.command == "limit") return run_limit(config, def);
    std::cerr << "unknown command: " << config.command << "\n";
    return 2;
  } catch (const ClosureError& e) {
    json report{{"command", config.command},
                {"name", def.name},
                {"error",
                 json{{"kind", "closure"},
                      {"message", e.what()},
                      {"shape", json{{"width", e.shape().width}, {"height", e.shape().height}}},
                      {"previous_count", e.previous_set().size()},
                      {"last_count", e.last_set().size()}}},
                {"partial", true}};
    write_report(config, report);
    std::cerr << "closure failure: " << e.what() << "\n";
    return 3;
  } catch (const LanguageError& e) {
    json report{{"command", config.command},
                {"name", def.name},
                {"error", json{{"kind", "language"}, {"message", e.what()}}},
                {"partial", true}};
    write_report(config, report);
    std::cerr << "language failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tilecoh::cli
