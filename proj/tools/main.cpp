// Command-line front end: `annuli glue` computes invariants of a glued
// surface spec, `annuli curve` derives the mirror surface of a stacky curve,
// and `annuli poly` cross-checks computed against closed-form invariants for
// an invertible polynomial.  All reports are deterministic JSON.
//
// Exit codes: 0 success (and MATCH where applicable), 1 a computed-vs-
// expected mismatch, 2 input or validation error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "annuli/invertible.hpp"
#include "annuli/json_io.hpp"

namespace {

using annuli::Json;

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return Json::parse(f);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

struct CommonFlags {
  std::string out;
  std::string dot_ribbon;
  std::string dot_quiver;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "write the JSON report to this path");
  cmd->add_option("--dot-ribbon", flags.dot_ribbon,
                  "write the ribbon graph in DOT format");
  cmd->add_option("--dot-quiver", flags.dot_quiver,
                  "write the generating quiver in DOT format");
}

void write_dots(const annuli::GluedSurfaceSpec& spec, const annuli::Quiver& q,
                const CommonFlags& flags) {
  if (!flags.dot_ribbon.empty()) {
    write_text(flags.dot_ribbon, annuli::ribbon_to_dot(annuli::ribbon_graph(spec)));
  }
  if (!flags.dot_quiver.empty()) {
    write_text(flags.dot_quiver, annuli::to_dot(q));
  }
}

int run_glue(const std::string& spec_path, const CommonFlags& flags) {
  const auto spec = annuli::surface_spec_from_json(load_json(spec_path));
  const auto quiver = annuli::generating_quiver(spec);

  Json report;
  report["command"] = "glue";
  report["input"] = annuli::surface_spec_to_json(spec);
  report["invariants"] = annuli::invariants_to_json(spec);
  report["quiver"] = annuli::quiver_stats_json(quiver);
  write_dots(spec, quiver, flags);
  emit(report, flags.out);
  return 0;
}

int run_curve(const std::string& spec_path, bool check_quivers,
              const CommonFlags& flags) {
  const auto curve = annuli::curve_spec_from_json(load_json(spec_path));
  const auto surface = annuli::mirror_surface_spec(curve);
  const auto quiver = annuli::generating_quiver(surface);

  Json report;
  report["command"] = "curve";
  report["input"] = annuli::curve_spec_to_json(curve);
  report["derived_gluings"] = Json::array();
  for (std::size_t i = 0; i < curve.nodes.size(); ++i) {
    const auto& sigma = surface.gluings[i];
    Json entry;
    entry["node"] = i;
    entry["images"] = sigma.images();
    entry["cycles"] = annuli::cycles_to_string(annuli::cycle_decomposition(sigma));
    report["derived_gluings"].push_back(std::move(entry));
  }
  report["surface"] = annuli::surface_spec_to_json(surface);
  report["invariants"] = annuli::invariants_to_json(surface);
  report["quiver"] = annuli::quiver_stats_json(quiver);

  int rc = 0;
  if (check_quivers) {
    const bool equal =
        annuli::quiver_equal(annuli::exceptional_quiver(curve), quiver,
                             annuli::vertex_dictionary(curve));
    report["quiver_check"] = equal ? "equal" : "different";
    if (!equal) rc = 1;
  }
  write_dots(surface, quiver, flags);
  emit(report, flags.out);
  return rc;
}

Json closed_form_json(const annuli::ClosedFormInvariants& cf) {
  Json j;
  j["euler"] = cf.euler;
  j["boundary"] = Json::array();
  for (const auto& [winding, count] : cf.windings) {
    j["boundary"].push_back({{"winding", winding}, {"count", count}});
  }
  j["b"] = cf.b;
  j["genus"] = cf.genus;
  return j;
}

// One (polynomial, ell) comparison; appends to `cases` and reports whether
// the computed and closed-form invariants agree.
bool poly_case(const annuli::InvertiblePoly& w, long long ell, bool echo_curve,
               Json& cases) {
  const auto curve = annuli::bside_curve(w, ell);
  const auto surface = annuli::mirror_surface_spec(curve);
  const auto inv = annuli::compute_invariants(surface);
  const auto cf = annuli::closed_form_invariants(w, ell);

  const bool match = inv.euler == cf.euler && inv.total_boundary == cf.b &&
                     inv.genus && *inv.genus == cf.genus &&
                     inv.boundary == cf.windings;

  Json c;
  c["poly"] = annuli::to_string(w);
  c["ell"] = ell;
  if (echo_curve) {
    c["curve"] = annuli::curve_spec_to_json(curve);
    c["surface"] = annuli::surface_spec_to_json(surface);
  }
  c["computed"] = annuli::invariants_summary_json(inv);
  c["closed_form"] = closed_form_json(cf);
  c["h1"] = annuli::mirror_rank_h1(w, ell);
  c["verdict"] = match ? "MATCH" : "MISMATCH";
  cases.push_back(std::move(c));
  return match;
}

int run_poly(const std::string& poly_spec, long long ell, bool all_ell,
             const std::string& grid, const CommonFlags& flags) {
  Json report;
  bool all_match = true;

  if (!grid.empty()) {
    const auto comma = grid.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("--grid expects pmax,qmax");
    }
    const long long pmax = std::stoll(grid.substr(0, comma));
    const long long qmax = std::stoll(grid.substr(comma + 1));
    if (pmax < 2 || qmax < 2) {
      throw std::invalid_argument("--grid bounds must be >= 2");
    }
    report["command"] = "poly-grid";
    report["pmax"] = pmax;
    report["qmax"] = qmax;
    Json cases = Json::array();
    long long total = 0, mismatches = 0;
    for (const char* kind : {"loop", "chain", "bp"}) {
      for (long long q = 2; q <= qmax; ++q) {
        for (long long p = q; p <= pmax; ++p) {
          if (std::string(kind) == "bp" && p == 2 && q == 2) continue;
          const auto w = annuli::parse_poly(std::string(kind) + ":" +
                                            std::to_string(p) + "," +
                                            std::to_string(q));
          for (long long l : annuli::admissible_indices(w)) {
            ++total;
            if (!poly_case(w, l, false, cases)) {
              ++mismatches;
              all_match = false;
            }
          }
        }
      }
    }
    report["cases"] = std::move(cases);
    report["total"] = total;
    report["mismatches"] = mismatches;
  } else {
    if (poly_spec.empty()) {
      throw std::invalid_argument("give a polynomial spec or --grid");
    }
    const auto w = annuli::parse_poly(poly_spec);
    report["command"] = "poly";
    Json input;
    input["poly"] = annuli::to_string(w);
    input["polynomial"] = annuli::monomial_string(w);
    const auto ws = annuli::weight_system(w);
    input["weight_system"] =
        Json{{"d0", ws.d0}, {"d1", ws.d1}, {"d2", ws.d2}, {"h", ws.h}};
    input["max_index"] = annuli::max_index(w);
    input["admissible"] = annuli::admissible_indices(w);
    report["input"] = std::move(input);

    Json cases = Json::array();
    if (all_ell) {
      for (long long l : annuli::admissible_indices(w)) {
        all_match = poly_case(w, l, true, cases) && all_match;
      }
    } else {
      all_match = poly_case(w, ell, true, cases);
    }
    report["cases"] = std::move(cases);
  }

  report["verdict"] = all_match ? "MATCH" : "MISMATCH";
  emit(report, flags.out);
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glued surfaces, stacky curves, and their shared quivers"};
  app.require_subcommand(1);

  std::string glue_path, curve_path, poly_spec, grid;
  long long ell = 1;
  bool check_quivers = false, all_ell = false;
  CommonFlags glue_flags, curve_flags, poly_flags;

  CLI::App* glue = app.add_subcommand("glue", "invariants of a glued surface");
  glue->add_option("spec", glue_path, "surface spec JSON file")->required();
  add_common(glue, glue_flags);

  CLI::App* curve =
      app.add_subcommand("curve", "derive the mirror surface of a stacky curve");
  curve->add_option("spec", curve_path, "curve spec JSON file")->required();
  curve->add_flag("--check-quivers", check_quivers,
                  "compare the exceptional and generating quivers");
  add_common(curve, curve_flags);

  CLI::App* poly = app.add_subcommand(
      "poly", "computed vs closed-form invariants of an invertible polynomial");
  poly->add_option("spec", poly_spec, "polynomial, e.g. loop:5,5");
  poly->add_option("--ell", ell, "symmetry index (default 1)");
  poly->add_flag("--all-ell", all_ell, "sweep all admissible indices");
  poly->add_option("--grid", grid, "sweep kinds over 2 <= q <= p <= pmax,qmax");
  add_common(poly, poly_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (glue->parsed()) return run_glue(glue_path, glue_flags);
    if (curve->parsed()) return run_curve(curve_path, check_quivers, curve_flags);
    if (poly->parsed()) return run_poly(poly_spec, ell, all_ell, grid, poly_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
