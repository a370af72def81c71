#include "annuli/json_io.hpp"

#include <string>
#include <vector>

namespace annuli {

namespace {

std::vector<long long> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) {
    throw std::invalid_argument(what + " must be an array of integers");
  }
  std::vector<long long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(what + " must contain only integers");
    }
    out.push_back(v.get<long long>());
  }
  return out;
}

Character character_from_json(const FinAbGroup& group, const Json& j,
                              const std::string& what) {
  return Character(group, int_list(j, what));
}

}  // namespace

GluedSurfaceSpec surface_spec_from_json(const Json& j) {
  GluedSurfaceSpec spec;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "circular") {
    spec.mode = Mode::Circular;
  } else if (mode == "linear") {
    spec.mode = Mode::Linear;
  } else {
    throw std::invalid_argument("mode must be \"circular\" or \"linear\"");
  }
  for (const auto& c : j.at("columns")) {
    spec.columns.push_back({c.at("l").get<long long>(),
                            c.at("r").get<long long>(),
                            c.at("d").get<long long>()});
  }
  for (const auto& g : j.at("gluings")) {
    const auto images = int_list(g, "gluing");
    std::vector<int> im(images.begin(), images.end());
    spec.gluings.emplace_back(std::move(im));
  }
  validate(spec);
  return spec;
}

Json surface_spec_to_json(const GluedSurfaceSpec& spec) {
  Json j;
  j["mode"] = spec.mode == Mode::Circular ? "circular" : "linear";
  j["columns"] = Json::array();
  for (const auto& c : spec.columns) {
    j["columns"].push_back({{"l", c.l}, {"r", c.r}, {"d", c.d}});
  }
  j["gluings"] = Json::array();
  for (const auto& g : spec.gluings) {
    j["gluings"].push_back(g.images());
  }
  return j;
}

StackyCurveSpec curve_spec_from_json(const Json& j) {
  StackyCurveSpec curve;
  const std::string shape = j.at("shape").get<std::string>();
  if (shape == "cycle") {
    curve.shape = Shape::Cycle;
  } else if (shape == "chain") {
    curve.shape = Shape::Chain;
  } else {
    throw std::invalid_argument("shape must be \"cycle\" or \"chain\"");
  }
  for (const auto& c : j.at("components")) {
    curve.components.push_back({c.at("r_minus").get<long long>(),
                                c.at("r_plus").get<long long>(),
                                c.at("d").get<long long>()});
  }
  for (const auto& nd : j.at("nodes")) {
    const FinAbGroup group(int_list(nd.at("group"), "group"));
    curve.nodes.push_back(
        {group, character_from_json(group, nd.at("chi_r_plus"), "chi_r_plus"),
         character_from_json(group, nd.at("chi_d_plus"), "chi_d_plus"),
         character_from_json(group, nd.at("chi_r_minus"), "chi_r_minus"),
         character_from_json(group, nd.at("chi_d_minus"), "chi_d_minus")});
  }
  validate_curve(curve);
  return curve;
}

Json curve_spec_to_json(const StackyCurveSpec& curve) {
  Json j;
  j["shape"] = curve.shape == Shape::Cycle ? "cycle" : "chain";
  j["components"] = Json::array();
  for (const auto& c : curve.components) {
    j["components"].push_back(
        {{"r_minus", c.r_minus}, {"r_plus", c.r_plus}, {"d", c.d}});
  }
  j["nodes"] = Json::array();
  for (const auto& nd : curve.nodes) {
    Json n;
    n["group"] = nd.group.factors();
    n["chi_r_plus"] = nd.chi_r_plus.coords();
    n["chi_d_plus"] = nd.chi_d_plus.coords();
    n["chi_r_minus"] = nd.chi_r_minus.coords();
    n["chi_d_minus"] = nd.chi_d_minus.coords();
    j["nodes"].push_back(std::move(n));
  }
  return j;
}

Json invariants_summary_json(const SurfaceInvariants& inv) {
  Json j;
  j["euler"] = inv.euler;
  j["boundary"] = Json::array();
  for (const auto& [winding, count] : inv.boundary) {
    j["boundary"].push_back({{"winding", winding}, {"count", count}});
  }
  j["b"] = inv.total_boundary;
  if (inv.genus) {
    j["genus"] = *inv.genus;
  } else {
    j["genus"] = nullptr;
  }
  j["h0"] = inv.h0;
  j["h1"] = inv.h1;
  j["stops"] = inv.stop_signature;
  return j;
}

Json invariants_to_json(const GluedSurfaceSpec& spec) {
  Json j = invariants_summary_json(compute_invariants(spec));

  j["interfaces"] = Json::array();
  const int n = static_cast<int>(spec.columns.size());
  for (int i = 0; i < num_interfaces(spec); ++i) {
    const int nxt = (i + 1) % n;
    const auto& cur = spec.columns[static_cast<std::size_t>(i)];
    const auto& next = spec.columns[static_cast<std::size_t>(nxt)];
    const Permutation walk = boundary_permutation(
        spec.gluings[static_cast<std::size_t>(i)], static_cast<int>(next.l),
        static_cast<int>(next.d), static_cast<int>(cur.r),
        static_cast<int>(cur.d));
    const auto cycles = cycle_decomposition(walk);
    Json entry;
    entry["index"] = i;
    entry["boundary_cycles"] = cycles_to_string(cycles);
    Json windings = Json::array();
    for (const auto& cyc : cycles) {
      windings.push_back(-2 * static_cast<long long>(cyc.size()));
    }
    entry["windings"] = std::move(windings);
    j["interfaces"].push_back(std::move(entry));
  }
  return j;
}

Json quiver_stats_json(const Quiver& q) {
  const GentleReport report = is_gentle(q);
  Json j;
  j["vertices"] = q.vertices.size();
  j["arrows"] = q.arrows.size();
  j["relations"] = q.relations.size();
  j["gentle"] = report.gentle;
  if (!report.gentle) j["certificate"] = report.certificate;
  return j;
}

}  // namespace annuli
