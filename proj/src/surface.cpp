#include "annuli/surface.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace annuli {

namespace {

int columns_count(const GluedSurfaceSpec& spec) {
  return static_cast<int>(spec.columns.size());
}

// Global annulus numbering: column 0 rows 0..d_0-1, then column 1, ...
std::vector<int> annulus_offsets(const GluedSurfaceSpec& spec) {
  std::vector<int> off(spec.columns.size() + 1, 0);
  for (std::size_t i = 0; i < spec.columns.size(); ++i) {
    off[i + 1] = off[i] + static_cast<int>(spec.columns[i].d);
  }
  return off;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Union the annuli joined by strips; components of the result are the
// connected components of the surface (and of its ribbon graph).
Dsu annulus_components(const GluedSurfaceSpec& spec) {
  const auto off = annulus_offsets(spec);
  Dsu dsu(off.back());
  const int n = columns_count(spec);
  for (int i = 0; i < num_interfaces(spec); ++i) {
    const int nxt = (i + 1) % n;
    const auto& sigma = spec.gluings[static_cast<std::size_t>(i)];
    const long long r = spec.columns[static_cast<std::size_t>(i)].r;
    const long long l = spec.columns[static_cast<std::size_t>(nxt)].l;
    for (int j = 0; j < sigma.size(); ++j) {
      const int ku = static_cast<int>(j / r);
      const int kv = static_cast<int>(sigma(j) / l);
      dsu.unite(off[static_cast<std::size_t>(i)] + ku,
                off[static_cast<std::size_t>(nxt)] + kv);
    }
  }
  return dsu;
}

Permutation interface_permutation(const GluedSurfaceSpec& spec, int i) {
  const int n = columns_count(spec);
  const int nxt = (i + 1) % n;
  const auto& cur = spec.columns[static_cast<std::size_t>(i)];
  const auto& next = spec.columns[static_cast<std::size_t>(nxt)];
  return boundary_permutation(spec.gluings[static_cast<std::size_t>(i)],
                              static_cast<int>(next.l),
                              static_cast<int>(next.d), static_cast<int>(cur.r),
                              static_cast<int>(cur.d));
}

}  // namespace

int num_interfaces(const GluedSurfaceSpec& spec) {
  const int n = columns_count(spec);
  return spec.mode == Mode::Circular ? n : n - 1;
}

void validate(const GluedSurfaceSpec& spec) {
  const int n = columns_count(spec);
  if (n == 0) throw SpecError("spec has no columns");
  for (int i = 0; i < n; ++i) {
    const auto& c = spec.columns[static_cast<std::size_t>(i)];
    if (c.d < 1) {
      throw SpecError("column " + std::to_string(i) + " has d = " +
                      std::to_string(c.d) + " (need d >= 1)");
    }
    if (c.l < 0 || c.r < 0) {
      throw SpecError("column " + std::to_string(i) +
                      " has negative marked-point count");
    }
    const bool left_open = spec.mode == Mode::Linear && i == 0;
    const bool right_open = spec.mode == Mode::Linear && i == n - 1;
    if (!left_open && c.l < 1) {
      throw SpecError("column " + std::to_string(i) +
                      " has l = 0 on a glued side");
    }
    if (!right_open && c.r < 1) {
      throw SpecError("column " + std::to_string(i) +
                      " has r = 0 on a glued side");
    }
  }
  const int ifaces = num_interfaces(spec);
  if (static_cast<int>(spec.gluings.size()) != ifaces) {
    throw SpecError("expected " + std::to_string(ifaces) +
                    " gluing permutations, got " +
                    std::to_string(spec.gluings.size()));
  }
  for (int i = 0; i < ifaces; ++i) {
    const int nxt = (i + 1) % n;
    const auto& cur = spec.columns[static_cast<std::size_t>(i)];
    const auto& next = spec.columns[static_cast<std::size_t>(nxt)];
    const long long right_pts = cur.r * cur.d;
    const long long left_pts = next.l * next.d;
    if (right_pts != left_pts) {
      throw SpecError("interface " + std::to_string(i) + ": r*d = " +
                      std::to_string(right_pts) + " does not match l*d = " +
                      std::to_string(left_pts) + " of column " +
                      std::to_string(nxt));
    }
    if (right_pts > std::numeric_limits<int>::max()) {
      throw SpecError("interface " + std::to_string(i) + " is too large");
    }
    if (spec.gluings[static_cast<std::size_t>(i)].size() != right_pts) {
      throw SpecError(
          "interface " + std::to_string(i) + ": permutation degree " +
          std::to_string(spec.gluings[static_cast<std::size_t>(i)].size()) +
          " does not match " + std::to_string(right_pts) + " strips");
    }
  }
}

long long euler_characteristic(const GluedSurfaceSpec& spec) {
  long long strips = 0;
  for (int i = 0; i < num_interfaces(spec); ++i) {
    const auto& c = spec.columns[static_cast<std::size_t>(i)];
    strips += c.r * c.d;
  }
  return -strips;
}

std::vector<std::pair<long long, long long>> boundary_profile(
    const GluedSurfaceSpec& spec) {
  std::map<long long, long long> count_by_winding;
  for (int i = 0; i < num_interfaces(spec); ++i) {
    for (const auto& cyc : cycle_decomposition(interface_permutation(spec, i))) {
      count_by_winding[-2 * static_cast<long long>(cyc.size())] += 1;
    }
  }
  if (spec.mode == Mode::Linear) {
    count_by_winding[0] +=
        spec.columns.front().d + spec.columns.back().d;
  }
  return {count_by_winding.begin(), count_by_winding.end()};
}

long long genus(const GluedSurfaceSpec& spec) {
  const auto [h0, h1] = homology_ranks(spec);
  (void)h1;
  if (h0 != 1) {
    throw Disconnected("surface has " + std::to_string(h0) +
                       " components; split before asking for genus");
  }
  long long b = 0;
  for (const auto& [winding, count] : boundary_profile(spec)) {
    (void)winding;
    b += count;
  }
  const long long chi = euler_characteristic(spec);
  return (2 - chi - b) / 2;
}

std::pair<long long, long long> homology_ranks(const GluedSurfaceSpec& spec) {
  validate(spec);
  Dsu dsu = annulus_components(spec);
  long long h0 = 0;
  for (int v = 0; v < static_cast<int>(dsu.parent.size()); ++v) {
    if (dsu.find(v) == v) ++h0;
  }
  return {h0, h0 - euler_characteristic(spec)};
}

RibbonGraph ribbon_graph(const GluedSurfaceSpec& spec) {
  validate(spec);
  const auto off = annulus_offsets(spec);
  const int n = columns_count(spec);

  RibbonGraph g;
  g.num_vertices = off.back();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < spec.columns[static_cast<std::size_t>(i)].d; ++k) {
      g.vertex_annulus.emplace_back(i, k);
      g.edges.push_back({off[static_cast<std::size_t>(i)] + k,
                         off[static_cast<std::size_t>(i)] + k, true, -1, -1});
    }
  }
  // Strip edges, interface by interface in stop order; remember each strip's
  // edge id so cyclic orders can refer to it from both sides.
  std::vector<std::vector<int>> strip_edge(
      static_cast<std::size_t>(num_interfaces(spec)));
  for (int i = 0; i < num_interfaces(spec); ++i) {
    const int nxt = (i + 1) % n;
    const auto& sigma = spec.gluings[static_cast<std::size_t>(i)];
    const long long r = spec.columns[static_cast<std::size_t>(i)].r;
    const long long l = spec.columns[static_cast<std::size_t>(nxt)].l;
    for (int j = 0; j < sigma.size(); ++j) {
      const int u = off[static_cast<std::size_t>(i)] + static_cast<int>(j / r);
      const int v =
          off[static_cast<std::size_t>(nxt)] + static_cast<int>(sigma(j) / l);
      strip_edge[static_cast<std::size_t>(i)].push_back(
          static_cast<int>(g.edges.size()));
      g.edges.push_back({u, v, false, i, j});
    }
  }

  std::vector<Permutation> inverse_gluing;
  inverse_gluing.reserve(spec.gluings.size());
  for (const auto& sigma : spec.gluings) inverse_gluing.push_back(sigma.inverse());

  // Walk around each annulus: top end of the core circle, then the right
  // stops in order, then the bottom end, then the left stops in order.
  g.cyclic_order.assign(static_cast<std::size_t>(g.num_vertices), {});
  for (int v = 0; v < g.num_vertices; ++v) {
    const auto [col, row] = g.vertex_annulus[static_cast<std::size_t>(v)];
    auto& order = g.cyclic_order[static_cast<std::size_t>(v)];
    order.push_back(2 * v);  // core, top end
    const auto& c = spec.columns[static_cast<std::size_t>(col)];
    const bool has_right =
        spec.mode == Mode::Circular || col < n - 1;
    if (has_right) {
      const int iface = col;
      for (long long p = 0; p < c.r; ++p) {
        const int e = strip_edge[static_cast<std::size_t>(iface)]
                                [static_cast<std::size_t>(row * c.r + p)];
        order.push_back(2 * e);
      }
    }
    order.push_back(2 * v + 1);  // core, bottom end
    const bool has_left = spec.mode == Mode::Circular || col > 0;
    if (has_left) {
      const int iface = (col - 1 + n) % n;
      const auto& sigma_inv = inverse_gluing[static_cast<std::size_t>(iface)];
      for (long long p = 0; p < c.l; ++p) {
        const int j = sigma_inv(static_cast<int>(row * c.l + p));
        const int e = strip_edge[static_cast<std::size_t>(iface)]
                                [static_cast<std::size_t>(j)];
        order.push_back(2 * e + 1);
      }
    }
  }
  return g;
}

std::string ribbon_to_dot(const RibbonGraph& g) {
  auto half_edge_name = [&](int h) {
    const auto& e = g.edges[static_cast<std::size_t>(h / 2)];
    if (e.core) return std::string("core.") + (h % 2 == 0 ? "t" : "b");
    return "i" + std::to_string(e.interface_index) + ".s" +
           std::to_string(e.strip);
  };
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    const auto [col, row] = g.vertex_annulus[static_cast<std::size_t>(v)];
    os << "  a" << v << " [label=\"(" << col << "," << row << ")\", cyclic=\"";
    const auto& order = g.cyclic_order[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) os << ",";
      os << half_edge_name(order[i]);
    }
    os << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  a" << e.u << " -- a" << e.v << " [label=\"";
    if (e.core) {
      os << "core";
    } else {
      os << "i" << e.interface_index << ".s" << e.strip;
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

SurfaceInvariants compute_invariants(const GluedSurfaceSpec& spec) {
  validate(spec);
  SurfaceInvariants inv;
  inv.euler = euler_characteristic(spec);
  inv.boundary = boundary_profile(spec);
  for (const auto& [winding, count] : inv.boundary) {
    (void)winding;
    inv.total_boundary += count;
  }
  std::tie(inv.h0, inv.h1) = homology_ranks(spec);
  if (inv.h0 == 1) inv.genus = (2 - inv.euler - inv.total_boundary) / 2;

  for (int i = 0; i < num_interfaces(spec); ++i) {
    for (const auto& cyc : cycle_decomposition(interface_permutation(spec, i))) {
      inv.stop_signature.push_back(2 * static_cast<long long>(cyc.size()));
    }
  }
  if (spec.mode == Mode::Linear) {
    for (long long k = 0; k < spec.columns.front().d; ++k) {
      inv.stop_signature.push_back(spec.columns.front().l);
    }
    for (long long k = 0; k < spec.columns.back().d; ++k) {
      inv.stop_signature.push_back(spec.columns.back().r);
    }
  }
  std::sort(inv.stop_signature.begin(), inv.stop_signature.end());
  return inv;
}

std::vector<ComponentInvariants> component_breakdown(
    const GluedSurfaceSpec& spec) {
  validate(spec);
  const auto off = annulus_offsets(spec);
  Dsu dsu = annulus_components(spec);
  const int n = columns_count(spec);

  // Component ids in order of smallest member annulus.
  std::map<int, int> comp_index;
  for (int v = 0; v < off.back(); ++v) {
    comp_index.emplace(dsu.find(v), static_cast<int>(comp_index.size()));
  }
  std::vector<long long> vertices(comp_index.size(), 0);
  std::vector<long long> strips(comp_index.size(), 0);
  std::vector<long long> boundary(comp_index.size(), 0);
  for (int v = 0; v < off.back(); ++v) {
    vertices[static_cast<std::size_t>(comp_index[dsu.find(v)])] += 1;
  }
  for (int i = 0; i < num_interfaces(spec); ++i) {
    const long long r = spec.columns[static_cast<std::size_t>(i)].r;
    const auto cycles = cycle_decomposition(interface_permutation(spec, i));
    const auto& sigma = spec.gluings[static_cast<std::size_t>(i)];
    for (int j = 0; j < sigma.size(); ++j) {
      const int home = dsu.find(off[static_cast<std::size_t>(i)] +
                                static_cast<int>(j / r));
      strips[static_cast<std::size_t>(comp_index[home])] += 1;
    }
    for (const auto& cyc : cycles) {
      const int home = dsu.find(off[static_cast<std::size_t>(i)] +
                                static_cast<int>(cyc.front() / r));
      boundary[static_cast<std::size_t>(comp_index[home])] += 1;
    }
  }
  if (spec.mode == Mode::Linear) {
    for (long long k = 0; k < spec.columns.front().d; ++k) {
      boundary[static_cast<std::size_t>(
          comp_index[dsu.find(static_cast<int>(k))])] += 1;
    }
    for (long long k = 0; k < spec.columns.back().d; ++k) {
      boundary[static_cast<std::size_t>(comp_index[dsu.find(
          off[static_cast<std::size_t>(n - 1)] + static_cast<int>(k))])] += 1;
    }
  }

  std::vector<ComponentInvariants> out(comp_index.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c].euler = vertices[c] - (vertices[c] + strips[c]);  // V - E
    out[c].boundary = boundary[c];
    out[c].genus = (2 - out[c].euler - out[c].boundary) / 2;
  }
  return out;
}

}  // namespace annuli
