#pragma once
// Surfaces glued from columns of annuli.  A column A(l, r; d) is d parallel
// annuli, each carrying r ordered marked points (stops) on its right
// boundary and l on its left.  Consecutive columns are glued by attaching a
// strip from right stop j of column i to left stop sigma_i(j) of column i+1;
// circular mode also glues the last column back to the first.  This module
// computes the topology: Euler characteristic, boundary components with
// winding numbers, genus, homology ranks, and the ribbon graph the surface
// retracts onto.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "annuli/perms.hpp"

namespace annuli {

struct Column {
  long long l = 0;
  long long r = 0;
  long long d = 1;
  bool operator==(const Column&) const = default;
};

enum class Mode { Circular, Linear };

struct GluedSurfaceSpec {
  Mode mode = Mode::Circular;
  std::vector<Column> columns;
  std::vector<Permutation> gluings;  // n entries (circular) or n-1 (linear)
};

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct Disconnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of glued interfaces: n for circular, n-1 for linear.
int num_interfaces(const GluedSurfaceSpec& spec);

// Throws SpecError (naming the offending column or interface) unless all
// sizes are consistent.  Zero marked points are legal only on the two
// unglued sides of a linear gluing.
void validate(const GluedSurfaceSpec& spec);

long long euler_characteristic(const GluedSurfaceSpec& spec);

// Boundary components merged by winding number, sorted by winding:
// one component of winding -2*(cycle length) per cycle of the interface
// permutation sigma^{-1} tau_l sigma tau_r, plus winding-0 distinguished
// components at the two open ends of a linear gluing.
std::vector<std::pair<long long, long long>> boundary_profile(
    const GluedSurfaceSpec& spec);

long long genus(const GluedSurfaceSpec& spec);  // throws Disconnected if h0>1

// (h0, h1) with h0 the number of ribbon-graph components and h1 = h0 - chi.
std::pair<long long, long long> homology_ranks(const GluedSurfaceSpec& spec);

struct RibbonGraph {
  int num_vertices = 0;  // one vertex per annulus
  std::vector<std::pair<int, int>> vertex_annulus;  // vertex -> (column, row)
  struct Edge {
    int u = 0;
    int v = 0;
    bool core = false;       // the core circle of an annulus (a loop edge)
    int interface_index = -1;  // strips only
    int strip = -1;
  };
  std::vector<Edge> edges;  // core loops first (edge e = vertex e), then
                            // strips interface by interface in stop order
  // Half-edge 2e sits at edges[e].u, half-edge 2e+1 at edges[e].v; each
  // inner list walks once around the vertex.
  std::vector<std::vector<int>> cyclic_order;
};

RibbonGraph ribbon_graph(const GluedSurfaceSpec& spec);
std::string ribbon_to_dot(const RibbonGraph& g);

struct SurfaceInvariants {
  long long euler = 0;
  std::vector<std::pair<long long, long long>> boundary;  // (winding, count)
  long long total_boundary = 0;
  long long h0 = 0;
  long long h1 = 0;
  std::optional<long long> genus;      // present when h0 == 1
  std::vector<long long> stop_signature;  // stops per boundary component,
                                          // ascending: 2*length on interface
                                          // components, l_1 / r_n on
                                          // distinguished ones
};

SurfaceInvariants compute_invariants(const GluedSurfaceSpec& spec);

// Per connected component: (euler, boundary count, genus), ordered by the
// smallest annulus in the component.  Lets callers of genus() split
// disconnected specs.
struct ComponentInvariants {
  long long euler = 0;
  long long boundary = 0;
  long long genus = 0;
};
std::vector<ComponentInvariants> component_breakdown(
    const GluedSurfaceSpec& spec);

}  // namespace annuli
