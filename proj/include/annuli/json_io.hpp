#pragma once
// JSON (de)serialization for the wire formats: glued-surface specs, stacky
// curve specs, and the invariant/quiver report blocks the CLI emits.  Uses
// ordered JSON throughout so output is byte-stable.

#include "json.hpp"

#include "annuli/bside.hpp"
#include "annuli/quiver.hpp"
#include "annuli/surface.hpp"

namespace annuli {

using Json = nlohmann::ordered_json;

GluedSurfaceSpec surface_spec_from_json(const Json& j);
Json surface_spec_to_json(const GluedSurfaceSpec& spec);

StackyCurveSpec curve_spec_from_json(const Json& j);
Json curve_spec_to_json(const StackyCurveSpec& curve);

// euler, boundary, b, genus (null when disconnected), h0, h1, stops, and a
// per-interface breakdown with printed boundary cycles.
Json invariants_to_json(const GluedSurfaceSpec& spec);

// The same block without the per-interface breakdown.
Json invariants_summary_json(const SurfaceInvariants& inv);

Json quiver_stats_json(const Quiver& q);

}  // namespace annuli
