#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "linkage/graph.hpp"
#include "linkage/intervals.hpp"
#include "linkage/k33.hpp"
#include "linkage/moduli.hpp"
#include "linkage/realizability.hpp"

namespace linkage::report {

using Json = nlohmann::ordered_json;

Json intervals(const IntervalSet& s);
Json bounds(const StageBounds& b);
Json arcs(const CircleArcSet& s);
Json stage(const StageReport& r);
Json k33_lengths(const K33Lengths& l);

/// {"v1": [x, y], ...} in vertex order.
Json realization(const WeightedGraph& g, const Realization& p);
/// Coordinates, per-edge residuals and the restart residual histogram.
Json realize(const WeightedGraph& g, const RealizeReport& r);
Json cycles(const std::vector<Cycle>& cs);
/// `g` supplies vertex names; certificates are summarized, not dumped.
Json components(const WeightedGraph& g, const ComponentReport& r);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace linkage::report
