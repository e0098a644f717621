#pragma once

#include <string>

#include <json.hpp>

#include "difflab/bvfunc.hpp"
#include "difflab/diffeo.hpp"
#include "difflab/metrics.hpp"

namespace difflab {

/// Function descriptor:
/// {"ac": {"breakpoints":[...], "coeffs":[[...],...]}, "singular":[
///   {"base":"cantor","depth":D,"a":..,"b":..,"scale":..,"offset":..}]}
/// Piece coefficients are in local coordinates t = x - breakpoints[i].
/// Round trips are value-exact (doubles serialize losslessly).
nlohmann::json to_json(const BVFunc& f);
BVFunc bvfunc_from_json(const nlohmann::json& j);

/// Diffeo descriptor:
/// {"manifold":"interval"|"circle", "k":k, "log_derivative": <descriptor|null>,
///  "rotation_offset": r}. Rotations carry a null log-derivative.
nlohmann::json to_json(const Diffeo& d);
Diffeo diffeo_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MetricValue& m);

}  // namespace difflab
