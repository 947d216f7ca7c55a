#pragma once

#include <json.hpp>

#include "hn/herglotz.hpp"
#include "hn/measure.hpp"
#include "hn/report.hpp"
#include "hn/torus.hpp"

namespace hn {

/// Measure-spec document schema:
///   { "dim": n, "domain": "real"|"torus", "components": [ ... ] }
/// with component objects
///   {"type": "lebesgue", "weight": c}
///   {"type": "dirac", "point": [...], "weight": w}
///   {"type": "line", "base": [...], "direction": [...], "weight": w}
///   {"type": "density", "name": "...", "params": {...}}
///   {"type": "tensor", "factors": [ <spec>, ... ]}
///   {"type": "permuted", "b1": [...], "factors": [ <spec>, <spec> ]}
/// Unknown component types are rejected.
MeasureSpec measure_from_json(const nlohmann::json& j);
MeasureSpec measure_from_file(const std::string& path);
nlohmann::json measure_to_json(const MeasureSpec& mu);

/// Representation files carry either half-plane data
///   { "a": num, "b": [...], "mu": <measure spec> }
/// or disk data
///   { "alpha": num, "nu": <measure spec> };
/// a bare measure spec is promoted to pure-measure data on its own side.
struct LoadedRepresentation {
  std::optional<HalfPlaneRepresentation> half_plane;
  std::optional<DiskRepresentation> disk;
};

LoadedRepresentation representation_from_json(const nlohmann::json& j);
LoadedRepresentation representation_from_file(const std::string& path);

nlohmann::json report_to_json(const ConditionReport& report,
                              nlohmann::json config = nlohmann::json::object());

}  // namespace hn
