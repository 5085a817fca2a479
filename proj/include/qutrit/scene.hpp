#pragma once

// JSON documents shared by the CLI and the HTTP service. Shapes are published
// under schemas/ in the repository.

#include <json.hpp>

#include <string_view>
#include <vector>

#include "qutrit/errata.hpp"
#include "qutrit/region.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kArtifactVersion = "1.0.0";

nlohmann::json params_json(const ParamVector& p);

/// Object with any subset of the eight parameter names; absent keys are 0.
/// Throws InvalidParameter on unknown keys, non-numeric or non-finite values.
ParamVector params_from_json(const nlohmann::json& j);

/// Full evaluation of a parameter point: inequalities, spectrum, and the u, v, w vectors.
nlohmann::json scene_document(const ParamVector& p);

/// Largest absolute difference between the numeric fields of `doc` and a fresh
/// evaluation of its params; +inf when the boolean fields disagree or the shape differs.
double scene_deviation(const nlohmann::json& doc);

nlohmann::json region_grid_json(const RegionGrid& grid);
nlohmann::json catalog_json();
nlohmann::json errata_json(const ErrataReport& report);
nlohmann::json sample_records_json(const SamplerConfig& config, const std::vector<ParamVector>& points);

/// Compact, deterministic dump used by every emitter.
std::string dump(const nlohmann::json& j);

}  // namespace qutrit
