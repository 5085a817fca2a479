#include "qutrit/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qutrit/bloch.hpp"
#include "qutrit/clusters.hpp"
#include "qutrit/error.hpp"
#include "qutrit/physicality.hpp"

namespace qutrit {

using nlohmann::json;

namespace {

json bloch_json(const BlochVector& v) {
    return json{{"squares", v.squares}, {"length", v.length}, {"negative_components", v.negative_components}};
}

double deviation(const json& a, const json& b) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (a.is_number() && b.is_number()) return std::abs(a.get<double>() - b.get<double>());
    if (a.type() != b.type()) return inf;
    if (a.is_object()) {
        if (a.size() != b.size()) return inf;
        double worst = 0.0;
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) return inf;
            worst = std::max(worst, deviation(it.value(), b.at(it.key())));
        }
        return worst;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) return inf;
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, deviation(a[i], b[i]));
        return worst;
    }
    return a == b ? 0.0 : inf;
}

json case_json(const ClusterCase& c) {
    json slots = json::array();
    for (std::size_t i = 0; i < c.slots.size(); ++i) {
        slots.push_back({{"slot", kSlotNames[i]}, {"field", field_name(c.slots[i])}});
    }
    return {{"cluster", cluster_name(c.cluster)}, {"sub_case", c.sub_case}, {"slots", slots}};
}

}  // namespace

json params_json(const ParamVector& p) {
    json j = json::object();
    for (Field f : kAllFields) j[std::string(field_name(f))] = p[f];
    return j;
}

ParamVector params_from_json(const json& j) {
    if (!j.is_object()) throw InvalidParameter("params must be a JSON object");
    ParamVector p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto field = field_from_name(it.key());
        if (!field) throw InvalidParameter("unknown parameter '" + it.key() + "'");
        if (!it.value().is_number()) throw InvalidParameter("parameter '" + it.key() + "' must be a number");
        p[*field] = it.value().get<double>();
    }
    require_finite(p);
    return p;
}

json scene_document(const ParamVector& p) {
    const PhysicalityReport rep = physicality_report(p);
    const BlochTriple b = bloch_triple(p);
    return json{
        {"schema_version", kSchemaVersion},
        {"params", params_json(p)},
        {"invariants_block",
         {{"lhs1", rep.ineq1.lhs_direct},
          {"lhs2", rep.ineq2.lhs_direct},
          {"purity", rep.purity},
          {"eigenvalues", rep.eigenvalues},
          {"e2", rep.coeffs.e2},
          {"e3", rep.coeffs.e3},
          {"physical", rep.physical}}},
        {"bloch", {{"u", bloch_json(b.u)}, {"v", bloch_json(b.v)}, {"w", bloch_json(b.w)}}},
        {"meta", {{"tolerance", kPhysicalityTolerance}, {"artifact_version", kArtifactVersion}}},
    };
}

double scene_deviation(const json& doc) {
    try {
        const ParamVector p = params_from_json(doc.at("params"));
        return deviation(doc, scene_document(p));
    } catch (const std::exception&) {
        return std::numeric_limits<double>::infinity();
    }
}

json region_grid_json(const RegionGrid& grid) {
    json cells = json::array();
    for (const RegionCell& c : grid.cells) {
        cells.push_back({{"s", c.s},
                         {"t", c.t},
                         {"lhs1", c.lhs1},
                         {"lhs2", c.lhs2},
                         {"physical", c.physical},
                         {"u_squares", c.u},
                         {"v_squares", c.v},
                         {"w_squares", c.w}});
    }
    auto axis = [](const AxisRange& r) {
        return json{{"min", r.min}, {"max", r.max}, {"step", r.step}, {"count", r.count()}};
    };
    return json{{"schema_version", kSchemaVersion},
                {"case", case_json(grid.cluster)},
                {"s_axis", axis(grid.s_axis)},
                {"t_axis", axis(grid.t_axis)},
                {"fixed", grid.fixed},
                {"cells", cells}};
}

json catalog_json() {
    json clusters = json::array();
    for (ClusterId id : {ClusterId::I, ClusterId::II, ClusterId::III, ClusterId::IV, ClusterId::V, ClusterId::VI,
                         ClusterId::VII}) {
        json subs = json::array();
        for (const ClusterCase& c : cases_of(id)) subs.push_back(case_json(c));
        clusters.push_back({{"id", cluster_name(id)}, {"sub_cases", subs}});
    }
    json quads = json::array();
    for (const ClusterCase& c : cases_of(ClusterId::FourVariable)) quads.push_back(case_json(c));
    json groups = json::array();
    for (const ClusterViGrouping& g : cluster_vi_groupings()) {
        groups.push_back({{"label", g.label}, {"members", g.members}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"clusters", clusters},
                {"four_variable_cases", quads},
                {"cluster_vi_groupings", groups}};
}

json errata_json(const ErrataReport& report) {
    json entries = json::array();
    for (const ErrataEntry& e : report.entries) {
        entries.push_back({{"table", e.table},
                           {"row", e.row},
                           {"quantity", quantity_name(e.quantity)},
                           {"printed_expression", e.printed_expression},
                           {"sub_cases", e.sub_cases},
                           {"discrepancy", e.discrepancy},
                           {"verdict", verdict_name(e.verdict)}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"tolerance", kErrataTolerance},
                {"probe_values", kProbeValues},
                {"entries", entries},
                {"mismatch_count", report.mismatches().size()},
                {"annotations", report.annotations}};
}

json sample_records_json(const SamplerConfig& config, const std::vector<ParamVector>& points) {
    json records = json::array();
    for (const ParamVector& p : points) {
        records.push_back({{"params", params_json(p)}, {"scene", scene_document(p)}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"method", method_name(config.method)},
                {"seed", config.seed},
                {"count", config.count},
                {"records", records}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qutrit
