#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qutrit/clusters.hpp"

namespace qutrit {

struct AxisRange {
    double min = -1.0;
    double max = 1.0;
    double step = 0.1;

    /// Number of samples min, min + step, ... not exceeding max (plus a 1e-9 step slack).
    std::size_t count() const;
    double at(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

struct RegionCell {
    double s = 0.0;
    double t = 0.0;
    double lhs1 = 0.0;
    double lhs2 = 0.0;
    bool physical = false;
    std::array<double, 3> u{};
    std::array<double, 3> v{};
    std::array<double, 3> w{};
};

enum class CellClass { Physical, FailsIneq2Only, FailsIneq1 };

CellClass classify(const RegionCell& cell);

struct RegionGrid {
    ClusterCase cluster;
    AxisRange s_axis;
    AxisRange t_axis;
    std::vector<double> fixed;  // values of slots p, q for four-variable cases
    std::vector<RegionCell> cells;  // s-major, then t

    std::size_t s_count() const { return s_axis.count(); }
    std::size_t t_count() const { return t_axis.count(); }
};

/// Scans the (s, t) plane of a case. Four-variable cases need exactly two `fixed`
/// values for p and q; two-variable cases take none. Throws InvalidRange or ArityMismatch.
RegionGrid scan_region(const ClusterCase& c, const AxisRange& s_axis, const AxisRange& t_axis,
                       std::span<const double> fixed = {});

inline constexpr std::string_view kRegionCsvHeader =
    "s,t,lhs1,lhs2,physical,u1sq,u2sq,u3sq,v1sq,v2sq,v3sq,w1sq,w2sq,w3sq";

std::string region_csv(const RegionGrid& grid);

/// One rect per cell, coloured by CellClass; t increases upwards.
std::string region_svg(const RegionGrid& grid, int cell_pixels = 12);

}  // namespace qutrit
