#include "qutrit/region.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qutrit/bloch.hpp"
#include "qutrit/error.hpp"
#include "qutrit/physicality.hpp"

namespace qutrit {

namespace {

void validate(const AxisRange& r, const char* axis) {
    if (!std::isfinite(r.min) || !std::isfinite(r.max) || !std::isfinite(r.step)) {
        throw InvalidRange(std::string(axis) + " range is not finite");
    }
    if (r.step <= 0.0) throw InvalidRange(std::string(axis) + " step must be positive");
    if (r.max < r.min) throw InvalidRange(std::string(axis) + " max is below min");
}

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

const char* fill_for(CellClass c) {
    switch (c) {
        case CellClass::Physical: return "#2e8b57";
        case CellClass::FailsIneq2Only: return "#f0a030";
        case CellClass::FailsIneq1: return "#c0392b";
    }
    return "#000000";
}

}  // namespace

std::size_t AxisRange::count() const {
    return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

CellClass classify(const RegionCell& cell) {
    if (cell.lhs1 > 1.0 + kPhysicalityTolerance) return CellClass::FailsIneq1;
    if (!cell.physical || cell.lhs2 > 1.0 + kPhysicalityTolerance) return CellClass::FailsIneq2Only;
    return CellClass::Physical;
}

RegionGrid scan_region(const ClusterCase& c, const AxisRange& s_axis, const AxisRange& t_axis,
                       std::span<const double> fixed) {
    validate(s_axis, "s");
    validate(t_axis, "t");
    if (fixed.size() + 2 != c.arity()) {
        throw ArityMismatch("case " + c.sub_case + " needs " + std::to_string(c.arity() - 2) +
                            " fixed slot values, got " + std::to_string(fixed.size()));
    }

    RegionGrid grid;
    grid.cluster = c;
    grid.s_axis = s_axis;
    grid.t_axis = t_axis;
    grid.fixed.assign(fixed.begin(), fixed.end());

    const std::size_t ns = s_axis.count();
    const std::size_t nt = t_axis.count();
    grid.cells.reserve(ns * nt);
    std::vector<double> slots(c.arity());
    for (std::size_t k = 0; k < fixed.size(); ++k) slots[k + 2] = fixed[k];

    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            slots[0] = s_axis.at(i);
            slots[1] = t_axis.at(j);
            const ParamVector p = instantiate(c, slots);
            const PhysicalityReport rep = physicality_report(p);
            const BlochTriple b = bloch_triple(p);
            grid.cells.push_back({slots[0], slots[1], rep.ineq1.lhs_direct, rep.ineq2.lhs_direct, rep.physical,
                                  b.u.squares, b.v.squares, b.w.squares});
        }
    }
    return grid;
}

std::string region_csv(const RegionGrid& grid) {
    std::string out(kRegionCsvHeader);
    out += '\n';
    for (const RegionCell& c : grid.cells) {
        append_number(out, c.s);
        out += ',';
        append_number(out, c.t);
        out += ',';
        append_number(out, c.lhs1);
        out += ',';
        append_number(out, c.lhs2);
        out += c.physical ? ",1" : ",0";
        for (const auto* vec : {&c.u, &c.v, &c.w}) {
            for (double x : *vec) {
                out += ',';
                append_number(out, x);
            }
        }
        out += '\n';
    }
    return out;
}

std::string region_svg(const RegionGrid& grid, int cell_pixels) {
    const std::size_t ns = grid.s_count();
    const std::size_t nt = grid.t_count();
    const std::string w = std::to_string(ns * cell_pixels);
    const std::string h = std::to_string(nt * cell_pixels);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
                      "\" viewBox=\"0 0 " + w + " " + h + "\" shape-rendering=\"crispEdges\">\n";
    out += "<title>" + std::string(cluster_name(grid.cluster.cluster)) + " " + grid.cluster.sub_case + "</title>\n";
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const RegionCell& c = grid.cells[i * nt + j];
            const std::size_t row = nt - 1 - j;
            out += "<rect x=\"" + std::to_string(i * cell_pixels) + "\" y=\"" + std::to_string(row * cell_pixels) +
                   "\" width=\"" + std::to_string(cell_pixels) + "\" height=\"" + std::to_string(cell_pixels) +
                   "\" fill=\"" + fill_for(classify(c)) + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace qutrit
