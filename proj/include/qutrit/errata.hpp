#pragma once

#include <string>
#include <vector>

#include "qutrit/clusters.hpp"

namespace qutrit {

/// A printed formula disagrees with the matrix path when the discrepancy exceeds this.
inline constexpr double kErrataTolerance = 1e-9;

enum class Verdict { Match, Mismatch };

struct ErrataEntry {
    std::string table;
    std::string row;
    Quantity quantity = Quantity::U1;
    std::string printed_expression;
    std::vector<std::string> sub_cases;
    double discrepancy = 0.0;  // max |printed - normative| over sub-cases x probe grid
    Verdict verdict = Verdict::Match;
};

struct ErrataReport {
    std::vector<ErrataEntry> entries;
    std::vector<std::string> annotations;  // anomalies with no numeric discrepancy

    std::vector<const ErrataEntry*> mismatches() const;
    /// nullptr when absent.
    const ErrataEntry* find(std::string_view table, std::string_view row, Quantity q) const;
};

/// Probe values for every slot; the grid is their cartesian power.
inline constexpr std::array<double, 3> kProbeValues = {-0.2, 0.1, 0.25};

/// Normative value of a printed quantity at a parameter point, via the matrix path.
double normative_value(Quantity q, const ParamVector& params);

/// Compares every printed formula against the matrix path on the probe grid.
ErrataReport errata_report();

std::string_view verdict_name(Verdict v);

}  // namespace qutrit
