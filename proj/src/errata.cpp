#include "qutrit/errata.hpp"

#include <algorithm>
#include <cmath>

#include "qutrit/bloch.hpp"
#include "qutrit/physicality.hpp"

namespace qutrit {

namespace {

std::vector<std::vector<double>> probe_grid(std::size_t arity) {
    std::vector<std::vector<double>> grid{{}};
    for (std::size_t k = 0; k < arity; ++k) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : grid) {
            for (double v : kProbeValues) {
                auto point = prefix;
                point.push_back(v);
                next.push_back(std::move(point));
            }
        }
        grid = std::move(next);
    }
    return grid;
}

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::Match ? "match" : "mismatch"; }

double normative_value(Quantity q, const ParamVector& p) {
    switch (q) {
        case Quantity::Ineq1ThisWork: return inequality1(p).lhs_direct;
        case Quantity::Ineq1Ref8: return 2.0 / 3.0 * inequality1(p).lhs_direct;
        case Quantity::Ineq2ThisWork: return inequality2(p).lhs_direct;
        case Quantity::Ineq2Ref8: return (1.0 - inequality2(p).lhs_direct) / 9.0;
        case Quantity::U1: return u_vector(p).squares[0];
        case Quantity::U2: return u_vector(p).squares[1];
        case Quantity::U3: return u_vector(p).squares[2];
        case Quantity::F1: {
            const auto v = v_vector(p).squares;
            return (v[0] + v[2]) / 18.0;
        }
        case Quantity::F2: return v_vector(p).squares[1] / 9.0;
        case Quantity::F3: {
            const auto v = v_vector(p).squares;
            return (v[0] - v[2]) / 18.0;
        }
    }
    return 0.0;
}

ErrataReport errata_report() {
    ErrataReport report;
    for (const PrintedFormula& f : printed_formulas()) {
        ErrataEntry e;
        e.table = f.table;
        e.row = f.row;
        e.quantity = f.quantity;
        e.printed_expression = f.printed;
        e.sub_cases = f.sub_cases;
        for (const std::string& sub : f.sub_cases) {
            const ClusterCase& c = find_case(f.cluster, sub);
            for (const auto& point : probe_grid(c.arity())) {
                const double printed = f.evaluate(point);
                const double normative = normative_value(f.quantity, instantiate(c, point));
                e.discrepancy = std::max(e.discrepancy, std::abs(printed - normative));
            }
        }
        e.verdict = e.discrepancy > kErrataTolerance ? Verdict::Mismatch : Verdict::Match;
        report.entries.push_back(std::move(e));
    }
    report.annotations.push_back(
        "Table 5.3 is headed \"1st inequality\" but its rows define F1, F2, F3, which are second-inequality "
        "(v-vector) quantities; they are checked here as second-inequality component forms.");
    report.annotations.push_back(
        "Table 5.2b row \"(beta1,beta2)\" repeats the values of row \"(a,beta2),(b,beta2),alpha1,beta2\"; both "
        "are kept as printed.");
    return report;
}

std::vector<const ErrataEntry*> ErrataReport::mismatches() const {
    std::vector<const ErrataEntry*> out;
    for (const ErrataEntry& e : entries) {
        if (e.verdict == Verdict::Mismatch) out.push_back(&e);
    }
    return out;
}

const ErrataEntry* ErrataReport::find(std::string_view table, std::string_view row, Quantity q) const {
    for (const ErrataEntry& e : entries) {
        if (e.table == table && e.row == row && e.quantity == q) return &e;
    }
    return nullptr;
}

}  // namespace qutrit
