// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/errata.hpp"
#include "qutrit/physicality.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Outcome maximally_mixed() {
    Outcome o;
    const PhysicalityReport r = physicality_report(ParamVector{});
    const BlochTriple b = bloch_triple(ParamVector{});
    if (!near(r.ineq1.lhs_direct, 0.0, 1e-15) || !near(r.ineq2.lhs_direct, 0.0, 1e-15)) o.fail("lhs not zero");
    for (double e : r.eigenvalues)
        if (!near(e, 1.0 / 3.0, 1e-12)) o.fail("eigenvalue " + fmt(e));
    for (double w : b.w.squares)
        if (!near(w, 1.0 / 3.0, 1e-15)) o.fail("w square " + fmt(w));
    if (o.pass) o.detail = "lhs1 = lhs2 = 0, spectrum and w all 1/3";
    return o;
}

Outcome pure_basis() {
    Outcome o;
    const ParamVector p{.x = 1.0 / std::sqrt(2.0), .y = 1.0 / std::sqrt(6.0)};
    const PhysicalityReport r = physicality_report(p);
    const BlochTriple b = bloch_triple(p);
    const double tol = 1e-12;
    if (!near(r.purity, 1.0, tol)) o.fail("purity " + fmt(r.purity));
    if (!near(r.ineq1.lhs_direct, 1.0, tol)) o.fail("lhs1");
    if (!near(r.ineq2.lhs_direct, 1.0, tol)) o.fail("lhs2");
    const std::array<double, 3> u{2.0 / 3, 1.0 / 6, 1.0 / 6};
    const std::array<double, 3> v{-2.0 / 3, 5.0 / 6, 5.0 / 6};
    const std::array<double, 3> w{1, 0, 0};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!near(b.u.squares[k], u[k], tol)) o.fail("u" + std::to_string(k + 1));
        if (!near(b.v.squares[k], v[k], tol)) o.fail("v" + std::to_string(k + 1));
        if (!near(b.w.squares[k], w[k], tol)) o.fail("w" + std::to_string(k + 1));
    }
    if (o.pass) o.detail = "purity 1, lhs 1, u (2/3,1/6,1/6), v (-2/3,5/6,5/6), w (1,0,0)";
    return o;
}

Outcome equivalence_sweep() {
    Outcome o;
    oracle::PointStream points(0x5EED0003);
    int violations = 0;
    int identity_failures = 0;
    int physical = 0;
    for (int i = 0; i < 100000; ++i) {
        const ParamVector p = points.next();
        const PhysicalityReport r = physicality_report(p);
        const double min_eig = oracle::eigenvalues(oracle::rho_matrix(p))[0];
        const bool by_ineq = r.ineq1.holds && r.ineq2.holds;
        if (by_ineq != (min_eig >= -kPhysicalityTolerance)) ++violations;
        if (r.physical != by_ineq) ++violations;
        if (!near(r.ineq1.lhs_direct, 1.0 - 3.0 * r.coeffs.e2, 1e-10)) ++identity_failures;
        if (!near(r.ineq2.lhs_direct, 1.0 - 27.0 * r.coeffs.e3, 1e-10)) ++identity_failures;
        if (min_eig >= -kPhysicalityTolerance) ++physical;
    }
    if (violations) o.fail(std::to_string(violations) + " verdict disagreements");
    if (identity_failures) o.fail(std::to_string(identity_failures) + " identity failures");
    if (o.pass) o.detail = "1e5 points, 0 violations (" + std::to_string(physical) + " physical)";
    return o;
}

Outcome closed_forms() {
    Outcome o;
    oracle::PointStream points(0x5EED0004);
    double worst_u = 0.0;
    double worst_v = 0.0;
    double worst_total = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ParamVector p = points.next();
        const Aggregates g = aggregates(p);
        const auto u = u_squares_closed(p, g);
        const auto v = v_squares_closed(g);
        const BlochVector um = u_vector(p);
        const BlochVector vm = v_vector(p);
        for (std::size_t k = 0; k < 3; ++k) {
            worst_u = std::max(worst_u, std::abs(u[k] - um.squares[k]));
            worst_v = std::max(worst_v, std::abs(v[k] - vm.squares[k]));
        }
        const InequalityResult i2 = inequality2(p);
        worst_total = std::max(worst_total, std::abs(i2.lhs_closed - i2.lhs_direct));
    }
    if (worst_u > 1e-12) o.fail("u max diff " + fmt(worst_u));
    if (worst_v > 1e-12) o.fail("v max diff " + fmt(worst_v));
    if (worst_total > 1e-12) o.fail("total max diff " + fmt(worst_total));
    if (o.pass) o.detail = "1e4 points, max diff u " + fmt(worst_u) + ", v " + fmt(worst_v) + ", total " + fmt(worst_total);
    return o;
}

Outcome round_trip() {
    Outcome o;
    oracle::PointStream points(0x5EED0005);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ParamVector p = points.next();
        const ParamVector back = extract_params(build_rho(p));
        for (Field f : kAllFields) worst = std::max(worst, std::abs(back[f] - p[f]));
    }
    if (worst > 1e-12) o.fail("max diff " + fmt(worst));
    else o.detail = "1e4 points, max diff " + fmt(worst);
    return o;
}

Outcome errata_suite() {
    Outcome o;
    const ErrataReport r = errata_report();

    // Rows named as mismatching, at (table, row) granularity.
    const std::set<std::pair<std::string, std::string>> listed = {
        {"Table 5", "II"}, {"Table 5", "VII"}, {"Table 5.2a", "II"}, {"Table 5.2a", "III"}, {"Table 5.2a", "IV"},
    };
    const std::vector<std::tuple<std::string, std::string, Quantity>> listed_quantities = {
        {"Table 5", "II", Quantity::U3},          {"Table 5", "VII", Quantity::U1},
        {"Table 5.2a", "II", Quantity::Ineq2ThisWork}, {"Table 5.2a", "III", Quantity::F2},
        {"Table 5.2a", "IV", Quantity::F1},
    };
    const std::vector<std::tuple<std::string, std::string, Quantity>> must_match = {
        {"Table 5", "I", Quantity::Ineq1Ref8},         {"Table 5", "I", Quantity::Ineq1ThisWork},
        {"Table 5.2a", "I", Quantity::Ineq2Ref8},      {"Table 5.2a", "I", Quantity::Ineq2ThisWork},
        {"Table 5", "III", Quantity::Ineq1Ref8},       {"Table 5", "III", Quantity::Ineq1ThisWork},
        {"Table 5.2a", "III", Quantity::Ineq2Ref8},    {"Table 5.2a", "III", Quantity::Ineq2ThisWork},
        {"Table 5", "IV", Quantity::Ineq1Ref8},        {"Table 5", "IV", Quantity::Ineq1ThisWork},
        {"Table 5.2a", "IV", Quantity::Ineq2Ref8},     {"Table 5.2a", "IV", Quantity::Ineq2ThisWork},
        {"Table 5", "V", Quantity::Ineq1Ref8},         {"Table 5", "V", Quantity::Ineq1ThisWork},
        {"Table 5.2a", "V", Quantity::Ineq2Ref8},      {"Table 5.2a", "V", Quantity::Ineq2ThisWork},
        {"Table 5.3", "(a,b,alpha1,beta1)", Quantity::F1}, {"Table 5.3", "(a,b,alpha1,beta1)", Quantity::F2},
        {"Table 5.3", "(a,b,alpha1,beta1)", Quantity::F3},
    };

    // Every verdict is re-derived here from the Eigen matrix oracle on the probe grid.
    auto oracle_value = [](Quantity q, const ParamVector& p) {
        const oracle::Mat t = oracle::t_matrix(p);
        const oracle::Mat t2 = t * t;
        const oracle::Mat t3 = t2 * t;
        auto v2 = [&](int k) { return 9.0 * (t2(k, k).real() / 2.0 - t3(k, k).real()); };
        const double lhs2 = 9.0 * (t2.trace().real() / 2.0 - t3.trace().real());
        switch (q) {
            case Quantity::Ineq1Ref8: return t2.trace().real();
            case Quantity::Ineq1ThisWork: return 1.5 * t2.trace().real();
            case Quantity::Ineq2Ref8: return (1.0 - lhs2) / 9.0;
            case Quantity::Ineq2ThisWork: return lhs2;
            case Quantity::U1: return 1.5 * t2(0, 0).real();
            case Quantity::U2: return 1.5 * t2(1, 1).real();
            case Quantity::U3: return 1.5 * t2(2, 2).real();
            case Quantity::F1: return (v2(0) + v2(2)) / 18.0;
            case Quantity::F2: return v2(1) / 9.0;
            case Quantity::F3: return (v2(0) - v2(2)) / 18.0;
        }
        return 0.0;
    };
    auto oracle_mismatch = [&](const std::string& table, const std::string& row, Quantity q) {
        for (const PrintedFormula& f : printed_formulas()) {
            if (f.table != table || f.row != row || f.quantity != q) continue;
            for (const std::string& sub : f.sub_cases) {
                const ClusterCase& c = find_case(f.cluster, sub);
                std::vector<double> slots(c.arity());
                std::size_t n = 1;
                for (std::size_t i = 0; i < c.arity(); ++i) n *= kProbeValues.size();
                for (std::size_t idx = 0; idx < n; ++idx) {
                    std::size_t rem = idx;
                    for (double& s : slots) {
                        s = kProbeValues[rem % kProbeValues.size()];
                        rem /= kProbeValues.size();
                    }
                    if (std::abs(f.evaluate(slots) - oracle_value(q, instantiate(c, slots))) > kErrataTolerance) {
                        return true;
                    }
                }
            }
            return false;
        }
        return false;
    };

    for (const auto& [table, row, q] : listed_quantities) {
        const ErrataEntry* e = r.find(table, row, q);
        if (e == nullptr || e->verdict != Verdict::Mismatch) o.fail(table + " " + row + " not flagged");
        else if (!oracle_mismatch(table, row, q)) o.fail(table + " " + row + " not confirmed by oracle");
    }
    for (const auto& [table, row, q] : must_match) {
        const ErrataEntry* e = r.find(table, row, q);
        if (e == nullptr || e->verdict != Verdict::Match) o.fail(table + " " + row + " " + std::string(quantity_name(q)) + " not match");
        else if (oracle_mismatch(table, row, q)) o.fail(table + " " + row + " match contradicted by oracle");
    }

    std::set<std::pair<std::string, std::string>> flagged;
    for (const ErrataEntry* e : r.mismatches()) {
        flagged.insert({e->table, e->row});
        if (!oracle_mismatch(e->table, e->row, e->quantity)) o.fail(e->table + " " + e->row + " flagged without oracle support");
    }
    std::vector<std::string> extra;
    for (const auto& key : flagged) {
        if (!listed.count(key)) extra.push_back(key.first + " " + key.second);
    }
    if (!extra.empty()) {
        std::string list;
        for (const std::string& s : extra) list += (list.empty() ? "" : ", ") + s;
        o.fail("expected exactly the 5 listed rows, oracle-confirmed mismatches also in: " + list);
    }
    if (o.pass) o.detail = "exactly the 5 listed rows mismatch; required matches hold";
    return o;
}

bool bitwise_equal(const std::vector<ParamVector>& a, const std::vector<ParamVector>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(ParamVector)) == 0;
}

Outcome sampling() {
    Outcome o;
    const SamplerConfig pure{SamplingMethod::Pure, 7, 1000};
    for (const ParamVector& p : sample(pure)) {
        const PhysicalityReport r = physicality_report(p);
        const BlochTriple b = bloch_triple(p);
        if (!near(r.purity, 1.0, 1e-12)) { o.fail("pure purity " + fmt(r.purity)); break; }
        if (!near(b.u.length, 1.0, 1e-9) || !near(b.v.length, 1.0, 1e-9)) { o.fail("pure |u|,|v| not 1"); break; }
    }
    for (SamplingMethod m : {SamplingMethod::Rejection, SamplingMethod::HilbertSchmidt}) {
        const SamplerConfig cfg{m, 11, 1000};
        const auto pts = sample(cfg);
        const auto bad = std::count_if(pts.begin(), pts.end(), [](const ParamVector& p) { return !physicality_report(p).physical; });
        if (bad) o.fail(std::string(method_name(m)) + " produced " + std::to_string(bad) + " unphysical");
    }
    for (SamplingMethod m : {SamplingMethod::Rejection, SamplingMethod::Pure, SamplingMethod::HilbertSchmidt}) {
        const SamplerConfig cfg{m, 123456789, 500};
        if (!bitwise_equal(sample(cfg), sample(cfg))) o.fail(std::string(method_name(m)) + " not reproducible");
    }
    if (o.pass) o.detail = "pure purity/|u|/|v| = 1; rejection and hilbert_schmidt 100% physical; seeds reproducible";
    return o;
}

Outcome scan_determinism() {
    Outcome o;
    const auto dir = std::filesystem::current_path() / "acceptance_scan";
    std::filesystem::create_directories(dir);
    std::vector<std::string> files;
    for (int run = 0; run < 2; ++run) {
        const std::string out = (dir / ("cluster_I_" + std::to_string(run) + ".csv")).string();
        const char* argv[] = {"qutrit", "scan", "--cluster", "I", "--min", "-1", "--max", "1", "--step", "0.5", "--out", out.c_str()};
        std::ostringstream sout;
        std::ostringstream serr;
        const int code = cli::run(static_cast<int>(std::size(argv)), argv, sout, serr);
        if (code != 0) {
            o.fail("scan exit " + std::to_string(code) + ": " + serr.str());
            return o;
        }
        std::ifstream f(out, std::ios::binary);
        files.emplace_back(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    if (files[0] != files[1]) o.fail("runs differ");
    std::istringstream in(files[0]);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    int ineq1_ok = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream cells(line);
        std::string s, t, lhs1;
        std::getline(cells, s, ',');
        std::getline(cells, t, ',');
        std::getline(cells, lhs1, ',');
        if (std::stod(lhs1) <= 1.0) ++ineq1_ok;
    }
    if (rows != 25) o.fail(std::to_string(rows) + " rows");
    if (ineq1_ok != 9) o.fail(std::to_string(ineq1_ok) + " rows with lhs1 <= 1");
    if (o.pass) o.detail = "25 rows, 9 with lhs1 <= 1, byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"maximally mixed fixture", maximally_mixed},
        {"pure basis fixture", pure_basis},
        {"equivalence sweep", equivalence_sweep},
        {"closed-form agreement", closed_forms},
        {"round trip", round_trip},
        {"errata suite", errata_suite},
        {"sampling", sampling},
        {"scan determinism", scan_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::printf("criterion %zu [%s]: %s - %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
