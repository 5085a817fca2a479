#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qutrit/bloch.hpp"
#include "qutrit/clusters.hpp"
#include "qutrit/errata.hpp"
#include "qutrit/error.hpp"
#include "qutrit/physicality.hpp"
#include "qutrit/region.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/scene.hpp"
#include "qutrit/service.hpp"

namespace qutrit::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

ParamVector parse_sets(const std::vector<std::string>& sets) {
    ParamVector p;
    for (const std::string& item : sets) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        const auto field = field_from_name(key);
        if (!field) throw UsageError("unknown parameter '" + key + "'");
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v)) {
            throw UsageError("cannot parse value '" + value + "' for " + key);
        }
        p[*field] = v;
    }
    return p;
}

void print_vector(std::ostream& out, const BlochVector& v) {
    out << label_name(v.label) << ": squares [";
    for (std::size_t i = 0; i < 3; ++i) out << (i ? ", " : "") << v.squares[i];
    out << "]  length " << v.length;
    if (v.any_negative()) {
        out << "  negative:";
        for (std::size_t i = 0; i < 3; ++i) {
            if (v.negative_components[i]) out << " " << label_name(v.label) << i + 1 << "^2";
        }
    }
    out << "\n";
}

void print_text(std::ostream& out, const ParamVector& p) {
    const PhysicalityReport rep = physicality_report(p);
    const BlochTriple b = bloch_triple(p);
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::setprecision(10);
    out << "params:";
    for (Field f : kAllFields) out << " " << field_name(f) << "=" << p[f];
    out << "\n";
    out << "lhs1 " << rep.ineq1.lhs_direct << (rep.ineq1.holds ? " <= 1" : " > 1") << "\n";
    out << "lhs2 " << rep.ineq2.lhs_direct << (rep.ineq2.holds ? " <= 1" : " > 1") << "\n";
    out << "purity " << rep.purity << "  e2 " << rep.coeffs.e2 << "  e3 " << rep.coeffs.e3 << "\n";
    out << "eigenvalues " << rep.eigenvalues[0] << " " << rep.eigenvalues[1] << " " << rep.eigenvalues[2] << "\n";
    print_vector(out, b.u);
    print_vector(out, b.v);
    print_vector(out, b.w);
    out << (rep.physical ? "physical" : "unphysical") << "\n";
    out.flags(old_flags);
    out.precision(old_precision);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path);
}

void print_errata_text(std::ostream& out, const ErrataReport& report) {
    for (const ErrataEntry& e : report.entries) {
        out << std::left << std::setw(11) << e.table << std::setw(36) << e.row << std::setw(19)
            << quantity_name(e.quantity) << std::setw(9) << verdict_name(e.verdict) << std::right
            << std::scientific << std::setprecision(3) << e.discrepancy << std::defaultfloat << "  "
            << e.printed_expression << "\n";
    }
    out << report.mismatches().size() << " of " << report.entries.size() << " printed formulas disagree\n";
    for (const std::string& a : report.annotations) out << "note: " << a << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qutrit Bloch-vector toolkit: evaluate, scan, sample, and serve."};
    app.name("qutrit");
    app.require_subcommand(1);

    std::vector<std::string> sets;
    bool as_json = false;
    bool as_text = false;

    auto* eval = app.add_subcommand("eval", "Evaluate a parameter point (exit 0 physical, 3 unphysical)");
    eval->add_option("--set", sets, "Parameter assignment key=value (repeatable)");
    auto* eval_json = eval->add_flag("--json", as_json, "Emit the scene document as JSON");
    eval->add_flag("--text", as_text, "Emit a human-readable summary (default)")->excludes(eval_json);

    auto* check = app.add_subcommand("check", "Physicality predicate (exit 0 physical, 3 unphysical)");
    check->add_option("--set", sets, "Parameter assignment key=value (repeatable)");

    std::string cluster;
    std::string sub;
    double range_min = -1.0;
    double range_max = 1.0;
    double step = 0.05;
    std::vector<double> fixed;
    std::string out_path;
    std::string svg_path;
    auto* scan = app.add_subcommand("scan", "Scan a cluster case over a 2D grid and write CSV");
    scan->add_option("--cluster", cluster, "Cluster id (I..VII, 4var)")->required();
    scan->add_option("--sub", sub, "Sub-case, e.g. \"(a,alpha2)\"; default is the first");
    scan->add_option("--min", range_min, "Lower bound for s and t");
    scan->add_option("--max", range_max, "Upper bound for s and t");
    scan->add_option("--step", step, "Grid step");
    scan->add_option("--fixed", fixed, "Values of slots p q for four-variable cases")->expected(2);
    scan->add_option("--out", out_path, "CSV output file")->required();
    scan->add_option("--svg", svg_path, "Optional SVG region map");

    std::string method;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    auto* samp = app.add_subcommand("sample", "Draw reproducible qutrit states");
    samp->add_option("--method", method, "rejection | pure | hilbert_schmidt")->required();
    samp->add_option("--seed", seed, "64-bit seed");
    samp->add_option("--count", count, "Number of states")->check(CLI::PositiveNumber);
    samp->add_flag("--json", as_json, "Emit JSON (the only format)");

    app.add_subcommand("clusters", "Print the cluster catalog as JSON");

    auto* errata = app.add_subcommand("errata", "Compare printed closed forms with the matrix path");
    errata->add_flag("--json", as_json, "Emit JSON instead of a table");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* srv = app.add_subcommand("serve", "Run the stateless JSON service");
    srv->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    srv->add_option("--host", host, "Bind address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPhysical;
    } catch (const CLI::ParseError& e) {
        err << "qutrit: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed() || check->parsed()) {
            const ParamVector p = parse_sets(sets);
            const bool physical = physicality_report(p).physical;
            if (check->parsed()) {
                out << (physical ? "physical" : "unphysical") << "\n";
            } else if (as_json) {
                out << dump(scene_document(p));
            } else {
                print_text(out, p);
            }
            return physical ? kExitPhysical : kExitUnphysical;
        }
        if (scan->parsed()) {
            const auto id = cluster_from_name(cluster);
            if (!id) throw UsageError("unknown cluster '" + cluster + "'");
            const ClusterCase& c = find_case(*id, sub);
            const AxisRange range{range_min, range_max, step};
            const RegionGrid grid = scan_region(c, range, range, fixed);
            write_file(out_path, region_csv(grid));
            if (!svg_path.empty()) write_file(svg_path, region_svg(grid));
            out << "wrote " << grid.cells.size() << " cells for " << cluster_name(c.cluster) << " " << c.sub_case
                << " to " << out_path << "\n";
            return kExitPhysical;
        }
        if (samp->parsed()) {
            const auto m = method_from_name(method);
            if (!m) throw UsageError("unknown method '" + method + "'");
            const SamplerConfig config{*m, seed, count};
            out << dump(sample_records_json(config, sample(config)));
            return kExitPhysical;
        }
        if (app.got_subcommand("clusters")) {
            out << dump(catalog_json());
            return kExitPhysical;
        }
        if (errata->parsed()) {
            const ErrataReport report = errata_report();
            if (as_json) {
                out << dump(errata_json(report));
            } else {
                print_errata_text(out, report);
            }
            return kExitPhysical;
        }
        if (srv->parsed()) {
            if (!serve(host, port)) {
                err << "qutrit: cannot listen on " << host << ":" << port << "\n";
                return kExitFailure;
            }
            return kExitPhysical;
        }
    } catch (const UsageError& e) {
        err << "qutrit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "qutrit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "qutrit: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qutrit::cli
