#include "qutrit/service.hpp"

#include <httplib.h>

#include <cmath>
#include <iostream>
#include <limits>

#include "qutrit/clusters.hpp"
#include "qutrit/error.hpp"
#include "qutrit/errata.hpp"
#include "qutrit/region.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/scene.hpp"

namespace qutrit {

using nlohmann::json;

namespace {

class BadRequest : public Error {
public:
    using Error::Error;
};

ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
    return {status, json{{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}}};
}

json parse_body(std::string_view body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded()) throw BadRequest("request body is not valid JSON");
    if (!j.is_object()) throw BadRequest("request body must be a JSON object");
    return j;
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key)) throw BadRequest(std::string("missing field '") + key + "'");
    if (!j[key].is_number()) throw BadRequest(std::string("field '") + key + "' must be a number");
    return j[key].get<double>();
}

ServiceResponse do_eval(const json& req) {
    const json params = req.contains("params") ? req["params"] : json::object();
    return {200, scene_document(params_from_json(params))};
}

ServiceResponse do_scan(const json& req) {
    if (!req.contains("cluster") || !req["cluster"].is_string()) throw BadRequest("missing string field 'cluster'");
    const auto id = cluster_from_name(req["cluster"].get<std::string>());
    if (!id) throw BadRequest("unknown cluster '" + req["cluster"].get<std::string>() + "'");
    std::string sub;
    if (req.contains("sub")) {
        if (!req["sub"].is_string()) throw BadRequest("field 'sub' must be a string");
        sub = req["sub"].get<std::string>();
    }
    const ClusterCase& c = find_case(*id, sub);
    const AxisRange range{number_field(req, "min"), number_field(req, "max"), number_field(req, "step")};
    std::vector<double> fixed;
    if (req.contains("fixed")) {
        if (!req["fixed"].is_array()) throw BadRequest("field 'fixed' must be an array of numbers");
        for (const json& v : req["fixed"]) {
            if (!v.is_number()) throw BadRequest("field 'fixed' must be an array of numbers");
            fixed.push_back(v.get<double>());
        }
    }
    if (range.step > 0.0 && std::isfinite(range.min) && std::isfinite(range.max) && range.max >= range.min) {
        const double n = std::floor((range.max - range.min) / range.step) + 1.0;
        if (n * n > static_cast<double>(kMaxScanCells)) {
            throw BadRequest("scan would produce more than " + std::to_string(kMaxScanCells) + " cells");
        }
    }
    return {200, region_grid_json(scan_region(c, range, range, fixed))};
}

ServiceResponse do_sample(const json& req) {
    if (!req.contains("method") || !req["method"].is_string()) throw BadRequest("missing string field 'method'");
    const auto method = method_from_name(req["method"].get<std::string>());
    if (!method) throw BadRequest("unknown method '" + req["method"].get<std::string>() + "'");
    if (!req.contains("seed") || !req["seed"].is_number_unsigned()) {
        throw BadRequest("field 'seed' must be a non-negative integer");
    }
    if (!req.contains("count") || !req["count"].is_number_unsigned()) {
        throw BadRequest("field 'count' must be a positive integer");
    }
    const SamplerConfig config{*method, req["seed"].get<std::uint64_t>(), req["count"].get<std::size_t>()};
    if (config.count == 0 || config.count > kMaxSampleCount) {
        throw BadRequest("count must be between 1 and " + std::to_string(kMaxSampleCount));
    }
    return {200, sample_records_json(config, sample(config))};
}

}  // namespace

ServiceResponse handle_request(std::string_view method, std::string_view path, std::string_view body) {
    const bool get = method == "GET";
    const bool post = method == "POST";
    try {
        if (path == "/health") {
            if (!get) return error_response(405, "method_not_allowed", "use GET");
            return {200, json{{"schema_version", kSchemaVersion}, {"status", "ok"}}};
        }
        if (path == "/clusters") {
            if (!get) return error_response(405, "method_not_allowed", "use GET");
            return {200, catalog_json()};
        }
        if (path == "/errata") {
            if (!get) return error_response(405, "method_not_allowed", "use GET");
            return {200, errata_json(errata_report())};
        }
        if (path == "/eval" || path == "/scan" || path == "/sample") {
            if (!post) return error_response(405, "method_not_allowed", "use POST");
            const json req = parse_body(body);
            if (path == "/eval") return do_eval(req);
            if (path == "/scan") return do_scan(req);
            return do_sample(req);
        }
        return error_response(404, "not_found", "no route " + std::string(method) + " " + std::string(path));
    } catch (const BadRequest& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const Error& e) {
        return error_response(400, "invalid_argument", e.what());
    } catch (const json::exception& e) {
        return error_response(400, "bad_request", e.what());
    }
}

void mount_routes(httplib::Server& server) {
    auto forward = [](const httplib::Request& req, httplib::Response& res) {
        const ServiceResponse r = handle_request(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json");
    };
    // Browser preflight for the explorer, which runs on a different origin.
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Get(R"(/.*)", forward);
    server.Post(R"(/.*)", forward);
    server.Put(R"(/.*)", forward);
    server.Delete(R"(/.*)", forward);
}

bool serve(const std::string& host, int port) {
    httplib::Server server;
    mount_routes(server);
    std::cerr << "qutrit service listening on " << host << ":" << port << "\n";
    return server.listen(host, port);
}

}  // namespace qutrit
