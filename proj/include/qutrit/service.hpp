#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace qutrit {

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
};

inline constexpr std::size_t kMaxScanCells = 250'000;
inline constexpr std::size_t kMaxSampleCount = 10'000;

/// Stateless request routing. `method` is "GET" or "POST"; `body` is the raw request body.
ServiceResponse handle_request(std::string_view method, std::string_view path, std::string_view body);

/// Registers every endpoint on `server`.
void mount_routes(httplib::Server& server);

/// Blocks serving on host:port. Returns false if the socket could not be bound.
bool serve(const std::string& host, int port);

}  // namespace qutrit
