#pragma once

// HTTP/1.1 binding of the service handlers (cpp-httplib). Requests are served
// from httplib's thread pool; handlers share no mutable state.

#include <string>

#include <httplib.h>

#include "service.hpp"

namespace slideocam::service
{

inline void install_routes(httplib::Server& server, std::string allowed_origin = "*")
{
    server.set_default_headers({{"Access-Control-Allow-Origin", allowed_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    auto send = [](httplib::Response& res, const Reply& reply) {
        res.status = reply.status;
        res.set_content(reply.body.dump(), "application/json");
    };
    const std::string prefix(api_prefix);

    server.Get(prefix + "/health", [send](const httplib::Request&, httplib::Response& res) { send(res, health()); });
    server.Post(prefix + "/evaluate", [send](const httplib::Request& req, httplib::Response& res) {
        send(res, evaluate(req.body));
    });
    server.Post(prefix + "/synthesize", [send](const httplib::Request& req, httplib::Response& res) {
        send(res, synthesize(req.body));
    });
    server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

} // namespace slideocam::service
