/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>

#include <httplib.h>
#include <json.hpp>

#include "shaclform/error.hpp"
#include "shaclform/service.hpp"

namespace shaclform::service {

struct Service::Server {
    httplib::Server http;
    int port = -1;
};

Service::~Service() = default;

namespace {

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, kJson);
}

std::pair<std::string, int> split_listen(const std::string& address) {
    auto colon = address.rfind(':');
    if (colon == std::string::npos) throw ConfigError("listen address \"" + address + "\" lacks a port");
    std::string host = address.substr(0, colon);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
    int port = 0;
    try {
        std::size_t used = 0;
        port = std::stoi(address.substr(colon + 1), &used);
        if (used != address.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ConfigError("listen address \"" + address + "\" has an invalid port");
    }
    if (port < 0 || port > 65535) throw ConfigError("listen address \"" + address + "\" has an invalid port");
    return {host.empty() ? std::string("0.0.0.0") : host, port};
}

}  // namespace

int Service::bind() {
    if (server_ && server_->port >= 0) return server_->port;
    server_ = std::make_shared<Server>();
    auto& http = server_->http;

    http.Get("/api/forms", [this](const httplib::Request&, httplib::Response& res) { reply(res, list_forms()); });
    http.Get(R"(/api/forms/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
        reply(res, get_form(req.matches[1]));
    });
    http.Post("/api/validate",
              [this](const httplib::Request& req, httplib::Response& res) { reply(res, validate(req.body)); });
    http.Post("/api/submit", [this](const httplib::Request& req, httplib::Response& res) { reply(res, submit(req.body)); });
    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        } catch (...) {
        }
        reply(res, ApiResponse{500, nlohmann::json{{"error", message}, {"status", 500}}.dump()});
    });
    if (!config_.static_dir.empty()) {
        if (!std::filesystem::is_directory(config_.static_dir) || !http.set_mount_point("/", config_.static_dir)) {
            throw ConfigError("static directory " + config_.static_dir + " is not readable");
        }
    }

    auto [host, port] = split_listen(config_.listen_address);
    if (port == 0) {
        server_->port = http.bind_to_any_port(host);
    } else {
        server_->port = http.bind_to_port(host, port) ? port : -1;
    }
    if (server_->port < 0) throw ConfigError("cannot listen on " + config_.listen_address);
    return server_->port;
}

void Service::run() {
    bind();
    server_->http.listen_after_bind();
}

void Service::stop() {
    if (server_) server_->http.stop();
}

}  // namespace shaclform::service
