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

// shaclform command line: serve, compile-form, validate, submit.
// Exit codes: 0 success/conforms, 1 non-conforming or rejected,
// 2 usage, config or input errors, 3 triplestore submission failed.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shaclform/shaclform.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEndpoint = 3;

sf_service* g_serving = nullptr;

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int report_error(const char* what) {
    std::cerr << "shaclform: " << what << ": " << sf_last_error() << '\n';
    return kExitUsage;
}

class Handle {
public:
    ~Handle() { sf_service_close(service_); }

    bool open(const std::string& config, const std::string& shapes) {
        if (config.empty() && shapes.empty()) {
            std::cerr << "shaclform: pass --config <file> or --shapes <file.ttl>\n";
            return false;
        }
        sf_status status = config.empty() ? sf_service_open_shapes(shapes.c_str(), &service_)
                                          : sf_service_open(config.c_str(), &service_);
        if (status != SF_OK) {
            report_error(config.empty() ? "cannot load shapes" : "cannot load config");
            return false;
        }
        return true;
    }

    sf_service* get() const { return service_; }

private:
    sf_service* service_ = nullptr;
};

struct Owned {
    char* s = nullptr;
    ~Owned() { sf_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SHACL-driven form compiler and RDF submission pipeline"};
    app.require_subcommand(1);
    std::string config_path;
    std::string shapes_path;
    app.add_option("--config", config_path, "Service config (JSON)");
    app.add_option("--shapes", shapes_path, "Shapes file (Turtle), used when no config is given");

    auto* serve = app.add_subcommand("serve", "Run the HTTP API");

    std::string shape_id;
    auto* compile = app.add_subcommand("compile-form", "Print the form schema of a shape");
    compile->add_option("shape-id", shape_id, "Shape IRI")->required();

    std::string data_path;
    auto* validate = app.add_subcommand("validate", "Validate a Turtle data file against the shapes");
    validate->add_option("data", data_path, "Data graph (Turtle)")->required();

    std::string payload_path;
    bool dry_run = false;
    auto* submit = app.add_subcommand("submit", "Validate, materialize and submit a payload");
    submit->add_option("payload", payload_path, "Payload JSON file, or - for stdin")->required();
    submit->add_flag("--dry-run", dry_run, "Print the Turtle instead of contacting the endpoint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::optional<std::string> input;
    if (validate->parsed()) {
        input = read_input(data_path);
        if (!input) {
            std::cerr << "shaclform: cannot read " << data_path << '\n';
            return kExitUsage;
        }
    } else if (submit->parsed()) {
        input = read_input(payload_path);
        if (!input) {
            std::cerr << "shaclform: cannot read " << payload_path << '\n';
            return kExitUsage;
        }
    }

    Handle handle;
    if (!handle.open(config_path, shapes_path)) return kExitUsage;

    if (serve->parsed()) {
        int port = 0;
        if (sf_service_bind(handle.get(), &port) != SF_OK) return report_error("cannot listen");
        std::cerr << "shaclform: listening on port " << port << '\n';
        g_serving = handle.get();
        std::signal(SIGINT, [](int) { sf_service_stop(g_serving); });
        std::signal(SIGTERM, [](int) { sf_service_stop(g_serving); });
        if (sf_service_run(handle.get()) != SF_OK) return report_error("server stopped");
        return kExitOk;
    }

    if (compile->parsed()) {
        Owned out;
        if (sf_compile_form(handle.get(), shape_id.c_str(), &out.s) != SF_OK) return report_error("compile-form");
        std::cout << out.s << '\n';
        return kExitOk;
    }

    if (validate->parsed()) {
        Owned out;
        int conforms = 0;
        if (sf_validate_turtle(handle.get(), input->c_str(), &conforms, &out.s) != SF_OK) {
            return report_error(data_path.c_str());
        }
        std::cout << nlohmann::json::parse(out.s).dump(2) << '\n';
        return conforms ? kExitOk : kExitFailed;
    }

    Owned out;
    int http_status = 0;
    if (sf_submit(handle.get(), input->c_str(), dry_run ? SF_SUBMIT_DRY_RUN : 0, &http_status, &out.s) != SF_OK) {
        return report_error("submit");
    }
    auto doc = nlohmann::json::parse(out.s);
    switch (http_status) {
        case 200:
            if (dry_run) {
                std::cout << doc.at("turtle").get<std::string>();
            } else {
                std::cout << doc.dump(2) << '\n';
            }
            std::cerr << "shaclform: accepted as <" << doc.at("iri").get<std::string>() << ">\n";
            return kExitOk;
        case 422:
            std::cout << doc.dump(2) << '\n';
            return kExitFailed;
        case 502:
            std::cout << doc.dump(2) << '\n';
            std::cerr << "shaclform: submission failed: " << doc.value("error", std::string()) << '\n';
            return kExitEndpoint;
        default:
            std::cerr << "shaclform: " << doc.value("error", out.s) << '\n';
            return kExitUsage;
    }
}
