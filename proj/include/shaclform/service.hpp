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

#ifndef SHACLFORM_SERVICE_HPP
#define SHACLFORM_SERVICE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shaclform/forms.hpp"
#include "shaclform/shacl.hpp"
#include "shaclform/submission.hpp"
#include "shaclform/validation.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::service {

inline constexpr const char* kListenEnv = "SHACLFORM_LISTEN";
inline constexpr const char* kDefaultListen = "127.0.0.1:8080";
inline constexpr const char* kDefaultMintBase = "http://localhost/entity/";

enum class ProbeMode { live, mock };

struct ServiceConfig {
    std::string shapes_path;
    std::vector<validators::ValidatorBinding> bindings;
    forms::LabelOverrides label_overrides;
    submission::MintingConfig minting{kDefaultMintBase, submission::MintStrategy::uuid, {}};
    std::optional<std::string> endpoint_url;  // absent: dry run
    std::optional<std::string> target_graph;
    ProbeMode probe_mode = ProbeMode::live;
    std::string probe_fixtures_path;
    std::string listen_address = kDefaultListen;
    std::string static_dir;
};

/// Reads a JSON config file. Relative paths are taken relative to the
/// file's directory; SHACLFORM_LISTEN overrides the listen address.
/// Throws ConfigError.
ServiceConfig load_config(const std::string& path);

/// Config with only a shapes file, everything else defaulted.
ServiceConfig config_for_shapes(const std::string& shapes_path);

struct ApiResponse {
    int status = 200;
    std::string body;  // JSON
};

/// Phase-1 validation of a data graph against loaded shapes.
validation::ValidationReport validate_graph(const rdf::Graph& data, const shacl::ShapesGraph& shapes);

/// The running pipeline: shapes, compiled forms, bindings, probe and minter
/// are fixed at construction. Handlers are safe to call concurrently.
class Service {
public:
    /// Loads and checks everything up front; throws ConfigError, ShapeError
    /// or ParseError instead of starting with a broken setup. A probe passed
    /// here replaces the one described by the config.
    explicit Service(ServiceConfig config, std::shared_ptr<validators::ResolverProbe> probe = nullptr);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    ApiResponse list_forms() const;
    ApiResponse get_form(const std::string& shape_id) const;
    ApiResponse validate(const std::string& payload_json) const;
    ApiResponse submit(const std::string& payload_json);

    /// Submission to stdout-like sinks: writes Turtle to `dry_run_out`
    /// instead of contacting the endpoint.
    ApiResponse submit(const std::string& payload_json, std::ostream& dry_run_out);

    /// Phase-1 report of a Turtle document as JSON.
    ApiResponse validate_turtle(const std::string& turtle, bool* conforms = nullptr) const;

    /// Binds the listen address (port 0 picks a free port) and returns the port.
    int bind();
    /// Serves until stop(); binds first if needed.
    void run();
    void stop();

    const ServiceConfig& config() const noexcept { return config_; }
    const shacl::ShapesGraph& shapes() const noexcept { return shapes_; }
    const validators::ResolverProbe& probe() const noexcept { return *probe_; }
    const forms::FormSchema* form(const std::string& shape_id) const;

private:
    struct Server;

    ApiResponse submit_with(const std::string& payload_json, submission::Transport* transport, bool dry_run);

    ServiceConfig config_;
    shacl::ShapesGraph shapes_;
    validators::Registry registry_;
    std::shared_ptr<validators::ResolverProbe> probe_;
    std::unique_ptr<submission::Minter> minter_;
    std::map<std::string, forms::FormSchema> forms_;
    std::map<std::string, std::string> form_bodies_;
    std::map<std::string, std::string> form_errors_;
    std::string list_body_;
    std::shared_ptr<Server> server_;
};

}  // namespace shaclform::service

#endif  // SHACLFORM_SERVICE_HPP
