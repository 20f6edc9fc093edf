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
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shaclform/codec.hpp"
#include "shaclform/error.hpp"
#include "shaclform/service.hpp"

namespace shaclform::service {

using nlohmann::json;

namespace {

ApiResponse error_response(int status, const std::string& message) {
    return {status, json{{"error", message}, {"status", status}}.dump()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read shapes file " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string file_base(const std::string& path) {
    return "file://" + std::filesystem::absolute(path).lexically_normal().string();
}

}  // namespace

validation::ValidationReport validate_graph(const rdf::Graph& data, const shacl::ShapesGraph& shapes) {
    return validation::validate(data, shapes);
}

Service::Service(ServiceConfig config, std::shared_ptr<validators::ResolverProbe> probe)
    : config_(std::move(config)), registry_(validators::Registry::builtin()), probe_(std::move(probe)) {
    if (config_.shapes_path.empty()) throw ConfigError("no shapes file configured");
    auto graph = rdf::parse_turtle(read_file(config_.shapes_path), file_base(config_.shapes_path));
    shapes_ = shacl::resolve_inheritance(shacl::load_shapes(graph));

    validators::check_bindings(config_.bindings, registry_);
    for (const auto& b : config_.bindings) {
        if (!shapes_.find(b.shape_id)) {
            throw ConfigError("binding " + b.validator_name + " refers to unknown shape <" + b.shape_id + ">");
        }
    }

    if (!probe_) {
        if (config_.probe_mode == ProbeMode::mock) {
            probe_ = std::make_shared<validators::MockProbe>(
                validators::MockProbe::from_json_file(config_.probe_fixtures_path));
        } else {
            probe_ = std::make_shared<validators::HttpProbe>();
        }
    }
    minter_ = std::make_unique<submission::Minter>(config_.minting);

    json entries = json::array();
    for (const auto& shape : shapes_.shapes) {
        try {
            auto schema = forms::compile_form(shape, config_.bindings, config_.label_overrides);
            form_bodies_[shape.id] = forms::serialize_form_schema(schema);
            forms_.emplace(shape.id, std::move(schema));
        } catch (const ShapeError& e) {
            form_errors_[shape.id] = e.what();
        }
        if (shape.target_class) {
            entries.push_back({{"shapeId", shape.id},
                               {"targetClass", *shape.target_class},
                               {"label", forms::derive_label(*shape.target_class, config_.label_overrides)}});
        }
    }
    list_body_ = json{{"forms", std::move(entries)}}.dump();
}

const forms::FormSchema* Service::form(const std::string& shape_id) const {
    auto it = forms_.find(shape_id);
    return it == forms_.end() ? nullptr : &it->second;
}

ApiResponse Service::list_forms() const { return {200, list_body_}; }

ApiResponse Service::get_form(const std::string& shape_id) const {
    if (auto it = form_bodies_.find(shape_id); it != form_bodies_.end()) return {200, it->second};
    if (auto it = form_errors_.find(shape_id); it != form_errors_.end()) return error_response(422, it->second);
    return error_response(404, "no shape <" + shape_id + ">");
}

namespace {

struct Parsed {
    std::optional<SubmissionPayload> payload;
    ApiResponse error;
};

Parsed parse_payload(const std::string& body, const Service& service) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::exception& e) {
        return {std::nullopt, error_response(400, std::string("malformed payload: ") + e.what())};
    }
    SubmissionPayload payload;
    try {
        payload = codec::payload_from_json(doc);
    } catch (const Error& e) {
        return {std::nullopt, error_response(400, std::string("malformed payload: ") + e.what())};
    }
    if (!service.shapes().find(payload.shape_id)) {
        return {std::nullopt, error_response(404, "no shape <" + payload.shape_id + ">")};
    }
    if (!service.form(payload.shape_id)) {
        return {std::nullopt, service.get_form(payload.shape_id)};
    }
    return {std::move(payload), {}};
}

}  // namespace

ApiResponse Service::validate(const std::string& payload_json) const {
    auto parsed = parse_payload(payload_json, *this);
    if (!parsed.payload) return parsed.error;
    auto outcome = submission::process_submission(*parsed.payload, *form(parsed.payload->shape_id), shapes_,
                                                  config_.bindings, registry_, *probe_, nullptr,
                                                  submission::PipelineOptions{false});
    return {200, codec::report_to_json(outcome.report).dump()};
}

ApiResponse Service::submit(const std::string& payload_json) {
    if (!config_.endpoint_url) return submit_with(payload_json, nullptr, true);
    submission::HttpTransport transport(*config_.endpoint_url);
    return submit_with(payload_json, &transport, false);
}

ApiResponse Service::submit(const std::string& payload_json, std::ostream& dry_run_out) {
    submission::DryRunTransport transport(dry_run_out);
    return submit_with(payload_json, &transport, true);
}

ApiResponse Service::submit_with(const std::string& payload_json, submission::Transport* transport, bool dry_run) {
    auto parsed = parse_payload(payload_json, *this);
    if (!parsed.payload) return parsed.error;
    auto outcome = submission::process_submission(*parsed.payload, *form(parsed.payload->shape_id), shapes_,
                                                  config_.bindings, registry_, *probe_, minter_.get());
    if (!outcome.accepted) {
        json doc = codec::report_to_json(outcome.report);
        doc["accepted"] = false;
        return {422, doc.dump()};
    }
    const std::string turtle = rdf::serialize_turtle(outcome.graph);
    const std::string update = submission::build_update(outcome.graph, config_.target_graph);
    json doc{{"accepted", true},
             {"iri", outcome.subject},
             {"turtle", turtle},
             {"update", update},
             {"report", codec::report_to_json(outcome.report)},
             {"submitted", false},
             {"dryRun", dry_run}};
    if (!transport) return {200, doc.dump()};

    auto result = transport->submit(outcome.graph, update);
    if (!result.ok) {
        doc["error"] = result.cause;
        doc["endpointStatus"] = result.status ? json(*result.status) : json(nullptr);
        doc["endpointBody"] = result.body;
        return {502, doc.dump()};
    }
    doc["submitted"] = !dry_run;
    return {200, doc.dump()};
}

ApiResponse Service::validate_turtle(const std::string& turtle, bool* conforms) const {
    rdf::Graph data;
    try {
        data = rdf::parse_turtle(turtle);
    } catch (const ParseError& e) {
        return error_response(400, e.what());
    }
    auto report = validate_graph(data, shapes_);
    if (conforms) *conforms = report.conforms;
    return {200, codec::report_to_json(report).dump()};
}

}  // namespace shaclform::service
