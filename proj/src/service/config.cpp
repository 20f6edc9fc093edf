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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "shaclform/codec.hpp"
#include "shaclform/error.hpp"
#include "shaclform/service.hpp"

namespace shaclform::service {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string relative_to(const fs::path& dir, const std::string& p) {
    if (p.empty()) return p;
    fs::path path(p);
    return path.is_absolute() ? path.string() : (dir / path).lexically_normal().string();
}

std::string get_string(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_string()) throw ConfigError(std::string("config: \"") + key + "\" must be a string");
    return v.get<std::string>();
}

const std::set<std::string> kTopLevelKeys = {"shapes", "bindings", "labels", "minting", "endpoint",
                                             "targetGraph", "probe", "listen", "static"};

}  // namespace

ServiceConfig config_for_shapes(const std::string& shapes_path) {
    ServiceConfig config;
    config.shapes_path = shapes_path;
    if (const char* listen = std::getenv(kListenEnv); listen && *listen) config.listen_address = listen;
    return config;
}

ServiceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config " + path + ": expected a JSON object");
    const fs::path dir = fs::absolute(fs::path(path)).parent_path();

    ServiceConfig config;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (!kTopLevelKeys.contains(key)) throw ConfigError("config: unknown key \"" + key + "\"");
        }
        if (!doc.contains("shapes")) throw ConfigError("config: \"shapes\" is required");
        config.shapes_path = relative_to(dir, get_string(doc, "shapes"));

        const auto registry = validators::Registry::builtin();
        if (doc.contains("bindings")) {
            if (!doc.at("bindings").is_array()) throw ConfigError("config: \"bindings\" must be an array");
            for (const auto& b : doc.at("bindings")) config.bindings.push_back(codec::binding_from_json(b, registry));
        }
        if (doc.contains("labels")) {
            for (const auto& [iri, label] : doc.at("labels").items()) {
                if (!label.is_string()) throw ConfigError("config: labels must map IRIs to strings");
                config.label_overrides[iri] = label.get<std::string>();
            }
        }
        if (doc.contains("minting")) {
            const json& m = doc.at("minting");
            if (m.contains("base")) config.minting.base_iri = get_string(m, "base");
            if (m.contains("strategy")) {
                auto strategy = get_string(m, "strategy");
                if (strategy == "uuid") {
                    config.minting.strategy = submission::MintStrategy::uuid;
                } else if (strategy == "counter") {
                    config.minting.strategy = submission::MintStrategy::counter;
                } else {
                    throw ConfigError("config: unknown minting strategy \"" + strategy + "\"");
                }
            }
            if (m.contains("counterState")) {
                config.minting.counter_state_path = relative_to(dir, get_string(m, "counterState"));
            }
        }
        if (doc.contains("endpoint") && !doc.at("endpoint").is_null()) config.endpoint_url = get_string(doc, "endpoint");
        if (doc.contains("targetGraph") && !doc.at("targetGraph").is_null()) {
            config.target_graph = get_string(doc, "targetGraph");
        }
        if (doc.contains("probe")) {
            const json& p = doc.at("probe");
            auto mode = p.contains("mode") ? get_string(p, "mode") : std::string("live");
            if (mode == "live") {
                config.probe_mode = ProbeMode::live;
            } else if (mode == "mock") {
                config.probe_mode = ProbeMode::mock;
                if (!p.contains("fixtures")) throw ConfigError("config: mock probe needs \"fixtures\"");
                config.probe_fixtures_path = relative_to(dir, get_string(p, "fixtures"));
            } else {
                throw ConfigError("config: unknown probe mode \"" + mode + "\"");
            }
        }
        if (doc.contains("listen")) config.listen_address = get_string(doc, "listen");
        if (doc.contains("static")) config.static_dir = relative_to(dir, get_string(doc, "static"));
    } catch (const json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("config ") + path + ": " + e.what());
    }
    if (const char* listen = std::getenv(kListenEnv); listen && *listen) config.listen_address = listen;
    return config;
}

}  // namespace shaclform::service
