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

#include "shaclform/codec.hpp"

#include "shaclform/error.hpp"

namespace shaclform::codec {

using nlohmann::json;
using rdf::Term;

namespace {

const std::string& string_at(const json& doc, const char* key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_string()) {
        throw Error(where + ": expected string member \"" + key + "\"");
    }
    return doc.at(key).get_ref<const std::string&>();
}

}  // namespace

json term_to_json(const Term& term) {
    switch (term.kind()) {
        case rdf::TermKind::iri: return json{{"@id", term.value()}};
        case rdf::TermKind::blank: return json{{"@id", "_:" + term.value()}};
        case rdf::TermKind::literal: break;
    }
    if (!term.language().empty()) return json{{"@value", term.value()}, {"@language", term.language()}};
    return json{{"@value", term.value()}, {"@type", term.datatype()}};
}

Term term_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("@id")) {
        const std::string& id = string_at(doc, "@id", "term");
        if (id.starts_with("_:")) return Term::blank(id.substr(2));
        if (!rdf::is_absolute_iri(id)) throw Error("term: \"" + id + "\" is not an absolute IRI");
        return Term::iri(id);
    }
    if (doc.is_object() && doc.contains("@value")) {
        const std::string& value = string_at(doc, "@value", "term");
        if (doc.contains("@language")) return Term::lang_literal(value, string_at(doc, "@language", "term"));
        if (doc.contains("@type")) return Term::literal(value, string_at(doc, "@type", "term"));
        return Term::literal(value);
    }
    if (doc.is_string()) return Term::literal(doc.get<std::string>());
    throw Error("term: expected {\"@id\"} or {\"@value\"} object");
}

json condition_to_json(const validators::Condition& condition) {
    return json{{"path", condition.when_path}, {"equals", term_to_json(condition.equals)}};
}

validators::Condition condition_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("equals")) throw Error("condition: expected {\"path\", \"equals\"}");
    return validators::Condition{string_at(doc, "path", "condition"), term_from_json(doc.at("equals"))};
}

json report_to_json(const validation::ValidationReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        json item{
            {"focusNode", term_to_json(r.focus_node)},
            {"sourceConstraintComponent", r.component},
            {"resultMessage", r.message},
            {"resultSeverity", std::string(validation::severity_name(r.severity))},
            {"phase", std::string(validation::phase_name(r.phase))},
        };
        item["resultPath"] = r.result_path ? json(*r.result_path) : json(nullptr);
        item["value"] = r.value ? term_to_json(*r.value) : json(nullptr);
        results.push_back(std::move(item));
    }
    return json{{"version", std::string(kReportVersion)}, {"conforms", report.conforms}, {"results", results}};
}

validation::ValidationReport report_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("results") || !doc.at("results").is_array()) {
        throw Error("report: expected an object with a results array");
    }
    validation::ValidationReport report;
    for (const auto& item : doc.at("results")) {
        validation::ValidationResult r;
        r.focus_node = term_from_json(item.at("focusNode"));
        if (item.contains("resultPath") && item.at("resultPath").is_string()) r.result_path = item.at("resultPath");
        r.component = string_at(item, "sourceConstraintComponent", "report result");
        if (item.contains("value") && !item.at("value").is_null()) r.value = term_from_json(item.at("value"));
        r.message = string_at(item, "resultMessage", "report result");
        r.severity = string_at(item, "resultSeverity", "report result") == "Warning" ? validation::Severity::warning
                                                                                      : validation::Severity::violation;
        r.phase = string_at(item, "phase", "report result") == "custom" ? validation::Phase::custom
                                                                        : validation::Phase::shacl;
        report.results.push_back(std::move(r));
    }
    report.update_conforms();
    return report;
}

SubmissionPayload payload_from_json(const json& doc) {
    if (!doc.is_object()) throw Error("payload: expected a JSON object");
    SubmissionPayload payload;
    payload.shape_id = string_at(doc, "shape", "payload");
    if (!doc.contains("values")) return payload;
    const json& values = doc.at("values");
    if (!values.is_object()) throw Error("payload: \"values\" must be an object keyed by property IRI");
    for (const auto& [path, list] : values.items()) {
        if (!rdf::is_absolute_iri(path)) throw Error("payload: key \"" + path + "\" is not an absolute IRI");
        if (!list.is_array()) throw Error("payload: values for <" + path + "> must be an array");
        if (list.empty()) throw Error("payload: value list for <" + path + "> is empty");
        auto& out = payload.values[path];
        for (const auto& v : list) {
            if (v.is_string()) {
                out.push_back(PayloadValue::raw(v.get<std::string>()));
            } else if (v.is_object() && v.contains("@id") && v.at("@id").is_string()) {
                out.push_back(PayloadValue::iri(v.at("@id").get<std::string>()));
            } else {
                throw Error("payload: values for <" + path + "> must be strings or {\"@id\": ...} objects");
            }
        }
    }
    return payload;
}

json payload_to_json(const SubmissionPayload& payload) {
    json values = json::object();
    for (const auto& [path, list] : payload.values) {
        json arr = json::array();
        for (const auto& v : list) arr.push_back(v.is_iri ? json{{"@id", v.text}} : json(v.text));
        values[path] = std::move(arr);
    }
    return json{{"shape", payload.shape_id}, {"values", std::move(values)}};
}

validators::ValidatorBinding binding_from_json(const json& doc, const validators::Registry& registry) {
    validators::ValidatorBinding b;
    b.validator_name = string_at(doc, "validator", "binding");
    b.shape_id = string_at(doc, "shape", "binding");
    b.path = string_at(doc, "path", "binding");
    const auto* info = registry.find(b.validator_name);
    if (!info) throw ConfigError("binding: unknown validator \"" + b.validator_name + "\"");
    b.mode = info->mode;
    if (doc.contains("mode")) {
        const std::string& mode = string_at(doc, "mode", "binding");
        if (mode == "syntactic") {
            b.mode = validators::Mode::syntactic;
        } else if (mode == "external") {
            b.mode = validators::Mode::external;
        } else {
            throw ConfigError("binding: unknown mode \"" + mode + "\"");
        }
    }
    if (doc.contains("when")) b.condition = condition_from_json(doc.at("when"));
    return b;
}

json binding_to_json(const validators::ValidatorBinding& b) {
    json doc{{"validator", b.validator_name},
             {"shape", b.shape_id},
             {"path", b.path},
             {"mode", std::string(validators::mode_name(b.mode))}};
    if (b.condition) doc["when"] = condition_to_json(*b.condition);
    return doc;
}

}  // namespace shaclform::codec
