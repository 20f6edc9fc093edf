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

#include <cctype>
#include <cstdio>
#include <fstream>
#include <regex>

#include <json.hpp>

#include "shaclform/error.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::validators {

using validation::Severity;

namespace {

Finding violation(std::string message) { return Finding{Severity::violation, std::move(message)}; }
Finding warning(std::string message) { return Finding{Severity::warning, std::move(message)}; }

bool digit(char c) { return c >= '0' && c <= '9'; }

// Maps a probe response onto a verdict. 404/410 mean the resource is gone;
// any other non-success status or transport failure is inconclusive.
Verdict judge(const ProbeResponse& r, const std::string& url, std::string_view what) {
    if (!r.status) return warning("Could not check " + url + ": " + (r.failure.empty() ? "unknown error" : r.failure));
    int code = *r.status;
    if (code >= 200 && code < 400) return std::nullopt;
    if (code == 404 || code == 410) {
        return violation(std::string(what) + " does not resolve (" + url + " answered " + std::to_string(code) + ")");
    }
    return warning("Could not confirm " + url + ": HTTP " + std::to_string(code));
}

}  // namespace

std::string_view mode_name(Mode m) { return m == Mode::syntactic ? "syntactic" : "external"; }

Verdict doi_syntax(std::string_view value) {
    static const std::regex kDoi(R"(^10\.[0-9]{4,9}/.+$)", std::regex::ECMAScript | std::regex::icase);
    if (std::regex_match(value.begin(), value.end(), kDoi)) return std::nullopt;
    return violation("\"" + std::string(value) + "\" is not a DOI (expected 10.<4-9 digits>/<suffix>)");
}

std::string doi_resolver_url(std::string_view doi) {
    std::string url = "https://doi.org/";
    for (unsigned char c : doi) {
        if (std::isalnum(c) || std::string_view("-._~/:;()").find(static_cast<char>(c)) != std::string_view::npos) {
            url += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "%%%02X", c);
            url += buf;
        }
    }
    return url;
}

Verdict doi_resolves(std::string_view value, const ResolverProbe& probe) {
    if (auto bad = doi_syntax(value)) return bad;
    std::string url = doi_resolver_url(value);
    return judge(probe.probe(url), url, "DOI " + std::string(value));
}

Verdict orcid_checksum(std::string_view value) {
    auto malformed = [&] {
        return violation("\"" + std::string(value) + "\" is not an ORCID iD (expected dddd-dddd-dddd-dddX)");
    };
    if (value.size() != 19) return malformed();
    int total = 0;
    for (std::size_t i = 0; i < 18; ++i) {
        if (i % 5 == 4) {
            if (value[i] != '-') return malformed();
            continue;
        }
        if (!digit(value[i])) return malformed();
        total = (total + (value[i] - '0')) * 2;
    }
    char last = value[18];
    if (!digit(last) && last != 'X') return malformed();
    int check = (12 - total % 11) % 11;
    char expected = check == 10 ? 'X' : static_cast<char>('0' + check);
    if (last != expected) {
        return violation("ORCID iD " + std::string(value) + " has an invalid check digit (expected " + expected + ")");
    }
    return std::nullopt;
}

Verdict issn_checksum(std::string_view value) {
    if (value.size() != 9 || value[4] != '-') {
        return violation("\"" + std::string(value) + "\" is not an ISSN (expected dddd-dddX)");
    }
    int sum = 0;
    int weight = 8;
    for (std::size_t i = 0; i < 8; ++i) {
        if (i == 4) continue;
        if (!digit(value[i])) return violation("\"" + std::string(value) + "\" is not an ISSN (expected dddd-dddX)");
        sum += (value[i] - '0') * weight--;
    }
    char last = value[8];
    int check;
    if (last == 'X') {
        check = 10;
    } else if (digit(last)) {
        check = last - '0';
    } else {
        return violation("\"" + std::string(value) + "\" is not an ISSN (expected dddd-dddX)");
    }
    if ((sum + check) % 11 != 0) return violation("ISSN " + std::string(value) + " has an invalid check digit");
    return std::nullopt;
}

Verdict url_reachable(std::string_view value, const ResolverProbe& probe) {
    static const std::regex kUrl(R"(^https?://[^\s/?#]+([/?#]\S*)?$)", std::regex::ECMAScript | std::regex::icase);
    if (!std::regex_match(value.begin(), value.end(), kUrl)) {
        return violation("\"" + std::string(value) + "\" is not an absolute URL");
    }
    std::string url(value);
    return judge(probe.probe(url), url, "URL");
}

bool eval_condition(const Condition& condition, const SubmissionPayload& payload) {
    auto it = payload.values.find(condition.when_path);
    if (it == payload.values.end()) return false;
    for (const auto& v : it->second) {
        if (v.as_term() == condition.equals) return true;
    }
    return false;
}

ProbeResponse MockProbe::probe(const std::string& url) const {
    ++calls_;
    auto it = responses_.find(url);
    return it == responses_.end() ? fallback_ : it->second;
}

MockProbe MockProbe::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read probe fixtures " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("probe fixtures " + path + ": " + e.what());
    }
    auto read = [&](const nlohmann::json& v) -> ProbeResponse {
        if (v.is_number_integer()) return ProbeResponse::with_status(v.get<int>());
        if (v.is_string()) {
            auto s = v.get<std::string>();
            if (s.starts_with("error: ")) return ProbeResponse::failed(s.substr(7));
            return ProbeResponse::failed(s);
        }
        throw ConfigError("probe fixtures " + path + ": responses must be status codes or failure strings");
    };
    std::map<std::string, ProbeResponse> responses;
    if (doc.contains("responses")) {
        for (const auto& [url, v] : doc.at("responses").items()) responses.emplace(url, read(v));
    }
    ProbeResponse fallback = doc.contains("default") ? read(doc.at("default")) : ProbeResponse::with_status(404);
    return MockProbe(std::move(responses), std::move(fallback));
}

Registry Registry::builtin() {
    Registry r;
    r.add({"doi_syntax", Mode::syntactic, [](std::string_view v, const ResolverProbe&) { return doi_syntax(v); }});
    r.add({"doi_resolves", Mode::external, [](std::string_view v, const ResolverProbe& p) { return doi_resolves(v, p); }});
    r.add({"orcid_checksum", Mode::syntactic,
           [](std::string_view v, const ResolverProbe&) { return orcid_checksum(v); }});
    r.add({"issn_checksum", Mode::syntactic, [](std::string_view v, const ResolverProbe&) { return issn_checksum(v); }});
    r.add({"url_reachable", Mode::external,
           [](std::string_view v, const ResolverProbe& p) { return url_reachable(v, p); }});
    r.add({"required", Mode::syntactic, {}});
    return r;
}

void Registry::add(ValidatorInfo info) {
    std::string name = info.name;
    validators_.insert_or_assign(std::move(name), std::move(info));
}

const ValidatorInfo* Registry::find(std::string_view name) const {
    auto it = validators_.find(name);
    return it == validators_.end() ? nullptr : &it->second;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : validators_) out.push_back(name);
    return out;
}

void check_bindings(const std::vector<ValidatorBinding>& bindings, const Registry& registry) {
    for (const auto& b : bindings) {
        const auto* info = registry.find(b.validator_name);
        if (!info) throw ConfigError("unknown validator \"" + b.validator_name + "\"");
        if (info->mode == Mode::external && b.mode == Mode::syntactic) {
            throw ConfigError("validator \"" + b.validator_name + "\" contacts external services and must be bound "
                              "in external mode");
        }
        if (b.path.empty()) throw ConfigError("binding for \"" + b.validator_name + "\" has no path");
    }
}

std::vector<validation::ValidationResult> run_phase2(const SubmissionPayload& payload,
                                                     const std::vector<ValidatorBinding>& bindings,
                                                     const Registry& registry, const ResolverProbe& probe,
                                                     const rdf::Term& focus, bool include_external) {
    std::vector<validation::ValidationResult> out;
    auto emit = [&](const ValidatorBinding& b, std::optional<rdf::Term> value, Finding f) {
        out.push_back(validation::ValidationResult{focus, b.path, b.validator_name, std::move(value),
                                                   std::move(f.message), f.severity, validation::Phase::custom});
    };
    for (const auto& b : bindings) {
        if (b.shape_id != payload.shape_id) continue;
        if (b.mode == Mode::external && !include_external) continue;
        if (b.condition && !eval_condition(*b.condition, payload)) continue;
        const auto* info = registry.find(b.validator_name);
        if (!info) throw ConfigError("unknown validator \"" + b.validator_name + "\"");

        auto it = payload.values.find(b.path);
        const bool present = it != payload.values.end() && !it->second.empty();
        if (!info->fn) {
            if (!present) emit(b, std::nullopt, Finding{validation::Severity::violation, "A value for <" + b.path + "> is required"});
            continue;
        }
        if (!present) continue;
        for (const auto& v : it->second) {
            if (auto finding = info->fn(v.text, probe)) emit(b, v.as_term(), std::move(*finding));
        }
    }
    return out;
}

}  // namespace shaclform::validators
