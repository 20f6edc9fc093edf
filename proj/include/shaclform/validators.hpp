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

#ifndef SHACLFORM_VALIDATORS_HPP
#define SHACLFORM_VALIDATORS_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shaclform/payload.hpp"
#include "shaclform/validation.hpp"

namespace shaclform::validators {

/// Syntactic validators are pure and may run during live checking;
/// external ones contact other services and run only on submission.
enum class Mode { syntactic, external };

std::string_view mode_name(Mode m);

/// Path-equals-value guard on a binding.
struct Condition {
    std::string when_path;
    rdf::Term equals;

    bool operator==(const Condition&) const = default;
};

struct ValidatorBinding {
    std::string validator_name;
    std::string shape_id;
    std::string path;
    Mode mode = Mode::syntactic;
    std::optional<Condition> condition;

    bool operator==(const ValidatorBinding&) const = default;
};

/// Outcome of one HTTP probe: a status code, or a transport failure.
struct ProbeResponse {
    std::optional<int> status;
    std::string failure;  // set when status is absent (timeout, DNS, TLS, ...)

    static ProbeResponse with_status(int code) { return {code, {}}; }
    static ProbeResponse failed(std::string cause) { return {std::nullopt, std::move(cause)}; }
};

/// Client used by external validators. Implementations must be safe for
/// concurrent use.
class ResolverProbe {
public:
    virtual ~ResolverProbe() = default;
    virtual ProbeResponse probe(const std::string& url) const = 0;

    std::chrono::milliseconds timeout{10000};
    int max_redirects = 5;
};

/// Live probe: HEAD (GET when the server answers 405), following up to
/// max_redirects redirects.
class HttpProbe : public ResolverProbe {
public:
    ProbeResponse probe(const std::string& url) const override;
};

/// Fixture-backed probe. Unknown URLs get the default response.
class MockProbe : public ResolverProbe {
public:
    MockProbe() = default;
    explicit MockProbe(std::map<std::string, ProbeResponse> responses,
                       ProbeResponse fallback = ProbeResponse::with_status(404))
        : responses_(std::move(responses)), fallback_(std::move(fallback)) {}

    /// Reads `{"default": 404, "responses": {"<url>": 302 | "timeout" | "error: ..."}}`.
    static MockProbe from_json_file(const std::string& path);

    ProbeResponse probe(const std::string& url) const override;

    void set(const std::string& url, ProbeResponse response) { responses_[url] = std::move(response); }
    std::size_t calls() const noexcept { return calls_.load(); }
    void reset_calls() noexcept { calls_.store(0); }

    MockProbe(const MockProbe& other)
        : ResolverProbe(other), responses_(other.responses_), fallback_(other.fallback_), calls_(other.calls()) {}

private:
    std::map<std::string, ProbeResponse> responses_;
    ProbeResponse fallback_ = ProbeResponse::with_status(404);
    mutable std::atomic<std::size_t> calls_{0};
};

/// Problem reported by a validator for one value.
struct Finding {
    validation::Severity severity = validation::Severity::violation;
    std::string message;

    bool operator==(const Finding&) const = default;
};

using Verdict = std::optional<Finding>;

Verdict doi_syntax(std::string_view value);
Verdict doi_resolves(std::string_view value, const ResolverProbe& probe);
Verdict orcid_checksum(std::string_view value);
Verdict issn_checksum(std::string_view value);
Verdict url_reachable(std::string_view value, const ResolverProbe& probe);

/// URL queried by doi_resolves (https://doi.org/ plus the escaped DOI).
std::string doi_resolver_url(std::string_view doi);

bool eval_condition(const Condition& condition, const SubmissionPayload& payload);

using ValidatorFn = std::function<Verdict(std::string_view value, const ResolverProbe& probe)>;

struct ValidatorInfo {
    std::string name;
    Mode mode;
    ValidatorFn fn;  // empty for "required", which checks presence rather than values
};

/// Name -> validator table. Immutable once the service starts.
class Registry {
public:
    /// doi_syntax, doi_resolves, orcid_checksum, issn_checksum, url_reachable, required.
    static Registry builtin();

    void add(ValidatorInfo info);
    const ValidatorInfo* find(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, ValidatorInfo, std::less<>> validators_;
};

/// Rejects unknown validator names and external validators bound in
/// syntactic mode. Throws ConfigError.
void check_bindings(const std::vector<ValidatorBinding>& bindings, const Registry& registry);

/// Phase-2 validation of a payload whose subject is `focus`. Only bindings
/// for the payload's shape whose condition holds are applied; external
/// validators run only when `include_external` is set. Results follow
/// binding declaration order.
std::vector<validation::ValidationResult> run_phase2(const SubmissionPayload& payload,
                                                     const std::vector<ValidatorBinding>& bindings,
                                                     const Registry& registry, const ResolverProbe& probe,
                                                     const rdf::Term& focus, bool include_external = true);

}  // namespace shaclform::validators

#endif  // SHACLFORM_VALIDATORS_HPP
