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

#ifndef SHACLFORM_SUBMISSION_HPP
#define SHACLFORM_SUBMISSION_HPP

#include <chrono>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "shaclform/forms.hpp"
#include "shaclform/payload.hpp"
#include "shaclform/rdf.hpp"
#include "shaclform/shacl.hpp"
#include "shaclform/validation.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::submission {

enum class MintStrategy { uuid, counter };

struct MintingConfig {
    std::string base_iri;
    MintStrategy strategy = MintStrategy::uuid;
    std::string counter_state_path;  // counter only
};

/// Appends '/' unless the base already ends in '/' or '#'.
std::string normalize_base(std::string base);

/// Issues fresh subject IRIs. The counter strategy keeps the last issued
/// number in a file (locked while updating) so numbering survives restarts.
class Minter {
public:
    /// Throws ConfigError for a relative base or an unwritable counter file.
    explicit Minter(MintingConfig config);

    std::string mint();
    const MintingConfig& config() const noexcept { return config_; }

private:
    MintingConfig config_;
    std::mutex mutex_;
    std::mt19937_64 rng_;
};

/// Subject used for a payload before it is accepted and minted.
inline const std::string kProvisionalSubject = "urn:shaclform:new";

struct FieldProblem {
    std::optional<std::string> path;  // absent for payload-wide problems
    std::string message;

    bool operator==(const FieldProblem&) const = default;
};

/// Raw values of IRI-valued fields (and rdf:type) that are absolute IRIs
/// become IRI values; everything else is kept as given.
SubmissionPayload normalize_payload(const SubmissionPayload& payload, const forms::FormSchema& schema);

/// Everything that would stop `payload` from materializing; empty when it can.
std::vector<FieldProblem> check_payload(const SubmissionPayload& payload, const forms::FormSchema& schema);

/// One triple per value. Literal fields use the field datatype (xsd:string
/// by default); IRI and select fields produce IRIs. rdf:type values are
/// always accepted. Throws MaterializeError listing every failing field.
rdf::Graph materialize(const SubmissionPayload& payload, const forms::FormSchema& schema, const std::string& subject);

struct Outcome {
    bool accepted = false;
    std::string subject;  // minted IRI when accepted with a minter
    rdf::Graph graph;
    validation::ValidationReport report;  // merged report, also kept on acceptance (warnings)
};

struct PipelineOptions {
    bool include_external = true;
};

/// Materialize, validate against the shapes (the new subject is an explicit
/// target of the payload's shape), then run phase-2 validators only when
/// phase 1 conforms. On acceptance the provisional subject is replaced by a
/// minted IRI when `minter` is given. `shapes` must be resolved.
Outcome process_submission(const SubmissionPayload& payload, const forms::FormSchema& schema,
                           const shacl::ShapesGraph& shapes, const std::vector<validators::ValidatorBinding>& bindings,
                           const validators::Registry& registry, const validators::ResolverProbe& probe,
                           Minter* minter, PipelineOptions options = {});

/// SPARQL 1.1 `INSERT DATA` with triples as N-Triples in sorted order,
/// optionally inside `GRAPH <target>`. Throws Error for an empty graph.
std::string build_update(const rdf::Graph& graph, const std::optional<std::string>& target_graph = std::nullopt);

struct SubmitResult {
    bool ok = false;
    std::optional<int> status;  // absent on transport failure
    std::string body;
    std::string cause;
};

class Transport {
public:
    virtual ~Transport() = default;
    virtual SubmitResult submit(const rdf::Graph& graph, const std::string& update) = 0;
};

/// POSTs the update as application/sparql-update. One attempt, no retries.
class HttpTransport : public Transport {
public:
    explicit HttpTransport(std::string endpoint, std::chrono::milliseconds timeout = std::chrono::seconds(30))
        : endpoint_(std::move(endpoint)), timeout_(timeout) {}

    SubmitResult submit(const rdf::Graph& graph, const std::string& update) override;

private:
    std::string endpoint_;
    std::chrono::milliseconds timeout_;
};

/// Writes the Turtle of the accepted graph instead of contacting a store.
class DryRunTransport : public Transport {
public:
    explicit DryRunTransport(std::ostream& out) : out_(&out) {}

    SubmitResult submit(const rdf::Graph& graph, const std::string& update) override;

private:
    std::ostream* out_;
};

}  // namespace shaclform::submission

#endif  // SHACLFORM_SUBMISSION_HPP
