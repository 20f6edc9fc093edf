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

// JSON wire formats shared by the HTTP API, the C API and the CLI.
//
// Terms use JSON-LD value objects: {"@id": iri}, {"@id": "_:label"},
// {"@value": lexical, "@type": datatype} or {"@value": lexical,
// "@language": tag}. Report keys mirror the SHACL report vocabulary.

#ifndef SHACLFORM_CODEC_HPP
#define SHACLFORM_CODEC_HPP

#include <json.hpp>

#include "shaclform/payload.hpp"
#include "shaclform/validation.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::codec {

inline constexpr std::string_view kReportVersion = "1";

nlohmann::json term_to_json(const rdf::Term& term);
rdf::Term term_from_json(const nlohmann::json& doc);

nlohmann::json condition_to_json(const validators::Condition& condition);
validators::Condition condition_from_json(const nlohmann::json& doc);

/// {"version", "conforms", "results": [{focusNode, resultPath,
/// sourceConstraintComponent, value, resultMessage, resultSeverity, phase}]}
nlohmann::json report_to_json(const validation::ValidationReport& report);
validation::ValidationReport report_from_json(const nlohmann::json& doc);

/// {"shape": iri, "values": {path: ["raw text" | {"@id": iri}, ...]}}.
/// Throws Error describing the first problem found.
SubmissionPayload payload_from_json(const nlohmann::json& doc);
nlohmann::json payload_to_json(const SubmissionPayload& payload);

/// {"validator", "shape", "path", "mode"?, "when"?: {"path", "equals"}}.
/// Mode defaults to the validator's registered mode.
validators::ValidatorBinding binding_from_json(const nlohmann::json& doc, const validators::Registry& registry);
nlohmann::json binding_to_json(const validators::ValidatorBinding& binding);

}  // namespace shaclform::codec

#endif  // SHACLFORM_CODEC_HPP
