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

#include <algorithm>
#include <sstream>

#include "shaclform/error.hpp"
#include "shaclform/submission.hpp"

namespace shaclform::submission {

using forms::FormField;
using forms::FormSchema;
using rdf::Term;

namespace {

bool iri_valued(const FormField* field, const std::string& path) {
    if (path == rdf::vocab::kRdfType) return true;
    if (!field) return false;
    if (field->value_kind == forms::ValueKind::iri) return true;
    if (field->options) {
        return std::all_of(field->options->begin(), field->options->end(),
                           [](const forms::Option& o) { return o.datatype.empty(); });
    }
    return false;
}

// Literal datatype for a raw value entered into `field`.
std::string literal_datatype(const FormField* field, const std::string& text) {
    if (field && field->options) {
        for (const auto& o : *field->options) {
            if (o.value == text && !o.datatype.empty()) return o.datatype;
        }
    }
    if (field && field->datatype) return *field->datatype;
    return std::string(rdf::vocab::kXsdString);
}

// Term for one value, or a problem description.
std::variant<Term, std::string> to_term(const FormField* field, const std::string& path, const PayloadValue& v) {
    if (iri_valued(field, path)) {
        if (!rdf::is_absolute_iri(v.text)) return "\"" + v.text + "\" is not an absolute IRI";
        return Term::iri(v.text);
    }
    if (v.is_iri) {
        if (!rdf::is_absolute_iri(v.text)) return "\"" + v.text + "\" is not an absolute IRI";
        return Term::iri(v.text);
    }
    std::string datatype = literal_datatype(field, v.text);
    if (!rdf::validate_lexical(v.text, datatype)) {
        return "\"" + v.text + "\" is not a valid <" + datatype + "> value";
    }
    return Term::literal(v.text, datatype);
}

validation::ValidationReport synthetic_report(const std::vector<FieldProblem>& problems) {
    validation::ValidationReport report;
    for (const auto& p : problems) {
        report.results.push_back(validation::ValidationResult{Term::iri(kProvisionalSubject), p.path, "materialize",
                                                              std::nullopt, p.message,
                                                              validation::Severity::violation,
                                                              validation::Phase::shacl});
    }
    report.update_conforms();
    return report;
}

}  // namespace

SubmissionPayload normalize_payload(const SubmissionPayload& payload, const FormSchema& schema) {
    SubmissionPayload out = payload;
    for (auto& [path, list] : out.values) {
        if (!iri_valued(schema.field(path), path)) continue;
        for (auto& v : list) {
            if (!v.is_iri && rdf::is_absolute_iri(v.text)) v.is_iri = true;
        }
    }
    return out;
}

std::vector<FieldProblem> check_payload(const SubmissionPayload& payload, const FormSchema& schema) {
    std::vector<FieldProblem> problems;
    if (payload.shape_id != schema.shape_id) {
        problems.push_back({std::nullopt, "payload is for <" + payload.shape_id + "> but the form is <" +
                                              schema.shape_id + ">"});
    }
    std::size_t count = 0;
    for (const auto& [path, list] : payload.values) {
        const FormField* field = schema.field(path);
        if (!field && path != rdf::vocab::kRdfType) {
            problems.push_back({path, "<" + path + "> is not a field of this form"});
            continue;
        }
        if (list.empty()) {
            problems.push_back({path, "empty value list"});
            continue;
        }
        for (const auto& v : list) {
            auto term = to_term(field, path, v);
            if (auto* message = std::get_if<std::string>(&term)) problems.push_back({path, *message});
        }
        count += list.size();
    }
    if (count == 0 && problems.empty()) problems.push_back({std::nullopt, "payload has no values: empty graph"});
    return problems;
}

rdf::Graph materialize(const SubmissionPayload& payload, const FormSchema& schema, const std::string& subject) {
    auto problems = check_payload(payload, schema);
    if (!problems.empty()) {
        std::ostringstream message;
        message << "cannot materialize payload:";
        for (const auto& p : problems) {
            message << (p.path ? " <" + *p.path + ">: " : " ") << p.message << ';';
        }
        std::string text = message.str();
        text.pop_back();
        throw MaterializeError(text);
    }
    rdf::Graph graph;
    const Term s = Term::iri(subject);
    for (const auto& [path, list] : payload.values) {
        const FormField* field = schema.field(path);
        for (const auto& v : list) graph.insert({s, Term::iri(path), std::get<Term>(to_term(field, path, v))});
    }
    return graph;
}

Outcome process_submission(const SubmissionPayload& raw, const FormSchema& schema, const shacl::ShapesGraph& shapes,
                           const std::vector<validators::ValidatorBinding>& bindings,
                           const validators::Registry& registry, const validators::ResolverProbe& probe,
                           Minter* minter, PipelineOptions options) {
    Outcome outcome;
    outcome.subject = kProvisionalSubject;
    const SubmissionPayload payload = normalize_payload(raw, schema);
    if (auto problems = check_payload(payload, schema); !problems.empty()) {
        outcome.report = synthetic_report(problems);
        return outcome;
    }
    outcome.graph = materialize(payload, schema, kProvisionalSubject);

    const Term focus = Term::iri(kProvisionalSubject);
    validation::ExplicitTargets targets{{payload.shape_id, {focus}}};
    outcome.report = validation::validate(outcome.graph, shapes, targets);
    if (!outcome.report.conforms) return outcome;

    outcome.report.append(validators::run_phase2(payload, bindings, registry, probe, focus, options.include_external));
    if (!outcome.report.conforms) return outcome;

    outcome.accepted = true;
    if (minter) {
        outcome.subject = minter->mint();
        const Term minted = Term::iri(outcome.subject);
        outcome.graph.replace_term(focus, minted);
        for (auto& r : outcome.report.results) {
            if (r.focus_node == focus) r.focus_node = minted;
        }
    }
    return outcome;
}

std::string build_update(const rdf::Graph& graph, const std::optional<std::string>& target_graph) {
    if (graph.empty()) throw Error("cannot build an update from an empty graph");
    std::string body;
    const std::string indent = target_graph ? "    " : "  ";
    for (const auto& t : graph.triples()) {
        body += indent + t.subject.to_ntriples() + ' ' + t.predicate.to_ntriples() + ' ' + t.object.to_ntriples() +
                " .\n";
    }
    if (target_graph) return "INSERT DATA {\n  GRAPH <" + *target_graph + "> {\n" + body + "  }\n}\n";
    return "INSERT DATA {\n" + body + "}\n";
}

}  // namespace shaclform::submission
