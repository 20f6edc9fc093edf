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

#include "shaclform/validation.hpp"

namespace shaclform::validation {

using rdf::Term;
using shacl::Component;
using shacl::Constraint;

namespace {

std::string plural(std::int64_t n) { return n == 1 ? "value" : "values"; }

ValidationResult violation(const Constraint& c, const Term& focus, const std::string& path,
                           std::optional<Term> value, std::string message) {
    return ValidationResult{focus,   path, std::string(shacl::component_name(c.component)), std::move(value),
                            std::move(message), Severity::violation, Phase::shacl};
}

bool kind_allowed(const std::string& kind, const Term& v) {
    namespace sv = shacl::vocab;
    if (kind == sv::kIRI) return v.is_iri();
    if (kind == sv::kLiteral) return v.is_literal();
    if (kind == sv::kBlankNode) return v.is_blank();
    if (kind == sv::kBlankNodeOrIRI) return !v.is_literal();
    if (kind == sv::kBlankNodeOrLiteral) return !v.is_iri();
    if (kind == sv::kIRIOrLiteral) return !v.is_blank();
    return false;
}

}  // namespace

void ValidationReport::update_conforms() {
    conforms = std::none_of(results.begin(), results.end(),
                            [](const ValidationResult& r) { return r.severity == Severity::violation; });
}

void ValidationReport::append(std::vector<ValidationResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
    update_conforms();
}

std::string_view severity_name(Severity s) { return s == Severity::violation ? "Violation" : "Warning"; }
std::string_view phase_name(Phase p) { return p == Phase::shacl ? "shacl" : "custom"; }

std::vector<Term> select_focus_nodes(const rdf::Graph& data, const shacl::NodeShape& shape) {
    std::vector<Term> out;
    if (!shape.target_class) return out;
    for (auto& t : rdf::match(data, std::nullopt, Term::iri(rdf::vocab::kRdfType), Term::iri(*shape.target_class))) {
        out.push_back(std::move(t.subject));
    }
    return out;
}

std::vector<ValidationResult> eval_constraint(const Constraint& c, const Term& focus, const std::string& path,
                                              const std::vector<Term>& values, const rdf::Graph& data) {
    std::vector<ValidationResult> out;
    const auto found = static_cast<std::int64_t>(values.size());
    switch (c.component) {
        case Component::min_count:
            if (found < c.count()) {
                out.push_back(violation(c, focus, path, std::nullopt,
                                        "Expected at least " + std::to_string(c.count()) + " " + plural(c.count()) +
                                            " for <" + path + ">, found " + std::to_string(found)));
            }
            break;
        case Component::max_count:
            if (found > c.count()) {
                out.push_back(violation(c, focus, path, std::nullopt,
                                        "Expected at most " + std::to_string(c.count()) + " " + plural(c.count()) +
                                            " for <" + path + ">, found " + std::to_string(found)));
            }
            break;
        case Component::in_list:
            for (const auto& v : values) {
                if (std::find(c.terms().begin(), c.terms().end(), v) == c.terms().end()) {
                    out.push_back(violation(c, focus, path, v, "Value " + v.to_ntriples() + " is not in the allowed list"));
                }
            }
            break;
        case Component::datatype:
            for (const auto& v : values) {
                if (!v.is_literal()) {
                    out.push_back(violation(c, focus, path, v, "Value " + v.to_ntriples() + " is not a literal"));
                    continue;
                }
                if (v.datatype() != c.iri()) {
                    out.push_back(violation(c, focus, path, v,
                                            "Value " + v.to_ntriples() + " does not have datatype <" + c.iri() + ">"));
                    continue;
                }
                switch (rdf::check_lexical(v.value(), c.iri())) {
                    case rdf::LexicalStatus::valid:
                        break;
                    case rdf::LexicalStatus::invalid:
                        out.push_back(violation(c, focus, path, v,
                                                "\"" + v.value() + "\" is not a valid lexical form of <" + c.iri() + ">"));
                        break;
                    case rdf::LexicalStatus::unknown_datatype: {
                        auto r = violation(c, focus, path, v,
                                           "Datatype <" + c.iri() + "> is not checked; lexical form accepted as is");
                        r.severity = Severity::warning;
                        out.push_back(std::move(r));
                        break;
                    }
                }
            }
            break;
        case Component::class_of:
            for (const auto& v : values) {
                if (v.is_literal() || !data.contains({v, Term::iri(rdf::vocab::kRdfType), Term::iri(c.iri())})) {
                    out.push_back(violation(c, focus, path, v,
                                            "Value " + v.to_ntriples() + " is not an instance of <" + c.iri() + ">"));
                }
            }
            break;
        case Component::node_kind:
            for (const auto& v : values) {
                if (!kind_allowed(c.iri(), v)) {
                    out.push_back(violation(c, focus, path, v,
                                            "Value " + v.to_ntriples() + " does not have node kind <" + c.iri() + ">"));
                }
            }
            break;
        case Component::pattern:
            for (const auto& v : values) {
                if (v.is_blank() || !std::regex_search(v.value(), *c.pattern().regex)) {
                    out.push_back(violation(c, focus, path, v,
                                            "Value " + v.to_ntriples() + " does not match pattern \"" +
                                                c.pattern().source + "\""));
                }
            }
            break;
        case Component::has_value:
            if (std::find(values.begin(), values.end(), c.term()) == values.end()) {
                out.push_back(violation(c, focus, path, std::nullopt,
                                        "Missing required value " + c.term().to_ntriples() + " for <" + path + ">"));
            }
            break;
    }
    return out;
}

ValidationReport validate(const rdf::Graph& data, const shacl::ShapesGraph& shapes,
                          const ExplicitTargets& explicit_targets) {
    ValidationReport report;
    std::vector<const shacl::NodeShape*> ordered;
    for (const auto& s : shapes.shapes) ordered.push_back(&s);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    for (const auto* shape_ptr : ordered) {
        const auto& shape = *shape_ptr;
        std::set<Term> focus_nodes;
        for (auto& f : select_focus_nodes(data, shape)) focus_nodes.insert(std::move(f));
        if (auto it = explicit_targets.find(shape.id); it != explicit_targets.end()) {
            focus_nodes.insert(it->second.begin(), it->second.end());
        }
        if (focus_nodes.empty()) continue;

        std::vector<const shacl::PropertyShape*> properties;
        for (const auto& p : shape.properties) properties.push_back(&p);
        std::stable_sort(properties.begin(), properties.end(),
                         [](const auto* a, const auto* b) { return a->source_order < b->source_order; });

        for (const auto& focus : focus_nodes) {
            for (const auto* property : properties) {
                auto values = rdf::objects(data, focus, Term::iri(property->path));
                std::vector<const Constraint*> constraints;
                for (const auto& c : property->constraints) constraints.push_back(&c);
                std::stable_sort(constraints.begin(), constraints.end(),
                                 [](const auto* a, const auto* b) { return a->component < b->component; });
                for (const auto* c : constraints) {
                    report.append(eval_constraint(*c, focus, property->path, values, data));
                }
            }
        }
    }
    report.update_conforms();
    return report;
}

}  // namespace shaclform::validation
