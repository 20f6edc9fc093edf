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

#ifndef SHACLFORM_VALIDATION_HPP
#define SHACLFORM_VALIDATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shaclform/rdf.hpp"
#include "shaclform/shacl.hpp"

namespace shaclform::validation {

enum class Severity { violation, warning };
enum class Phase { shacl, custom };

struct ValidationResult {
    rdf::Term focus_node;
    std::optional<std::string> result_path;
    std::string component;  // constraint component name (phase shacl) or validator name (phase custom)
    std::optional<rdf::Term> value;
    std::string message;
    Severity severity = Severity::violation;
    Phase phase = Phase::shacl;

    bool operator==(const ValidationResult&) const = default;
};

struct ValidationReport {
    bool conforms = true;
    std::vector<ValidationResult> results;

    /// Recomputes `conforms` from the results.
    void update_conforms();
    void append(std::vector<ValidationResult> more);
};

/// Subjects of (s, rdf:type, target_class), sorted. No class hierarchy over the data.
std::vector<rdf::Term> select_focus_nodes(const rdf::Graph& data, const shacl::NodeShape& shape);

/// Evaluates one constraint against the value nodes of `focus` along `path`.
std::vector<ValidationResult> eval_constraint(const shacl::Constraint& constraint, const rdf::Term& focus,
                                              const std::string& path, const std::vector<rdf::Term>& values,
                                              const rdf::Graph& data);

/// Extra focus nodes per shape id, treated like sh:targetNode declarations.
using ExplicitTargets = std::map<std::string, std::set<rdf::Term>>;

/// Validates every targeted node against every shape. Results are ordered
/// by (shape id, focus node, property source order, component name).
ValidationReport validate(const rdf::Graph& data, const shacl::ShapesGraph& shapes,
                          const ExplicitTargets& explicit_targets = {});

std::string_view severity_name(Severity s);
std::string_view phase_name(Phase p);

}  // namespace shaclform::validation

#endif  // SHACLFORM_VALIDATION_HPP
