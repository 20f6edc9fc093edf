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

#ifndef SHACLFORM_SHACL_HPP
#define SHACLFORM_SHACL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shaclform/rdf.hpp"

namespace shaclform::shacl {

namespace vocab {
inline const std::string kNodeShape = std::string(rdf::vocab::kSh) + "NodeShape";
inline const std::string kPropertyShape = std::string(rdf::vocab::kSh) + "PropertyShape";
inline const std::string kTargetClass = std::string(rdf::vocab::kSh) + "targetClass";
inline const std::string kProperty = std::string(rdf::vocab::kSh) + "property";
inline const std::string kPath = std::string(rdf::vocab::kSh) + "path";
inline const std::string kMinCount = std::string(rdf::vocab::kSh) + "minCount";
inline const std::string kMaxCount = std::string(rdf::vocab::kSh) + "maxCount";
inline const std::string kMinValue = std::string(rdf::vocab::kSh) + "minValue";
inline const std::string kMaxValue = std::string(rdf::vocab::kSh) + "maxValue";
inline const std::string kIn = std::string(rdf::vocab::kSh) + "in";
inline const std::string kDatatype = std::string(rdf::vocab::kSh) + "datatype";
inline const std::string kClass = std::string(rdf::vocab::kSh) + "class";
inline const std::string kNodeKind = std::string(rdf::vocab::kSh) + "nodeKind";
inline const std::string kPattern = std::string(rdf::vocab::kSh) + "pattern";
inline const std::string kFlags = std::string(rdf::vocab::kSh) + "flags";
inline const std::string kHasValue = std::string(rdf::vocab::kSh) + "hasValue";
inline const std::string kIRI = std::string(rdf::vocab::kSh) + "IRI";
inline const std::string kLiteral = std::string(rdf::vocab::kSh) + "Literal";
inline const std::string kBlankNode = std::string(rdf::vocab::kSh) + "BlankNode";
inline const std::string kBlankNodeOrIRI = std::string(rdf::vocab::kSh) + "BlankNodeOrIRI";
inline const std::string kBlankNodeOrLiteral = std::string(rdf::vocab::kSh) + "BlankNodeOrLiteral";
inline const std::string kIRIOrLiteral = std::string(rdf::vocab::kSh) + "IRIOrLiteral";
}  // namespace vocab

/// Supported constraint components. Enumerator order is alphabetical by
/// name so sorting by component and by name agree.
enum class Component : std::uint8_t { class_of, datatype, has_value, in_list, max_count, min_count, node_kind, pattern };

std::string_view component_name(Component c);
std::optional<Component> component_from_name(std::string_view name);

/// sh:pattern argument; the regex is compiled once at load time
/// (ECMAScript dialect, sh:flags "i" maps to icase).
struct Pattern {
    std::string source;
    std::string flags;
    std::shared_ptr<const std::regex> regex;

    bool operator==(const Pattern& other) const { return source == other.source && flags == other.flags; }
};

Pattern make_pattern(std::string source, std::string flags = {});

/// min_count/max_count: count; in_list: terms; datatype/class_of/node_kind:
/// IRI string; has_value: term; pattern: Pattern.
using ConstraintArgument = std::variant<std::int64_t, std::string, std::vector<rdf::Term>, rdf::Term, Pattern>;

struct Constraint {
    Component component;
    ConstraintArgument argument;

    std::int64_t count() const { return std::get<std::int64_t>(argument); }
    const std::string& iri() const { return std::get<std::string>(argument); }
    const std::vector<rdf::Term>& terms() const { return std::get<std::vector<rdf::Term>>(argument); }
    const rdf::Term& term() const { return std::get<rdf::Term>(argument); }
    const Pattern& pattern() const { return std::get<Pattern>(argument); }

    bool operator==(const Constraint&) const = default;
};

struct PropertyShape {
    rdf::Term node;  // the sh:property object, used for identity during inheritance
    std::string path;
    std::vector<Constraint> constraints;
    std::int64_t source_order = 0;
};

struct NodeShape {
    std::string id;
    std::optional<std::string> target_class;
    std::vector<std::string> super_shapes;
    std::vector<PropertyShape> properties;
};

/// Shapes keyed by id (sorted), plus non-fatal diagnostics from loading.
struct ShapesGraph {
    std::vector<NodeShape> shapes;
    std::vector<std::string> warnings;

    const NodeShape* find(std::string_view id) const;
};

/// Reads every sh:NodeShape subject. Unknown or unsupported SHACL terms
/// become warnings; structural problems (blank-node shapes, missing sh:path,
/// non-integer counts, bad sh:in lists, invalid regexes) throw ShapeError.
ShapesGraph load_shapes(const rdf::Graph& graph);

/// Copies inherited property shapes (rdfs:subClassOf between shapes) into
/// each shape: own first, then each super-shape's resolved list in
/// declaration order. Throws ShapeError on cycles.
ShapesGraph resolve_inheritance(const ShapesGraph& shapes);

/// Shape targeting `class_iri`; ties go to the smallest id.
const NodeShape* shape_for_class(const ShapesGraph& shapes, std::string_view class_iri);

}  // namespace shaclform::shacl

#endif  // SHACLFORM_SHACL_HPP
