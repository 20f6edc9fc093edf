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
#include <charconv>
#include <map>
#include <set>

#include "shaclform/error.hpp"
#include "shaclform/shacl.hpp"

namespace shaclform::shacl {

using rdf::Term;
using rdf::Triple;

namespace {

constexpr std::string_view kComponentNames[] = {"class_of",  "datatype",  "has_value", "in_list",
                                                "max_count", "min_count", "node_kind", "pattern"};

// SHACL terms that carry no validation semantics for this engine.
const std::set<std::string> kNonValidating = {
    std::string(rdf::vocab::kSh) + "name",    std::string(rdf::vocab::kSh) + "description",
    std::string(rdf::vocab::kSh) + "order",   std::string(rdf::vocab::kSh) + "group",
    std::string(rdf::vocab::kSh) + "message", std::string(rdf::vocab::kSh) + "defaultValue",
};

std::string local(std::string_view iri) {
    auto cut = iri.find_last_of("#/");
    return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

bool is_shacl_term(const std::string& iri) { return iri.starts_with(rdf::vocab::kSh); }

std::int64_t parse_count(const Term& value, const std::string& predicate, const std::string& where) {
    if (!value.is_literal()) {
        throw ShapeError(where + ": sh:" + local(predicate) + " expects an integer literal, got " +
                         value.to_ntriples());
    }
    const std::string& text = value.value();
    std::int64_t n = 0;
    std::size_t start = !text.empty() && text[0] == '+' ? 1 : 0;
    auto [end, ec] = std::from_chars(text.data() + start, text.data() + text.size(), n);
    if (ec != std::errc{} || end != text.data() + text.size() || start == text.size()) {
        throw ShapeError(where + ": sh:" + local(predicate) + " value \"" + text + "\" is not an integer");
    }
    if (n < 0) throw ShapeError(where + ": sh:" + local(predicate) + " must be non-negative");
    return n;
}

std::string require_iri(const Term& value, const std::string& predicate, const std::string& where) {
    if (!value.is_iri()) {
        throw ShapeError(where + ": sh:" + local(predicate) + " expects an IRI, got " + value.to_ntriples());
    }
    return value.value();
}

class ShapeReader {
public:
    explicit ShapeReader(const rdf::Graph& graph) : graph_(graph) {}

    ShapesGraph run() {
        const Term type = Term::iri(rdf::vocab::kRdfType);
        for (const auto& t : rdf::match(graph_, std::nullopt, type, Term::iri(vocab::kNodeShape))) {
            if (!t.subject.is_iri()) {
                throw ShapeError("NodeShape without id: blank node " + t.subject.to_ntriples());
            }
            result_.shapes.push_back(node_shape(t.subject));
        }
        // match() is sorted by subject, so shapes are already ordered by id.
        return std::move(result_);
    }

private:
    void warn(std::string message) { result_.warnings.push_back(std::move(message)); }

    // Triples of `subject` in document order.
    std::vector<Triple> in_document_order(const Term& subject) const {
        auto triples = rdf::match(graph_, subject, std::nullopt, std::nullopt);
        std::stable_sort(triples.begin(), triples.end(), [&](const Triple& a, const Triple& b) {
            return graph_.ordinal(a).value_or(0) < graph_.ordinal(b).value_or(0);
        });
        return triples;
    }

    NodeShape node_shape(const Term& subject) {
        NodeShape shape;
        shape.id = subject.value();
        const std::string where = "shape <" + shape.id + ">";
        for (const auto& t : in_document_order(subject)) {
            const std::string& p = t.predicate.value();
            if (p == vocab::kTargetClass) {
                if (!t.object.is_iri()) {
                    warn(where + ": ignoring non-IRI sh:targetClass " + t.object.to_ntriples());
                } else if (shape.target_class) {
                    warn(where + ": multiple sh:targetClass values; using <" + *shape.target_class + ">");
                } else {
                    shape.target_class = t.object.value();
                }
            } else if (p == rdf::vocab::kRdfsSubClassOf) {
                if (t.object.is_iri()) {
                    shape.super_shapes.push_back(t.object.value());
                } else {
                    warn(where + ": ignoring non-IRI rdfs:subClassOf " + t.object.to_ntriples());
                }
            } else if (p == vocab::kProperty) {
                if (t.object.is_literal()) {
                    throw ShapeError(where + ": sh:property value is a literal");
                }
                auto property = property_shape(t.object, where);
                if (property) {
                    property->source_order = static_cast<std::int64_t>(graph_.ordinal(t).value_or(0));
                    shape.properties.push_back(std::move(*property));
                }
            } else if (p == rdf::vocab::kRdfType || kNonValidating.contains(p)) {
                continue;
            } else if (is_shacl_term(p)) {
                warn(where + ": unsupported sh:" + local(p) + " ignored");
            }
        }
        return shape;
    }

    std::optional<PropertyShape> property_shape(const Term& node, const std::string& owner) {
        const std::string where = owner + ", property " + node.to_ntriples();
        auto paths = rdf::objects(graph_, node, Term::iri(vocab::kPath));
        if (paths.empty()) throw ShapeError(where + ": PropertyShape without sh:path");
        if (paths.size() > 1) throw ShapeError(where + ": more than one sh:path");
        if (paths.front().is_literal()) throw ShapeError(where + ": sh:path is a literal");
        if (paths.front().is_blank()) {
            warn(where + ": property paths are not supported; property shape skipped");
            return std::nullopt;
        }

        PropertyShape property;
        property.node = node;
        property.path = paths.front().value();
        const std::string at = owner + ", path <" + property.path + ">";

        std::string flags;
        for (const auto& f : rdf::objects(graph_, node, Term::iri(vocab::kFlags))) flags += f.value();

        for (const auto& t : in_document_order(node)) {
            const std::string& p = t.predicate.value();
            const Term& v = t.object;
            if (p == vocab::kMinCount || p == vocab::kMinValue) {
                if (p == vocab::kMinValue) warn(at + ": sh:minValue read as sh:minCount");
                // A lower bound of zero constrains nothing and is not kept.
                if (auto n = parse_count(v, p, at); n > 0) property.constraints.push_back({Component::min_count, n});
            } else if (p == vocab::kMaxCount || p == vocab::kMaxValue) {
                if (p == vocab::kMaxValue) warn(at + ": sh:maxValue read as sh:maxCount");
                property.constraints.push_back({Component::max_count, parse_count(v, p, at)});
            } else if (p == vocab::kIn) {
                std::vector<Term> members;
                try {
                    members = rdf::read_list(graph_, v);
                } catch (const StructureError& e) {
                    throw ShapeError(at + ": malformed sh:in list: " + e.what());
                }
                if (members.empty()) throw ShapeError(at + ": sh:in list is empty");
                property.constraints.push_back({Component::in_list, std::move(members)});
            } else if (p == vocab::kDatatype) {
                property.constraints.push_back({Component::datatype, require_iri(v, p, at)});
            } else if (p == vocab::kClass) {
                property.constraints.push_back({Component::class_of, require_iri(v, p, at)});
            } else if (p == vocab::kNodeKind) {
                std::string kind = require_iri(v, p, at);
                static const std::set<std::string> kKinds = {vocab::kIRI,           vocab::kLiteral,
                                                             vocab::kBlankNode,     vocab::kBlankNodeOrIRI,
                                                             vocab::kBlankNodeOrLiteral, vocab::kIRIOrLiteral};
                if (!kKinds.contains(kind)) throw ShapeError(at + ": unknown sh:nodeKind <" + kind + ">");
                property.constraints.push_back({Component::node_kind, std::move(kind)});
            } else if (p == vocab::kPattern) {
                if (!v.is_literal()) throw ShapeError(at + ": sh:pattern expects a literal");
                try {
                    property.constraints.push_back({Component::pattern, make_pattern(v.value(), flags)});
                } catch (const std::regex_error& e) {
                    throw ShapeError(at + ": invalid sh:pattern \"" + v.value() + "\": " + e.what());
                }
            } else if (p == vocab::kHasValue) {
                property.constraints.push_back({Component::has_value, v});
            } else if (p == vocab::kPath || p == vocab::kFlags || p == rdf::vocab::kRdfType ||
                       kNonValidating.contains(p)) {
                continue;
            } else if (is_shacl_term(p)) {
                warn(at + ": unsupported sh:" + local(p) + " ignored");
            }
        }
        return property;
    }

    const rdf::Graph& graph_;
    ShapesGraph result_;
};

class InheritanceResolver {
public:
    explicit InheritanceResolver(const ShapesGraph& shapes) : input_(shapes) {
        for (const auto& s : shapes.shapes) by_id_.emplace(s.id, &s);
    }

    ShapesGraph run() {
        ShapesGraph out;
        out.warnings = input_.warnings;
        for (const auto& shape : input_.shapes) {
            NodeShape resolved = shape;
            resolved.properties = properties_of(shape.id);
            resolved.super_shapes.clear();
            for (std::size_t i = 0; i < resolved.properties.size(); ++i) {
                resolved.properties[i].source_order = static_cast<std::int64_t>(i);
            }
            out.shapes.push_back(std::move(resolved));
        }
        for (auto& w : warnings_) out.warnings.push_back(std::move(w));
        return out;
    }

private:
    const std::vector<PropertyShape>& properties_of(const std::string& id) {
        if (auto done = memo_.find(id); done != memo_.end()) return done->second;
        if (auto at = std::find(stack_.begin(), stack_.end(), id); at != stack_.end()) {
            std::string cycle;
            for (auto it = at; it != stack_.end(); ++it) cycle += "<" + *it + "> -> ";
            throw ShapeError("shape inheritance cycle: " + cycle + "<" + id + ">");
        }
        stack_.push_back(id);
        const NodeShape& shape = *by_id_.at(id);
        std::vector<PropertyShape> all = shape.properties;
        std::set<Term> seen;
        for (const auto& p : all) seen.insert(p.node);
        for (const auto& super : shape.super_shapes) {
            if (!by_id_.contains(super)) {
                if (reported_.insert(super).second) {
                    warnings_.push_back("super-shape <" + super + "> of <" + id + "> not found; skipped");
                }
                continue;
            }
            for (const auto& p : properties_of(super)) {
                if (seen.insert(p.node).second) all.push_back(p);
            }
        }
        stack_.pop_back();
        return memo_.emplace(id, std::move(all)).first->second;
    }

    const ShapesGraph& input_;
    std::map<std::string, const NodeShape*> by_id_;
    std::map<std::string, std::vector<PropertyShape>> memo_;
    std::vector<std::string> stack_;
    std::set<std::string> reported_;
    std::vector<std::string> warnings_;
};

}  // namespace

std::string_view component_name(Component c) { return kComponentNames[static_cast<std::size_t>(c)]; }

std::optional<Component> component_from_name(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kComponentNames); ++i) {
        if (kComponentNames[i] == name) return static_cast<Component>(i);
    }
    return std::nullopt;
}

Pattern make_pattern(std::string source, std::string flags) {
    auto options = std::regex::ECMAScript;
    if (flags.find('i') != std::string::npos) options |= std::regex::icase;
    auto regex = std::make_shared<const std::regex>(source, options);
    return Pattern{std::move(source), std::move(flags), std::move(regex)};
}

const NodeShape* ShapesGraph::find(std::string_view id) const {
    auto it = std::lower_bound(shapes.begin(), shapes.end(), id,
                               [](const NodeShape& s, std::string_view key) { return s.id < key; });
    return it != shapes.end() && it->id == id ? &*it : nullptr;
}

ShapesGraph load_shapes(const rdf::Graph& graph) { return ShapeReader(graph).run(); }

ShapesGraph resolve_inheritance(const ShapesGraph& shapes) { return InheritanceResolver(shapes).run(); }

const NodeShape* shape_for_class(const ShapesGraph& shapes, std::string_view class_iri) {
    for (const auto& s : shapes.shapes) {
        if (s.target_class && *s.target_class == class_iri) return &s;
    }
    return nullptr;
}

}  // namespace shaclform::shacl
