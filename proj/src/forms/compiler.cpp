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
#include <cctype>

#include "shaclform/codec.hpp"
#include "shaclform/error.hpp"
#include "shaclform/forms.hpp"

namespace shaclform::forms {

using shacl::Component;
using validators::Mode;
using validators::ValidatorBinding;

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool locates_resources(const std::string& validator) {
    return validator == "url_reachable" || validator == "doi_resolves";
}

// Accumulates every property shape that shares a path.
struct PathConstraints {
    std::string path;
    std::optional<std::int64_t> min_count;
    std::optional<std::int64_t> max_count;
    std::optional<std::vector<rdf::Term>> in_list;
    std::optional<std::string> datatype;
    std::vector<shacl::Pattern> patterns;
    bool iri_values = false;

    void add(const shacl::Constraint& c) {
        switch (c.component) {
            case Component::min_count:
                min_count = std::max(min_count.value_or(0), c.count());
                break;
            case Component::max_count:
                max_count = max_count ? std::min(*max_count, c.count()) : c.count();
                break;
            case Component::in_list:
                if (!in_list) {
                    in_list = c.terms();
                } else {
                    std::erase_if(*in_list, [&](const rdf::Term& t) {
                        return std::find(c.terms().begin(), c.terms().end(), t) == c.terms().end();
                    });
                }
                break;
            case Component::datatype:
                if (!datatype) datatype = c.iri();
                break;
            case Component::pattern:
                patterns.push_back(c.pattern());
                break;
            case Component::class_of:
                iri_values = true;
                break;
            case Component::node_kind:
                if (c.iri() == shacl::vocab::kIRI || c.iri() == shacl::vocab::kBlankNodeOrIRI) iri_values = true;
                break;
            case Component::has_value:
                if (c.term().is_iri()) iri_values = true;
                break;
        }
    }
};

}  // namespace

std::string_view widget_name(Widget w) {
    switch (w) {
        case Widget::select: return "select";
        case Widget::text: return "text";
        case Widget::url: return "url";
    }
    return "text";
}

const FormField* FormSchema::field(std::string_view path) const {
    for (const auto& f : fields) {
        if (f.path == path) return &f;
    }
    return nullptr;
}

std::string derive_label(std::string_view iri, const LabelOverrides& overrides) {
    if (auto it = overrides.find(std::string(iri)); it != overrides.end()) return it->second;
    auto cut = iri.find_last_of("#/");
    std::string_view name = cut == std::string_view::npos ? iri : iri.substr(cut + 1);
    if (name.empty()) return std::string(iri);

    std::vector<std::string> words(1);
    for (std::size_t i = 0; i < name.size(); ++i) {
        char c = name[i];
        if (c == '_' || c == '-' || c == ' ') {
            if (!words.back().empty()) words.emplace_back();
            continue;
        }
        if (!words.back().empty() && is_upper(c)) {
            char prev = name[i - 1];
            bool next_lower = i + 1 < name.size() && is_lower(name[i + 1]);
            // fooBar, foo2Bar, and the end of an acronym as in XMLParser.
            if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower)) words.emplace_back();
        }
        words.back() += c;
    }
    std::string label;
    for (auto& w : words) {
        if (w.empty()) continue;
        w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
        if (!label.empty()) label += ' ';
        label += w;
    }
    return label.empty() ? std::string(iri) : label;
}

FormSchema compile_form(const shacl::NodeShape& shape, const std::vector<ValidatorBinding>& bindings,
                        const LabelOverrides& overrides) {
    if (shape.properties.empty()) throw ShapeError("shape <" + shape.id + "> has no property shapes: nothing to compile");

    FormSchema schema;
    schema.shape_id = shape.id;
    schema.target_class = shape.target_class.value_or("");

    std::vector<const shacl::PropertyShape*> ordered;
    for (const auto& p : shape.properties) ordered.push_back(&p);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return a->source_order < b->source_order; });

    std::vector<PathConstraints> paths;
    for (const auto* p : ordered) {
        auto it = std::find_if(paths.begin(), paths.end(), [&](const auto& pc) { return pc.path == p->path; });
        if (it == paths.end()) {
            paths.emplace_back();
            paths.back().path = p->path;
            it = std::prev(paths.end());
        }
        for (const auto& c : p->constraints) it->add(c);
    }

    std::vector<const ValidatorBinding*> own;
    for (const auto& b : bindings) {
        if (b.shape_id == shape.id) own.push_back(&b);
    }

    auto attach = [&](FormField& field) {
        for (const auto* b : own) {
            if (b->path != field.path) continue;
            if (b->validator_name == "required") {
                if (!b->condition) {
                    field.required = true;
                    field.min_occurs = std::max<std::int64_t>(field.min_occurs, 1);
                }
                continue;
            }
            if (b->mode == Mode::external) {
                if (std::find(field.async_validators.begin(), field.async_validators.end(), b->validator_name) ==
                    field.async_validators.end()) {
                    field.async_validators.push_back(b->validator_name);
                }
                if (locates_resources(b->validator_name) && field.widget == Widget::text) field.widget = Widget::url;
            } else {
                LiveCheck check{CheckKind::validator, b->validator_name, {}, {}};
                if (std::find(field.live_checks.begin(), field.live_checks.end(), check) == field.live_checks.end()) {
                    field.live_checks.push_back(std::move(check));
                }
            }
        }
    };

    for (const auto& pc : paths) {
        FormField field;
        field.path = pc.path;
        field.label = derive_label(pc.path, overrides);
        field.min_occurs = pc.min_count.value_or(0);
        field.required = field.min_occurs >= 1;
        field.max_occurs = pc.max_count;
        field.datatype = pc.datatype;
        field.value_kind = pc.iri_values ? ValueKind::iri : ValueKind::literal;
        if (pc.in_list) {
            field.widget = Widget::select;
            std::vector<Option> options;
            bool all_iris = true;
            for (const auto& t : *pc.in_list) {
                if (t.is_literal()) {
                    all_iris = false;
                    options.push_back({t.value(), t.value(), t.datatype()});
                } else {
                    options.push_back({t.value(), derive_label(t.value(), overrides), {}});
                }
            }
            field.value_kind = all_iris ? ValueKind::iri : ValueKind::literal;
            field.options = std::move(options);
        } else if (pc.datatype && *pc.datatype == rdf::vocab::kXsdAnyUri) {
            field.widget = Widget::url;
        }
        if (pc.datatype) field.live_checks.push_back({CheckKind::datatype, *pc.datatype, {}, {}});
        for (const auto& p : pc.patterns) field.live_checks.push_back({CheckKind::pattern, p.source, p.flags, {}});
        if (pc.in_list) {
            LiveCheck check{CheckKind::in_list, {}, {}, {}};
            for (const auto& t : *pc.in_list) check.values.push_back(t.value());
            field.live_checks.push_back(std::move(check));
        }
        attach(field);
        schema.fields.push_back(std::move(field));
    }

    // Paths that only exist because a validator is bound to them.
    for (const auto* b : own) {
        if (schema.field(b->path)) continue;
        FormField field;
        field.path = b->path;
        field.label = derive_label(b->path, overrides);
        std::optional<validators::Condition> shared_condition = b->condition;
        for (const auto* other : own) {
            if (other->path == b->path && other->condition != shared_condition) shared_condition.reset();
        }
        field.visible_when = shared_condition;
        attach(field);
        schema.fields.push_back(std::move(field));
    }
    return schema;
}

namespace {

using nlohmann::json;

std::string_view check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::pattern: return "pattern";
        case CheckKind::datatype: return "datatype";
        case CheckKind::in_list: return "in_list";
        case CheckKind::validator: return "validator";
    }
    return "pattern";
}

CheckKind check_kind_from(const std::string& name) {
    if (name == "pattern") return CheckKind::pattern;
    if (name == "datatype") return CheckKind::datatype;
    if (name == "in_list") return CheckKind::in_list;
    if (name == "validator") return CheckKind::validator;
    throw Error("form schema: unknown live check kind \"" + name + "\"");
}

Widget widget_from(const std::string& name) {
    if (name == "select") return Widget::select;
    if (name == "text") return Widget::text;
    if (name == "url") return Widget::url;
    throw Error("form schema: unknown widget \"" + name + "\"");
}

json field_to_json(const FormField& f) {
    json checks = json::array();
    for (const auto& c : f.live_checks) {
        json item{{"kind", std::string(check_kind_name(c.kind))}};
        if (c.kind == CheckKind::in_list) {
            item["argument"] = c.values;
        } else {
            item["argument"] = c.argument;
        }
        if (!c.flags.empty()) item["flags"] = c.flags;
        checks.push_back(std::move(item));
    }
    json doc{
        {"path", f.path},
        {"label", f.label},
        {"widget", std::string(widget_name(f.widget))},
        {"valueKind", f.value_kind == ValueKind::iri ? "iri" : "literal"},
        {"required", f.required},
        {"minOccurs", f.min_occurs},
        {"maxOccurs", f.max_occurs ? json(*f.max_occurs) : json(nullptr)},
        {"liveChecks", std::move(checks)},
        {"asyncValidators", f.async_validators},
    };
    if (f.options) {
        json options = json::array();
        for (const auto& o : *f.options) {
            json item{{"value", o.value}, {"label", o.label}};
            if (!o.datatype.empty()) item["datatype"] = o.datatype;
            options.push_back(std::move(item));
        }
        doc["options"] = std::move(options);
    }
    if (f.datatype) doc["datatype"] = *f.datatype;
    if (f.visible_when) doc["visibleWhen"] = codec::condition_to_json(*f.visible_when);
    return doc;
}

FormField field_from_json(const json& doc) {
    FormField f;
    f.path = doc.at("path").get<std::string>();
    f.label = doc.at("label").get<std::string>();
    f.widget = widget_from(doc.at("widget").get<std::string>());
    f.value_kind = doc.at("valueKind").get<std::string>() == "iri" ? ValueKind::iri : ValueKind::literal;
    f.required = doc.at("required").get<bool>();
    f.min_occurs = doc.at("minOccurs").get<std::int64_t>();
    if (!doc.at("maxOccurs").is_null()) f.max_occurs = doc.at("maxOccurs").get<std::int64_t>();
    for (const auto& item : doc.at("liveChecks")) {
        LiveCheck c{check_kind_from(item.at("kind").get<std::string>()), {}, {}, {}};
        if (c.kind == CheckKind::in_list) {
            c.values = item.at("argument").get<std::vector<std::string>>();
        } else {
            c.argument = item.at("argument").get<std::string>();
        }
        if (item.contains("flags")) c.flags = item.at("flags").get<std::string>();
        f.live_checks.push_back(std::move(c));
    }
    f.async_validators = doc.at("asyncValidators").get<std::vector<std::string>>();
    if (doc.contains("options")) {
        std::vector<Option> options;
        for (const auto& item : doc.at("options")) {
            options.push_back({item.at("value").get<std::string>(), item.at("label").get<std::string>(),
                               item.contains("datatype") ? item.at("datatype").get<std::string>() : std::string{}});
        }
        f.options = std::move(options);
    }
    if (doc.contains("datatype")) f.datatype = doc.at("datatype").get<std::string>();
    if (doc.contains("visibleWhen")) f.visible_when = codec::condition_from_json(doc.at("visibleWhen"));
    return f;
}

}  // namespace

std::string serialize_form_schema(const FormSchema& schema) {
    json fields = json::array();
    for (const auto& f : schema.fields) fields.push_back(field_to_json(f));
    json doc{
        {"schemaVersion", schema.schema_version},
        {"shapeId", schema.shape_id},
        {"targetClass", schema.target_class.empty() ? json(nullptr) : json(schema.target_class)},
        {"fields", std::move(fields)},
    };
    return doc.dump();
}

FormSchema deserialize_form_schema(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("form schema: ") + e.what());
    }
    FormSchema schema;
    try {
        schema.schema_version = doc.at("schemaVersion").get<std::string>();
        if (schema.schema_version != kSchemaVersion) {
            throw Error("form schema: unsupported schemaVersion \"" + schema.schema_version + "\"");
        }
        schema.shape_id = doc.at("shapeId").get<std::string>();
        if (!doc.at("targetClass").is_null()) schema.target_class = doc.at("targetClass").get<std::string>();
        for (const auto& f : doc.at("fields")) schema.fields.push_back(field_from_json(f));
    } catch (const json::exception& e) {
        throw Error(std::string("form schema: ") + e.what());
    }
    return schema;
}

}  // namespace shaclform::forms
