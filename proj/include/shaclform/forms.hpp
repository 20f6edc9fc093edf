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

#ifndef SHACLFORM_FORMS_HPP
#define SHACLFORM_FORMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shaclform/shacl.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::forms {

inline constexpr std::string_view kSchemaVersion = "1";

enum class Widget { select, text, url };

/// Whether a field's values are IRIs or literals.
enum class ValueKind { literal, iri };

struct Option {
    std::string value;
    std::string label;
    std::string datatype;  // empty for IRI options

    bool operator==(const Option&) const = default;
};

enum class CheckKind { pattern, datatype, in_list, validator };

/// A check the UI can run while the user types.
/// pattern: argument = regex, flags; datatype: argument = IRI;
/// in_list: values; validator: argument = syntactic validator name.
struct LiveCheck {
    CheckKind kind;
    std::string argument;
    std::string flags;
    std::vector<std::string> values;

    bool operator==(const LiveCheck&) const = default;
};

struct FormField {
    std::string path;
    std::string label;
    Widget widget = Widget::text;
    ValueKind value_kind = ValueKind::literal;
    bool required = false;
    std::int64_t min_occurs = 0;
    std::optional<std::int64_t> max_occurs;  // nullopt = unbounded
    std::optional<std::vector<Option>> options;
    std::optional<std::string> datatype;
    std::vector<LiveCheck> live_checks;
    std::vector<std::string> async_validators;
    std::optional<validators::Condition> visible_when;

    bool operator==(const FormField&) const = default;
};

struct FormSchema {
    std::string schema_version{kSchemaVersion};
    std::string shape_id;
    std::string target_class;
    std::vector<FormField> fields;

    const FormField* field(std::string_view path) const;
    bool operator==(const FormSchema&) const = default;
};

using LabelOverrides = std::map<std::string, std::string>;

/// Human label for an IRI: the override if present, else the local name
/// split at camelCase boundaries ("ArchivalDocument" -> "Archival Document").
std::string derive_label(std::string_view iri, const LabelOverrides& overrides = {});

/// Builds the form for a resolved shape. One field per property path in
/// source order, then fields that exist only because a validator is bound
/// to them. Throws ShapeError when the shape has no property shapes.
FormSchema compile_form(const shacl::NodeShape& shape, const std::vector<validators::ValidatorBinding>& bindings,
                        const LabelOverrides& overrides = {});

/// Compact JSON with sorted keys; byte-identical for equal schemas.
std::string serialize_form_schema(const FormSchema& schema);

/// Inverse of serialize_form_schema. Throws Error on malformed input or an
/// unknown schemaVersion.
FormSchema deserialize_form_schema(std::string_view text);

std::string_view widget_name(Widget w);

}  // namespace shaclform::forms

#endif  // SHACLFORM_FORMS_HPP
