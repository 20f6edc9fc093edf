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

#ifndef SHACLFORM_PAYLOAD_HPP
#define SHACLFORM_PAYLOAD_HPP

#include <map>
#include <string>
#include <vector>

#include "shaclform/rdf.hpp"

namespace shaclform {

/// A value typed into a form field: raw text, or an IRI reference
/// (`{"@id": ...}` on the wire; select widgets always produce these).
struct PayloadValue {
    std::string text;
    bool is_iri = false;

    static PayloadValue raw(std::string text) { return {std::move(text), false}; }
    static PayloadValue iri(std::string text) { return {std::move(text), true}; }

    /// IRI term, or an xsd:string literal for raw text.
    rdf::Term as_term() const { return is_iri ? rdf::Term::iri(text) : rdf::Term::literal(text); }

    bool operator==(const PayloadValue&) const = default;
};

/// Field values submitted for one form, keyed by property path.
struct SubmissionPayload {
    std::string shape_id;
    std::map<std::string, std::vector<PayloadValue>> values;

    bool operator==(const SubmissionPayload&) const = default;
};

}  // namespace shaclform

#endif  // SHACLFORM_PAYLOAD_HPP
