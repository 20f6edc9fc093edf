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

#ifndef SHACLFORM_SRC_RDF_ESCAPE_HPP
#define SHACLFORM_SRC_RDF_ESCAPE_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace shaclform::rdf::detail {

/// Escapes a lexical form for use between double quotes.
std::string escape_string(std::string_view in);

/// Escapes characters that may not appear inside <...>.
std::string escape_iri(std::string_view in);

void append_utf8(std::string& out, std::uint32_t codepoint);

}  // namespace shaclform::rdf::detail

#endif  // SHACLFORM_SRC_RDF_ESCAPE_HPP
