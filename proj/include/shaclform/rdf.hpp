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

#ifndef SHACLFORM_RDF_HPP
#define SHACLFORM_RDF_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace shaclform::rdf {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSh = "http://www.w3.org/ns/shacl#";

inline const std::string kRdfType = std::string(kRdf) + "type";
inline const std::string kRdfFirst = std::string(kRdf) + "first";
inline const std::string kRdfRest = std::string(kRdf) + "rest";
inline const std::string kRdfNil = std::string(kRdf) + "nil";
inline const std::string kRdfsSubClassOf = std::string(kRdfs) + "subClassOf";

inline const std::string kXsdString = std::string(kXsd) + "string";
inline const std::string kXsdInteger = std::string(kXsd) + "integer";
inline const std::string kXsdDecimal = std::string(kXsd) + "decimal";
inline const std::string kXsdDouble = std::string(kXsd) + "double";
inline const std::string kXsdBoolean = std::string(kXsd) + "boolean";
inline const std::string kXsdDate = std::string(kXsd) + "date";
inline const std::string kXsdDateTime = std::string(kXsd) + "dateTime";
inline const std::string kXsdAnyUri = std::string(kXsd) + "anyURI";
}  // namespace vocab

enum class TermKind : std::uint8_t { iri, blank, literal };

/// An RDF term. Literals carry either a datatype or a language tag, never
/// both; a literal built without either gets xsd:string.
class Term {
public:
    Term() = default;

    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype = {});
    static Term lang_literal(std::string lexical, std::string language);

    TermKind kind() const noexcept { return kind_; }
    const std::string& value() const noexcept { return value_; }
    const std::string& datatype() const noexcept { return datatype_; }
    const std::string& language() const noexcept { return language_; }

    bool is_iri() const noexcept { return kind_ == TermKind::iri; }
    bool is_blank() const noexcept { return kind_ == TermKind::blank; }
    bool is_literal() const noexcept { return kind_ == TermKind::literal; }

    /// N-Triples form: <iri>, _:label or "lexical"^^<dt> / "lexical"@lang.
    std::string to_ntriples() const;

    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;

private:
    TermKind kind_ = TermKind::iri;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
    bool operator==(const Triple&) const = default;
};

/// A set of triples plus the prefix map seen while parsing.
///
/// Each distinct triple remembers the position at which it was first
/// inserted; shape loading uses it to recover document order, which a plain
/// set would lose.
class Graph {
public:
    /// Returns false (and leaves the graph untouched) if the triple is already present.
    bool insert(Triple triple);
    bool insert(Term s, Term p, Term o) { return insert(Triple{std::move(s), std::move(p), std::move(o)}); }
    bool erase(const Triple& triple);
    bool contains(const Triple& triple) const { return triples_.contains(triple); }

    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }

    /// All triples in sorted order.
    std::vector<Triple> triples() const;

    /// Insertion position of a triple, if present.
    std::optional<std::uint64_t> ordinal(const Triple& triple) const;

    const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }
    void set_prefix(std::string prefix, std::string ns) { prefixes_[std::move(prefix)] = std::move(ns); }

    /// A blank node label not yet used in this graph.
    Term fresh_blank();

    /// Replaces every occurrence of `from` with `to` (subject and object positions).
    void replace_term(const Term& from, const Term& to);

private:
    friend std::vector<Triple> match(const Graph&, const std::optional<Term>&, const std::optional<Term>&,
                                     const std::optional<Term>&);

    std::map<Triple, std::uint64_t> triples_;
    std::map<std::string, std::string> prefixes_;
    std::set<std::string> blank_labels_;
    std::uint64_t next_ordinal_ = 0;
    std::uint64_t next_blank_ = 0;
};

/// Triples matching the bound positions, sorted. Unbound positions are wildcards.
std::vector<Triple> match(const Graph& graph, const std::optional<Term>& s, const std::optional<Term>& p,
                          const std::optional<Term>& o);

/// Objects of (s, p, *) in sorted order.
std::vector<Term> objects(const Graph& graph, const Term& s, const Term& p);

/// Members of the RDF collection starting at `head`. Throws StructureError
/// on missing/duplicate rdf:first or rdf:rest and on cycles.
std::vector<Term> read_list(const Graph& graph, const Term& head);

/// Builds an rdf:first/rdf:rest chain in `graph` and returns its head.
Term write_list(Graph& graph, const std::vector<Term>& members);

enum class LexicalStatus { valid, invalid, unknown_datatype };

/// Lexical-form check for the supported XSD datatypes (string, integer,
/// decimal, boolean, date, dateTime, anyURI). Anything else reports
/// unknown_datatype.
LexicalStatus check_lexical(std::string_view value, std::string_view datatype);

/// True unless the value is a known-invalid lexical form; unknown datatypes pass.
inline bool validate_lexical(std::string_view value, std::string_view datatype) {
    return check_lexical(value, datatype) != LexicalStatus::invalid;
}

bool is_absolute_iri(std::string_view iri);

/// RFC 3986 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

/// Parses a Turtle document. Relative IRIs resolve against `base_iri`
/// (or @base); throws ParseError with position information on bad input.
Graph parse_turtle(std::string_view text, std::string_view base_iri = {});

/// Deterministic Turtle rendering: sorted prefixes and subjects, predicates
/// grouped per subject, singly referenced blank nodes nested inline.
std::string serialize_turtle(const Graph& graph);

}  // namespace shaclform::rdf

#endif  // SHACLFORM_RDF_HPP
