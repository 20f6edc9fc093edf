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

#include "shaclform/rdf.hpp"

#include <set>

#include "shaclform/error.hpp"
#include "rdf/escape.hpp"

namespace shaclform::rdf {

Term Term::iri(std::string value) {
    Term t;
    t.kind_ = TermKind::iri;
    t.value_ = std::move(value);
    return t;
}

Term Term::blank(std::string label) {
    Term t;
    t.kind_ = TermKind::blank;
    t.value_ = std::move(label);
    return t;
}

Term Term::literal(std::string lexical, std::string datatype) {
    Term t;
    t.kind_ = TermKind::literal;
    t.value_ = std::move(lexical);
    t.datatype_ = datatype.empty() ? vocab::kXsdString : std::move(datatype);
    return t;
}

Term Term::lang_literal(std::string lexical, std::string language) {
    if (language.empty()) return literal(std::move(lexical));
    Term t;
    t.kind_ = TermKind::literal;
    t.value_ = std::move(lexical);
    t.language_ = std::move(language);
    return t;
}

std::string Term::to_ntriples() const {
    switch (kind_) {
        case TermKind::iri:
            return "<" + detail::escape_iri(value_) + ">";
        case TermKind::blank:
            return "_:" + value_;
        case TermKind::literal:
            break;
    }
    std::string out = "\"" + detail::escape_string(value_) + "\"";
    if (!language_.empty()) return out + "@" + language_;
    return out + "^^<" + detail::escape_iri(datatype_) + ">";
}

bool Graph::insert(Triple triple) {
    if (triples_.contains(triple)) return false;
    if (triple.subject.is_blank()) blank_labels_.insert(triple.subject.value());
    if (triple.object.is_blank()) blank_labels_.insert(triple.object.value());
    triples_.emplace(std::move(triple), next_ordinal_++);
    return true;
}

bool Graph::erase(const Triple& triple) { return triples_.erase(triple) > 0; }

std::vector<Triple> Graph::triples() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (const auto& [t, _] : triples_) out.push_back(t);
    return out;
}

std::optional<std::uint64_t> Graph::ordinal(const Triple& triple) const {
    auto it = triples_.find(triple);
    if (it == triples_.end()) return std::nullopt;
    return it->second;
}

Term Graph::fresh_blank() {
    for (;;) {
        std::string label = "g" + std::to_string(next_blank_++);
        if (blank_labels_.insert(label).second) return Term::blank(std::move(label));
    }
}

void Graph::replace_term(const Term& from, const Term& to) {
    std::map<Triple, std::uint64_t> replaced;
    for (auto& [t, ord] : triples_) {
        Triple copy = t;
        if (copy.subject == from) copy.subject = to;
        if (copy.object == from) copy.object = to;
        auto [it, inserted] = replaced.emplace(std::move(copy), ord);
        if (!inserted && ord < it->second) it->second = ord;
    }
    triples_ = std::move(replaced);
    if (to.is_blank()) blank_labels_.insert(to.value());
}

std::vector<Triple> match(const Graph& graph, const std::optional<Term>& s, const std::optional<Term>& p,
                          const std::optional<Term>& o) {
    std::vector<Triple> out;
    auto matches = [&](const Triple& t) {
        return (!p || t.predicate == *p) && (!o || t.object == *o);
    };
    if (s) {
        // Term{} sorts before every other term, so this lands on the first triple of `s`.
        for (auto it = graph.triples_.lower_bound(Triple{*s, Term{}, Term{}});
             it != graph.triples_.end() && it->first.subject == *s; ++it) {
            if (matches(it->first)) out.push_back(it->first);
        }
        return out;
    }
    for (const auto& [t, _] : graph.triples_) {
        if (matches(t)) out.push_back(t);
    }
    return out;
}

std::vector<Term> objects(const Graph& graph, const Term& s, const Term& p) {
    std::vector<Term> out;
    for (auto& t : match(graph, s, p, std::nullopt)) out.push_back(std::move(t.object));
    return out;
}

std::vector<Term> read_list(const Graph& graph, const Term& head) {
    const Term first = Term::iri(vocab::kRdfFirst);
    const Term rest = Term::iri(vocab::kRdfRest);
    const Term nil = Term::iri(vocab::kRdfNil);

    std::vector<Term> members;
    std::set<Term> visited;
    Term cell = head;
    while (cell != nil) {
        if (cell.is_literal()) throw StructureError("list cell is a literal: " + cell.to_ntriples());
        if (!visited.insert(cell).second) throw StructureError("cycle in list at " + cell.to_ntriples());
        auto firsts = objects(graph, cell, first);
        auto rests = objects(graph, cell, rest);
        if (firsts.size() != 1) {
            throw StructureError("list cell " + cell.to_ntriples() + " has " + std::to_string(firsts.size()) +
                                 " rdf:first values");
        }
        if (rests.size() != 1) {
            throw StructureError("list cell " + cell.to_ntriples() + " has " + std::to_string(rests.size()) +
                                 " rdf:rest values");
        }
        members.push_back(std::move(firsts.front()));
        cell = std::move(rests.front());
    }
    return members;
}

Term write_list(Graph& graph, const std::vector<Term>& members) {
    Term head = Term::iri(vocab::kRdfNil);
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
        Term cell = graph.fresh_blank();
        graph.insert(cell, Term::iri(vocab::kRdfFirst), *it);
        graph.insert(cell, Term::iri(vocab::kRdfRest), head);
        head = std::move(cell);
    }
    return head;
}

}  // namespace shaclform::rdf
