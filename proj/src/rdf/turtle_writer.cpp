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
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "rdf/escape.hpp"
#include "shaclform/rdf.hpp"

namespace shaclform::rdf {

namespace {

bool plain_local_char(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

// Conservative PN_LOCAL check: ASCII name characters, inner dots only.
bool writable_local(std::string_view local) {
    if (local.empty()) return true;
    if (local.front() == '-' || local.front() == '.' || local.back() == '.') return false;
    for (unsigned char c : local) {
        if (!plain_local_char(c) && c != '.') return false;
    }
    return true;
}

class TurtleWriter {
public:
    explicit TurtleWriter(const Graph& graph) : graph_(graph) {
        for (const auto& t : graph.triples()) {
            by_subject_[t.subject].push_back(t);
            if (t.object.is_blank()) ++incoming_[t.object];
        }
        choose_inline_nodes();
    }

    std::string run() {
        for (const auto& [prefix, ns] : graph_.prefixes()) {
            out_ << "@prefix " << prefix << ": <" << detail::escape_iri(ns) << "> .\n";
        }
        bool first = true;
        for (const auto& [subject, _] : by_subject_) {
            if (inline_.contains(subject)) continue;
            if (first && !graph_.prefixes().empty()) out_ << "\n";
            if (!first) out_ << "\n";
            first = false;
            out_ << term(subject);
            predicate_objects(subject, 1);
            out_ << " .\n";
        }
        return out_.str();
    }

private:
    // A blank node is written in place of its single reference unless doing
    // so would leave it unreachable from a top-level subject (blank cycles).
    void choose_inline_nodes() {
        for (const auto& [node, count] : incoming_) {
            if (count == 1) inline_.insert(node);
        }
        for (;;) {
            std::set<Term> reached;
            for (const auto& [subject, _] : by_subject_) {
                if (!inline_.contains(subject)) reach(subject, reached);
            }
            std::optional<Term> orphan;
            for (const auto& [subject, _] : by_subject_) {
                if (inline_.contains(subject) && !reached.contains(subject)) {
                    orphan = subject;
                    break;
                }
            }
            if (!orphan) return;
            inline_.erase(*orphan);
        }
    }

    void reach(const Term& node, std::set<Term>& reached) const {
        std::vector<Term> stack{node};
        while (!stack.empty()) {
            Term current = std::move(stack.back());
            stack.pop_back();
            auto it = by_subject_.find(current);
            if (it == by_subject_.end()) continue;
            for (const auto& t : it->second) {
                if (inline_.contains(t.object) && reached.insert(t.object).second) stack.push_back(t.object);
            }
        }
    }

    // Members of a well-formed list starting at `head` whose cells carry
    // nothing but rdf:first/rdf:rest and are all inlined.
    std::optional<std::vector<Term>> as_list(const Term& head) const {
        std::vector<Term> members;
        std::set<Term> seen;
        Term cell = head;
        const std::string& nil = vocab::kRdfNil;
        while (!(cell.is_iri() && cell.value() == nil)) {
            if (!cell.is_blank() || !inline_.contains(cell) || !seen.insert(cell).second) return std::nullopt;
            auto it = by_subject_.find(cell);
            if (it == by_subject_.end() || it->second.size() != 2) return std::nullopt;
            const Triple& a = it->second[0];
            const Triple& b = it->second[1];
            if (a.predicate.value() != vocab::kRdfFirst || b.predicate.value() != vocab::kRdfRest) return std::nullopt;
            members.push_back(a.object);
            cell = b.object;
        }
        return members;
    }

    void predicate_objects(const Term& subject, int depth) {
        auto it = by_subject_.find(subject);
        if (it == by_subject_.end()) return;
        // rdf:type first, then predicate order.
        std::vector<std::pair<Term, std::vector<Term>>> groups;
        for (const auto& t : it->second) {
            if (groups.empty() || groups.back().first != t.predicate) groups.push_back({t.predicate, {}});
            groups.back().second.push_back(t.object);
        }
        std::stable_partition(groups.begin(), groups.end(),
                              [](const auto& g) { return g.first.value() == vocab::kRdfType; });
        std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
        for (std::size_t i = 0; i < groups.size(); ++i) {
            out_ << (i == 0 ? " " : " ;\n" + indent);
            const auto& [predicate, objects] = groups[i];
            out_ << (predicate.value() == vocab::kRdfType ? std::string("a") : term(predicate));
            for (std::size_t j = 0; j < objects.size(); ++j) {
                out_ << (j == 0 ? " " : ", ");
                object(objects[j], depth);
            }
        }
    }

    void object(const Term& value, int depth) {
        if (!value.is_blank() || !inline_.contains(value)) {
            out_ << term(value);
            return;
        }
        if (auto members = as_list(value)) {
            out_ << "(";
            for (const auto& m : *members) {
                out_ << " ";
                object(m, depth);
            }
            out_ << " )";
            return;
        }
        if (!by_subject_.contains(value)) {
            out_ << "[]";
            return;
        }
        out_ << "[";
        std::string inner(static_cast<std::size_t>(depth + 1) * 4, ' ');
        out_ << "\n" << inner;
        std::ostringstream saved;
        saved.swap(out_);
        predicate_objects(value, depth + 1);
        std::string body = out_.str();
        saved.swap(out_);
        // predicate_objects opens with a separating space.
        out_ << body.substr(1) << "\n" << std::string(static_cast<std::size_t>(depth) * 4, ' ') << "]";
    }

    std::string iri(const std::string& value) const {
        const std::string* best_prefix = nullptr;
        std::size_t best_len = 0;
        for (const auto& [prefix, ns] : graph_.prefixes()) {
            if (ns.size() >= best_len && !ns.empty() && value.starts_with(ns) &&
                writable_local(std::string_view(value).substr(ns.size()))) {
                if (ns.size() > best_len || best_prefix == nullptr) {
                    best_prefix = &prefix;
                    best_len = ns.size();
                }
            }
        }
        if (best_prefix) return *best_prefix + ":" + value.substr(best_len);
        return "<" + detail::escape_iri(value) + ">";
    }

    std::string term(const Term& t) const {
        switch (t.kind()) {
            case TermKind::iri: return iri(t.value());
            case TermKind::blank: return "_:" + t.value();
            case TermKind::literal: break;
        }
        std::string out = "\"" + detail::escape_string(t.value()) + "\"";
        if (!t.language().empty()) return out + "@" + t.language();
        if (t.datatype() == vocab::kXsdString) return out;
        return out + "^^" + iri(t.datatype());
    }

    const Graph& graph_;
    std::map<Term, std::vector<Triple>> by_subject_;
    std::map<Term, std::size_t> incoming_;
    std::set<Term> inline_;
    std::ostringstream out_;
};

}  // namespace

std::string serialize_turtle(const Graph& graph) { return TurtleWriter(graph).run(); }

}  // namespace shaclform::rdf
