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

#include "generators.hpp"

#include <algorithm>

namespace testing {

using shaclform::rdf::Graph;
using shaclform::rdf::Term;
using oracle::Kind;

namespace {

const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";
const std::string kSh = "http://www.w3.org/ns/shacl#";
const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

Term ex(const std::string& local) { return Term::iri(kEx + local); }

std::string awkward_string(Rng& rng) {
    static const std::vector<std::string> pieces = {
        "a", "Z", " ", "\"", "\\", "\n", "\t", "\r", "'", "#", "@", "^^", "<", ">", "é", "☃", "𝄞", "{", ";", ".", "0"};
    std::string s;
    int n = rng.between(0, 6);
    for (int i = 0; i < n; ++i) s += rng.pick(pieces);
    return s;
}

Term random_literal(Rng& rng) {
    switch (rng.between(0, 7)) {
        case 0: return Term::literal(awkward_string(rng));
        case 1: return Term::literal(std::to_string(rng.between(-50, 50)), kXsd + "integer");
        case 2: return Term::literal(rng.chance(0.5) ? "true" : "false", kXsd + "boolean");
        case 3: return Term::literal("1." + std::to_string(rng.between(0, 99)), kXsd + "decimal");
        case 4: return Term::lang_literal(awkward_string(rng), rng.chance(0.5) ? "en" : "it-IT");
        case 5: return Term::literal("2023-09-0" + std::to_string(rng.between(1, 9)), kXsd + "date");
        case 6: return Term::literal(awkward_string(rng), kEx + "custom");
        default: return Term::literal("x" + std::to_string(rng.between(0, 3)));
    }
}

Term random_iri(Rng& rng) {
    static const std::vector<std::string> locals = {"a", "b", "c", "item-1", "with%20space", "x_y", "1abc", "q?x=1"};
    if (rng.chance(0.2)) return Term::iri("http://other.example/path/" + rng.pick(locals));
    if (rng.chance(0.1)) return Term::iri("urn:isbn:" + std::to_string(rng.between(100, 999)));
    return ex(rng.pick(locals));
}

}  // namespace

Graph random_graph(Rng& rng, int max_triples, int max_blanks) {
    Graph g;
    int cells = 0;
    int blanks = 0;
    auto blank = [&]() { return Term::blank("n" + std::to_string(rng.between(0, blanks - 1))); };
    static const std::vector<std::string> predicates = {"p", "q", "r", "label"};
    const int target = rng.between(0, max_triples);

    if (rng.chance(0.3) && target >= 3) {
        // A well-formed list hanging off a subject.
        std::vector<Term> members;
        int n = rng.between(0, std::min({4, (target - 1) / 2, max_blanks}));
        cells = n;
        for (int i = 0; i < n; ++i) members.push_back(rng.chance(0.5) ? random_literal(rng) : random_iri(rng));
        Term head = shaclform::rdf::write_list(g, members);
        g.insert(random_iri(rng), ex("list"), head);
    }
    blanks = rng.between(0, max_blanks - cells);
    int guard = 0;
    while (static_cast<int>(g.size()) < target && guard++ < 200) {
        Term s = blanks > 0 && rng.chance(0.4) ? blank() : random_iri(rng);
        Term p = rng.chance(0.1) ? Term::iri(kRdfType) : ex(rng.pick(predicates));
        Term o;
        switch (rng.between(0, 2)) {
            case 0: o = random_literal(rng); break;
            case 1: o = blanks > 0 ? blank() : random_iri(rng); break;
            default: o = random_iri(rng); break;
        }
        g.insert(std::move(s), std::move(p), std::move(o));
    }
    return g;
}

std::vector<oracle::Shape> random_shapes(Rng& rng) {
    static const std::vector<std::string> classes = {"C1", "C2"};
    static const std::vector<std::string> paths = {"p", "q", "r"};
    static const std::vector<std::string> datatypes = {kXsd + "string", kXsd + "integer", kXsd + "boolean",
                                                       kXsd + "date", kEx + "custom"};
    static const std::vector<std::string> kinds = {"IRI", "Literal", "BlankNode", "BlankNodeOrIRI",
                                                   "BlankNodeOrLiteral", "IRIOrLiteral"};
    const std::vector<oracle::PatternSpec> patterns = {
        {"^a", "", [](const std::string& s) { return !s.empty() && s[0] == 'a'; }},
        {"[0-9]", "", [](const std::string& s) {
             for (char c : s) {
                 if (c >= '0' && c <= '9') return true;
             }
             return false;
         }},
        {"^X1$", "i", [](const std::string& s) { return s.size() == 2 && (s[0] == 'x' || s[0] == 'X') && s[1] == '1'; }},
        {"b$", "", [](const std::string& s) { return !s.empty() && s.back() == 'b'; }},
    };
    const std::vector<Term> value_pool = {ex("v0"), ex("v1"), ex("v2"), Term::literal("x1"),
                                          Term::literal("7", kXsd + "integer")};

    std::vector<oracle::Shape> shapes;
    int n_shapes = rng.between(1, 2);
    for (int i = 0; i < n_shapes; ++i) {
        oracle::Shape s;
        s.id = kEx + "S" + std::to_string(i);
        s.target_class = kEx + rng.pick(classes);
        int n_props = rng.between(1, 3);
        for (int j = 0; j < n_props; ++j) {
            oracle::Property p;
            p.path = kEx + rng.pick(paths);
            int n_checks = rng.between(1, 3);
            bool has_pattern = false;
            for (int k = 0; k < n_checks; ++k) {
                oracle::Check c{static_cast<Kind>(rng.between(0, 7))};
                switch (c.kind) {
                    case Kind::min_count:
                    case Kind::max_count: c.count = rng.between(0, 3); break;
                    case Kind::datatype: c.iri = rng.pick(datatypes); break;
                    case Kind::class_of: c.iri = kEx + rng.pick(classes); break;
                    case Kind::node_kind: c.iri = kSh + rng.pick(kinds); break;
                    case Kind::has_value: c.term = rng.pick(value_pool); break;
                    case Kind::in_list: {
                        int len = rng.between(1, 3);
                        for (int m = 0; m < len; ++m) c.list.push_back(rng.pick(value_pool));
                        break;
                    }
                    case Kind::pattern:
                        if (has_pattern) {
                            c = oracle::Check{Kind::max_count};
                            c.count = rng.between(0, 3);
                        } else {
                            c.pattern = rng.pick(patterns);
                            has_pattern = true;
                        }
                        break;
                }
                // Identical constraint triples collapse in a graph, so keep one.
                bool duplicate = std::any_of(p.checks.begin(), p.checks.end(), [&](const oracle::Check& d) {
                    return d.kind == c.kind && c.kind != Kind::in_list && c.kind != Kind::pattern &&
                           d.count == c.count && d.iri == c.iri && d.term == c.term;
                });
                if (!duplicate) p.checks.push_back(std::move(c));
            }
            s.properties.push_back(std::move(p));
        }
        shapes.push_back(std::move(s));
    }
    return shapes;
}

Graph random_data(Rng& rng) {
    static const std::vector<std::string> classes = {"C1", "C2"};
    static const std::vector<std::string> paths = {"p", "q", "r"};
    const std::vector<Term> pool = {
        ex("v0"), ex("v1"), ex("v2"), ex("abc"), Term::blank("b0"), Term::blank("b1"),
        Term::literal("x1"), Term::literal("X1"), Term::literal("a5"), Term::literal("bob"), Term::literal(""),
        Term::literal("7", kXsd + "integer"), Term::literal("12.5", kXsd + "integer"),
        Term::literal("true", kXsd + "boolean"), Term::literal("yes", kXsd + "boolean"),
        Term::literal("2024-02-29", kXsd + "date"), Term::literal("2023-02-29", kXsd + "date"),
        Term::literal("q", kEx + "custom"), Term::lang_literal("ab", "en"),
    };
    Graph g;
    int n_focus = rng.between(0, 4);
    for (int i = 0; i < n_focus; ++i) {
        Term focus = ex("n" + std::to_string(i));
        g.insert(focus, Term::iri(kRdfType), ex(rng.pick(classes)));
        if (rng.chance(0.2)) g.insert(focus, Term::iri(kRdfType), ex(rng.pick(classes)));
        for (const auto& path : paths) {
            int n_values = rng.between(0, 4);
            for (int k = 0; k < n_values; ++k) g.insert(focus, ex(path), rng.pick(pool));
        }
    }
    // Give some values a type so class constraints can pass.
    for (const auto& v : {ex("v0"), ex("v1"), Term::blank("b0")}) {
        if (rng.chance(0.5)) g.insert(v, Term::iri(kRdfType), ex(rng.pick(classes)));
    }
    return g;
}

}  // namespace testing
