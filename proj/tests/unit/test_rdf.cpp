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

#include <doctest.h>

#include "generators.hpp"
#include "mock_endpoint.hpp"
#include "oracle.hpp"
#include "shaclform/error.hpp"
#include "shaclform/rdf.hpp"

using namespace shaclform;
using rdf::Graph;
using rdf::Term;

namespace {

const std::string kFabio = "http://purl.org/spar/fabio/";
const std::string kSh = "http://www.w3.org/ns/shacl#";

Term ex(const std::string& local) { return Term::iri("http://example.org/" + local); }

}  // namespace

TEST_CASE("terms default to xsd:string and keep language tags") {
    CHECK(Term::literal("x").datatype() == rdf::vocab::kXsdString);
    auto tagged = Term::lang_literal("ciao", "it");
    CHECK(tagged.language() == "it");
    CHECK(tagged.datatype().empty());
    CHECK(Term::lang_literal("x", "") == Term::literal("x"));
    CHECK(Term::literal("a\"b\n", rdf::vocab::kXsdString).to_ntriples() ==
          "\"a\\\"b\\n\"^^<http://www.w3.org/2001/XMLSchema#string>");
    CHECK(tagged.to_ntriples() == "\"ciao\"@it");
    CHECK(Term::blank("b1").to_ntriples() == "_:b1");
}

TEST_CASE("graph has set semantics") {
    Graph g;
    CHECK(g.insert(ex("s"), ex("p"), ex("o")));
    CHECK_FALSE(g.insert(ex("s"), ex("p"), ex("o")));
    CHECK(g.size() == 1);

    testing::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Graph r = testing::random_graph(rng);
        auto before = r.size();
        for (const auto& t : r.triples()) r.insert(t);
        CHECK(r.size() == before);
    }
}

TEST_CASE("graph remembers insertion order") {
    Graph g;
    g.insert(ex("z"), ex("p"), ex("o"));
    g.insert(ex("a"), ex("p"), ex("o"));
    CHECK(*g.ordinal({ex("z"), ex("p"), ex("o")}) < *g.ordinal({ex("a"), ex("p"), ex("o")}));
    CHECK_FALSE(g.ordinal({ex("q"), ex("p"), ex("o")}).has_value());
    CHECK(g.erase({ex("z"), ex("p"), ex("o")}));
    CHECK_FALSE(g.erase({ex("z"), ex("p"), ex("o")}));
    CHECK(g.size() == 1);
}

TEST_CASE("match") {
    testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Graph g = testing::random_graph(rng);
        auto all = rdf::match(g, std::nullopt, std::nullopt, std::nullopt);
        CHECK(all == g.triples());
        for (const auto& t : all) {
            CHECK(rdf::match(g, t.subject, t.predicate, t.object).size() == 1);
            // Brute-force count for each single bound position.
            std::size_t by_s = 0, by_p = 0, by_o = 0;
            for (const auto& u : all) {
                by_s += u.subject == t.subject;
                by_p += u.predicate == t.predicate;
                by_o += u.object == t.object;
            }
            CHECK(rdf::match(g, t.subject, std::nullopt, std::nullopt).size() == by_s);
            CHECK(rdf::match(g, std::nullopt, t.predicate, std::nullopt).size() == by_p);
            CHECK(rdf::match(g, std::nullopt, std::nullopt, t.object).size() == by_o);
        }
        CHECK(rdf::match(g, ex("absent"), ex("p"), ex("o")).empty());
    }
}

TEST_CASE("match on the resource shape graph") {
    auto g = rdf::parse_turtle(testing::read_text(testing::fixture("bibliographic_resource.ttl")));
    CHECK(rdf::match(g, std::nullopt, Term::iri(kSh + "targetClass"), std::nullopt).size() == 1);
}

TEST_CASE("read_list") {
    Graph g;
    CHECK(rdf::read_list(g, Term::iri(rdf::vocab::kRdfNil)).empty());

    auto fig = rdf::parse_turtle(testing::read_text(testing::fixture("bibliographic_resource.ttl")));
    auto in = rdf::match(fig, std::nullopt, Term::iri(kSh + "in"), std::nullopt);
    REQUIRE(in.size() == 1);
    std::vector<Term> expected;
    for (const char* local : {"ArchivalDocument", "Book", "BookChapter", "JournalArticle", "Thesis", "ProceedingsPaper"}) {
        expected.push_back(Term::iri(kFabio + local));
    }
    CHECK(rdf::read_list(fig, in[0].object) == expected);

    auto two = rdf::parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ( ex:x ex:y ) .");
    auto head = rdf::match(two, std::nullopt, Term::iri("http://e/p"), std::nullopt);
    REQUIRE(head.size() == 1);
    CHECK(rdf::read_list(two, head[0].object) == std::vector<Term>{Term::iri("http://e/x"), Term::iri("http://e/y")});
}

TEST_CASE("write_list and read_list agree for random lengths") {
    testing::Rng rng(3);
    for (int n = 0; n <= 20; ++n) {
        std::vector<Term> members;
        for (int i = 0; i < n; ++i) {
            members.push_back(rng.chance(0.5) ? ex("m" + std::to_string(rng.between(0, 5)))
                                              : Term::literal(std::to_string(i)));
        }
        Graph g;
        Term head = rdf::write_list(g, members);
        g.insert(ex("s"), ex("list"), head);
        CHECK(rdf::read_list(g, head) == members);

        auto reparsed = rdf::parse_turtle(rdf::serialize_turtle(g));
        auto h = rdf::match(reparsed, ex("s"), ex("list"), std::nullopt);
        REQUIRE(h.size() == 1);
        auto back = rdf::read_list(reparsed, h[0].object);
        CHECK(back.size() == static_cast<std::size_t>(n));
        CHECK(back == members);
    }
}

TEST_CASE("read_list rejects malformed lists") {
    const Term first = Term::iri(rdf::vocab::kRdfFirst);
    const Term rest = Term::iri(rdf::vocab::kRdfRest);
    const Term nil = Term::iri(rdf::vocab::kRdfNil);

    Graph missing_rest;
    missing_rest.insert(Term::blank("c"), first, ex("x"));
    CHECK_THROWS_AS(rdf::read_list(missing_rest, Term::blank("c")), StructureError);

    Graph cycle;
    cycle.insert(Term::blank("c1"), first, ex("x"));
    cycle.insert(Term::blank("c1"), rest, Term::blank("c2"));
    cycle.insert(Term::blank("c2"), first, ex("y"));
    cycle.insert(Term::blank("c2"), rest, Term::blank("c1"));
    CHECK_THROWS_AS(rdf::read_list(cycle, Term::blank("c1")), StructureError);

    Graph two_firsts;
    two_firsts.insert(Term::blank("c"), first, ex("x"));
    two_firsts.insert(Term::blank("c"), first, ex("y"));
    two_firsts.insert(Term::blank("c"), rest, nil);
    CHECK_THROWS_AS(rdf::read_list(two_firsts, Term::blank("c")), StructureError);

    CHECK_THROWS_AS(rdf::read_list(Graph{}, Term::literal("x")), StructureError);
}

TEST_CASE("validate_lexical examples") {
    CHECK(rdf::validate_lexical("hello", rdf::vocab::kXsdString));
    CHECK_FALSE(rdf::validate_lexical("12.5", rdf::vocab::kXsdInteger));
    CHECK(rdf::validate_lexical("2023-09-01", rdf::vocab::kXsdDate));
    CHECK(rdf::check_lexical("x", "http://example.org/dt") == rdf::LexicalStatus::unknown_datatype);
    CHECK(rdf::validate_lexical("x", "http://example.org/dt"));
    CHECK_FALSE(rdf::validate_lexical("2023-02-29", rdf::vocab::kXsdDate));
    CHECK(rdf::validate_lexical("2024-02-29", rdf::vocab::kXsdDate));
    CHECK(rdf::validate_lexical("2023-09-01T24:00:00Z", rdf::vocab::kXsdDateTime));
    CHECK_FALSE(rdf::validate_lexical("2023-09-01T24:00:01", rdf::vocab::kXsdDateTime));
    CHECK(rdf::validate_lexical("1", rdf::vocab::kXsdBoolean));
    CHECK_FALSE(rdf::validate_lexical("TRUE", rdf::vocab::kXsdBoolean));
    CHECK(rdf::validate_lexical(".5", rdf::vocab::kXsdDecimal));
    CHECK_FALSE(rdf::validate_lexical("1e3", rdf::vocab::kXsdDecimal));
    CHECK_FALSE(rdf::validate_lexical("http://a b", rdf::vocab::kXsdAnyUri));
}

TEST_CASE("validate_lexical agrees with the grammar oracle on random strings") {
    const std::vector<std::string> datatypes = {rdf::vocab::kXsdInteger, rdf::vocab::kXsdDecimal,
                                                rdf::vocab::kXsdBoolean, rdf::vocab::kXsdDate,
                                                rdf::vocab::kXsdDateTime, rdf::vocab::kXsdAnyUri};
    const std::vector<std::string> pieces = {"0", "1", "2", "9", "29", "02", "12", "13", "-", "+", ".", ":", "T",
                                             "Z", "2024", "2023", "-02-", "-13-", "24:00:00", "23:59:60", "+14:00",
                                             "+14:01", " ", "true", "e", "00"};
    testing::Rng rng(99);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        int n = rng.between(0, 6);
        for (int k = 0; k < n; ++k) s += rng.pick(pieces);
        const auto& dt = rng.pick(datatypes);
        auto expected = testing::oracle::lexical_ok(s, dt);
        REQUIRE(expected.has_value());
        INFO(s, " ", dt);
        CHECK(rdf::validate_lexical(s, dt) == *expected);
        ++checked;
    }
    // Structured dates exercise day-of-month and timezone rules.
    for (int y : {1900, 2000, 2023, 2024}) {
        for (int m = 0; m <= 13; ++m) {
            for (int d = 0; d <= 32; ++d) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
                CHECK(rdf::validate_lexical(buf, rdf::vocab::kXsdDate) ==
                      *testing::oracle::lexical_ok(buf, rdf::vocab::kXsdDate));
            }
        }
    }
    CHECK(checked == 20000);
}

TEST_CASE("IRI resolution follows the RFC 3986 examples") {
    const std::string base = "http://a/b/c/d;p?q";
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"g:h", "g:h"},           {"g", "http://a/b/c/g"},       {"./g", "http://a/b/c/g"},
        {"g/", "http://a/b/c/g/"}, {"/g", "http://a/g"},          {"//g", "http://g"},
        {"?y", "http://a/b/c/d;p?y"}, {"g?y", "http://a/b/c/g?y"}, {"#s", "http://a/b/c/d;p?q#s"},
        {"g#s", "http://a/b/c/g#s"}, {";x", "http://a/b/c/;x"},   {"", "http://a/b/c/d;p?q"},
        {".", "http://a/b/c/"},    {"..", "http://a/b/"},         {"../g", "http://a/b/g"},
        {"../..", "http://a/"},    {"../../g", "http://a/g"},     {"../../../g", "http://a/g"},
        {"/./g", "http://a/g"},    {"/../g", "http://a/g"},       {"g.", "http://a/b/c/g."},
        {"g..", "http://a/b/c/g.."}, {"./../g", "http://a/b/g"},  {"g;x=1/../y", "http://a/b/c/y"},
    };
    for (const auto& [ref, expected] : cases) {
        INFO(ref);
        CHECK(rdf::resolve_iri(base, ref) == expected);
    }
    CHECK(rdf::is_absolute_iri("urn:x"));
    CHECK_FALSE(rdf::is_absolute_iri("relative/path"));
    CHECK_FALSE(rdf::is_absolute_iri("http://a b"));
}

TEST_CASE("replace_term and fresh_blank") {
    Graph g;
    g.insert(ex("s"), ex("p"), ex("o"));
    g.insert(ex("o"), ex("p"), ex("s"));
    g.replace_term(ex("s"), ex("t"));
    CHECK(g.contains({ex("t"), ex("p"), ex("o")}));
    CHECK(g.contains({ex("o"), ex("p"), ex("t")}));
    CHECK(g.size() == 2);

    Graph h;
    std::set<Term> seen;
    for (int i = 0; i < 50; ++i) {
        Term b = h.fresh_blank();
        CHECK(seen.insert(b).second);
        h.insert(b, ex("p"), ex("o"));
    }
}
