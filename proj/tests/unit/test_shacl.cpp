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
#include "shaclform/error.hpp"
#include "shaclform/shacl.hpp"

using namespace shaclform;
using rdf::Term;
using shacl::Component;

namespace {

const std::string kFabio = "http://purl.org/spar/fabio/";
const std::string kSchema = "http://schema.org/";
const std::string kTitle = "http://purl.org/dc/terms/title";
const std::string kPrefixes = R"(
@prefix sh: <http://www.w3.org/ns/shacl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix ex: <http://e/> .
)";

shacl::ShapesGraph load(const std::string& body) { return shacl::load_shapes(rdf::parse_turtle(kPrefixes + body)); }

shacl::ShapesGraph resource_shape() {
    return shacl::load_shapes(rdf::parse_turtle(testing::read_text(testing::fixture("bibliographic_resource.ttl"))));
}

shacl::ShapesGraph ocdm() {
    return shacl::load_shapes(rdf::parse_turtle(testing::read_text(testing::fixture("ocdm/shapes.ttl"))));
}

bool has_warning(const shacl::ShapesGraph& g, const std::string& needle) {
    for (const auto& w : g.warnings) {
        if (w.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("empty graph gives no shapes") {
    auto g = shacl::load_shapes(rdf::Graph{});
    CHECK(g.shapes.empty());
    CHECK(g.warnings.empty());
}

TEST_CASE("bibliographic resource shape") {
    auto g = resource_shape();
    REQUIRE(g.shapes.size() == 1);
    const auto& shape = g.shapes[0];
    CHECK(shape.id == kSchema + "BibliographicResourceShape");
    CHECK(shape.target_class == kFabio + "Expression");
    CHECK(shape.super_shapes == std::vector<std::string>{kSchema + "BibliographicEntityShape"});
    REQUIRE(shape.properties.size() == 2);

    const auto& type = shape.properties[0];
    CHECK(type.path == rdf::vocab::kRdfType);
    REQUIRE(type.constraints.size() == 3);
    CHECK(type.constraints[0].component == Component::in_list);
    CHECK(type.constraints[0].terms().size() == 6);
    CHECK(type.constraints[0].terms().front() == Term::iri(kFabio + "ArchivalDocument"));
    CHECK(type.constraints[1] == shacl::Constraint{Component::min_count, std::int64_t{1}});
    CHECK(type.constraints[2] == shacl::Constraint{Component::max_count, std::int64_t{2}});

    const auto& title = shape.properties[1];
    CHECK(title.path == kTitle);
    REQUIRE(title.constraints.size() == 2);
    CHECK(title.constraints[0] == shacl::Constraint{Component::datatype, rdf::vocab::kXsdString});
    CHECK(title.constraints[1] == shacl::Constraint{Component::max_count, std::int64_t{1}});

    std::size_t total = 0;
    for (const auto& p : shape.properties) total += p.constraints.size();
    CHECK(total == 5);
    CHECK(type.source_order < title.source_order);
    CHECK(has_warning(g, "sh:minValue read as sh:minCount"));
    CHECK(has_warning(g, "sh:maxValue read as sh:maxCount"));
}

TEST_CASE("minValue/maxValue and minCount/maxCount load identically") {
    auto by_value = load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minValue 1 ; sh:maxValue 2 ] .");
    auto standard = load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount 1 ; sh:maxCount 2 ] .");
    CHECK(by_value.shapes[0].properties[0].constraints == standard.shapes[0].properties[0].constraints);
    CHECK(standard.warnings.empty());
    CHECK_FALSE(by_value.warnings.empty());
}

TEST_CASE("structural errors") {
    CHECK_THROWS_WITH_AS(load("[] a sh:NodeShape ."), doctest::Contains("without id"), ShapeError);
    CHECK_THROWS_WITH_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:minCount 1 ] ."),
                         doctest::Contains("without sh:path"), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount ex:one ] ."), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount \"x\" ] ."), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:maxCount -1 ] ."), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:in () ] ."), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:pattern \"(\" ] ."), ShapeError);
    CHECK_THROWS_AS(load("ex:S a sh:NodeShape ; sh:property \"lit\" ."), ShapeError);
}

TEST_CASE("unsupported terms become warnings") {
    auto g = load(R"(
        ex:S a sh:NodeShape ; sh:targetClass ex:C ; sh:closed true ;
          sh:property [ sh:path ex:p ; sh:or ( [ sh:datatype xsd:string ] ) ; sh:name "P" ; sh:minCount 1 ] ;
          sh:property [ sh:path [ sh:inversePath ex:q ] ; sh:minCount 1 ] .
    )");
    REQUIRE(g.shapes.size() == 1);
    CHECK(g.shapes[0].properties.size() == 1);
    CHECK(g.shapes[0].properties[0].constraints.size() == 1);
    CHECK(has_warning(g, "closed"));
    CHECK(has_warning(g, "or"));
    CHECK(has_warning(g, "property paths"));
}

TEST_CASE("pattern flags") {
    auto g = load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:pattern \"^abc$\" ; sh:flags \"i\" ] .");
    const auto& c = g.shapes[0].properties[0].constraints.at(0);
    CHECK(c.pattern().source == "^abc$");
    CHECK(c.pattern().flags == "i");
    CHECK(std::regex_search(std::string("ABC"), *c.pattern().regex));
}

TEST_CASE("load_shapes never fails outside its error type") {
    // Random graphs over SHACL vocabulary: either shapes or a shaclform::Error.
    const std::vector<std::string> preds = {"sh:property", "sh:path",     "sh:minCount", "sh:maxCount", "sh:in",
                                            "sh:datatype", "sh:class",    "sh:nodeKind", "sh:pattern",  "sh:hasValue",
                                            "sh:targetClass", "rdfs:subClassOf", "sh:flags", "a"};
    const std::vector<std::string> objs = {"sh:NodeShape", "ex:C", "_:b1", "_:b2", "\"x\"", "1", "-1", "(ex:a ex:b)",
                                           "()", "sh:IRI", "\"[\"", "ex:S", "xsd:string", "[ sh:path ex:p ]"};
    const std::vector<std::string> subjects = {"ex:S", "ex:T", "_:b1", "_:b2"};
    testing::Rng rng(17);
    int loaded = 0, rejected = 0;
    for (int i = 0; i < 500; ++i) {
        std::string doc;
        int n = rng.between(1, 12);
        for (int k = 0; k < n; ++k) {
            doc += rng.pick(subjects) + " " + rng.pick(preds) + " " + rng.pick(objs) + " .\n";
        }
        if (rng.chance(0.5)) doc += "ex:S a sh:NodeShape .\n";
        rdf::Graph graph;
        try {
            graph = rdf::parse_turtle(kPrefixes + doc);
        } catch (const ParseError&) {
            continue;
        }
        try {
            auto g = shacl::load_shapes(graph);
            auto r = shacl::resolve_inheritance(g);
            (void)r;
            ++loaded;
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(loaded > 0);
    CHECK(rejected > 0);
}

TEST_CASE("resolve_inheritance") {
    SUBCASE("shape without super-shapes is unchanged") {
        auto g = load("ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount 1 ] .");
        auto r = shacl::resolve_inheritance(g);
        CHECK(r.shapes[0].properties.size() == 1);
        CHECK(r.shapes[0].properties[0].constraints == g.shapes[0].properties[0].constraints);
    }
    SUBCASE("Resource shape plus the entity super-shape has 3 property shapes") {
        auto r = shacl::resolve_inheritance(ocdm());
        const auto* shape = r.find(kSchema + "BibliographicResourceShape");
        REQUIRE(shape);
        REQUIRE(shape->properties.size() == 3);
        CHECK(shape->properties[0].path == rdf::vocab::kRdfType);
        CHECK(shape->properties[1].path == kTitle);
        CHECK(shape->properties[2].path == "http://purl.org/spar/datacite/hasIdentifier");
        CHECK(shape->super_shapes.empty());
        for (std::size_t i = 0; i < shape->properties.size(); ++i) {
            CHECK(shape->properties[i].source_order == static_cast<std::int64_t>(i));
        }
    }
    SUBCASE("missing super-shape is a warning") {
        auto r = shacl::resolve_inheritance(resource_shape());
        CHECK(r.shapes[0].properties.size() == 2);
        CHECK(has_warning(r, "BibliographicEntityShape"));
    }
    SUBCASE("two-shape cycle") {
        auto g = load("ex:A a sh:NodeShape ; rdfs:subClassOf ex:B . ex:B a sh:NodeShape ; rdfs:subClassOf ex:A .");
        CHECK_THROWS_WITH_AS(shacl::resolve_inheritance(g), doctest::Contains("cycle"), ShapeError);
    }
    SUBCASE("self cycle") {
        auto g = load("ex:A a sh:NodeShape ; rdfs:subClassOf ex:A .");
        CHECK_THROWS_AS(shacl::resolve_inheritance(g), ShapeError);
    }
    SUBCASE("transitive, own first, idempotent") {
        auto g = load(R"(
            ex:A a sh:NodeShape ; rdfs:subClassOf ex:B ; sh:property [ sh:path ex:a ] .
            ex:B a sh:NodeShape ; rdfs:subClassOf ex:C ; sh:property [ sh:path ex:b ] .
            ex:C a sh:NodeShape ; sh:property [ sh:path ex:c ] .
        )");
        auto once = shacl::resolve_inheritance(g);
        auto twice = shacl::resolve_inheritance(once);
        const auto* a = once.find("http://e/A");
        REQUIRE(a);
        REQUIRE(a->properties.size() == 3);
        CHECK(a->properties[0].path == "http://e/a");
        CHECK(a->properties[1].path == "http://e/b");
        CHECK(a->properties[2].path == "http://e/c");
        REQUIRE(twice.shapes.size() == once.shapes.size());
        for (std::size_t i = 0; i < once.shapes.size(); ++i) {
            CHECK(twice.shapes[i].id == once.shapes[i].id);
            REQUIRE(twice.shapes[i].properties.size() == once.shapes[i].properties.size());
            for (std::size_t k = 0; k < once.shapes[i].properties.size(); ++k) {
                CHECK(twice.shapes[i].properties[k].path == once.shapes[i].properties[k].path);
                CHECK(twice.shapes[i].properties[k].constraints == once.shapes[i].properties[k].constraints);
                CHECK(twice.shapes[i].properties[k].source_order == once.shapes[i].properties[k].source_order);
            }
        }
    }
}

TEST_CASE("shape_for_class") {
    auto r = shacl::resolve_inheritance(resource_shape());
    const auto* s = shacl::shape_for_class(r, kFabio + "Expression");
    REQUIRE(s);
    CHECK(s->id == kSchema + "BibliographicResourceShape");
    CHECK(shacl::shape_for_class(r, "http://xmlns.com/foaf/0.1/Agent") == nullptr);

    auto two = shacl::resolve_inheritance(load("ex:Z a sh:NodeShape ; sh:targetClass ex:C . "
                                               "ex:M a sh:NodeShape ; sh:targetClass ex:C ."));
    REQUIRE(shacl::shape_for_class(two, "http://e/C"));
    CHECK(shacl::shape_for_class(two, "http://e/C")->id == "http://e/M");
}
