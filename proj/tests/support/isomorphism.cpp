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

#include "isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace testing {

using shaclform::rdf::Graph;
using shaclform::rdf::Term;
using shaclform::rdf::Triple;

namespace {

struct Side {
    std::vector<Term> blanks;
    std::vector<Triple> triples;
    std::set<Triple> lookup;
    // Per blank: number of occurrences as subject and object, per predicate.
    std::map<Term, std::multiset<std::string>> signature;
};

Side describe(const Graph& g) {
    Side s;
    s.triples = g.triples();
    s.lookup.insert(s.triples.begin(), s.triples.end());
    std::set<Term> blanks;
    for (const auto& t : s.triples) {
        if (t.subject.is_blank()) {
            blanks.insert(t.subject);
            s.signature[t.subject].insert("s " + t.predicate.value());
        }
        if (t.object.is_blank()) {
            blanks.insert(t.object);
            s.signature[t.object].insert("o " + t.predicate.value());
        }
    }
    s.blanks.assign(blanks.begin(), blanks.end());
    return s;
}

class Search {
public:
    Search(const Side& a, const Side& b) : a_(a), b_(b) {}

    bool run() { return extend(0); }

private:
    Term map(const Term& t) const {
        if (!t.is_blank()) return t;
        auto it = mapping_.find(t);
        return it == mapping_.end() ? Term{} : it->second;
    }

    bool mapped(const Term& t) const { return !t.is_blank() || mapping_.contains(t); }

    // Every triple of a whose blanks are all mapped must exist in b.
    bool consistent(const Term& just_mapped) const {
        for (const auto& t : a_.triples) {
            if (t.subject != just_mapped && t.object != just_mapped) continue;
            if (!mapped(t.subject) || !mapped(t.object)) continue;
            if (!b_.lookup.contains(Triple{map(t.subject), t.predicate, map(t.object)})) return false;
        }
        return true;
    }

    bool extend(std::size_t i) {
        if (i == a_.blanks.size()) return true;
        const Term& from = a_.blanks[i];
        const auto& sig = a_.signature.at(from);
        for (const auto& to : b_.blanks) {
            if (used_.contains(to) || b_.signature.at(to) != sig) continue;
            mapping_[from] = to;
            used_.insert(to);
            if (consistent(from) && extend(i + 1)) return true;
            mapping_.erase(from);
            used_.erase(to);
        }
        return false;
    }

    const Side& a_;
    const Side& b_;
    std::map<Term, Term> mapping_;
    std::set<Term> used_;
};

}  // namespace

bool isomorphic(const Graph& ga, const Graph& gb) {
    if (ga.size() != gb.size()) return false;
    Side a = describe(ga);
    Side b = describe(gb);
    if (a.blanks.size() != b.blanks.size()) return false;
    for (const auto& t : a.triples) {
        if (!t.subject.is_blank() && !t.object.is_blank() && !b.lookup.contains(t)) return false;
    }
    // Equal sizes plus an injective triple mapping make the mapping onto.
    return Search(a, b).run();
}

}  // namespace testing
