/*
   Copyright 2026 the stabcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "stabcert/structure.hpp"

using namespace stabcert;

namespace {

FinStructure successor(size_t n) {
    FinStructure s;
    FinStructure::Relation rel;
    rel.arity = 2;
    for (size_t i = 1; i <= n; ++i) {
        s.universe.push_back(std::to_string(i));
        if (i < n) rel.tuples.insert({i - 1, i});
    }
    s.relations["R"] = rel;
    s.validate();
    return s;
}

FinStructure complete_bipartite() {
    FinStructure s;
    FinStructure::Relation rel;
    rel.arity = 2;
    for (size_t i = 1; i <= 12; ++i) s.universe.push_back(std::to_string(i));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 6; j < 12; ++j) rel.tuples.insert({i, j});
    s.relations["R"] = rel;
    s.validate();
    return s;
}

// Brute-force m-array decision by subset enumeration.
bool packing_oracle(const std::vector<std::vector<size_t>>& reals, size_t m) {
    const size_t n = reals.size();
    if (m > n) return false;
    std::vector<std::set<size_t>> atom_sets;
    for (const auto& r : reals) atom_sets.emplace_back(r.begin(), r.end());
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - m, mask.end(), true);
    do {
        std::set<size_t> used;
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            if (!mask[i]) continue;
            for (size_t atom : atom_sets[i]) {
                if (used.count(atom)) { ok = false; break; }
                used.insert(atom);
            }
        }
        if (ok) return true;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return false;
}

}  // namespace

TEST_CASE("from_json and validation") {
    const auto j = nlohmann::json::parse(R"({
      "universe": ["a", "b", "c"],
      "relations": {"R": {"arity": 2, "tuples": [["a","b"],["b","c"]]}}
    })");
    const auto s = FinStructure::from_json(j);
    CHECK(s.universe.size() == 3);
    CHECK(s.relations.at("R").tuples.size() == 2);
    CHECK(s.atom_index("b") == 1);

    FinStructure bad;
    bad.universe = {"a", "a"};
    CHECK_THROWS(bad.validate());
}

TEST_CASE("qf_types on the successor relation") {
    const auto s = successor(6);
    const auto types = qf_types(s, "R", {0, 1}, {});
    // The edge type {R(x1,x2), not R(x2,x1), x1 != x2} has the 5 edges.
    bool found_edge_type = false;
    size_t total = 0;
    for (const auto& t : types) {
        total += t.realizations.size();
        if (t.realizations.size() == 5) {
            std::set<std::vector<size_t>> got(t.realizations.begin(),
                                              t.realizations.end());
            found_edge_type |= (got == s.relations.at("R").tuples);
        }
    }
    CHECK(found_edge_type);
    CHECK(total == 36);  // partition of all pairs
}

TEST_CASE("types partition all tuples and realizations match diagrams") {
    const auto s = successor(5);
    const auto types = qf_types(s, "R", {0, 1}, {2});
    std::set<std::vector<size_t>> seen;
    for (const auto& t : types)
        for (const auto& r : t.realizations) CHECK(seen.insert(r).second);
    CHECK(seen.size() == 25);
}

TEST_CASE("unary-empty relation collapses to one type") {
    FinStructure s;
    s.universe = {"a", "b", "c"};
    s.relations["P"] = {1, {}};
    const auto types = qf_types(s, "P", {0}, {});
    CHECK(types.size() == 1);
    CHECK(types[0].realizations.size() == 3);
}

TEST_CASE("full parameter set separates every tuple") {
    const auto s = successor(4);
    const auto types = qf_types(s, "R", {0}, {0, 1, 2, 3});
    CHECK(types.size() == 4);
    for (const auto& t : types) CHECK(t.realizations.size() == 1);
}

TEST_CASE("supports_m_array examples") {
    const auto s = successor(6);
    const auto types = qf_types(s, "R", {0, 1}, {});
    const QfType* edge = nullptr;
    for (const auto& t : types)
        if (t.realizations.size() == 5) edge = &t;
    REQUIRE(edge != nullptr);

    CHECK(supports_m_array(*edge, 1));
    const auto arr = find_m_array(*edge, 3);
    REQUIRE(arr.has_value());
    std::set<size_t> used;
    for (const auto& t : *arr)
        for (size_t atom : t) CHECK(used.insert(atom).second);
    CHECK(!supports_m_array(*edge, 4));  // 6 atoms, disjoint pairs
}

TEST_CASE("full relation on 4 atoms has no 3-array of distinct pairs") {
    FinStructure s;
    FinStructure::Relation rel;
    rel.arity = 2;
    s.universe = {"a", "b", "c", "d"};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) rel.tuples.insert({i, j});
    s.relations["R"] = rel;
    const auto types = qf_types(s, "R", {0, 1}, {});
    for (const auto& t : types) {
        if (t.realizations.empty() || t.realizations[0][0] == t.realizations[0][1])
            continue;
        CHECK(supports_m_array(t, 2));
        CHECK(!supports_m_array(t, 3));
    }
}

TEST_CASE("packing agrees with subset enumeration") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<size_t> atom(0, 7), nreal(1, 12), len(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        QfType t;
        std::set<std::vector<size_t>> reals;
        const size_t n = nreal(rng);
        while (reals.size() < n) {
            std::vector<size_t> r;
            const size_t l = len(rng);
            for (size_t i = 0; i < l; ++i) r.push_back(atom(rng));
            reals.insert(r);
        }
        t.realizations.assign(reals.begin(), reals.end());
        for (size_t m = 1; m <= 5; ++m) {
            CHECK(supports_m_array(t, m) == packing_oracle(t.realizations, m));
        }
    }
}

TEST_CASE("m-array support is antitone in m") {
    const auto s = successor(10);
    const auto types = qf_types(s, "R", {0, 1}, {});
    for (const auto& t : types) {
        bool prev = true;
        for (size_t m = 1; m <= 6; ++m) {
            const bool cur = supports_m_array(t, m);
            CHECK((prev || !cur));
            prev = cur;
        }
    }
}

TEST_CASE("ub_array_scan: successor graph respects small bounds") {
    const auto report = ub_array_scan(successor(12), "R", 2, 4, 2);
    CHECK(!report.violated);
    CHECK(report.max_supporting_types <= 4);
    CHECK(report.note.find("finite") != std::string::npos);
}

TEST_CASE("ub_array_scan: complete bipartite relation violates at bcap 3") {
    const auto report = ub_array_scan(complete_bipartite(), "R", 2, 2, 3);
    CHECK(report.violated);
    CHECK(report.max_supporting_types > 2);
    // Witness re-verification: arrays disjoint, types from the witness instance.
    REQUIRE(!report.witness_types.empty());
    REQUIRE(report.witness_arrays.size() == report.witness_types.size());
    for (size_t i = 0; i < report.witness_arrays.size(); ++i) {
        const auto& arr = report.witness_arrays[i];
        CHECK(arr.size() >= 2);
        std::set<size_t> used;
        for (const auto& tuple : arr) {
            std::set<size_t> atoms(tuple.begin(), tuple.end());
            for (size_t a : atoms) CHECK(used.insert(a).second);
        }
        const auto& reals = report.witness_types[i].realizations;
        for (const auto& tuple : arr)
            CHECK(std::find(reals.begin(), reals.end(), tuple) != reals.end());
    }
}

TEST_CASE("ub_array_scan: empty relation is bounded by the equality types") {
    FinStructure s;
    s.universe = {"a", "b", "c", "d", "e"};
    s.relations["R"] = {2, {}};
    // Types are complete, so the equality pattern splits the pairs into two
    // classes (x1 = x2 and x1 != x2), and both support 2-arrays on 5 atoms.
    const auto at_two = ub_array_scan(s, "R", 2, 2, 1);
    CHECK(!at_two.violated);
    const auto at_one = ub_array_scan(s, "R", 2, 1, 1);
    CHECK(at_one.violated);
    CHECK(at_one.max_supporting_types == 2);
}
