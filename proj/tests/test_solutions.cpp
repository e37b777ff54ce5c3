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

#include "stabcert/solutions.hpp"

using namespace stabcert;

namespace {

std::vector<std::vector<Int>> tuples(const std::vector<Int>& values,
                                     const SignedQuery& q) {
    return enumerate_solutions(values, q).tuples;
}

}  // namespace

TEST_CASE("enumerate_solutions examples") {
    const std::vector<Int> a = {1, 2, 4, 8};
    CHECK(tuples(a, {{1, 1}, 5, {}}) ==
          std::vector<std::vector<Int>>{{1, 4}, {4, 1}});
    CHECK(tuples(a, {{1}, 2, {}}) == std::vector<std::vector<Int>>{{2}});
    CHECK(tuples(a, {{1, -1}, 0, {}}) ==
          std::vector<std::vector<Int>>{{1, 1}, {2, 2}, {4, 4}, {8, 8}});
}

TEST_CASE("query validation") {
    CHECK_THROWS(SignedQuery{{}, 0, {}}.validate());
    CHECK_THROWS(SignedQuery{{1, 0}, 0, {}}.validate());
    CHECK_THROWS(SignedQuery{{9}, 0, {}}.validate());
    CHECK_THROWS(enumerate_solutions({1, 1, 2}, {{1}, 1, {}}));
}

TEST_CASE("filter_subsums examples") {
    const SignedQuery q3{{1, -1, 1}, 2, {0}};
    const auto sols = tuples({1, 2, 3}, q3);
    CHECK(std::find(sols.begin(), sols.end(), std::vector<Int>{1, 1, 2}) !=
          sols.end());
    const auto filtered = filter_subsums(sols, q3);
    CHECK(std::find(filtered.begin(), filtered.end(), std::vector<Int>{1, 1, 2}) ==
          filtered.end());

    // Empty V is the identity.
    const SignedQuery q_empty{{1, -1, 1}, 2, {}};
    CHECK(filter_subsums(sols, q_empty) == sols);

    // V={3} does not catch the singleton subsums of (1,2).
    const SignedQuery q2{{1, 1}, 3, {3}};
    CHECK(subsums_clear({1, 2}, q2));
    CHECK(!subsums_clear({1, 2}, SignedQuery{{1, 1}, 3, {2}}));
}

TEST_CASE("matches brute force on random queries") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> val(-15, 15), coeff(-3, 3);
    std::uniform_int_distribution<size_t> arity(1, 4), nvals(3, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<Int> value_set;
        const size_t nv = nvals(rng);
        while (value_set.size() < nv) value_set.insert(val(rng));
        const std::vector<Int> values(value_set.begin(), value_set.end());

        SignedQuery q;
        const size_t k = arity(rng);
        for (size_t i = 0; i < k; ++i) {
            int c = coeff(rng);
            if (c == 0) c = 1;
            q.coefficients.push_back(c);
        }
        q.target = val(rng) + val(rng);
        if (trial % 3 == 0) q.forbidden = {0, val(rng)};

        const auto fast = enumerate_solutions(values, q);
        const auto slow = enumerate_solutions_bruteforce(values, q);
        CHECK(fast.count == slow.count);
        CHECK(fast.tuples == slow.tuples);
        CHECK(filter_subsums(fast.tuples, q) == filter_subsums(slow.tuples, q));
    }
}

TEST_CASE("negation symmetry") {
    const std::vector<Int> a = {-3, 1, 2, 4, 8};
    const SignedQuery q{{1, -2, 1}, 3, {}};
    SignedQuery neg = q;
    for (auto& c : neg.coefficients) c = -c;
    neg.target = -q.target;
    CHECK(tuples(a, q) == tuples(a, neg));
}

TEST_CASE("permutation equivariance") {
    const std::vector<Int> a = {1, 2, 4, 8, 16};
    const SignedQuery q{{1, 2, -1}, 4, {}};
    const SignedQuery perm{{2, -1, 1}, 4, {}};  // coordinates rotated left
    auto rotated = tuples(a, q);
    for (auto& t : rotated) std::rotate(t.begin(), t.begin() + 1, t.end());
    auto expected = tuples(a, perm);
    std::sort(rotated.begin(), rotated.end());
    std::sort(expected.begin(), expected.end());
    CHECK(rotated == expected);
}

TEST_CASE("enlarging V never grows the filtered list") {
    const std::vector<Int> a = {-5, -2, 1, 3, 4, 7};
    SignedQuery q{{1, 1, -1}, 2, {0}};
    const auto sols = tuples(a, q);
    size_t prev = filter_subsums(sols, q).size();
    for (int extra : {1, 3, -2, 4}) {
        q.forbidden.insert(extra);
        const size_t cur = filter_subsums(sols, q).size();
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("fiber_spectrum examples") {
    std::vector<std::vector<Int>> diagonal;
    for (int i = 0; i < 5; ++i) diagonal.push_back({i, i});
    CHECK(fiber_spectrum(diagonal).bound == 1);

    std::vector<std::vector<Int>> full;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) full.push_back({i, j});
    CHECK(fiber_spectrum(full).bound == 5);

    // a1 + a2 = r: fixing either coordinate pins the other.
    const auto sols = tuples({1, 2, 4, 8, -3, 6}, {{1, 1}, 5, {}});
    if (!sols.empty()) CHECK(fiber_spectrum(sols).bound == 1);

    CHECK_THROWS(fiber_spectrum({{1, 2}, {1}}));
}

TEST_CASE("streaming enumeration is lexicographic and stoppable") {
    const std::vector<Int> a = {1, 2, 3, 4, 5, 6};
    const SignedQuery q{{1, 1}, 7, {}};
    std::vector<std::vector<Int>> seen;
    enumerate_solutions_stream(a, q, {}, [&](const std::vector<Int>& t) {
        seen.push_back(t);
        return seen.size() < 3;
    });
    CHECK(seen.size() == 3);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.front() == std::vector<Int>{1, 6});
}
