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
#include <set>

#include "stabcert/sumset.hpp"

using namespace stabcert;

namespace {

// Independent oracle: longest AP by scanning every (start, difference) pair.
size_t ap_oracle(const std::vector<Int>& sorted) {
    if (sorted.empty()) return 0;
    std::set<Int> s(sorted.begin(), sorted.end());
    size_t best = 1;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            const Int d = sorted[j] - sorted[i];
            size_t len = 2;
            Int next = sorted[j] + d;
            while (s.count(next)) {
                ++len;
                next += d;
            }
            best = std::max(best, len);
        }
    return best;
}

// Independent oracle: all sums of 1..n signed terms within the window.
std::set<Int> sumset_oracle(const std::vector<Int>& a, size_t n, const Int& m) {
    std::set<Int> level = {0};
    std::set<Int> result;
    for (size_t step = 0; step < n; ++step) {
        std::set<Int> next;
        for (const auto& s : level)
            for (const auto& v : a) {
                next.insert(s + v);
                next.insert(s - v);
            }
        level = next;
        for (const auto& s : level)
            if (s >= -m && s <= m) result.insert(s);
    }
    return result;
}

}  // namespace

TEST_CASE("odd numbers 1,3,5,7 at n=1: the signed set is itself an 8-term AP") {
    const auto report = sumset_ap({1, 3, 5, 7}, 1, 10);
    const std::set<Int> expected = {-7, -5, -3, -1, 1, 3, 5, 7};
    CHECK(std::set<Int>(report.elements.begin(), report.elements.end()) == expected);
    CHECK(report.longest_ap.length == 8);
    CHECK(report.longest_ap.difference == 2);
    CHECK(ap_oracle(report.elements) == 8);
}

TEST_CASE("powers of two stay AP-sparse at n=2") {
    std::vector<Int> a;
    Int p = 1;
    for (int i = 0; i <= 8; ++i) {
        a.push_back(p);
        p *= 2;
    }
    const auto report = sumset_ap(a, 2, 600);
    // +-2^i +- 2^j covers every integer in [-10, 10], a 21-term AP; the
    // exhaustive oracle pins the exact value.
    CHECK(report.longest_ap.length == 21);
    CHECK(report.longest_ap.length == ap_oracle(report.elements));
    const auto oracle = sumset_oracle(a, 2, 600);
    CHECK(std::set<Int>(report.elements.begin(), report.elements.end()) == oracle);
}

TEST_CASE("interval control case returns full length") {
    std::vector<Int> a;
    for (int i = 1; i <= 20; ++i) a.push_back(i);
    const auto report = sumset_ap(a, 1, 20);
    // The 0 gap splits difference-1 runs; the odd numbers -19..19 give 20.
    CHECK(report.longest_ap.length == 20);
    CHECK(report.longest_ap.length == ap_oracle(report.elements));
}

TEST_CASE("reported AP is contained in the element set") {
    const auto report = sumset_ap({2, 5, 11, 17}, 2, 40);
    const std::set<Int> elems(report.elements.begin(), report.elements.end());
    Int x = report.longest_ap.start;
    for (size_t i = 0; i < report.longest_ap.length; ++i) {
        CHECK(elems.count(x) == 1);
        x += report.longest_ap.difference;
    }
    CHECK(report.longest_ap.length == ap_oracle(report.elements));
}

TEST_CASE("input validation") {
    CHECK_THROWS(sumset_ap({1, 2}, 0, 10));
    CHECK_THROWS(sumset_ap({1, 2}, 1, 0));
}
