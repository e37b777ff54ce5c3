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

#include "stabcert/sumset.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stabcert {

ArithmeticProgression longest_arithmetic_progression(
    const std::vector<Int>& sorted) {
    ArithmeticProgression best;
    const size_t m = sorted.size();
    if (m == 0) return best;
    best = {1, sorted[0], 0};
    if (m == 1) return best;

    // len[j][d] = length of the longest AP with difference d ending at j.
    std::vector<std::unordered_map<Int, size_t, IntHash>> len(m);
    for (size_t j = 1; j < m; ++j) {
        for (size_t i = 0; i < j; ++i) {
            Int d = sorted[j] - sorted[i];
            auto it = len[i].find(d);
            size_t l = it == len[i].end() ? 2 : it->second + 1;
            len[j][d] = l;
            if (l > best.length) {
                best.length = l;
                best.difference = d;
                best.start = sorted[j] - d * Int(static_cast<long>(l - 1));
            }
        }
    }
    return best;
}

SumsetReport sumset_ap(const std::vector<Int>& values, size_t n, const Int& window,
                       const SumsetOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (window < 1) throw std::invalid_argument("window must be >= 1");

    std::set<Int> pm;  // +-A
    for (const auto& v : values) {
        pm.insert(v);
        pm.insert(-v);
    }

    std::set<Int> in_window;
    std::unordered_set<Int, IntHash> level(pm.begin(), pm.end());
    for (size_t j = 1; j <= n; ++j) {
        if (j > 1) {
            std::unordered_set<Int, IntHash> next;
            if (level.size() * pm.size() > opts.set_budget)
                throw std::runtime_error("sumset budget exceeded");
            for (const auto& s : level)
                for (const auto& a : pm) next.insert(s + a);
            level = std::move(next);
        }
        for (const auto& s : level)
            if (abs(s) <= window) in_window.insert(s);
    }

    SumsetReport report;
    report.n = n;
    report.window = window;
    report.elements.assign(in_window.begin(), in_window.end());
    if (report.elements.size() > opts.ap_budget)
        throw std::runtime_error("arithmetic-progression scan budget exceeded");
    report.longest_ap = longest_arithmetic_progression(report.elements);
    return report;
}

}  // namespace stabcert
