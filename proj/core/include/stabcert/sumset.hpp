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

#pragma once

#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

/// Longest arithmetic progression found in a finite set.
struct ArithmeticProgression {
    size_t length = 0;
    Int start = 0;
    Int difference = 0;
};

/// Sigma_n(+-A) intersected with [-M, M]: all sums of 1..n terms drawn from
/// A and -A, plus the longest arithmetic progression inside the window.
struct SumsetReport {
    size_t n = 0;
    Int window = 0;
    std::vector<Int> elements;  // sorted, deduplicated
    ArithmeticProgression longest_ap;
};

struct SumsetOptions {
    size_t set_budget = 2000000;  // level-set size cap during accumulation
    size_t ap_budget = 5000;      // max window elements for the quadratic AP scan
};

/// Requires n >= 1, M >= 1. Exact; errors when budgets are exceeded.
SumsetReport sumset_ap(const std::vector<Int>& values, size_t n, const Int& window,
                       const SumsetOptions& opts = {});

/// Exact longest AP in a sorted, deduplicated value list (pair-DP scan).
ArithmeticProgression longest_arithmetic_progression(const std::vector<Int>& sorted);

}  // namespace stabcert
