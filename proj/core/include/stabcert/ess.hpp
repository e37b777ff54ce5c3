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

#include <set>
#include <vector>

#include "stabcert/solutions.hpp"

namespace stabcert {

/// Per-arity empirical statistics for the signed-equation solution bound:
/// n_k = max over sign vectors c in {1,-1}^k and achievable targets
/// r not in U_k of the number of ordered k-tuples over the prefix with
/// c_1 a_1 + ... + c_k a_k = r and no proper nonempty subsum in V_k.
struct EssArityProfile {
    size_t k = 0;
    std::set<Int> u, v;                // exception sets used
    unsigned long long n_k = 0;        // exact for the given prefix
    std::vector<long> witness_coeffs;  // sign vector achieving the max
    Int witness_target = 0;
    std::vector<std::vector<Int>> witness_tuples;  // possibly truncated
    bool witness_truncated = false;
};

struct EssProfile {
    std::vector<EssArityProfile> per_arity;  // k = 1..kmax
};

struct EssOptions {
    size_t witness_cap = 64;        // tuples kept per witness
    size_t table_budget = 50000000;  // convolution entries before erroring
};

/// Scans all sign vectors and all achievable targets (read off the
/// partial-sum tables; unachievable targets contribute zero counts).
/// Requires kmax >= 1 and a nonempty, duplicate-free prefix.
EssProfile ess_profile(const std::vector<Int>& values, size_t kmax,
                       const std::vector<std::set<Int>>& u_per_k,
                       const std::vector<std::set<Int>>& v_per_k,
                       const EssOptions& opts = {});

}  // namespace stabcert
