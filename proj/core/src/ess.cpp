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

#include "stabcert/ess.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace stabcert {
namespace {

using SumCounts = std::unordered_map<Int, unsigned long long, IntHash>;

// Distribution of c_1 a_1 + ... + c_k a_k over all ordered k-tuples, by
// iterated convolution. Throws when the running work estimate exceeds the
// budget (interval-like sets stay small; generic sets explode by design).
SumCounts sum_distribution(const std::vector<Int>& values,
                           const std::vector<long>& coeffs, size_t budget) {
    SumCounts dist;
    dist.emplace(Int(0), 1);
    size_t work = 0;
    for (long c : coeffs) {
        work += dist.size() * values.size();
        if (work > budget)
            throw std::runtime_error("ess_profile budget exceeded");
        SumCounts next;
        next.reserve(dist.size());
        for (const auto& [sum, count] : dist)
            for (const auto& a : values) next[sum + Int(c) * a] += count;
        dist = std::move(next);
    }
    return dist;
}

}  // namespace

EssProfile ess_profile(const std::vector<Int>& values, size_t kmax,
                       const std::vector<std::set<Int>>& u_per_k,
                       const std::vector<std::set<Int>>& v_per_k,
                       const EssOptions& opts) {
    if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
    if (values.empty()) throw std::invalid_argument("empty prefix");

    EssProfile profile;
    for (size_t k = 1; k <= kmax; ++k) {
        EssArityProfile arity;
        arity.k = k;
        if (k <= u_per_k.size()) arity.u = u_per_k[k - 1];
        if (k <= v_per_k.size()) arity.v = v_per_k[k - 1];

        SolutionLimits limits;
        limits.table_budget = opts.table_budget;

        std::vector<long> coeffs(k, 1);
        for (unsigned long signs = 0; signs < (1ul << k); ++signs) {
            for (size_t i = 0; i < k; ++i)
                coeffs[i] = (signs >> i) & 1 ? -1 : 1;

            auto dist = sum_distribution(values, coeffs, opts.table_budget);
            std::vector<std::pair<Int, unsigned long long>> candidates(
                dist.begin(), dist.end());
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& a, const auto& b) {
                          return a.second != b.second ? a.second > b.second
                                                      : a.first < b.first;
                      });

            for (const auto& [r, unfiltered] : candidates) {
                // Filtering only removes tuples, so the unfiltered count is
                // an upper bound; stop once it cannot beat the best.
                if (unfiltered <= arity.n_k) break;
                if (arity.u.count(r)) continue;

                SignedQuery query{coeffs, r, arity.v};
                unsigned long long filtered = 0;
                std::vector<std::vector<Int>> witness;
                bool truncated = false;
                enumerate_solutions_stream(
                    values, query, limits, [&](const std::vector<Int>& t) {
                        if (subsums_clear(t, query)) {
                            ++filtered;
                            if (witness.size() < opts.witness_cap)
                                witness.push_back(t);
                            else
                                truncated = true;
                        }
                        return true;
                    });
                if (filtered > arity.n_k) {
                    arity.n_k = filtered;
                    arity.witness_coeffs = coeffs;
                    arity.witness_target = r;
                    arity.witness_tuples = std::move(witness);
                    arity.witness_truncated = truncated;
                }
            }
        }
        profile.per_arity.push_back(std::move(arity));
    }
    return profile;
}

}  // namespace stabcert
