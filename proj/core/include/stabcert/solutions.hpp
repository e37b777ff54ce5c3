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

#include <functional>
#include <set>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

/// A linear-equation instance d_1 a_1 + ... + d_k a_k = r over a finite set,
/// with forbidden proper-subsum values V.
struct SignedQuery {
    std::vector<long> coefficients;  // all nonzero
    Int target = 0;
    std::set<Int> forbidden;

    size_t arity() const { return coefficients.size(); }
    /// Throws on empty/zero coefficients or |d_i| above the magnitude cap.
    void validate(long coefficient_cap = 8) const;
};

struct SolutionLimits {
    size_t materialize_cap = 1000000;  // tuples stored; counts stay exact
    size_t table_budget = 50000000;    // half-table entries before erroring
    long coefficient_cap = 8;
};

struct SolutionList {
    unsigned long long count = 0;  // exact
    std::vector<std::vector<Int>> tuples;  // lexicographic, possibly truncated
    bool truncated = false;
};

/// Ordered k-tuples over `values` satisfying the equation, by
/// meet-in-the-middle partial-sum hashing split at ceil(k/2). Values must be
/// pairwise distinct (the semantics count over a set, not a multiset).
SolutionList enumerate_solutions(const std::vector<Int>& values,
                                 const SignedQuery& query,
                                 const SolutionLimits& limits = {});

/// Streaming variant: visits every solution in lexicographic order without
/// materializing. Return false from the callback to stop early.
void enumerate_solutions_stream(
    const std::vector<Int>& values, const SignedQuery& query,
    const SolutionLimits& limits,
    const std::function<bool(const std::vector<Int>&)>& on_tuple);

/// Keeps exactly the tuples whose every proper nonempty signed subsum
/// avoids query.forbidden. Arity-1 queries pass through.
std::vector<std::vector<Int>> filter_subsums(
    const std::vector<std::vector<Int>>& solutions, const SignedQuery& query);

/// True iff every proper nonempty signed subsum of the tuple avoids V.
bool subsums_clear(const std::vector<Int>& tuple, const SignedQuery& query);

/// Per-coordinate fiber statistics of a list of k-tuples.
struct FiberSpectrum {
    size_t arity = 0;
    std::vector<unsigned long long> per_coordinate_max;
    unsigned long long bound = 0;  // N = max over coordinates and values
    size_t witness_coordinate = 0;
    Int witness_value = 0;
};

/// Throws on mixed arities.
FiberSpectrum fiber_spectrum(const std::vector<std::vector<Int>>& tuples);

/// Test oracle: full k-fold Cartesian scan.
SolutionList enumerate_solutions_bruteforce(const std::vector<Int>& values,
                                            const SignedQuery& query);

}  // namespace stabcert
