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

#include "stabcert/solutions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stabcert {
namespace {

void check_distinct(const std::vector<Int>& values) {
    std::unordered_set<Int, IntHash> seen;
    for (const auto& v : values)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate value in prefix: " + v.get_str());
}

// All assignments of value indices to coordinates [from, to), in
// lexicographic order, with the signed partial sum alongside.
struct HalfEnumerator {
    const std::vector<Int>& values;
    const std::vector<long>& coeffs;
    size_t from, to;

    template <typename F>
    void for_each(F&& f) const {
        std::vector<size_t> idx(to - from, 0);
        if (idx.empty()) {
            f(idx, Int(0));
            return;
        }
        const size_t n = values.size();
        if (n == 0) return;
        while (true) {
            Int sum = 0;
            for (size_t j = 0; j < idx.size(); ++j)
                sum += Int(coeffs[from + j]) * values[idx[j]];
            f(idx, sum);
            size_t j = idx.size();
            while (j-- > 0) {
                if (++idx[j] < n) break;
                idx[j] = 0;
                if (j == 0) return;
            }
        }
    }
};

}  // namespace

void SignedQuery::validate(long coefficient_cap) const {
    if (coefficients.empty()) throw std::invalid_argument("arity must be >= 1");
    for (long d : coefficients) {
        if (d == 0) throw std::invalid_argument("zero coefficient in query");
        if (d > coefficient_cap || d < -coefficient_cap)
            throw std::invalid_argument("coefficient magnitude above cap");
    }
}

void enumerate_solutions_stream(
    const std::vector<Int>& values, const SignedQuery& query,
    const SolutionLimits& limits,
    const std::function<bool(const std::vector<Int>&)>& on_tuple) {
    query.validate(limits.coefficient_cap);
    check_distinct(values);
    const size_t k = query.arity();
    const size_t n = values.size();
    const size_t left = (k + 1) / 2;  // split at ceil(k/2)

    // Budget check before building the smaller (right) table.
    double table_size = 1;
    for (size_t i = left; i < k; ++i) table_size *= static_cast<double>(n);
    if (table_size > static_cast<double>(limits.table_budget))
        throw std::runtime_error("enumeration budget exceeded");

    // Right half table: partial sum -> right index assignments in lex order.
    std::unordered_map<Int, std::vector<std::vector<size_t>>, IntHash> right;
    HalfEnumerator right_enum{values, query.coefficients, left, k};
    right_enum.for_each([&](const std::vector<size_t>& idx, const Int& sum) {
        right[sum].push_back(idx);
    });

    bool stop = false;
    std::vector<Int> tuple(k);
    HalfEnumerator left_enum{values, query.coefficients, 0, left};
    left_enum.for_each([&](const std::vector<size_t>& idx, const Int& sum) {
        if (stop) return;
        auto it = right.find(query.target - sum);
        if (it == right.end()) return;
        for (size_t j = 0; j < left; ++j) tuple[j] = values[idx[j]];
        for (const auto& ridx : it->second) {
            for (size_t j = 0; j < ridx.size(); ++j)
                tuple[left + j] = values[ridx[j]];
            if (!on_tuple(tuple)) {
                stop = true;
                return;
            }
        }
    });
}

SolutionList enumerate_solutions(const std::vector<Int>& values,
                                 const SignedQuery& query,
                                 const SolutionLimits& limits) {
    SolutionList out;
    enumerate_solutions_stream(values, query, limits,
                               [&](const std::vector<Int>& tuple) {
                                   ++out.count;
                                   if (out.tuples.size() < limits.materialize_cap)
                                       out.tuples.push_back(tuple);
                                   else
                                       out.truncated = true;
                                   return true;
                               });
    return out;
}

bool subsums_clear(const std::vector<Int>& tuple, const SignedQuery& query) {
    const size_t k = tuple.size();
    if (k < 2 || query.forbidden.empty()) return true;
    for (unsigned long mask = 1; mask + 1 < (1ul << k); ++mask) {
        Int sum = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1ul << i)) sum += Int(query.coefficients[i]) * tuple[i];
        if (query.forbidden.count(sum)) return false;
    }
    return true;
}

std::vector<std::vector<Int>> filter_subsums(
    const std::vector<std::vector<Int>>& solutions, const SignedQuery& query) {
    std::vector<std::vector<Int>> out;
    out.reserve(solutions.size());
    for (const auto& t : solutions)
        if (subsums_clear(t, query)) out.push_back(t);
    return out;
}

FiberSpectrum fiber_spectrum(const std::vector<std::vector<Int>>& tuples) {
    FiberSpectrum spec;
    if (tuples.empty()) return spec;
    spec.arity = tuples[0].size();
    spec.per_coordinate_max.assign(spec.arity, 0);
    for (const auto& t : tuples)
        if (t.size() != spec.arity)
            throw std::invalid_argument("mixed arities in fiber_spectrum");
    for (size_t i = 0; i < spec.arity; ++i) {
        std::unordered_map<Int, unsigned long long, IntHash> counts;
        for (const auto& t : tuples) ++counts[t[i]];
        for (const auto& [value, c] : counts) {
            if (c > spec.per_coordinate_max[i]) spec.per_coordinate_max[i] = c;
            if (c > spec.bound) {
                spec.bound = c;
                spec.witness_coordinate = i;
                spec.witness_value = value;
            }
        }
    }
    return spec;
}

SolutionList enumerate_solutions_bruteforce(const std::vector<Int>& values,
                                            const SignedQuery& query) {
    query.validate();
    check_distinct(values);
    const size_t k = query.arity();
    const size_t n = values.size();
    SolutionList out;
    if (n == 0) return out;
    std::vector<size_t> idx(k, 0);
    while (true) {
        Int sum = 0;
        for (size_t i = 0; i < k; ++i)
            sum += Int(query.coefficients[i]) * values[idx[i]];
        if (sum == query.target) {
            ++out.count;
            std::vector<Int> t(k);
            for (size_t i = 0; i < k; ++i) t[i] = values[idx[i]];
            out.tuples.push_back(std::move(t));
        }
        size_t j = k;
        bool done = true;
        while (j-- > 0) {
            if (++idx[j] < n) {
                done = false;
                break;
            }
            idx[j] = 0;
        }
        if (done) break;
    }
    return out;
}

}  // namespace stabcert
