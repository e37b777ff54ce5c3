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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace stabcert {

/// Finite relational structure: named relations of fixed arity over a
/// finite universe of distinct atoms.
struct FinStructure {
    std::vector<std::string> universe;  // atom names, distinct
    struct Relation {
        size_t arity = 0;
        std::set<std::vector<size_t>> tuples;  // atom indices
    };
    std::map<std::string, Relation> relations;

    /// Throws on duplicate atoms, unknown tuple entries, or arity mismatch.
    void validate() const;
    static FinStructure from_json(const nlohmann::json& j);
    size_t atom_index(const std::string& name) const;
};

/// Complete quantifier-free type of a variable subtuple over parameters B,
/// in the language with the single relation R: the truth value of every
/// R-atom and equality atom mentioning at least one variable, together with
/// all realizations.
struct QfType {
    std::vector<size_t> var_positions;  // subtuple of the relation's positions
    std::vector<size_t> params;         // B, atom indices
    std::vector<bool> diagram;          // atom truth values, fixed atom order
    std::vector<std::vector<size_t>> realizations;  // pairwise distinct
};

/// Partitions all |x|-tuples over the universe by atomic diagram; empty
/// classes are omitted. Throws on empty x or B not contained in the universe.
std::vector<QfType> qf_types(const FinStructure& structure,
                             const std::string& relation,
                             const std::vector<size_t>& var_positions,
                             const std::vector<size_t>& params);

/// m pairwise disjoint realizations of the type, if they exist. A tuple's
/// atom set is its set of coordinates with repetitions collapsed, and
/// disjointness is of those sets. Greedy first; exact branch-and-bound with
/// a node cap after that. Throws std::runtime_error when the cap is hit
/// without a decision.
std::optional<std::vector<std::vector<size_t>>> find_m_array(
    const QfType& type, size_t m, size_t node_cap = 100000);

inline bool supports_m_array(const QfType& type, size_t m) {
    return find_m_array(type, m).has_value();
}

struct ArrayScanOptions {
    size_t subset_cap = 10000;   // parameter sets visited in colex order
    size_t sample_extra = 1000;  // uniform samples beyond the cap
    unsigned long seed = 0;
    size_t node_cap = 100000;
};

/// Scan verdict for the bounded-arrays test on one finite structure. This
/// is an empirical falsifier for the finite structure, not a proof about an
/// infinite one; `note` says so.
struct ArrayReport {
    size_t m = 0, n_bound = 0;
    size_t instances_scanned = 0;
    size_t max_supporting_types = 0;
    bool violated = false;
    std::vector<size_t> witness_var_positions;
    std::vector<size_t> witness_params;
    std::vector<QfType> witness_types;  // the supporting types at the witness
    std::vector<std::vector<std::vector<size_t>>> witness_arrays;  // per type
    bool sampled = false;
    unsigned long seed = 0;
    std::string note;
};

/// Scans all nonempty variable subtuples and all parameter sets with
/// |B| <= bcap. Requires bcap <= |universe|.
ArrayReport ub_array_scan(const FinStructure& structure, const std::string& relation,
                          size_t m, size_t n_bound, size_t bcap,
                          const ArrayScanOptions& opts = {});

}  // namespace stabcert
