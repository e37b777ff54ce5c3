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

#include "stabcert/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace stabcert {
namespace {

// Term of an atom template: a variable slot (index into the type's variable
// tuple) or a fixed parameter atom.
struct Term {
    bool is_var;
    size_t index;  // variable slot or atom index
};

std::vector<std::vector<Term>> relation_atom_templates(size_t arity, size_t n_vars,
                                                       const std::vector<size_t>& params) {
    // All assignments of {variables} union B to the relation's positions,
    // with at least one variable.
    std::vector<std::vector<Term>> out;
    const size_t choices = n_vars + params.size();
    std::vector<size_t> pick(arity, 0);
    while (true) {
        std::vector<Term> atom(arity);
        bool has_var = false;
        for (size_t i = 0; i < arity; ++i) {
            if (pick[i] < n_vars) {
                atom[i] = {true, pick[i]};
                has_var = true;
            } else {
                atom[i] = {false, params[pick[i] - n_vars]};
            }
        }
        if (has_var) out.push_back(std::move(atom));
        size_t j = arity;
        bool done = true;
        while (j-- > 0) {
            if (++pick[j] < choices) {
                done = false;
                break;
            }
            pick[j] = 0;
        }
        if (done) break;
    }
    return out;
}

struct BoolVecHash {
    size_t operator()(const std::vector<bool>& v) const {
        size_t h = v.size();
        for (bool b : v) h = h * 131 + (b ? 7 : 3);
        return h;
    }
};

std::unordered_set<size_t> atom_set(const std::vector<size_t>& tuple) {
    return {tuple.begin(), tuple.end()};
}

bool disjoint_from(const std::unordered_set<size_t>& used,
                   const std::vector<size_t>& tuple) {
    for (size_t a : tuple)
        if (used.count(a)) return false;
    return true;
}

}  // namespace

void FinStructure::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& a : universe)
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate atom: " + a);
    for (const auto& [name, rel] : relations) {
        if (rel.arity == 0)
            throw std::invalid_argument("relation of arity 0: " + name);
        for (const auto& t : rel.tuples) {
            if (t.size() != rel.arity)
                throw std::invalid_argument("arity mismatch in relation " + name);
            for (size_t a : t)
                if (a >= universe.size())
                    throw std::invalid_argument("tuple entry outside universe in " + name);
        }
    }
}

size_t FinStructure::atom_index(const std::string& name) const {
    auto it = std::find(universe.begin(), universe.end(), name);
    if (it == universe.end()) throw std::invalid_argument("unknown atom: " + name);
    return static_cast<size_t>(it - universe.begin());
}

FinStructure FinStructure::from_json(const nlohmann::json& j) {
    FinStructure s;
    for (const auto& atom : j.at("universe")) {
        if (atom.is_string()) s.universe.push_back(atom.get<std::string>());
        else s.universe.push_back(std::to_string(atom.get<long long>()));
    }
    for (const auto& [name, rel] : j.at("relations").items()) {
        Relation r;
        r.arity = rel.at("arity").get<size_t>();
        for (const auto& tuple : rel.at("tuples")) {
            std::vector<size_t> t;
            for (const auto& entry : tuple) {
                std::string key = entry.is_string() ? entry.get<std::string>()
                                                    : std::to_string(entry.get<long long>());
                t.push_back(s.atom_index(key));
            }
            r.tuples.insert(std::move(t));
        }
        s.relations.emplace(name, std::move(r));
    }
    s.validate();
    return s;
}

std::vector<QfType> qf_types(const FinStructure& structure,
                             const std::string& relation,
                             const std::vector<size_t>& var_positions,
                             const std::vector<size_t>& params) {
    if (var_positions.empty())
        throw std::invalid_argument("variable tuple must be nonempty");
    for (size_t b : params)
        if (b >= structure.universe.size())
            throw std::invalid_argument("parameter outside universe");
    auto rit = structure.relations.find(relation);
    if (rit == structure.relations.end())
        throw std::invalid_argument("unknown relation: " + relation);
    const auto& rel = rit->second;
    for (size_t p : var_positions)
        if (p >= rel.arity)
            throw std::invalid_argument("variable position outside relation arity");

    const size_t n_vars = var_positions.size();
    const size_t n_atoms = structure.universe.size();
    const auto r_atoms = relation_atom_templates(rel.arity, n_vars, params);

    std::unordered_map<std::vector<bool>, size_t, BoolVecHash> index;
    std::vector<QfType> types;

    std::vector<size_t> assign(n_vars, 0);
    while (true) {
        std::vector<bool> diagram;
        diagram.reserve(r_atoms.size() + n_vars * n_vars + n_vars * params.size());
        std::vector<size_t> tuple(rel.arity, 0);
        for (const auto& atom : r_atoms) {
            for (size_t i = 0; i < rel.arity; ++i)
                tuple[i] = atom[i].is_var ? assign[atom[i].index] : atom[i].index;
            diagram.push_back(rel.tuples.count(tuple) > 0);
        }
        for (size_t i = 0; i < n_vars; ++i)
            for (size_t j = i + 1; j < n_vars; ++j)
                diagram.push_back(assign[i] == assign[j]);
        for (size_t i = 0; i < n_vars; ++i)
            for (size_t b : params) diagram.push_back(assign[i] == b);

        auto [it, fresh] = index.try_emplace(diagram, types.size());
        if (fresh) {
            QfType t;
            t.var_positions = var_positions;
            t.params = params;
            t.diagram = std::move(diagram);
            types.push_back(std::move(t));
        }
        types[it->second].realizations.push_back(assign);

        size_t j = n_vars;
        bool done = true;
        while (j-- > 0) {
            if (++assign[j] < n_atoms) {
                done = false;
                break;
            }
            assign[j] = 0;
        }
        if (done) break;
    }
    return types;
}

std::optional<std::vector<std::vector<size_t>>> find_m_array(const QfType& type,
                                                             size_t m,
                                                             size_t node_cap) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const auto& reals = type.realizations;

    // Greedy pass in realization order: a hit is a certificate.
    {
        std::vector<std::vector<size_t>> chosen;
        std::unordered_set<size_t> used;
        for (const auto& t : reals) {
            if (!disjoint_from(used, t)) continue;
            chosen.push_back(t);
            for (size_t a : atom_set(t)) used.insert(a);
            if (chosen.size() == m) return chosen;
        }
    }

    // Exact branch-and-bound over the realization list.
    size_t nodes = 0;
    std::vector<std::vector<size_t>> chosen;
    std::unordered_set<size_t> used;
    std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
        if (chosen.size() == m) return true;
        if (chosen.size() + (reals.size() - from) < m) return false;
        if (++nodes > node_cap)
            throw std::runtime_error("m-array packing node cap exceeded");
        for (size_t i = from; i < reals.size(); ++i) {
            if (!disjoint_from(used, reals[i])) continue;
            chosen.push_back(reals[i]);
            for (size_t a : atom_set(reals[i])) used.insert(a);
            if (dfs(i + 1)) return true;
            for (size_t a : atom_set(reals[i])) used.erase(a);
            chosen.pop_back();
        }
        return false;
    };
    if (dfs(0)) return chosen;
    return std::nullopt;
}

ArrayReport ub_array_scan(const FinStructure& structure, const std::string& relation,
                          size_t m, size_t n_bound, size_t bcap,
                          const ArrayScanOptions& opts) {
    structure.validate();
    if (bcap > structure.universe.size())
        throw std::invalid_argument("bcap exceeds universe size");
    auto rit = structure.relations.find(relation);
    if (rit == structure.relations.end())
        throw std::invalid_argument("unknown relation: " + relation);
    const size_t arity = rit->second.arity;
    const size_t n_atoms = structure.universe.size();

    ArrayReport report;
    report.m = m;
    report.n_bound = n_bound;
    report.seed = opts.seed;
    report.note =
        "empirical falsifier on a finite structure, not a proof about an "
        "infinite one; tuple disjointness collapses repeated coordinates";

    // Parameter sets: all subsets of size <= bcap in colex order, up to the
    // cap; uniform samples with the recorded seed beyond it.
    std::vector<std::vector<size_t>> param_sets;
    bool capped = false;
    for (size_t size = 0; size <= bcap && !capped; ++size) {
        std::vector<size_t> comb(size);
        for (size_t i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            if (size > n_atoms) break;
            if (param_sets.size() >= opts.subset_cap) {
                capped = true;
                break;
            }
            param_sets.push_back(comb);
            if (size == 0) break;
            // next combination in colex order
            size_t i = 0;
            while (i + 1 < size && comb[i] + 1 == comb[i + 1]) {
                comb[i] = i;
                ++i;
            }
            if (comb[i] + 1 >= n_atoms && i + 1 == size) break;
            ++comb[i];
        }
    }
    if (capped) {
        report.sampled = true;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<size_t> size_dist(0, bcap);
        for (size_t s = 0; s < opts.sample_extra; ++s) {
            const size_t size = size_dist(rng);
            std::vector<size_t> pool(n_atoms);
            for (size_t i = 0; i < n_atoms; ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<size_t> b(pool.begin(), pool.begin() + size);
            std::sort(b.begin(), b.end());
            param_sets.push_back(std::move(b));
        }
    }

    for (unsigned long mask = 1; mask < (1ul << arity); ++mask) {
        std::vector<size_t> var_positions;
        for (size_t i = 0; i < arity; ++i)
            if (mask & (1ul << i)) var_positions.push_back(i);
        for (const auto& params : param_sets) {
            ++report.instances_scanned;
            auto types = qf_types(structure, relation, var_positions, params);
            size_t supporting = 0;
            std::vector<QfType> sup_types;
            std::vector<std::vector<std::vector<size_t>>> sup_arrays;
            for (auto& t : types) {
                if (auto arr = find_m_array(t, m, opts.node_cap)) {
                    ++supporting;
                    sup_types.push_back(t);
                    sup_arrays.push_back(std::move(*arr));
                }
            }
            if (supporting > report.max_supporting_types) {
                report.max_supporting_types = supporting;
                if (supporting > n_bound && !report.violated) {
                    report.violated = true;
                }
                if (supporting > n_bound) {
                    report.witness_var_positions = var_positions;
                    report.witness_params = params;
                    report.witness_types = std::move(sup_types);
                    report.witness_arrays = std::move(sup_arrays);
                }
            }
        }
    }
    return report;
}

}  // namespace stabcert
