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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stabcert/certify.hpp"
#include "stabcert/ess.hpp"
#include "stabcert/residues.hpp"
#include "stabcert/solutions.hpp"
#include "stabcert/specfile.hpp"
#include "stabcert/structure.hpp"
#include "stabcert/sumset.hpp"

namespace {

using namespace stabcert;

std::vector<Int> parse_int_list(const std::string& text) {
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::vector<Int> out;
    std::istringstream is(normalized);
    std::string token;
    while (is >> token) out.emplace_back(Int(token));
    return out;
}

void emit_json(const std::string& path, const nlohmann::ordered_json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

nlohmann::ordered_json tuples_json(const std::vector<std::vector<Int>>& tuples) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : tuples) arr.push_back(int_strings(t));
    return arr;
}

// --prefix N materializes terms a_0 .. a_N.
SequencePrefix materialize(const SequenceSpecFile& sf, size_t prefix_n) {
    switch (sf.kind) {
        case SequenceSpecFile::Kind::Recurrence:
            return eval_recurrence(sf.recurrence, prefix_n);
        case SequenceSpecFile::Kind::Lacunary:
            return eval_lacunary(sf.lacunary, prefix_n);
        case SequenceSpecFile::Kind::Explicit:
            return load_explicit_prefix(sf.data_path);
    }
    throw std::logic_error("bad spec kind");
}

int finish_certificate(const Certificate& cert, const std::string& json_path) {
    std::cout << cert.render_text();
    emit_json(json_path, cert.to_json());
    return cert.exit_code();
}

// "k:1,2,3" entries into per-arity exception sets.
void apply_exception_flags(const std::vector<std::string>& entries,
                           std::vector<std::set<Int>>& per_k) {
    for (const auto& entry : entries) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected k:list, got " + entry);
        size_t k = std::stoul(entry.substr(0, colon));
        if (k < 1 || k > per_k.size())
            throw std::invalid_argument("arity out of range in " + entry);
        for (const auto& v : parse_int_list(entry.substr(colon + 1)))
            per_k[k - 1].insert(v);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability-criterion certifier and combinatorial lab"};
    app.require_subcommand(1);

    std::string json_path;
    size_t prefix_n = 64;
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--prefix", prefix_n, "materialize terms a_0..a_N (default 64)");

    // certify recurrence|lacunary|fgm
    auto* certify = app.add_subcommand("certify", "produce a stability certificate");
    certify->require_subcommand(1);

    std::string rec_spec_path;
    auto* c_rec = certify->add_subcommand("recurrence", "recurrence criterion");
    c_rec->add_option("spec", rec_spec_path, "spec file")->required();

    std::string lac_spec_path;
    unsigned long lac_window = 16;
    std::string lac_growth = "1000";
    std::string lac_tol;
    auto* c_lac = certify->add_subcommand("lacunary", "tail-ratio criterion");
    c_lac->add_option("spec", lac_spec_path, "spec file")->required();
    c_lac->add_option("--window", lac_window, "tail-ratio window (default 16)");
    c_lac->add_option("--growth-threshold", lac_growth,
                      "divergence threshold, rational (default 1000)");
    c_lac->add_option("--tol", lac_tol,
                      "convergence drift tolerance, rational (default 1/10^9)");

    std::string fgm_spec_path, fgm_gens;
    auto* c_fgm = certify->add_subcommand("fgm", "finite-rank containment");
    c_fgm->add_option("spec", fgm_spec_path, "spec file")->required();
    c_fgm->add_option("--gens", fgm_gens, "generators, e.g. 2,3")->required();

    // weakmin
    std::string group_text;
    auto* weakmin = app.add_subcommand("weakmin", "weak-minimality decision");
    weakmin->add_option("group", group_text, "e.g. \"Z:1 Z/2:w\"")->required();

    // solutions
    std::string sol_set, sol_coeffs, sol_target = "0", sol_forbidden, sol_spec_path;
    auto* solutions = app.add_subcommand("solutions", "signed-equation solutions");
    solutions->add_option("--set", sol_set, "value set, e.g. 1,2,3");
    solutions->add_option("--spec", sol_spec_path, "spec file for the value set");
    solutions->add_option("--coeffs", sol_coeffs, "e.g. 1,-1,2")->required();
    solutions->add_option("--target", sol_target, "right-hand side (default 0)");
    solutions->add_option("--forbidden", sol_forbidden, "forbidden subsum values");

    // ess-profile
    std::string ess_set, ess_spec_path;
    size_t kmax = 3;
    std::vector<std::string> ess_u, ess_v;
    auto* ess = app.add_subcommand("ess-profile", "per-arity solution bounds");
    ess->add_option("--set", ess_set, "value set");
    ess->add_option("--spec", ess_spec_path, "spec file for the value set");
    ess->add_option("--kmax", kmax, "max arity (default 3)");
    ess->add_option("--u", ess_u, "target exceptions, k:list (repeatable)");
    ess->add_option("--v", ess_v, "subsum exceptions, k:list (repeatable)");

    // arrays
    std::string arr_structure, arr_relation = "R";
    size_t arr_m = 2, arr_n = 2, arr_bcap = 2;
    unsigned long seed = 0;
    auto* arrays = app.add_subcommand("arrays", "bounded-arrays scan");
    arrays->add_option("--structure", arr_structure, "structure JSON file")->required();
    arrays->add_option("--relation", arr_relation, "relation name (default R)");
    arrays->add_option("--m", arr_m, "array length (default 2)");
    arrays->add_option("--n", arr_n, "type-count bound (default 2)");
    arrays->add_option("--bcap", arr_bcap, "max parameter-set size (default 2)");
    arrays->add_option("--seed", seed, "sampling seed");

    // residues
    std::string res_spec_path;
    unsigned long res_mod = 2;
    auto* residues = app.add_subcommand("residues", "residue periodicity profile");
    residues->add_option("spec", res_spec_path, "spec file")->required();
    residues->add_option("--mod", res_mod, "modulus (default 2)")->required();

    // sumset-ap
    std::string sum_set, sum_window = "100";
    size_t sum_n = 1;
    auto* sumset = app.add_subcommand("sumset-ap", "signed sumset and longest AP");
    sumset->add_option("--set", sum_set, "value set")->required();
    sumset->add_option("--n", sum_n, "max number of summands (default 1)");
    sumset->add_option("--window", sum_window, "window bound M (default 100)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_rec) {
            const auto sf = load_spec_file(rec_spec_path);
            if (sf.kind != SequenceSpecFile::Kind::Recurrence)
                throw std::invalid_argument("spec kind is not recurrence");
            return finish_certificate(certify_recurrence(sf.recurrence), json_path);
        }
        if (*c_lac) {
            const auto sf = load_spec_file(lac_spec_path);
            KeplerOptions opts;
            opts.window = lac_window;
            opts.growth_threshold = parse_rational(lac_growth);
            if (!lac_tol.empty()) opts.convergence_tol = parse_rational(lac_tol);
            Certificate cert;
            if (sf.kind == SequenceSpecFile::Kind::Lacunary)
                cert = certify_lacunary(sf.lacunary, prefix_n, opts);
            else
                cert = certify_lacunary_prefix(materialize(sf, prefix_n), opts);
            return finish_certificate(cert, json_path);
        }
        if (*c_fgm) {
            const auto sf = load_spec_file(fgm_spec_path);
            const auto gens =
                GeneratorSet::from_generators(parse_rational_list(fgm_gens));
            return finish_certificate(certify_fgm(materialize(sf, prefix_n), gens),
                                      json_path);
        }
        if (*weakmin) {
            const auto g = GroupSpec::parse(group_text);
            return finish_certificate(certify_weak_minimality(g), json_path);
        }
        if (*solutions) {
            std::vector<Int> values;
            if (!sol_set.empty()) {
                values = parse_int_list(sol_set);
            } else if (!sol_spec_path.empty()) {
                const auto prefix = materialize(load_spec_file(sol_spec_path), prefix_n);
                values = prefix.scaled_integers().first;
                std::sort(values.begin(), values.end());
                values.erase(std::unique(values.begin(), values.end()), values.end());
            } else {
                throw std::invalid_argument("need --set or --spec");
            }
            SignedQuery query;
            for (const auto& c : parse_int_list(sol_coeffs))
                query.coefficients.push_back(c.get_si());
            query.target = Int(sol_target);
            for (const auto& v : parse_int_list(sol_forbidden))
                query.forbidden.insert(v);
            const auto list = enumerate_solutions(values, query);
            const auto filtered = filter_subsums(list.tuples, query);

            nlohmann::ordered_json j;
            j["count"] = list.count;
            j["truncated"] = list.truncated;
            j["tuples"] = tuples_json(list.tuples);
            j["subsum_filtered_count"] = filtered.size();
            j["subsum_filtered_tuples"] = tuples_json(filtered);
            if (!filtered.empty()) {
                const auto spectrum = fiber_spectrum(filtered);
                j["fiber_bound"] = spectrum.bound;
            }
            std::cout << j.dump(2) << "\n";
            emit_json(json_path, j);
            return 0;
        }
        if (*ess) {
            std::vector<Int> values;
            if (!ess_set.empty()) {
                values = parse_int_list(ess_set);
            } else if (!ess_spec_path.empty()) {
                const auto prefix = materialize(load_spec_file(ess_spec_path), prefix_n);
                values = prefix.scaled_integers().first;
                std::sort(values.begin(), values.end());
                values.erase(std::unique(values.begin(), values.end()), values.end());
            } else {
                throw std::invalid_argument("need --set or --spec");
            }
            std::vector<std::set<Int>> u(kmax), v(kmax);
            apply_exception_flags(ess_u, u);
            apply_exception_flags(ess_v, v);
            const auto profile = ess_profile(values, kmax, u, v);

            nlohmann::ordered_json j;
            j["kmax"] = kmax;
            nlohmann::ordered_json per = nlohmann::ordered_json::array();
            for (const auto& a : profile.per_arity) {
                nlohmann::ordered_json e;
                e["k"] = a.k;
                e["n_k"] = a.n_k;
                e["witness_coeffs"] = a.witness_coeffs;
                e["witness_target"] = a.witness_target.get_str();
                e["witness_tuples"] = tuples_json(a.witness_tuples);
                e["witness_truncated"] = a.witness_truncated;
                per.push_back(e);
            }
            j["per_arity"] = per;
            std::cout << j.dump(2) << "\n";
            emit_json(json_path, j);
            return 0;
        }
        if (*arrays) {
            std::ifstream in(arr_structure);
            if (!in) throw std::runtime_error("cannot open " + arr_structure);
            const auto structure = FinStructure::from_json(nlohmann::json::parse(in));
            ArrayScanOptions opts;
            opts.seed = seed;
            const auto report =
                ub_array_scan(structure, arr_relation, arr_m, arr_n, arr_bcap, opts);

            nlohmann::ordered_json j;
            j["m"] = report.m;
            j["n_bound"] = report.n_bound;
            j["instances_scanned"] = report.instances_scanned;
            j["max_supporting_types"] = report.max_supporting_types;
            j["violated"] = report.violated;
            j["sampled"] = report.sampled;
            j["note"] = report.note;
            if (report.violated) {
                j["witness_var_positions"] = report.witness_var_positions;
                j["witness_params"] = report.witness_params;
                j["witness_arrays"] = report.witness_arrays;
            }
            std::cout << j.dump(2) << "\n";
            emit_json(json_path, j);
            return 0;
        }
        if (*residues) {
            const auto prefix = materialize(load_spec_file(res_spec_path), prefix_n);
            const auto profile = residue_profile(prefix, res_mod);

            nlohmann::ordered_json j;
            j["modulus"] = profile.modulus;
            j["residues"] = profile.residues;
            j["eventually_periodic"] = profile.periodicity.has_value();
            if (profile.periodicity) {
                j["preperiod"] = profile.periodicity->first;
                j["period"] = profile.periodicity->second;
                j["pattern"] = profile.pattern();
            }
            std::cout << j.dump(2) << "\n";
            emit_json(json_path, j);
            return 0;
        }
        if (*sumset) {
            const auto report = sumset_ap(parse_int_list(sum_set), sum_n, Int(sum_window));
            nlohmann::ordered_json j;
            j["n"] = report.n;
            j["window"] = report.window.get_str();
            j["size"] = report.elements.size();
            j["elements"] = int_strings(report.elements);
            j["longest_ap_length"] = report.longest_ap.length;
            j["longest_ap_start"] = report.longest_ap.start.get_str();
            j["longest_ap_difference"] = report.longest_ap.difference.get_str();
            std::cout << j.dump(2) << "\n";
            emit_json(json_path, j);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
