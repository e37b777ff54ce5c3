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

#include "stabcert/certify.hpp"

#include <sstream>

#include "stabcert/cyclotomic.hpp"
#include "stabcert/resultant.hpp"

namespace stabcert {
namespace {

std::string lrr_subject(const RecurrenceSpec& spec) {
    std::ostringstream os;
    os << "LRR(";
    for (size_t i = 0; i < spec.coefficients.size(); ++i)
        os << (i ? "," : "") << spec.coefficients[i].get_str();
    os << ";";
    for (size_t i = 0; i < spec.initial.size(); ++i)
        os << (i ? "," : "") << spec.initial[i].get_str();
    os << ")";
    return os.str();
}

// Known-unstable characteristic polynomial shapes, attached as notes only:
// a failed criterion never claims instability by itself.
std::vector<std::string> known_unstable_notes(const Poly& p) {
    std::vector<std::string> notes;
    const long d = p.degree();
    if (d >= 2 && p == Poly::linear(-1, 1).pow(static_cast<unsigned long>(d)))
        notes.push_back("matches (x-1)^(k+1), the {n^k} enumeration; that "
                        "expansion defines the ordering");
    if (d == 3) {
        const Poly sq = Poly::linear(-1, 1).pow(2);
        if (p.divisible_by(sq)) {
            const Poly lin = p.exact_div(sq);
            if (lin.degree() == 1) {
                const Rational q = -lin.constant_term() / lin.leading();
                if (q != 1)
                    notes.push_back("matches (x-q)(x-1)^2 with q=" + q.get_str() +
                                    ", the {q^n+n} shape");
            }
        }
    }
    return notes;
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

nlohmann::ordered_json kepler_evidence(const KeplerProfile& profile) {
    nlohmann::ordered_json j;
    switch (profile.classification) {
        case KeplerClass::Convergent: j["classification"] = "CONVERGENT"; break;
        case KeplerClass::DivergentLike: j["classification"] = "DIVERGENT_LIKE"; break;
        case KeplerClass::Inconclusive: j["classification"] = "INCONCLUSIVE"; break;
    }
    j["window"] = profile.options.window;
    j["convergence_tol"] = profile.options.convergence_tol.get_str();
    j["growth_threshold"] = profile.options.growth_threshold.get_str();
    if (profile.classification == KeplerClass::Convergent) {
        j["interval_lo"] = profile.interval_lo.get_str();
        j["interval_hi"] = profile.interval_hi.get_str();
        j["interval_lo_approx"] = to_double(profile.interval_lo);
        j["interval_hi_approx"] = to_double(profile.interval_hi);
    }
    if (!profile.tail_ratios.empty())
        j["final_ratio_approx"] = to_double(profile.tail_ratios.back());
    return j;
}

}  // namespace

Certificate certify_recurrence(const RecurrenceSpec& spec) {
    spec.validate();
    Certificate cert;
    cert.subject = lrr_subject(spec);
    cert.closure_note = standard_closure_note();
    cert.urank_note = standard_urank_note();

    const RecurrenceSpec minimal = minimize_recurrence(spec);
    const Poly p = char_poly(minimal);
    const Poly rr = repeated_root_part(p);
    const bool separable = rr.degree() == 0;

    cert.evidence["input_order"] = spec.order();
    cert.evidence["minimal_order"] = minimal.order();
    cert.evidence["char_poly"] = p.coeff_strings();
    cert.evidence["char_poly_str"] = p.str();
    cert.evidence["repeated_root_part"] = rr.coeff_strings();
    cert.evidence["separable"] = separable;

    std::vector<unsigned long> repeated_cyclotomic;
    if (!separable) {
        auto cyc = cyclotomic_factors(rr);
        repeated_cyclotomic = cyc.indices;
    }
    cert.evidence["repeated_cyclotomic_indices"] = repeated_cyclotomic;

    cert.criterion_id = "lrr.no-repeated-root-of-unity";
    cert.citation = citation_for(cert.criterion_id);
    if (separable)
        cert.evidence["additional_citations"] = {citation_for("lrr.separable")};

    if (repeated_cyclotomic.empty()) {
        cert.verdict = Verdict::CertifiedSuperstable;
        return cert;
    }

    // Criterion failed: record degeneracy and pattern notes, claim nothing.
    cert.verdict = Verdict::Inconclusive;
    const DegeneracyReport deg = ratio_root_poly(p);
    cert.evidence["degenerate"] = deg.degenerate;
    cert.evidence["ratio_cyclotomic_indices"] = deg.cyclotomic_indices;
    cert.evidence["known_unstable_notes"] = known_unstable_notes(p);
    return cert;
}

Certificate certify_lacunary(const LacunarySpec& spec, size_t prefix_len,
                             const KeplerOptions& opts) {
    const SequencePrefix prefix = eval_lacunary(spec, prefix_len);
    const KeplerProfile profile = kepler_profile(prefix, opts);

    Certificate cert;
    cert.subject = "floor(" + spec.c.get_str() + " * (" + spec.base.str() +
                   ")^n * n^" + std::to_string(spec.e) + ")";
    cert.criterion_id = "lacunary.kepler";
    cert.citation = citation_for(cert.criterion_id);
    cert.closure_note = standard_closure_note();
    cert.urank_note = standard_urank_note();
    cert.evidence = kepler_evidence(profile);
    cert.evidence["prefix_len"] = prefix.terms.size();

    if (profile.classification == KeplerClass::DivergentLike) {
        cert.verdict = Verdict::CertifiedConditional;
        cert.assumptions.push_back(
            "divergence of the term ratios is empirical on the evaluated prefix");
        return cert;
    }
    if (profile.classification == KeplerClass::Convergent) {
        if (spec.base.is_named() && spec.attest_transcendental) {
            cert.verdict = Verdict::CertifiedConditional;
            cert.assumptions.push_back(
                "transcendence of the base is user-attested, not decided");
            cert.assumptions.push_back(
                "convergence of the term ratios is empirical on the evaluated prefix");
            return cert;
        }
        cert.verdict = Verdict::Inconclusive;
        cert.evidence["why_inconclusive"] =
            spec.base.is_named() ? "transcendence not attested"
                                 : "rational base is algebraic; this route needs a "
                                   "transcendental Kepler limit";
        return cert;
    }
    cert.verdict = Verdict::Inconclusive;
    cert.evidence["why_inconclusive"] = "ratio profile inconclusive at this prefix";
    return cert;
}

Certificate certify_lacunary_prefix(const SequencePrefix& prefix,
                                    const KeplerOptions& opts) {
    const KeplerProfile profile = kepler_profile(prefix, opts);
    Certificate cert;
    cert.subject = "explicit prefix (" + std::to_string(prefix.terms.size()) + " terms)";
    cert.criterion_id = "lacunary.kepler";
    cert.citation = citation_for(cert.criterion_id);
    cert.closure_note = standard_closure_note();
    cert.urank_note = standard_urank_note();
    cert.evidence = kepler_evidence(profile);

    if (profile.classification == KeplerClass::DivergentLike) {
        cert.verdict = Verdict::CertifiedConditional;
        cert.assumptions.push_back(
            "divergence of the term ratios is empirical on the given prefix");
        return cert;
    }
    cert.verdict = Verdict::Inconclusive;
    cert.evidence["why_inconclusive"] =
        "no attestable base for an explicit prefix; only the divergent branch "
        "can certify";
    return cert;
}

Certificate certify_fgm(const SequencePrefix& prefix, const GeneratorSet& gens) {
    Certificate cert;
    std::ostringstream subject;
    subject << "prefix (" << prefix.terms.size() << " terms) vs generators {";
    for (size_t i = 0; i < gens.generators().size(); ++i)
        subject << (i ? "," : "") << gens.generators()[i].get_str();
    subject << "}";
    cert.subject = subject.str();
    cert.criterion_id = "fgm.finite-rank";
    cert.citation = citation_for(cert.criterion_id);
    cert.closure_note = standard_closure_note();
    cert.urank_note = standard_urank_note();

    std::vector<std::string> gen_strs;
    for (const auto& g : gens.generators()) gen_strs.push_back(g.get_str());
    cert.evidence["generators"] = gen_strs;
    cert.evidence["terms_checked"] = prefix.terms.size();

    for (size_t i = 0; i < prefix.terms.size(); ++i) {
        const auto& t = prefix.terms[i];
        if (t == 0)
            throw std::domain_error("term " + std::to_string(i) +
                                    " is 0, which is not in K*");
        if (!lattice_membership(t, gens)) {
            cert.verdict = Verdict::RefutedHypothesis;
            cert.evidence["witness_index"] = i;
            cert.evidence["witness_value"] = t.get_str();
            return cert;
        }
    }
    cert.verdict = Verdict::CertifiedConditional;
    cert.assumptions.push_back(
        "containment in the generated group is checked on the prefix only; the "
        "theorem's hypothesis concerns the infinite set");
    return cert;
}

Certificate certify_weak_minimality(const GroupSpec& g) {
    Certificate cert;
    cert.subject = g.str();
    cert.criterion_id = "group.weak-minimality";
    cert.citation = citation_for(cert.criterion_id);
    cert.assumptions.push_back(
        "group specs are finite lists of Z and Z/m summands; Prufer and "
        "divisible torsion summands are out of scope");

    const auto violation = weak_minimality_violation(g);
    if (!violation) {
        cert.verdict = Verdict::CertifiedSuperstable;
        cert.evidence["weakly_minimal"] = true;
        return cert;
    }
    cert.verdict = Verdict::RefutedHypothesis;
    cert.evidence["weakly_minimal"] = false;
    cert.evidence["witness_n"] = violation->n;
    cert.evidence["image_size"] = violation->image_size.str();
    cert.evidence["image_index"] = violation->image_index.str();
    cert.evidence["kernel_size"] = violation->kernel_size.str();
    cert.evidence["kernel_index"] = violation->kernel_index.str();
    return cert;
}

}  // namespace stabcert
