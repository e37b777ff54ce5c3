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

#include "stabcert/certificate.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace stabcert {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedSuperstable: return "CERTIFIED_SUPERSTABLE";
        case Verdict::CertifiedConditional: return "CERTIFIED_CONDITIONAL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::NotApplicable: return "NOT_APPLICABLE";
        case Verdict::RefutedHypothesis: return "REFUTED_HYPOTHESIS";
    }
    throw std::logic_error("bad verdict");
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "CERTIFIED_SUPERSTABLE") return Verdict::CertifiedSuperstable;
    if (s == "CERTIFIED_CONDITIONAL") return Verdict::CertifiedConditional;
    if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
    if (s == "NOT_APPLICABLE") return Verdict::NotApplicable;
    if (s == "REFUTED_HYPOTHESIS") return Verdict::RefutedHypothesis;
    throw std::invalid_argument("bad verdict string: " + s);
}

const std::string& citation_for(const std::string& criterion_id) {
    static const std::map<std::string, std::string> catalog = {
        {"lrr.no-repeated-root-of-unity",
         "Theorem 7.10: no repeated root of the characteristic polynomial of the "
         "minimal recurrence is a root of unity"},
        {"lrr.separable",
         "Theorem 7.15: separable characteristic polynomial over an algebraically "
         "closed field of characteristic 0"},
        {"lacunary.kepler",
         "Theorem 6.7: strongly lacunary, divergent or convergent with "
         "transcendental Kepler limit"},
        {"fgm.finite-rank",
         "Theorem 6.5: contained in a finite rank multiplicative subgroup"},
        {"ess.profile", "Theorem 6.11: the ESS property in a weakly minimal group"},
        {"group.weak-minimality",
         "Proposition 5.1: nG and t_n(G) each finite or of finite index for all n"},
    };
    auto it = catalog.find(criterion_id);
    if (it == catalog.end())
        throw std::invalid_argument("unknown criterion id: " + criterion_id);
    return it->second;
}

std::string standard_closure_note() {
    return "Theorem 5.7: the certified conclusion extends to any B contained in "
           "A+F for any finite F";
}

std::string standard_urank_note() {
    return "over Z with infinite B the expansion has U-rank exactly omega "
           "(Theorem 5.7)";
}

nlohmann::ordered_json Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["verdict"] = to_string(verdict);
    j["criterion_id"] = criterion_id;
    j["citation"] = citation;
    j["assumptions"] = assumptions;
    j["evidence"] = evidence;
    j["closure_note"] = closure_note;
    j["urank_note"] = urank_note;
    return j;
}

Certificate Certificate::from_json(const nlohmann::ordered_json& j) {
    Certificate c;
    c.subject = j.at("subject").get<std::string>();
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.criterion_id = j.at("criterion_id").get<std::string>();
    c.citation = j.at("citation").get<std::string>();
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    c.evidence = j.at("evidence");
    c.closure_note = j.at("closure_note").get<std::string>();
    c.urank_note = j.at("urank_note").get<std::string>();
    return c;
}

bool Certificate::operator==(const Certificate& o) const {
    return subject == o.subject && verdict == o.verdict &&
           criterion_id == o.criterion_id && citation == o.citation &&
           assumptions == o.assumptions && evidence == o.evidence &&
           closure_note == o.closure_note && urank_note == o.urank_note;
}

std::string Certificate::render_text() const {
    std::ostringstream os;
    os << "verdict: " << to_string(verdict) << "\n";
    os << "subject: " << subject << "\n";
    os << "criterion: " << criterion_id << "\n";
    os << "citation: " << citation << "\n";
    if (!assumptions.empty()) {
        os << "assumptions:\n";
        for (const auto& a : assumptions) os << "  - " << a << "\n";
    }
    os << "evidence: " << evidence.dump() << "\n";
    if (!closure_note.empty()) os << "closure: " << closure_note << "\n";
    if (!urank_note.empty()) os << "u-rank: " << urank_note << "\n";
    return os.str();
}

int Certificate::exit_code() const {
    switch (verdict) {
        case Verdict::CertifiedSuperstable:
        case Verdict::CertifiedConditional: return 0;
        case Verdict::Inconclusive:
        case Verdict::NotApplicable: return 2;
        case Verdict::RefutedHypothesis: return 3;
    }
    return 1;
}

}  // namespace stabcert
