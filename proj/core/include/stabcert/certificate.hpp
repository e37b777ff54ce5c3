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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace stabcert {

enum class Verdict {
    CertifiedSuperstable,
    CertifiedConditional,
    Inconclusive,
    NotApplicable,
    RefutedHypothesis,
};

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Machine-checked verdict with its hypothesis chain. Every CERTIFIED
/// verdict lists the checked hypotheses in `evidence`; every entry in
/// `assumptions` is user-attested or prefix-empirical, never inferred.
struct Certificate {
    std::string subject;       // echo of the input spec
    Verdict verdict = Verdict::Inconclusive;
    std::string criterion_id;  // key into the citation catalog
    std::string citation;      // fixed catalog text, never free-form
    std::vector<std::string> assumptions;
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
    std::string closure_note;
    std::string urank_note;

    nlohmann::ordered_json to_json() const;
    static Certificate from_json(const nlohmann::ordered_json& j);
    std::string render_text() const;
    bool operator==(const Certificate& o) const;

    /// CLI exit code: 0 certified (any class), 2 inconclusive or not
    /// applicable, 3 refuted hypothesis.
    int exit_code() const;
};

/// Citation text for a criterion id. Throws on an unknown id: free-form
/// citations are not allowed.
const std::string& citation_for(const std::string& criterion_id);

/// The standard closure and U-rank notes attached to set certificates.
std::string standard_closure_note();
std::string standard_urank_note();

}  // namespace stabcert
