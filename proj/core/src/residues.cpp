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

#include "stabcert/residues.hpp"

#include <stdexcept>

namespace stabcert {

std::vector<unsigned long> ResidueProfile::pattern() const {
    if (!periodicity) return {};
    const auto [mu, p] = *periodicity;
    return {residues.begin() + mu, residues.begin() + mu + p};
}

bool ResidueProfile::replays() const {
    if (!periodicity) return false;
    const auto [mu, p] = *periodicity;
    for (size_t i = mu; i + p < residues.size() + p; ++i) {
        const size_t j = mu + (i - mu) % p;
        if (residues[i] != residues[j]) return false;
    }
    return true;
}

ResidueProfile residue_profile(const SequencePrefix& prefix, unsigned long n) {
    if (n < 1) throw std::invalid_argument("modulus must be >= 1");
    if (!prefix.all_integers())
        throw std::invalid_argument("residue_profile requires integer terms");

    ResidueProfile profile;
    profile.modulus = n;
    profile.residues.reserve(prefix.terms.size());
    for (const auto& t : prefix.terms) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), t.get_num().get_mpz_t(), n);
        profile.residues.push_back(r.get_ui());
    }

    const auto& r = profile.residues;
    const size_t len = r.size();
    // Minimal period first, then minimal preperiod; demand two full periods
    // observed so a trailing fragment cannot masquerade as a period.
    for (size_t p = 1; 2 * p <= len; ++p) {
        size_t mu = len >= p ? len - p : 0;  // last index where r[i] == r[i+p] can fail
        // Find the smallest mu with r[i+p] == r[i] for all i in [mu, len-p).
        size_t first_bad_after = 0;
        for (size_t i = len - p; i-- > 0;) {
            if (r[i + p] != r[i]) {
                first_bad_after = i + 1;
                break;
            }
        }
        mu = first_bad_after;
        if (mu + 2 * p <= len) {
            profile.periodicity = {mu, p};
            break;
        }
    }
    return profile;
}

}  // namespace stabcert
