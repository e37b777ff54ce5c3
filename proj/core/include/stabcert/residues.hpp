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

#include <optional>
#include <vector>

#include "stabcert/recurrence.hpp"

namespace stabcert {

/// Eventual periodicity of the term sequence modulo n.
struct ResidueProfile {
    unsigned long modulus = 1;
    std::vector<unsigned long> residues;
    // Present when a (preperiod, period) pair replays the observed residues
    // with at least two full periods seen. Minimal period, then minimal
    // preperiod.
    std::optional<std::pair<size_t, size_t>> periodicity;

    std::vector<unsigned long> pattern() const;  // one period, empty if none
    /// Replays (preperiod, period) and checks it reproduces every observed
    /// residue.
    bool replays() const;
};

/// Requires n >= 1 and integer terms (error otherwise).
ResidueProfile residue_profile(const SequencePrefix& prefix, unsigned long n);

}  // namespace stabcert
