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

#include <vector>

#include "stabcert/recurrence.hpp"

namespace stabcert {

/// Thresholds for the tail-ratio classification. The dichotomy being probed
/// is asymptotic, so these are explicit configuration and are echoed into
/// the profile.
struct KeplerOptions {
    size_t window = 16;
    // Relative drift of the last `window` ratios below this => CONVERGENT.
    Rational convergence_tol = Rational(1, 1000000000);
    // |final ratio| above this with strictly increasing magnitudes => DIVERGENT_LIKE.
    Rational growth_threshold = 1000;
};

enum class KeplerClass { DivergentLike, Convergent, Inconclusive };

/// Heuristic evidence about the Kepler limit, never a proof; certificates
/// that consume it record it as an assumption.
struct KeplerProfile {
    KeplerClass classification = KeplerClass::Inconclusive;
    std::vector<Rational> tail_ratios;  // last `window` consecutive-term ratios
    Rational interval_lo = 0, interval_hi = 0;  // Convergent only
    KeplerOptions options;  // thresholds used

    bool limit_magnitude_exceeds_one() const;
};

/// Requires at least window+1 nonzero tail terms; a zero denominator in the
/// tail is an error.
KeplerProfile kepler_profile(const SequencePrefix& prefix, size_t window);
KeplerProfile kepler_profile(const SequencePrefix& prefix, const KeplerOptions& opts);

}  // namespace stabcert
