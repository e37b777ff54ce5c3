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

#include "stabcert/kepler.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcert {

bool KeplerProfile::limit_magnitude_exceeds_one() const {
    if (classification != KeplerClass::Convergent) return false;
    return std::min(abs(interval_lo), abs(interval_hi)) > 1 &&
           interval_lo * interval_hi > 0;
}

KeplerProfile kepler_profile(const SequencePrefix& prefix, size_t window) {
    return kepler_profile(prefix, KeplerOptions{.window = window});
}

KeplerProfile kepler_profile(const SequencePrefix& prefix,
                             const KeplerOptions& opts) {
    const auto& a = prefix.terms;
    const size_t w = opts.window;
    if (a.size() < w + 1)
        throw std::invalid_argument("prefix shorter than window+1");

    KeplerProfile profile;
    profile.options = opts;
    // Ratios over the last w+1 terms; a zero denominator in that tail is an
    // error per contract.
    for (size_t i = a.size() - w - 1; i + 1 < a.size(); ++i) {
        if (a[i] == 0)
            throw std::domain_error("zero term in ratio tail at index " +
                                    std::to_string(i));
        profile.tail_ratios.push_back(a[i + 1] / a[i]);
    }

    const auto& r = profile.tail_ratios;
    Rational lo = r[0], hi = r[0];
    bool strictly_increasing = true;
    for (size_t i = 0; i < r.size(); ++i) {
        lo = std::min(lo, r[i]);
        hi = std::max(hi, r[i]);
        if (i > 0 && !(abs(r[i]) > abs(r[i - 1]))) strictly_increasing = false;
    }

    const Rational scale = std::max(abs(lo), abs(hi));
    if (scale > 0 && (hi - lo) / scale < opts.convergence_tol) {
        profile.interval_lo = lo;
        profile.interval_hi = hi;
        // A settled ratio only counts as a Kepler limit when |kappa| > 1.
        const bool exceeds_one = std::min(abs(lo), abs(hi)) > 1 && lo * hi > 0;
        profile.classification =
            exceeds_one ? KeplerClass::Convergent : KeplerClass::Inconclusive;
        return profile;
    }
    if (strictly_increasing && abs(r.back()) > opts.growth_threshold) {
        profile.classification = KeplerClass::DivergentLike;
        return profile;
    }
    profile.classification = KeplerClass::Inconclusive;
    return profile;
}

}  // namespace stabcert
