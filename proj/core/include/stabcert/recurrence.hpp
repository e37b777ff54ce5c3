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

#include "stabcert/poly.hpp"
#include "stabcert/rational.hpp"

namespace stabcert {

/// Homogeneous linear recurrence a_{n+d} = b_1 a_{n+d-1} + ... + b_d a_n
/// with initial terms a_0, ..., a_{d-1}.
struct RecurrenceSpec {
    std::vector<Rational> coefficients;  // b_1 ... b_d
    std::vector<Rational> initial;       // a_0 ... a_{d-1}

    size_t order() const { return coefficients.size(); }
    /// Throws std::invalid_argument when d = 0, b_d = 0, or the initial
    /// segment has the wrong length.
    void validate() const;
    bool operator==(const RecurrenceSpec&) const = default;
};

/// A materialized exact prefix a_0 ... a_N, tagged with where it came from.
struct SequencePrefix {
    std::vector<Rational> terms;
    std::string provenance;

    bool all_integers() const;
    /// Common-denominator clearing: the terms scaled to integers, plus the
    /// scale factor used. Sign-pattern equation solutions are invariant
    /// under uniform scaling.
    std::pair<std::vector<Int>, Int> scaled_integers() const;
};

/// Evaluates terms a_0..a_N by direct iteration.
SequencePrefix eval_recurrence(const RecurrenceSpec& spec, size_t n_terms_after_0);

/// p_A(x) = x^d - b_1 x^{d-1} - ... - b_d. Monic of degree d with nonzero
/// constant term.
Poly char_poly(const RecurrenceSpec& spec);

/// Minimal-order recurrence generating the same sequence, recovered by
/// Berlekamp-Massey over Q on 2d terms. Idempotent; the output's
/// characteristic polynomial divides the input's.
RecurrenceSpec minimize_recurrence(const RecurrenceSpec& spec);

/// Berlekamp-Massey on an explicit term window: shortest LFSR coefficients
/// (b_1..b_L) with a_n = sum b_i a_{n-i} for L <= n < len.
std::vector<Rational> berlekamp_massey(const std::vector<Rational>& terms);

}  // namespace stabcert
