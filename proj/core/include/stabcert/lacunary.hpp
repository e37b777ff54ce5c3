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

#include "stabcert/recurrence.hpp"

namespace stabcert {

/// Base of a lacunary floor form. Either a rational literal or a named
/// constant from the registry (e, pi) raised to a rational power. The
/// transcendence attestation is user input, never inferred.
struct LacunaryBase {
    enum class Kind { Rational, E, Pi };
    Kind kind = Kind::Rational;
    Rational literal = 0;   // Kind::Rational
    Rational exponent = 1;  // Kind::E / Kind::Pi: base = const^exponent

    /// Parses "3/2", "e", "pi", "e^2", "pi^1/2".
    static LacunaryBase parse(const std::string& s);
    std::string str() const;
    bool is_named() const { return kind != Kind::Rational; }
};

/// Floor form  a_n = floor(c * base^n * n^e).
struct LacunarySpec {
    Rational c = 1;
    unsigned long e = 0;
    LacunaryBase base;
    bool attest_transcendental = false;
    unsigned long start = 0;
};

/// Exact evaluation by adaptive-precision interval arithmetic: precision
/// doubles until every floor is pinned down. An interval still straddling
/// an integer at the precision cap is an error naming the index, never a
/// rounded guess.
SequencePrefix eval_lacunary(const LacunarySpec& spec, size_t n_terms_after_0);

}  // namespace stabcert
