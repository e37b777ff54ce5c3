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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stabcert {

// Exact arithmetic types. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the serialization contract "p/q".
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

// Hash functor for arbitrary-precision integers, for unordered containers.
struct IntHash {
    size_t operator()(const Int& z) const {
        const mpz_srcptr p = z.get_mpz_t();
        size_t h = static_cast<size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
        const size_t n = mpz_size(p);
        for (size_t i = 0; i < n; ++i)
            h = h * 0x100000001b3ULL ^ static_cast<size_t>(mpz_getlimbn(p, i));
        return h;
    }
};

}  // namespace stabcert
