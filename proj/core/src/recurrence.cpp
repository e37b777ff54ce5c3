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

#include "stabcert/recurrence.hpp"

#include <numeric>
#include <stdexcept>

namespace stabcert {

void RecurrenceSpec::validate() const {
    if (coefficients.empty())
        throw std::invalid_argument("recurrence order must be >= 1");
    if (coefficients.back() == 0)
        throw std::invalid_argument("order not minimal; constant term vanishes");
    if (initial.size() != coefficients.size())
        throw std::invalid_argument("initial segment must have length d");
}

bool SequencePrefix::all_integers() const {
    for (const auto& t : terms)
        if (!is_integer(t)) return false;
    return true;
}

std::pair<std::vector<Int>, Int> SequencePrefix::scaled_integers() const {
    Int scale = 1;
    for (const auto& t : terms)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Rational v = t * Rational(scale);
        out.push_back(Int(v.get_num()));
    }
    return {std::move(out), scale};
}

SequencePrefix eval_recurrence(const RecurrenceSpec& spec, size_t n_terms_after_0) {
    spec.validate();
    const size_t d = spec.order();
    SequencePrefix prefix;
    prefix.provenance = "recurrence";
    prefix.terms = spec.initial;
    prefix.terms.reserve(n_terms_after_0 + 1);
    while (prefix.terms.size() < n_terms_after_0 + 1) {
        const size_t n = prefix.terms.size();
        Rational next = 0;
        for (size_t i = 0; i < d; ++i)
            next += spec.coefficients[i] * prefix.terms[n - 1 - i];
        prefix.terms.push_back(std::move(next));
    }
    prefix.terms.resize(n_terms_after_0 + 1);
    return prefix;
}

Poly char_poly(const RecurrenceSpec& spec) {
    spec.validate();
    const size_t d = spec.order();
    std::vector<Rational> c(d + 1);
    c[d] = 1;
    for (size_t i = 0; i < d; ++i) c[d - 1 - i] = -spec.coefficients[i];
    return Poly{std::move(c)};
}

std::vector<Rational> berlekamp_massey(const std::vector<Rational>& terms) {
    // C(x) is the current connection polynomial (c_0 = 1), B(x) the last one
    // before the length change.
    std::vector<Rational> c{1}, b{1};
    size_t length = 0, m = 1;
    Rational last_discrepancy = 1;
    for (size_t n = 0; n < terms.size(); ++n) {
        Rational delta = terms[n];
        for (size_t i = 1; i <= length; ++i)
            if (i < c.size()) delta += c[i] * terms[n - i];
        if (delta == 0) {
            ++m;
            continue;
        }
        if (2 * length <= n) {
            std::vector<Rational> t = c;
            Rational coef = delta / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, Rational(0));
            for (size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            length = n + 1 - length;
            b = std::move(t);
            last_discrepancy = delta;
            m = 1;
        } else {
            Rational coef = delta / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, Rational(0));
            for (size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            ++m;
        }
    }
    std::vector<Rational> coeffs(length);
    for (size_t i = 1; i <= length; ++i)
        coeffs[i - 1] = i < c.size() ? -c[i] : Rational(0);
    return coeffs;
}

RecurrenceSpec minimize_recurrence(const RecurrenceSpec& spec) {
    spec.validate();
    const size_t d = spec.order();
    const auto prefix = eval_recurrence(spec, 2 * d - 1).terms;  // 2d terms
    auto coeffs = berlekamp_massey(prefix);
    if (coeffs.empty()) {
        // Identically zero sequence: minimal valid presentation.
        return RecurrenceSpec{{Rational(1)}, {Rational(0)}};
    }
    RecurrenceSpec out;
    out.coefficients = std::move(coeffs);
    out.initial.assign(prefix.begin(), prefix.begin() + out.coefficients.size());
    out.validate();
    return out;
}

}  // namespace stabcert
