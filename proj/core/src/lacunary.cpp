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

#include "stabcert/lacunary.hpp"

#include <mpfr.h>

#include <optional>
#include <stdexcept>

namespace stabcert {
namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 20;

// Directed-rounding evaluation of base^exponent for base in {e, pi} and
// exponent > 0: both constants exceed 1, so the power is monotone in the
// base and in the exponent.
void named_base_bound(const LacunaryBase& b, mpfr_t out, mpfr_prec_t prec,
                      mpfr_rnd_t rnd) {
    mpfr_t k;
    mpfr_init2(k, prec);
    if (b.kind == LacunaryBase::Kind::E) {
        mpfr_set_ui(k, 1, MPFR_RNDN);
        mpfr_exp(k, k, rnd);
    } else {
        mpfr_const_pi(k, rnd);
    }
    if (b.exponent == 1) {
        mpfr_set(out, k, rnd);
    } else {
        // k^(p/q) = exp((p/q) * log k); log k > 0, so rounding directions
        // compose monotonically.
        mpfr_t lg, ex;
        mpfr_init2(lg, prec);
        mpfr_init2(ex, prec);
        mpfr_log(lg, k, rnd);
        mpfr_set_q(ex, b.exponent.get_mpq_t(), rnd);
        mpfr_mul(lg, lg, ex, rnd);
        mpfr_exp(out, lg, rnd);
        mpfr_clear(lg);
        mpfr_clear(ex);
    }
    mpfr_clear(k);
}

// One directed-rounding pass over c * base^n * n^e. Requires a positive
// magnitude part; the sign of c decides which bound this is.
void term_bound(const LacunarySpec& spec, unsigned long n, mpfr_t out,
                mpfr_prec_t prec, mpfr_rnd_t magnitude_rnd) {
    mpfr_t base, acc;
    mpfr_init2(base, prec);
    mpfr_init2(acc, prec);
    named_base_bound(spec.base, base, prec, magnitude_rnd);
    mpfr_pow_ui(acc, base, n, magnitude_rnd);
    if (spec.e > 0) {
        mpfr_t np;
        mpfr_init2(np, prec);
        mpfr_set_ui(np, n, MPFR_RNDN);
        mpfr_pow_ui(np, np, spec.e, magnitude_rnd);
        mpfr_mul(acc, acc, np, magnitude_rnd);
        mpfr_clear(np);
    }
    mpfr_mul_q(out, acc, spec.c.get_mpq_t(),
               spec.c >= 0 ? magnitude_rnd : (magnitude_rnd == MPFR_RNDD ? MPFR_RNDU
                                                                         : MPFR_RNDD));
    mpfr_clear(base);
    mpfr_clear(acc);
}

std::optional<Int> pinned_floor(const LacunarySpec& spec, unsigned long n,
                                mpfr_prec_t prec) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    // For c >= 0 the magnitude lower bound is the value lower bound; for
    // c < 0 they swap.
    if (spec.c >= 0) {
        term_bound(spec, n, lo, prec, MPFR_RNDD);
        term_bound(spec, n, hi, prec, MPFR_RNDU);
    } else {
        term_bound(spec, n, lo, prec, MPFR_RNDU);
        term_bound(spec, n, hi, prec, MPFR_RNDD);
    }
    Int flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (flo == fhi) return flo;
    return std::nullopt;
}

}  // namespace

LacunaryBase LacunaryBase::parse(const std::string& s) {
    LacunaryBase b;
    auto caret = s.find('^');
    std::string head = caret == std::string::npos ? s : s.substr(0, caret);
    if (head == "e") b.kind = Kind::E;
    else if (head == "pi") b.kind = Kind::Pi;
    else {
        b.kind = Kind::Rational;
        b.literal = parse_rational(s);
        return b;
    }
    if (caret != std::string::npos) {
        b.exponent = parse_rational(s.substr(caret + 1));
        if (b.exponent <= 0)
            throw std::invalid_argument("base exponent must be positive");
    }
    return b;
}

std::string LacunaryBase::str() const {
    switch (kind) {
        case Kind::Rational: return literal.get_str();
        case Kind::E: return exponent == 1 ? "e" : "e^" + exponent.get_str();
        case Kind::Pi: return exponent == 1 ? "pi" : "pi^" + exponent.get_str();
    }
    return "?";
}

SequencePrefix eval_lacunary(const LacunarySpec& spec, size_t n_terms_after_0) {
    SequencePrefix prefix;
    prefix.provenance = "lacunary";
    prefix.terms.reserve(n_terms_after_0 + 1);

    for (size_t i = 0; i <= n_terms_after_0; ++i) {
        const unsigned long n = spec.start + i;
        if (!spec.base.is_named()) {
            // Fully rational data: the floor is exact integer arithmetic.
            Rational v = spec.c;
            Rational b = spec.base.literal;
            for (unsigned long t = 0; t < n; ++t) v *= b;
            Rational ne = 1;
            for (unsigned long t = 0; t < spec.e; ++t) ne *= Rational(n);
            v *= ne;
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(),
                       v.get_den().get_mpz_t());
            prefix.terms.emplace_back(fl);
            continue;
        }
        bool done = false;
        for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec && !done; prec *= 2) {
            if (auto fl = pinned_floor(spec, n, prec)) {
                prefix.terms.emplace_back(*fl);
                done = true;
            }
        }
        if (!done)
            throw std::runtime_error(
                "floor not determined at maximum precision at index " +
                std::to_string(n));
    }
    return prefix;
}

}  // namespace stabcert
