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

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

/// Univariate polynomial over Q, coefficients stored in ascending degree.
/// Invariant: empty coefficient vector <=> zero polynomial; otherwise the
/// leading (last) coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& a) { return Poly{std::vector<Rational>{a}}; }
    // c0 + c1*x
    static Poly linear(const Rational& c0, const Rational& c1) {
        return Poly{std::vector<Rational>{c0, c1}};
    }
    // x^n
    static Poly monomial(size_t n, const Rational& coeff = 1);
    // x^n - 1
    static Poly xn_minus_one(unsigned long n);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_.front(); }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;  // throws on zero polynomial
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Quotient and remainder with deg(rem) < deg(divisor). Throws on zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // Exact division; throws std::domain_error if the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;

    Poly pow(unsigned long e) const;

    std::string str(const std::string& var = "x") const;
    std::vector<std::string> coeff_strings() const;
    static Poly from_coeff_strings(const std::vector<std::string>& strs);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm. Throws if both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// gcd(p, p'): monic, roots are exactly the repeated roots of p.
/// Requires deg p >= 1.
Poly repeated_root_part(const Poly& p);

/// Squarefree part p / gcd(p, p'). Requires deg p >= 1.
Poly radical(const Poly& p);

}  // namespace stabcert
