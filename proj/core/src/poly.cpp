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

#include "stabcert/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace stabcert {

Poly Poly::monomial(size_t n, const Rational& coeff) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = coeff;
    return Poly{std::move(c)};
}

Poly Poly::xn_minus_one(unsigned long n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = -1;
    c[n] = 1;
    return Poly{std::move(c)};
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(i);
    return Poly{std::move(d)};
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    if (is_monic()) return *this;
    std::vector<Rational> m(c_);
    const Rational lc = c_.back();
    for (auto& a : m) a /= lc;
    return Poly{std::move(m)};
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly{std::move(r)};
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& a : r) a = -a;
    return Poly{std::move(r)};
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly{std::move(r)};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem(c_);
    const long dd = divisor.degree();
    long dr = static_cast<long>(rem.size()) - 1;
    while (dr >= 0 && rem[dr] == 0) --dr;
    if (dr < dd) return {Poly{}, Poly{std::move(rem)}};
    std::vector<Rational> quo(dr - dd + 1, Rational(0));
    const Rational& lc = divisor.c_.back();
    for (long i = dr; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lc;
        quo[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {Poly{std::move(quo)}, Poly{std::move(rem)}};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool Poly::divisible_by(const Poly& divisor) const {
    return divmod(divisor).second.is_zero();
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = Poly::constant(1);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rational mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a.get_str());
    return out;
}

Poly Poly::from_coeff_strings(const std::vector<std::string>& strs) {
    std::vector<Rational> c;
    c.reserve(strs.size());
    for (const auto& s : strs) c.push_back(parse_rational(s));
    return Poly{std::move(c)};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly repeated_root_part(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("repeated_root_part requires deg >= 1");
    return poly_gcd(p, p.derivative());
}

Poly radical(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("radical requires deg >= 1");
    return p.monic().exact_div(repeated_root_part(p));
}

}  // namespace stabcert
