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

#include "stabcert/resultant.hpp"

#include <stdexcept>

namespace stabcert {
namespace {

// Determinant of a square matrix over Q[x] by fraction-free (Bareiss)
// elimination. Q[x] has exact division, which is all Bareiss needs.
Poly poly_det(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    int sign = 1;
    Poly prev = Poly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly{};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = Poly{};
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Sylvester matrix of a and b as polynomials in y with coefficients in Q[x].
// a and b are given ascending in y.
Poly sylvester_resultant(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    const size_t m = a.size() - 1;  // deg_y a
    const size_t n = b.size() - 1;  // deg_y b
    const size_t size = m + n;
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly{}));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return poly_det(std::move(s));
}

}  // namespace

Rational resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    // Euclidean descent: Res(f,g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} Res(g,r).
    Poly f = p, g = q;
    Rational result = 1;
    while (g.degree() > 0) {
        Poly r = f.divmod(g).second;
        if (r.is_zero()) return 0;
        const long df = f.degree(), dg = g.degree(), dr = r.degree();
        if ((df * dg) % 2 != 0) result = -result;
        Rational lc = g.leading();
        for (long i = 0; i < df - dr; ++i) result *= lc;
        f = std::move(g);
        g = std::move(r);
    }
    // deg g == 0: Res(f, c) = c^{deg f}.
    Rational c = g.constant_term();
    for (long i = 0; i < f.degree(); ++i) result *= c;
    return result;
}

DegeneracyReport ratio_root_poly(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("ratio_root_poly requires deg >= 1");
    if (p.constant_term() == 0)
        throw std::domain_error("0 is a root; recurrence order not minimal");

    const Poly pt = radical(p);
    const size_t d = static_cast<size_t>(pt.degree());

    // A(y) = pt(y), B(y) = pt(x*y): coefficient of y^j is pt_j * x^j.
    std::vector<Poly> a, b;
    a.reserve(d + 1);
    b.reserve(d + 1);
    for (size_t j = 0; j <= d; ++j) {
        a.push_back(Poly::constant(pt[j]));
        b.push_back(Poly::monomial(j, pt[j]));
    }

    DegeneracyReport report;
    report.ratio_poly = sylvester_resultant(a, b).monic();
    report.off_diagonal =
        report.ratio_poly.exact_div(Poly::linear(-1, 1).pow(d)).monic();
    if (report.off_diagonal.degree() >= 1) {
        auto cyc = cyclotomic_factors(report.off_diagonal);
        report.cyclotomic_indices = std::move(cyc.indices);
        report.degenerate = !report.cyclotomic_indices.empty();
    }
    return report;
}

}  // namespace stabcert
