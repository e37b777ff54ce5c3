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

#include "stabcert/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stabcert {
namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

void factor_integer(Int n, int direction, std::map<Int, long>& out) {
    if (n < 0) n = -n;
    for (unsigned long p = 2; p <= kTrialDivisionBound && n > 1;
         p = (p == 2 ? 3 : p + 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            out[Int(p)] += direction;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0)
            throw std::domain_error("cannot factor value beyond trial-division bound: " +
                                    n.get_str());
        out[n] += direction;
    }
}

// Row Hermite elimination of m (g x cols) with unimodular row transform u.
// Returns pivot (row, col) pairs in echelon order.
std::vector<std::pair<size_t, size_t>> row_echelon(
    std::vector<std::vector<Int>>& m, std::vector<std::vector<Int>>& u) {
    const size_t g = m.size();
    const size_t cols = g ? m[0].size() : 0;
    std::vector<std::pair<size_t, size_t>> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < g; ++col) {
        // Use gcd elimination to collect the column gcd into `row`.
        for (size_t i = row + 1; i < g; ++i) {
            while (m[i][col] != 0) {
                if (m[row][col] == 0 ||
                    abs(m[i][col]) < abs(m[row][col])) {
                    std::swap(m[row], m[i]);
                    std::swap(u[row], u[i]);
                    continue;
                }
                Int q = m[i][col] / m[row][col];  // truncated division is fine here
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                for (size_t j = 0; j < u[i].size(); ++j) u[i][j] -= q * u[row][j];
            }
        }
        if (m[row][col] != 0) {
            pivots.emplace_back(row, col);
            ++row;
        }
    }
    return pivots;
}

}  // namespace

RationalFactorization factor_rational(const Rational& a) {
    if (a == 0) throw std::invalid_argument("cannot factor zero");
    RationalFactorization f;
    f.sign_bit = a < 0 ? 1 : 0;
    factor_integer(Int(a.get_num()), +1, f.exponents);
    factor_integer(Int(a.get_den()), -1, f.exponents);
    for (auto it = f.exponents.begin(); it != f.exponents.end();)
        it = it->second == 0 ? f.exponents.erase(it) : std::next(it);
    return f;
}

GeneratorSet GeneratorSet::from_generators(std::vector<Rational> generators) {
    GeneratorSet gs;
    std::vector<RationalFactorization> facs;
    std::set<Int> support;
    for (const auto& g : generators) {
        if (g == 0) throw std::invalid_argument("zero generator");
        facs.push_back(factor_rational(g));
        for (const auto& [p, e] : facs.back().exponents) support.insert(p);
    }
    gs.gens_ = std::move(generators);
    gs.primes_.assign(support.begin(), support.end());
    for (const auto& f : facs) {
        std::vector<Int> row(gs.primes_.size(), 0);
        for (size_t j = 0; j < gs.primes_.size(); ++j) {
            auto it = f.exponents.find(gs.primes_[j]);
            if (it != f.exponents.end()) row[j] = it->second;
        }
        gs.rows_.push_back(std::move(row));
        gs.signs_.push_back(f.sign_bit);
    }
    return gs;
}

bool lattice_membership(const Rational& a, const GeneratorSet& gens) {
    if (a == 0) throw std::invalid_argument("0 is not in the multiplicative group");
    const RationalFactorization fa = factor_rational(a);

    // Any prime of a outside the generator support is unreachable.
    for (const auto& [p, e] : fa.exponents)
        if (!std::binary_search(gens.primes().begin(), gens.primes().end(), p))
            return false;

    const size_t g = gens.generators().size();
    const size_t cols = gens.primes().size();
    std::vector<Int> target(cols, 0);
    for (size_t j = 0; j < cols; ++j) {
        auto it = fa.exponents.find(gens.primes()[j]);
        if (it != fa.exponents.end()) target[j] = it->second;
    }
    if (g == 0) {
        for (const auto& t : target)
            if (t != 0) return false;
        return fa.sign_bit == 0;
    }

    std::vector<std::vector<Int>> m = gens.exponent_rows();
    std::vector<std::vector<Int>> u(g, std::vector<Int>(g, 0));
    for (size_t i = 0; i < g; ++i) u[i][i] = 1;
    const auto pivots = row_echelon(m, u);

    // Back-substitute z * H = target in echelon (column) order.
    std::vector<Int> residual = target;
    std::vector<Int> x(g, 0);
    for (const auto& [row, col] : pivots) {
        if (!mpz_divisible_p(residual[col].get_mpz_t(), m[row][col].get_mpz_t()))
            return false;
        Int z = residual[col] / m[row][col];
        for (size_t j = 0; j < cols; ++j) residual[j] -= z * m[row][j];
        for (size_t j = 0; j < g; ++j) x[j] += z * u[row][j];
    }
    for (const auto& r : residual)
        if (r != 0) return false;

    // Sign coordinate lives in Z/2: the particular solution must match, or a
    // kernel vector must flip parity.
    auto parity = [&](const std::vector<Int>& v) {
        int s = 0;
        for (size_t j = 0; j < g; ++j)
            if (gens.sign_bits()[j] && mpz_odd_p(v[j].get_mpz_t())) s ^= 1;
        return s;
    };
    if (parity(x) == fa.sign_bit) return true;
    const size_t rank = pivots.size();
    for (size_t i = rank; i < g; ++i)
        if (parity(u[i]) == 1) return true;
    return false;
}

bool lattice_membership_bruteforce(const Rational& a, const GeneratorSet& gens,
                                   long bound) {
    if (a == 0) throw std::invalid_argument("0 is not in the multiplicative group");
    const size_t g = gens.generators().size();
    std::vector<long> e(g, -bound);
    while (true) {
        Rational prod = 1;
        for (size_t i = 0; i < g; ++i) {
            Rational base = gens.generators()[i];
            long k = e[i];
            if (k < 0) {
                base = 1 / base;
                k = -k;
            }
            for (long t = 0; t < k; ++t) prod *= base;
        }
        if (prod == a) return true;
        size_t i = 0;
        while (i < g && e[i] == bound) e[i++] = -bound;
        if (i == g) return false;
        ++e[i];
    }
}

}  // namespace stabcert
