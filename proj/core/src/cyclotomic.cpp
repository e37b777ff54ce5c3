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

#include "stabcert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace stabcert {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");

    static std::map<unsigned long, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Poly phi = Poly::xn_minus_one(n);
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto dit = cache.find(d);
        if (dit == cache.end()) {
            // Divisors are visited in increasing order below, but compute
            // recursively on a cold cache.
            Poly sub = Poly::xn_minus_one(d);
            for (unsigned long e = 1; e < d; ++e)
                if (d % e == 0) sub = sub.exact_div(cache.at(e));
            dit = cache.emplace(d, std::move(sub)).first;
        }
        phi = phi.exact_div(dit->second);
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

CyclotomicReport cyclotomic_factors(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("cyclotomic_factors requires deg >= 1");
    CyclotomicReport report;
    Poly residual = p.monic();
    const unsigned long d = static_cast<unsigned long>(p.degree());
    // phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2*d^2.
    for (unsigned long n = 1; n <= 2 * d * d; ++n) {
        if (euler_phi(n) > d) continue;
        const Poly phi = cyclotomic_poly(n);
        bool divides = false;
        while (residual.degree() >= phi.degree() && residual.divisible_by(phi)) {
            residual = residual.exact_div(phi);
            divides = true;
        }
        if (divides) report.indices.push_back(n);
    }
    report.residual = residual;
    return report;
}

}  // namespace stabcert
