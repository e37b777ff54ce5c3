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

#include <doctest.h>

#include "stabcert/cyclotomic.hpp"

using namespace stabcert;

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("cyclotomic_poly base values") {
    CHECK(cyclotomic_poly(1) == Poly{-1, 1});
    CHECK(cyclotomic_poly(2) == Poly{1, 1});
    CHECK(cyclotomic_poly(4) == Poly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == Poly{1, -1, 1});
    CHECK_THROWS(cyclotomic_poly(0));
}

TEST_CASE("cyclotomic degree is euler phi") {
    for (unsigned long n = 1; n <= 40; ++n)
        CHECK(cyclotomic_poly(n).degree() == static_cast<long>(euler_phi(n)));
}

TEST_CASE("product over divisors identity up to 30") {
    for (unsigned long n = 1; n <= 30; ++n) {
        Poly prod = Poly::constant(1);
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        CHECK(prod == Poly::xn_minus_one(n));
    }
}

TEST_CASE("cyclotomic_factors examples") {
    auto r1 = cyclotomic_factors(Poly{-1, 1} * Poly{1, 1});
    CHECK(r1.indices == std::vector<unsigned long>{1, 2});
    CHECK(r1.residual == Poly::constant(1));

    auto r2 = cyclotomic_factors(Poly{-1, -1, 1});
    CHECK(r2.indices.empty());
    CHECK(!r2.has_root_of_unity());

    auto r3 = cyclotomic_factors(Poly{1, 0, 1});
    CHECK(r3.indices == std::vector<unsigned long>{4});
    CHECK_THROWS(cyclotomic_factors(Poly::constant(2)));
}

TEST_CASE("planting a cyclotomic factor is detected") {
    const std::vector<Poly> corpus = {
        Poly{-2, 1}, Poly{-1, -1, 1}, Poly{2, 0, 1}, Poly{-3, 1} * Poly{-2, 1}};
    for (const auto& p : corpus) {
        CHECK(cyclotomic_factors(p).indices.empty());
        for (unsigned long n = 1; n <= 12; ++n) {
            const auto report = cyclotomic_factors(p * cyclotomic_poly(n));
            bool found = false;
            for (auto idx : report.indices) found |= (idx == n);
            CHECK(found);
        }
    }
}

TEST_CASE("residual carries no cyclotomic factor and divides the input") {
    const Poly p = Poly{-1, 1}.pow(2) * Poly{1, 0, 1} * Poly{-1, -1, 1};
    const auto report = cyclotomic_factors(p);
    CHECK(report.indices == std::vector<unsigned long>{1, 4});
    CHECK(report.residual == Poly{-1, -1, 1});
    CHECK(cyclotomic_factors(report.residual).indices.empty());
    for (auto n : report.indices) CHECK(p.divisible_by(cyclotomic_poly(n)));
}
