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

#include <random>

#include "stabcert/lattice.hpp"

using namespace stabcert;

TEST_CASE("factor_rational") {
    const auto f = factor_rational(Rational(-12, 35));
    CHECK(f.sign_bit == 1);
    CHECK(f.exponents.at(2) == 2);
    CHECK(f.exponents.at(3) == 1);
    CHECK(f.exponents.at(5) == -1);
    CHECK(f.exponents.at(7) == -1);
    CHECK_THROWS(factor_rational(Rational(0)));
}

TEST_CASE("lattice membership examples") {
    const auto g2 = GeneratorSet::from_generators({2});
    CHECK(lattice_membership(8, g2));
    CHECK(lattice_membership(Rational(1, 4), g2));
    CHECK(!lattice_membership(-2, g2));
    CHECK(!lattice_membership(3, g2));

    const auto g23 = GeneratorSet::from_generators({2, 3});
    CHECK(lattice_membership(12, g23));
    CHECK(lattice_membership(Rational(9, 8), g23));
    CHECK(!lattice_membership(5, g23));

    CHECK_THROWS(lattice_membership(0, g2));
    CHECK_THROWS(GeneratorSet::from_generators({2, 0}));
}

TEST_CASE("negative generators reach the sign coordinate") {
    const auto g = GeneratorSet::from_generators({-2});
    CHECK(lattice_membership(-2, g));
    CHECK(lattice_membership(4, g));
    CHECK(!lattice_membership(2, g));
    CHECK(!lattice_membership(-4, g));

    const auto gm1 = GeneratorSet::from_generators({2, -1});
    CHECK(lattice_membership(-2, gm1));
    CHECK(lattice_membership(2, gm1));
}

TEST_CASE("agrees with brute-force exponent search") {
    std::mt19937_64 rng(424242);
    const std::vector<Rational> pool = {2, 3, -5, Rational(7, 2), -2, Rational(3, 5),
                                        13, Rational(-11, 3), 6};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> ng(1, 3), expo(-3, 3);

    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> gens;
        const int g = ng(rng);
        for (int i = 0; i < g; ++i) gens.push_back(pool[pick(rng)]);
        const auto gen_set = GeneratorSet::from_generators(gens);

        // Mix of in-lattice products and arbitrary pool values.
        std::vector<Rational> probes;
        for (int i = 0; i < 4; ++i) {
            Rational prod = 1;
            for (const auto& gen : gens) {
                const int e = expo(rng);
                for (int j = 0; j < std::abs(e); ++j)
                    prod *= (e > 0) ? gen : 1 / gen;
            }
            probes.push_back(prod);
            probes.push_back(pool[pick(rng)]);
            probes.push_back(-pool[pick(rng)]);
        }
        for (const auto& a : probes) {
            CHECK(lattice_membership(a, gen_set) ==
                  lattice_membership_bruteforce(a, gen_set, 8));
        }
    }
}
