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

#include "stabcert/residues.hpp"

using namespace stabcert;

TEST_CASE("fibonacci mod 2 has period 3") {
    const auto prefix = eval_recurrence({{1, 1}, {0, 1}}, 40);
    const auto profile = residue_profile(prefix, 2);
    REQUIRE(profile.periodicity.has_value());
    CHECK(profile.periodicity->first == 0);
    CHECK(profile.periodicity->second == 3);
    CHECK(profile.pattern() == std::vector<unsigned long>{0, 1, 1});
    CHECK(profile.replays());
}

TEST_CASE("2^n mod 3 has period 2") {
    const auto prefix = eval_recurrence({{2}, {1}}, 30);
    const auto profile = residue_profile(prefix, 3);
    REQUIRE(profile.periodicity.has_value());
    CHECK(profile.periodicity->first == 0);
    CHECK(profile.periodicity->second == 2);
    CHECK(profile.pattern() == std::vector<unsigned long>{1, 2});
}

TEST_CASE("modulus 1 collapses everything") {
    const auto prefix = eval_recurrence({{1, 1}, {0, 1}}, 10);
    const auto profile = residue_profile(prefix, 1);
    REQUIRE(profile.periodicity.has_value());
    CHECK(profile.periodicity->second == 1);
    CHECK(profile.pattern() == std::vector<unsigned long>{0});
}

TEST_CASE("genuine preperiod is found") {
    // 2^n mod 4: 1, 2, then 0 forever.
    const auto prefix = eval_recurrence({{2}, {1}}, 30);
    const auto profile = residue_profile(prefix, 4);
    REQUIRE(profile.periodicity.has_value());
    CHECK(profile.periodicity->first == 2);
    CHECK(profile.periodicity->second == 1);
    CHECK(profile.pattern() == std::vector<unsigned long>{0});
    CHECK(profile.replays());
}

TEST_CASE("non-integer terms are rejected") {
    SequencePrefix prefix;
    prefix.terms = {Rational(1, 2), 1};
    CHECK_THROWS(residue_profile(prefix, 3));
}

TEST_CASE("replay reproduces observed residues on random recurrences") {
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<int> coeff(-4, 4), ord(1, 3);
    std::uniform_int_distribution<unsigned long> mod(2, 12);
    for (int trial = 0; trial < 40; ++trial) {
        RecurrenceSpec s;
        const int d = ord(rng);
        for (int i = 0; i < d; ++i) {
            s.coefficients.emplace_back(coeff(rng));
            s.initial.emplace_back(coeff(rng));
        }
        if (s.coefficients.back() == 0) s.coefficients.back() = 1;
        const auto prefix = eval_recurrence(s, 200);
        const auto profile = residue_profile(prefix, mod(rng));
        if (!profile.periodicity) continue;
        CHECK(profile.replays());
        const auto [mu, p] = *profile.periodicity;
        for (size_t i = mu; i < profile.residues.size(); ++i)
            CHECK(profile.residues[i] == profile.residues[mu + (i - mu) % p]);
    }
}
