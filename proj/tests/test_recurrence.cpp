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

#include "stabcert/recurrence.hpp"

using namespace stabcert;

namespace {

std::vector<Rational> terms_of(const RecurrenceSpec& s, size_t n) {
    return eval_recurrence(s, n).terms;
}

}  // namespace

TEST_CASE("eval_recurrence examples") {
    CHECK(terms_of({{1, 1}, {0, 1}}, 7) ==
          std::vector<Rational>{0, 1, 1, 2, 3, 5, 8, 13});
    CHECK(terms_of({{2}, {1}}, 4) == std::vector<Rational>{1, 2, 4, 8, 16});
    CHECK(terms_of({{1}, {7}}, 3) == std::vector<Rational>{7, 7, 7, 7});
}

TEST_CASE("spec validation") {
    CHECK_THROWS(RecurrenceSpec{{}, {}}.validate());
    CHECK_THROWS_WITH(RecurrenceSpec({{1, 0}, {0, 1}}).validate(),
                      "order not minimal; constant term vanishes");
    CHECK_THROWS(RecurrenceSpec({{1, 1}, {0}}).validate());
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly({{1, 1}, {0, 1}}) == Poly{-1, -1, 1});
    CHECK(char_poly({{Rational(5)}, {1}}) == Poly{-5, 1});
    // {n^2}: (x-1)^3
    CHECK(char_poly({{3, -3, 1}, {0, 1, 4}}) == Poly{-1, 3, -3, 1});
}

TEST_CASE("recurrence identity holds on generated prefixes") {
    const RecurrenceSpec s{{Rational(1, 2), 3, -1}, {1, 0, 2}};
    const auto prefix = eval_recurrence(s, 30);
    const size_t d = s.order();
    for (size_t n = d; n < prefix.terms.size(); ++n) {
        Rational acc = 0;
        for (size_t i = 0; i < d; ++i)
            acc += s.coefficients[i] * prefix.terms[n - 1 - i];
        CHECK(prefix.terms[n] == acc);
    }
}

TEST_CASE("minimize_recurrence examples") {
    // 2^n presented at order 2.
    const RecurrenceSpec padded{{3, -2}, {1, 2}};
    const auto minimal = minimize_recurrence(padded);
    CHECK(minimal.coefficients == std::vector<Rational>{2});
    CHECK(minimal.initial == std::vector<Rational>{1});

    const RecurrenceSpec fib{{1, 1}, {0, 1}};
    CHECK(minimize_recurrence(fib) == fib);

    const RecurrenceSpec constant{{1}, {5}};
    CHECK(minimize_recurrence(constant) == constant);
}

TEST_CASE("minimization is idempotent and divides the char poly") {
    std::mt19937_64 rng(90125);
    std::uniform_int_distribution<int> coeff(-3, 3), ord(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        RecurrenceSpec s;
        const int d = ord(rng);
        for (int i = 0; i < d; ++i) {
            s.coefficients.emplace_back(coeff(rng));
            s.initial.emplace_back(coeff(rng));
        }
        if (s.coefficients.back() == 0) s.coefficients.back() = 1;
        // The zero sequence is annihilated by every recurrence; divisibility
        // is only meaningful off it.
        if (s.initial == std::vector<Rational>(s.order(), 0)) s.initial[0] = 1;

        const auto m = minimize_recurrence(s);
        CHECK(m.order() <= s.order());
        CHECK(minimize_recurrence(m) == m);
        CHECK(char_poly(s).divisible_by(char_poly(m)));
        // Same sequence on a window well past both orders.
        CHECK(terms_of(m, 2 * s.order() + 4) == terms_of(s, 2 * s.order() + 4));
    }
}

TEST_CASE("zero sequence minimizes to the trivial recurrence") {
    const auto m = minimize_recurrence({{2, 1}, {0, 0}});
    CHECK(m.order() == 1);
    CHECK(terms_of(m, 5) == std::vector<Rational>(6, 0));
}

TEST_CASE("berlekamp_massey window recovery") {
    CHECK(berlekamp_massey({1, 2, 4, 8, 16, 32}) == std::vector<Rational>{2});
    CHECK(berlekamp_massey({0, 1, 1, 2, 3, 5, 8, 13}) ==
          std::vector<Rational>{1, 1});
}

TEST_CASE("scaled_integers clears denominators") {
    SequencePrefix p;
    p.terms = {Rational(1, 2), Rational(3), Rational(5, 6)};
    CHECK(!p.all_integers());
    const auto [ints, scale] = p.scaled_integers();
    CHECK(scale == 6);
    CHECK(ints == std::vector<Int>{3, 18, 5});
}
