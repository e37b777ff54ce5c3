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

#include <map>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

/// Prime factorization of a nonzero rational: prime -> exponent (negative
/// exponents for denominator primes), plus a sign bit (1 for negative).
/// Throws std::domain_error if a factor beyond the trial-division bound is
/// composite.
struct RationalFactorization {
    std::map<Int, long> exponents;
    int sign_bit = 0;
};
RationalFactorization factor_rational(const Rational& a);

/// A finitely generated multiplicative subgroup of Q*, presented by its
/// generators together with their exponent vectors over the occurring
/// primes and a Z/2 sign coordinate.
class GeneratorSet {
public:
    /// Throws std::invalid_argument on a zero generator.
    static GeneratorSet from_generators(std::vector<Rational> generators);

    const std::vector<Rational>& generators() const { return gens_; }
    const std::vector<Int>& primes() const { return primes_; }
    const std::vector<std::vector<Int>>& exponent_rows() const { return rows_; }
    const std::vector<int>& sign_bits() const { return signs_; }

private:
    std::vector<Rational> gens_;
    std::vector<Int> primes_;               // sorted support
    std::vector<std::vector<Int>> rows_;    // one row per generator
    std::vector<int> signs_;
};

/// True iff a is a product of integer powers of the generators, decided by
/// an exact integer solve over the prime-exponent lattice plus a parity
/// check on the sign coordinate. Throws on a = 0.
bool lattice_membership(const Rational& a, const GeneratorSet& gens);

/// Test oracle: exhaustive search over exponent boxes [-bound, bound]^g.
bool lattice_membership_bruteforce(const Rational& a, const GeneratorSet& gens,
                                   long bound);

}  // namespace stabcert
