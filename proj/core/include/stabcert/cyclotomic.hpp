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

#include <vector>

#include "stabcert/poly.hpp"

namespace stabcert {

/// Cyclotomic factor decomposition: the n with Phi_n | p, and what is left
/// after removing every cyclotomic factor (with multiplicity).
/// Invariant: monic(p) = residual * prod Phi_n^{mult_n}.
struct CyclotomicReport {
    std::vector<unsigned long> indices;  // sorted, each n with Phi_n | p
    Poly residual;                       // monic, no cyclotomic factor

    bool has_root_of_unity() const { return !indices.empty(); }
};

unsigned long euler_phi(unsigned long n);

/// n-th cyclotomic polynomial, computed by dividing x^n - 1 by Phi_d for
/// proper divisors d. Monic with integer coefficients, degree phi(n).
/// Throws on n = 0.
Poly cyclotomic_poly(unsigned long n);

/// All cyclotomic divisors of p. Requires deg p >= 1. Search space: n with
/// phi(n) <= deg p, bounded by n <= 2*(deg p)^2 since phi(n) >= sqrt(n/2).
CyclotomicReport cyclotomic_factors(const Poly& p);

}  // namespace stabcert
