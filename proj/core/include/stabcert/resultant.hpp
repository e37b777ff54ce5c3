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

#include "stabcert/cyclotomic.hpp"
#include "stabcert/poly.hpp"

namespace stabcert {

/// Res(p, q) over Q. Zero iff p and q share a root. Throws if either input
/// is the zero polynomial.
Rational resultant(const Poly& p, const Poly& q);

/// Degeneracy analysis of the root-ratio polynomial
///   r(x) = Res_y(ptilde(y), ptilde(x*y)),  ptilde = radical(p),
/// whose roots are exactly the ratios mu_i/mu_j of roots of ptilde.
struct DegeneracyReport {
    Poly ratio_poly;     // monic, degree (deg radical(p))^2
    Poly off_diagonal;   // ratio_poly / (x-1)^{deg radical(p)}, monic
    std::vector<unsigned long> cyclotomic_indices;  // of off_diagonal
    bool degenerate = false;  // some off-diagonal ratio is a root of unity
};

/// Requires deg p >= 1 and nonzero constant term (0 must not be a root).
DegeneracyReport ratio_root_poly(const Poly& p);

}  // namespace stabcert
