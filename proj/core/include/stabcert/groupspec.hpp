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

#include <optional>
#include <string>
#include <vector>

#include "stabcert/rational.hpp"

namespace stabcert {

/// Either a finite cardinal or omega (countably infinite). Enough symbolic
/// cardinal arithmetic for direct sums of cyclic groups.
struct ExtCard {
    bool infinite = false;
    Int value = 1;  // meaningful when finite

    static ExtCard omega() { return {true, 0}; }
    static ExtCard finite(Int v) { return {false, std::move(v)}; }
    ExtCard operator*(const ExtCard& o) const {
        if (infinite || o.infinite) return omega();
        return finite(value * o.value);
    }
    // c^mult for a multiplicity that may be omega.
    ExtCard pow(const std::optional<unsigned long>& mult) const {
        if (!mult) return (infinite || value > 1) ? omega() : finite(1);
        if (infinite) return *mult == 0 ? finite(1) : omega();
        ExtCard r = finite(1);
        for (unsigned long i = 0; i < *mult; ++i) r = r * *this;
        return r;
    }
    std::string str() const { return infinite ? "omega" : value.get_str(); }
};

/// Direct sum of copies of Z and Z/m. A multiplicity of std::nullopt means
/// omega. Prufer and divisible summands are out of scope; certificates
/// touching weak minimality record that restriction.
struct GroupSpec {
    struct Summand {
        unsigned long modulus = 0;  // 0 means Z, otherwise Z/modulus (>= 2)
        std::optional<unsigned long> multiplicity = 1;  // nullopt = omega
    };
    std::vector<Summand> summands;

    void validate() const;  // throws on empty list or modulus 1
    bool is_infinite() const;
    /// Parses entries like "Z:1", "Z/2:w", separated by whitespace, commas,
    /// or plus signs.
    static GroupSpec parse(const std::string& text);
    std::string str() const;
};

/// The four quantities of the subgroup criterion at a given n.
struct SubgroupProfile {
    unsigned long n = 1;
    ExtCard image_size, image_index;    // |nG|, [G:nG]
    ExtCard kernel_size, kernel_index;  // |t_n(G)|, [G:t_n(G)]

    bool criterion_holds() const {
        return (!image_size.infinite || !image_index.infinite) &&
               (!kernel_size.infinite || !kernel_index.infinite);
    }
};

/// Symbolic evaluation of |nG|, [G:nG], |t_n|, [G:t_n] for one n.
SubgroupProfile subgroup_profile(const GroupSpec& g, unsigned long n);

/// Decision for all n >= 1 at once. The behavior at n depends only on
/// gcd(n, L) for L = lcm of the torsion moduli plus whether n is 1, so it
/// suffices to check n in {d, d*p0 : d | L} with p0 the least prime not
/// dividing L. Returns the violating profile if the group is not weakly
/// minimal. Throws on a finite group spec.
std::optional<SubgroupProfile> weak_minimality_violation(const GroupSpec& g);

}  // namespace stabcert
