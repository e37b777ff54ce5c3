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

#include "stabcert/groupspec.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stabcert {

void GroupSpec::validate() const {
    if (summands.empty()) throw std::invalid_argument("empty group spec");
    for (const auto& s : summands) {
        if (s.modulus == 1)
            throw std::invalid_argument("Z/1 is trivial; use modulus >= 2");
        if (s.multiplicity && *s.multiplicity == 0)
            throw std::invalid_argument("zero multiplicity");
    }
}

bool GroupSpec::is_infinite() const {
    for (const auto& s : summands)
        if (s.modulus == 0 || !s.multiplicity) return true;
    return false;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    GroupSpec g;
    std::string token;
    std::istringstream is(text);
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == ',' || ch == '+') ch = ' ';
    std::istringstream stream(normalized);
    while (stream >> token) {
        Summand s;
        auto colon = token.rfind(':');
        std::string factor = colon == std::string::npos ? token : token.substr(0, colon);
        std::string mult = colon == std::string::npos ? "1" : token.substr(colon + 1);
        if (factor == "Z") {
            s.modulus = 0;
        } else if (factor.rfind("Z/", 0) == 0) {
            s.modulus = std::stoul(factor.substr(2));
            if (s.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
        } else {
            throw std::invalid_argument("bad group summand: " + token);
        }
        if (mult == "w" || mult == "omega") s.multiplicity = std::nullopt;
        else s.multiplicity = std::stoul(mult);
        g.summands.push_back(s);
    }
    g.validate();
    return g;
}

std::string GroupSpec::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) os << " + ";
        const auto& s = summands[i];
        if (s.modulus == 0) os << "Z";
        else os << "Z/" << s.modulus;
        os << ":" << (s.multiplicity ? std::to_string(*s.multiplicity) : "w");
    }
    return os.str();
}

SubgroupProfile subgroup_profile(const GroupSpec& g, unsigned long n) {
    g.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SubgroupProfile p;
    p.n = n;
    p.image_size = p.image_index = ExtCard::finite(1);
    p.kernel_size = p.kernel_index = ExtCard::finite(1);
    for (const auto& s : g.summands) {
        ExtCard img, img_idx, ker, ker_idx;
        if (s.modulus == 0) {
            // n*Z = nZ: infinite, index n; t_n(Z) = 0: size 1, infinite index.
            img = ExtCard::omega();
            img_idx = ExtCard::finite(n);
            ker = ExtCard::finite(1);
            ker_idx = ExtCard::omega();
        } else {
            const unsigned long gcd = std::gcd(n, s.modulus);
            img = ExtCard::finite(s.modulus / gcd);   // n(Z/m) = Z/(m/gcd)
            img_idx = ExtCard::finite(gcd);
            ker = ExtCard::finite(gcd);               // t_n(Z/m) = Z/gcd
            ker_idx = ExtCard::finite(s.modulus / gcd);
        }
        p.image_size = p.image_size * img.pow(s.multiplicity);
        p.image_index = p.image_index * img_idx.pow(s.multiplicity);
        p.kernel_size = p.kernel_size * ker.pow(s.multiplicity);
        p.kernel_index = p.kernel_index * ker_idx.pow(s.multiplicity);
    }
    return p;
}

std::optional<SubgroupProfile> weak_minimality_violation(const GroupSpec& g) {
    g.validate();
    if (!g.is_infinite())
        throw std::invalid_argument("weak minimality is asked of infinite groups");

    unsigned long torsion_lcm = 1;
    for (const auto& s : g.summands)
        if (s.modulus != 0) torsion_lcm = std::lcm(torsion_lcm, s.modulus);
    auto is_prime = [](unsigned long v) {
        if (v < 2) return false;
        for (unsigned long q = 2; q * q <= v; ++q)
            if (v % q == 0) return false;
        return true;
    };
    unsigned long p0 = 2;
    while (!is_prime(p0) || torsion_lcm % p0 == 0) ++p0;

    for (unsigned long d = 1; d <= torsion_lcm; ++d) {
        if (torsion_lcm % d != 0) continue;
        for (unsigned long n : {d, d * p0}) {
            auto profile = subgroup_profile(g, n);
            if (!profile.criterion_holds()) return profile;
        }
    }
    return std::nullopt;
}

}  // namespace stabcert
