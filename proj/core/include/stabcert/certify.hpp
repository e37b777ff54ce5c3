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

#include "stabcert/certificate.hpp"
#include "stabcert/groupspec.hpp"
#include "stabcert/kepler.hpp"
#include "stabcert/lacunary.hpp"
#include "stabcert/lattice.hpp"
#include "stabcert/recurrence.hpp"

namespace stabcert {

/// Recurrence pipeline: minimize, characteristic polynomial, repeated-root
/// part, cyclotomic scan; degeneracy and known-unstable pattern notes on
/// failure. Minimization always runs first: the criterion presumes the
/// minimal order.
Certificate certify_recurrence(const RecurrenceSpec& spec);

/// Tail-ratio route for floor-form sets. Divergence and convergence are
/// prefix-empirical, and transcendence is user-attested, so success is
/// always CERTIFIED_CONDITIONAL.
Certificate certify_lacunary(const LacunarySpec& spec, size_t prefix_len,
                             const KeplerOptions& opts = {});

/// Same route for an explicit prefix with no evaluable base: only the
/// divergent branch can succeed.
Certificate certify_lacunary_prefix(const SequencePrefix& prefix,
                                    const KeplerOptions& opts = {});

/// Multiplicative-containment check of every prefix term against the
/// generator lattice.
Certificate certify_fgm(const SequencePrefix& prefix, const GeneratorSet& gens);

/// Exact decision of the subgroup criterion; NO verdicts carry the
/// violating n and the infinite quantities.
Certificate certify_weak_minimality(const GroupSpec& g);

}  // namespace stabcert
