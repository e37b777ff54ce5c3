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

#include <string>
#include <variant>
#include <vector>

#include "stabcert/lacunary.hpp"
#include "stabcert/recurrence.hpp"

namespace stabcert {

/// A parsed sequence spec file. `kind: recurrence` carries coefficient and
/// initial lists, `kind: lacunary` a floor form, `kind: explicit` a path to
/// newline-delimited integers (resolved relative to the spec file).
struct SequenceSpecFile {
    enum class Kind { Recurrence, Lacunary, Explicit };
    Kind kind = Kind::Recurrence;
    RecurrenceSpec recurrence;
    LacunarySpec lacunary;
    std::string data_path;  // Kind::Explicit, already resolved
};

/// Parses `key: value` lines; `#` starts a comment, blank lines are
/// ignored. Throws std::invalid_argument on unknown keys, missing required
/// fields, or a bad kind.
SequenceSpecFile parse_spec_text(const std::string& text,
                                 const std::string& base_dir = ".");

/// Reads and parses a spec file from disk.
SequenceSpecFile load_spec_file(const std::string& path);

/// Loads the newline-delimited integer file of an explicit spec.
SequencePrefix load_explicit_prefix(const std::string& path);

/// Parses a comma or whitespace separated list of rationals, e.g. a CLI
/// --set argument.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace stabcert
