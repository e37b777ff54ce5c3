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

#include "stabcert/specfile.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stabcert {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw std::invalid_argument("bad boolean: " + s);
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::vector<Rational> out;
    std::istringstream is(normalized);
    std::string token;
    while (is >> token) out.push_back(parse_rational(token));
    return out;
}

SequenceSpecFile parse_spec_text(const std::string& text,
                                 const std::string& base_dir) {
    std::map<std::string, std::string> fields;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected key: value");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (fields.count(key))
            throw std::invalid_argument("duplicate key: " + key);
        fields[key] = value;
    }

    auto take = [&](const std::string& key) {
        auto it = fields.find(key);
        if (it == fields.end())
            throw std::invalid_argument("missing field: " + key);
        std::string v = it->second;
        fields.erase(it);
        return v;
    };
    auto take_optional = [&](const std::string& key, const std::string& dflt) {
        auto it = fields.find(key);
        if (it == fields.end()) return dflt;
        std::string v = it->second;
        fields.erase(it);
        return v;
    };

    SequenceSpecFile spec;
    const std::string kind = take("kind");
    if (kind == "recurrence") {
        spec.kind = SequenceSpecFile::Kind::Recurrence;
        spec.recurrence.coefficients = parse_rational_list(take("coefficients"));
        spec.recurrence.initial = parse_rational_list(take("initial"));
        spec.recurrence.validate();
    } else if (kind == "lacunary") {
        spec.kind = SequenceSpecFile::Kind::Lacunary;
        spec.lacunary.c = parse_rational(take("c"));
        spec.lacunary.e = std::stoul(take_optional("e", "0"));
        spec.lacunary.base = LacunaryBase::parse(take("base"));
        spec.lacunary.attest_transcendental =
            parse_bool(take_optional("attest_transcendental", "false"));
        spec.lacunary.start = std::stoul(take_optional("start", "0"));
    } else if (kind == "explicit") {
        spec.kind = SequenceSpecFile::Kind::Explicit;
        std::filesystem::path p = take("path");
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        spec.data_path = p.string();
    } else {
        throw std::invalid_argument("bad kind: " + kind);
    }
    if (!fields.empty())
        throw std::invalid_argument("unknown field: " + fields.begin()->first);
    return spec;
}

SequenceSpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(),
                           std::filesystem::path(path).parent_path().string());
}

SequencePrefix load_explicit_prefix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    SequencePrefix prefix;
    prefix.provenance = "explicit:" + path;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        try {
            prefix.terms.emplace_back(Int(line));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": not an integer: " + line);
        }
    }
    if (prefix.terms.empty())
        throw std::invalid_argument("empty data file: " + path);
    return prefix;
}

}  // namespace stabcert
