/*
   Copyright 2026 The kummer-ag Authors

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

#include "kummer/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace kummer {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& tok, std::int64_t& out) {
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

JobConfig JobConfig::parse(std::istream& in, const std::string& source) {
    JobConfig cfg;
    cfg.source_ = source;
    std::string raw, section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        const std::string tag = source + ":" + std::to_string(line) + ": ";
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError(tag + "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "field" && section != "curve" && section != "job")
                throw ConfigError(tag + "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(tag + "expected key = value");
        if (section.empty()) throw ConfigError(tag + "key outside of any section");
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ConfigError(tag + "empty key");
        auto& sec = cfg.sections_[section];
        if (sec.count(key)) throw ConfigError(tag + "[" + section + "] " + key + ": duplicate key");
        sec[key] = {trim(s.substr(eq + 1)), line};
    }
    return cfg;
}

JobConfig JobConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    return parse(in, path);
}

bool JobConfig::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) != 0;
}

void JobConfig::fail(const std::string& section, const std::string& key, const std::string& why) const {
    int line = 0;
    if (has(section, key)) line = sections_.at(section).at(key).line;
    std::string where = source_;
    if (line > 0) where += ":" + std::to_string(line);
    throw ConfigError(where + ": [" + section + "] " + key + ": " + why);
}

const JobConfig::Value& JobConfig::get(const std::string& section, const std::string& key) const {
    if (!has(section, key)) fail(section, key, "missing");
    return sections_.at(section).at(key);
}

std::string JobConfig::text(const std::string& section, const std::string& key) const { return get(section, key).text; }

std::int64_t JobConfig::integer(const std::string& section, const std::string& key) const {
    std::int64_t v = 0;
    if (!parse_int(get(section, key).text, v)) fail(section, key, "not an integer: '" + get(section, key).text + "'");
    return v;
}

std::optional<std::int64_t> JobConfig::maybe_integer(const std::string& section, const std::string& key) const {
    if (!has(section, key)) return std::nullopt;
    return integer(section, key);
}

std::vector<std::int64_t> JobConfig::integers(const std::string& section, const std::string& key) const {
    std::istringstream is(get(section, key).text);
    std::vector<std::int64_t> out;
    std::string tok;
    while (is >> tok) {
        std::int64_t v = 0;
        if (!parse_int(tok, v)) fail(section, key, "not an integer: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(section, key, "empty list");
    return out;
}

void JobConfig::set_job(const std::string& key, const std::string& value) { sections_["job"][key] = {value, 0}; }

FieldPtr JobConfig::field() const {
    const std::int64_t p = integer("field", "p");
    const std::int64_t e = integer("field", "e");
    if (p < 2 || p > kMaxFieldSize) fail("field", "p", "out of range");
    if (e < 1 || e > 16) fail("field", "e", "out of range");
    std::vector<std::uint32_t> modulus;
    if (has("field", "modulus")) {
        for (std::int64_t c : integers("field", "modulus")) {
            if (c < 0 || c >= p) fail("field", "modulus", "digit " + std::to_string(c) + " is not in [0, p)");
            modulus.push_back(static_cast<std::uint32_t>(c));
        }
    } else if (e == 1) {
        modulus = {0, 1};
    } else {
        fail("field", "modulus", "missing (required for e > 1)");
    }
    return FiniteField::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), std::move(modulus));
}

KummerCurve JobConfig::curve() const {
    FieldPtr gf = field();
    const std::int64_t m = integer("curve", "m");
    const std::int64_t lambda = maybe_integer("curve", "lambda").value_or(1);
    const bool has_roots = has("curve", "roots"), has_f = has("curve", "f");
    if (has_roots == has_f) fail("curve", has_f ? "f" : "roots", "give exactly one of roots or f");
    const std::string key = has_roots ? "roots" : "f";
    std::vector<Elem> vals;
    for (std::int64_t v : integers("curve", key)) {
        if (v < 0 || v >= gf->q()) fail("curve", key, "element " + std::to_string(v) + " is not in [0, q)");
        vals.push_back(static_cast<Elem>(v));
    }
    std::vector<Elem> roots = has_roots ? vals : KummerCurve::find_roots(*gf, vals);
    return KummerCurve::create(std::move(gf), m, lambda, std::move(roots));
}

Divisor JobConfig::divisor(const std::string& key, std::int64_t r) const {
    std::vector<std::int64_t> v = integers("job", key);
    if (static_cast<std::int64_t>(v.size()) != r + 1)
        fail("job", key, "expected " + std::to_string(r + 1) + " integers (s1 .. sr t), got " + std::to_string(v.size()));
    const std::int64_t t = v.back();
    v.pop_back();
    return {std::move(v), t};
}

PlaceTuple JobConfig::places(const std::string& key) const {
    std::istringstream is(text("job", key));
    PlaceTuple tuple;
    std::string tok;
    while (is >> tok) {
        if (tuple.infinity) fail("job", key, "Pinf must come last");
        if (tok == "Pinf") {
            tuple.infinity = true;
            continue;
        }
        std::int64_t mu = 0;
        if (tok.size() < 2 || tok[0] != 'P' || !parse_int(tok.substr(1), mu) || mu < 1)
            fail("job", key, "bad place '" + tok + "' (expected P<index> or Pinf)");
        tuple.ramified.push_back(static_cast<std::size_t>(mu));
    }
    return tuple;
}

}  // namespace kummer
