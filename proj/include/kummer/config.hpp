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

/*
   Job configuration: a flat key = value text file with [field], [curve] and
   [job] sections. '#' starts a comment. Integer lists are whitespace separated.

     [field]   p, e, modulus (e+1 base-p digits, low to high)
     [curve]   m, lambda (default 1), and either roots (codec integers) or
               f (codec coefficients of a monic polynomial, low to high)
     [job]     command, divisor (s1 .. sr t), h, places (e.g. "P1 Pinf"),
               coords, bound, n, seed, budget, code (omega | L)
*/

#ifndef KUMMER_CONFIG_HPP
#define KUMMER_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/weierstrass.hpp"

namespace kummer {

/// Syntax or typing problem in a config file, tagged with line, section and key.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class JobConfig {
   public:
    static JobConfig parse(std::istream& in, const std::string& source = "config");
    static JobConfig load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::string text(const std::string& section, const std::string& key) const;
    std::int64_t integer(const std::string& section, const std::string& key) const;
    std::optional<std::int64_t> maybe_integer(const std::string& section, const std::string& key) const;
    std::vector<std::int64_t> integers(const std::string& section, const std::string& key) const;

    /// Sets or replaces a [job] value (command-line overrides); tagged as line 0.
    void set_job(const std::string& key, const std::string& value);

    FieldPtr field() const;
    KummerCurve curve() const;
    /// s1 .. sr t from [job] key, length checked against r.
    Divisor divisor(const std::string& key, std::int64_t r) const;
    PlaceTuple places(const std::string& key) const;

   private:
    struct Value {
        std::string text;
        int line = 0;
    };
    const Value& get(const std::string& section, const std::string& key) const;
    [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& why) const;

    std::string source_;
    std::map<std::string, std::map<std::string, Value>> sections_;
};

}  // namespace kummer

#endif
