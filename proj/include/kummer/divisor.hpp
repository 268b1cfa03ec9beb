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

#ifndef KUMMER_DIVISOR_HPP
#define KUMMER_DIVISOR_HPP

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <vector>

namespace kummer {

/// s_1 P_1 + ... + s_r P_r + t P_inf. Support is restricted to these places by construction.
struct Divisor {
    std::vector<std::int64_t> s;
    std::int64_t t = 0;

    static Divisor zero(std::size_t r) { return {std::vector<std::int64_t>(r, 0), 0}; }

    std::size_t r() const noexcept { return s.size(); }
    std::int64_t degree() const noexcept { return std::accumulate(s.begin(), s.end(), std::int64_t{0}) + t; }
    bool is_effective() const noexcept;

    /// Componentwise <=.
    bool dominated_by(const Divisor& other) const;

    Divisor operator+(const Divisor& rhs) const;
    Divisor operator-(const Divisor& rhs) const;
    Divisor operator*(std::int64_t k) const;
    bool operator==(const Divisor& rhs) const = default;
};

std::ostream& operator<<(std::ostream& os, const Divisor& d);

}  // namespace kummer

#endif
