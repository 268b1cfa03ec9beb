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

#include "kummer/divisor.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "kummer/error.hpp"

namespace kummer {

namespace {

void require_same_r(const Divisor& a, const Divisor& b) {
    if (a.s.size() != b.s.size()) throw Error(ErrorKind::ArityMismatch, "divisors over different root counts");
}

}  // namespace

bool Divisor::is_effective() const noexcept {
    return t >= 0 && std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v >= 0; });
}

bool Divisor::dominated_by(const Divisor& other) const {
    require_same_r(*this, other);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > other.s[i]) return false;
    return t <= other.t;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
    require_same_r(*this, rhs);
    Divisor out = *this;
    for (std::size_t i = 0; i < s.size(); ++i) out.s[i] += rhs.s[i];
    out.t += rhs.t;
    return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const { return *this + rhs * -1; }

Divisor Divisor::operator*(std::int64_t k) const {
    Divisor out = *this;
    for (auto& v : out.s) v *= k;
    out.t *= k;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Divisor& d) {
    bool first = true;
    auto term = [&](std::int64_t c, const std::string& place) {
        if (c == 0) return;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << place;
        first = false;
    };
    for (std::size_t mu = 0; mu < d.s.size(); ++mu) term(d.s[mu], "P" + std::to_string(mu + 1));
    term(d.t, "Pinf");
    if (first) os << '0';
    return os;
}

}  // namespace kummer
