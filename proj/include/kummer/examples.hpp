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
   Canned curves and the reproduction checks for the four worked examples.
   Each check compares an expected value with the one the library computes and
   is reported as one PASS/FAIL line; output is deterministic.
*/

#ifndef KUMMER_EXAMPLES_HPP
#define KUMMER_EXAMPLES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer::examples {

struct Check {
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct Report {
    int example = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const;
};

/// y^5 = x^9 + x over GF(81).
KummerCurve example1_curve();
/// y^6 = x^5 + x over GF(25).
KummerCurve example2_curve();
/// y^9 = x^4 + x^2 + x over GF(64).
KummerCurve example4_curve();
/// y^3 = x^2 + x over GF(4): genus 1, 9 rational places.
KummerCurve hermitian_gf4();

/// Runs the checks for example 1..4; OutOfRange for anything else.
Report verify(int which);

void print(std::ostream& os, const Report& report);

}  // namespace kummer::examples

#endif
