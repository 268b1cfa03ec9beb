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

#include <set>

#include "doctest.h"
#include "kummer/curve.hpp"
#include "kummer/examples.hpp"

using namespace kummer;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvariantViolated;
}

}  // namespace

TEST_CASE("genus formula") {
    CHECK(kummer_genus(5, 9) == 16);
    CHECK(kummer_genus(2, 1) == 0);
    CHECK(kummer_genus(6, 5) == 10);
    CHECK(kummer_genus(9, 4) == 12);
    CHECK(examples::example1_curve().genus() == 16);
    CHECK(examples::example4_curve().genus() == 12);
    CHECK(examples::hermitian_gf4().genus() == 1);
}

TEST_CASE("Bezout data") {
    for (auto [m, r] : {std::pair{5, 9}, {6, 5}, {9, 4}, {3, 2}, {7, 3}}) {
        const LatticeParams lp = LatticeParams::from(m, r);
        CHECK(lp.a * r + lp.b * m == 1);
        CHECK(lp.a >= 0);
        CHECK(lp.a < m);
    }
    const KummerCurve c = examples::example2_curve();
    CHECK(c.A() * c.lambda() + c.B() * c.m() == 1);
    CHECK(inverse_mod(5, 6) == 5);
    CHECK(ceil_div(-7, 3) == -2);
    CHECK(ceil_div(7, 3) == 3);
    CHECK(floor_div(-7, 3) == -3);
}

TEST_CASE("curve construction is validated") {
    auto gf25 = FiniteField::create(5, 2, {2, 1, 1});
    const std::vector<Elem> x5_minus_x{0, gf25->neg(1), 0, 0, 0, 1};
    const auto roots = KummerCurve::find_roots(*gf25, x5_minus_x);
    CHECK(roots.size() == 5);
    CHECK(kind_of([&] { KummerCurve::create(gf25, 6, 4, roots); }) == ErrorKind::GcdViolation);
    CHECK(kind_of([&] { KummerCurve::create(gf25, 5, 1, {0, 1}); }) == ErrorKind::CharacteristicDividesM);
    CHECK(kind_of([&] { KummerCurve::create(gf25, 3, 1, {0, 0}); }) == ErrorKind::DuplicateRoots);
    CHECK(kind_of([&] { KummerCurve::create(gf25, 1, 1, {0, 1}); }) == ErrorKind::BadParameter);
    CHECK(kind_of([&] { KummerCurve::create(gf25, 3, 1, {0, 25}); }) == ErrorKind::OutOfRange);
    // x^2 + 2 has no roots in GF(5)
    auto gf5 = FiniteField::create(5, 1, {0, 1});
    const std::vector<Elem> irreducible{2, 0, 1};
    CHECK(kind_of([&] { KummerCurve::find_roots(*gf5, irreducible); }) == ErrorKind::NotSplit);
}

TEST_CASE("principal divisors") {
    const KummerCurve c = examples::example1_curve();
    const Divisor y = c.principal_divisor(CurveFunction::Y);
    CHECK(y == Divisor{std::vector<std::int64_t>(9, 1), -9});
    const Divisor x1 = c.principal_divisor(CurveFunction::XMinusRoot, 1);
    CHECK(x1.s[0] == 5);
    CHECK(x1.t == -5);
    for (auto fn : {CurveFunction::XMinusRoot, CurveFunction::Y, CurveFunction::F, CurveFunction::Z})
        CHECK(c.principal_divisor(fn, 3).degree() == 0);
    CHECK(kind_of([&] { c.principal_divisor(CurveFunction::XMinusRoot, 10); }) == ErrorKind::IndexOutOfRange);
    // f = z^m
    CHECK(c.principal_divisor(CurveFunction::F) == c.principal_divisor(CurveFunction::Z) * c.m());
}

TEST_CASE("rational place counts") {
    CHECK(examples::example1_curve().enumerate_places().size() == 370);
    CHECK(examples::example2_curve().enumerate_places().size() == 126);
    CHECK(examples::example4_curve().enumerate_places().size() == 257);
    CHECK(examples::hermitian_gf4().enumerate_places().size() == 9);
}

TEST_CASE("every enumerated place lies on the curve, once") {
    for (const KummerCurve& c : {examples::hermitian_gf4(), examples::example2_curve(), examples::example4_curve()}) {
        const FiniteField& f = *c.field();
        const auto places = c.enumerate_places();
        CHECK(places.front().is_infinity());
        std::set<std::pair<Elem, Elem>> seen;
        std::size_t ramified = 0;
        for (const RationalPlace& p : places) {
            if (p.is_ramified()) {
                ++ramified;
                CHECK(c.f_at(p.x) == 0);
                CHECK(p.x == c.root(p.index));
            }
            if (!p.is_affine()) continue;
            CHECK(f.pow(p.y, c.m()) == f.pow(c.f_at(p.x), c.lambda()));
            CHECK(c.f_at(p.x) != 0);
            CHECK(seen.insert({p.x, p.y}).second);
        }
        CHECK(ramified == static_cast<std::size_t>(c.r()));
        // brute-force count of affine solutions with f(x) != 0
        std::size_t count = 0;
        for (Elem x = 0; x < f.q(); ++x)
            for (Elem y = 0; y < f.q(); ++y)
                if (c.f_at(x) != 0 && f.pow(y, c.m()) == f.pow(c.f_at(x), c.lambda())) ++count;
        CHECK(count == seen.size());
    }
}
