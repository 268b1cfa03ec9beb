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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kummer/examples.hpp"
#include "kummer/rrlattice.hpp"
#include "oracles.hpp"

using namespace kummer;

namespace {

const std::vector<std::pair<int, int>> kShapes{{3, 2}, {5, 9}, {6, 5}, {9, 4}, {4, 3}, {7, 3}, {2, 3}};

bool lattice_less(const LatticePoint& x, const LatticePoint& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); }
bool theta_less(const ThetaPoint& x, const ThetaPoint& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); }

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

TEST_CASE("worked basis listing") {
    const LatticeParams lp = LatticeParams::from(9, 4);
    const Divisor h{{14, 1, 0, 0}, 4};
    const auto pts = omega_enumerate(lp, h);
    REQUIRE(pts.size() == 8);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& pt : pts) {
        const Divisor d = pole_orders(lp, pt);
        got.insert({d.s[0], d.s[1], d.s[2], d.s[3], d.t});
    }
    const std::set<std::vector<std::int64_t>> want{{14, -4, -4, -4, -2}, {13, -5, -5, -5, 2}, {9, 0, 0, 0, -9},
                                                   {8, -1, -1, -1, -5},   {7, -2, -2, -2, -1}, {6, -3, -3, -3, 3},
                                                   {0, 0, 0, 0, 0},       {-1, -1, -1, -1, 4}};
    CHECK(got == want);
    CHECK(std::is_sorted(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.i < y.i; }));
}

TEST_CASE("small dimension facts") {
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        const auto zero = omega_enumerate(lp, Divisor::zero(r));
        REQUIRE(zero.size() == 1);
        CHECK(zero[0].i == 0);
        CHECK(std::all_of(zero[0].j.begin(), zero[0].j.end(), [](auto v) { return v == 0; }));
        Divisor neg = Divisor::zero(r);
        neg.t = -1;
        CHECK(dimension(lp, neg) == 0);
    }
    Divisor g = Divisor::zero(9);
    g.t = 45;
    CHECK(dimension(LatticeParams::from(5, 9), g) == 30);
    CHECK(dimension(LatticeParams::from(6, 5), Divisor{{26, 1, 0, 0, 0}, 0}) == 18);
}

TEST_CASE("enumeration matches a scan of the defining inequalities") {
    std::mt19937_64 rng(101);
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        for (int trial = 0; trial < 60; ++trial) {
            const Divisor g = oracle::random_divisor(rng, r, -2 * m, 3 * m);
            auto a = omega_enumerate(lp, g);
            auto b = oracle::omega_scan(lp, g);
            std::sort(b.begin(), b.end(), lattice_less);
            REQUIRE(a == b);
            CHECK(dimension(lp, g) == static_cast<std::int64_t>(a.size()));
            for (const auto& pt : a)
                for (std::int64_t mu = 2; mu <= r; ++mu) {
                    const std::int64_t w = pt.i + m * pt.j[mu - 2] + g.s[mu - 1];
                    CHECK(w >= 0);
                    CHECK(w < m);
                }
        }
    }
}

TEST_CASE("Theta enumeration matches its own inequalities and round-trips") {
    std::mt19937_64 rng(202);
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        for (int trial = 0; trial < 40; ++trial) {
            const Divisor g = oracle::random_divisor(rng, r, -m, 3 * m);
            auto th = theta_enumerate(lp, g);
            auto scan = oracle::theta_scan(lp, g);
            std::sort(th.begin(), th.end(), theta_less);
            std::sort(scan.begin(), scan.end(), theta_less);
            REQUIRE(th == scan);
            const auto om = omega_enumerate(lp, g);
            CHECK(th.size() == om.size());
            for (const auto& pt : om) {
                CHECK(to_lattice(lp, to_theta(lp, pt)) == pt);
                const ThetaPoint tp = to_theta(lp, pt);
                CHECK(monomial_divisor(lp, pt) == monomial_divisor(lp, tp));
                CHECK(monomial_divisor(lp, tp) == oracle::lambda_divisor(lp, tp));
            }
        }
    }
}

TEST_CASE("counting law in its stated range") {
    std::mt19937_64 rng(303);
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        for (int trial = 0; trial < 50; ++trial) {
            Divisor g = oracle::random_divisor(rng, r, -m, 2 * m);
            const std::int64_t need = (2 * r - 1) * m;
            if (g.degree() < need) g.t += need - g.degree() + static_cast<std::int64_t>(rng() % 5);
            CHECK(dimension(lp, g) == 1 - lp.genus + g.degree());
        }
    }
}

TEST_CASE("auxiliary two-variable count, zero-divisor and s2 = 0 specializations") {
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        for (std::int64_t t = r * m; t < r * m + 3 * m; ++t) {
            std::int64_t psi = 0;
            for (std::int64_t I = 0; I < m; ++I)
                for (std::int64_t k = 0; r * I <= t - m * k; ++k) ++psi;
            CHECK(psi == 1 - lp.genus + t);
            Divisor g = Divisor::zero(r);
            g.t = t;
            CHECK(dimension(lp, g) == 1 - lp.genus + t);
        }
        if (r < 2) continue;
        std::mt19937_64 rng(static_cast<std::uint64_t>(m * 100 + r));
        for (int trial = 0; trial < 30; ++trial) {
            Divisor g = Divisor::zero(r);
            for (std::int64_t mu = 1; mu <= r; ++mu)
                if (mu != 2) g.s[mu - 1] = 1 + static_cast<std::int64_t>(rng() % m);
            g.t = r * m + static_cast<std::int64_t>(rng() % (2 * m));
            CHECK(dimension(lp, g) == 1 - lp.genus + g.degree());
        }
    }
}

TEST_CASE("dimension is symmetric in s and moves by at most one per place") {
    std::mt19937_64 rng(404);
    for (auto [m, r] : kShapes) {
        const LatticeParams lp = LatticeParams::from(m, r);
        for (int trial = 0; trial < 40; ++trial) {
            const Divisor g = oracle::random_divisor(rng, r, -m, 2 * m);
            Divisor perm = g;
            std::shuffle(perm.s.begin(), perm.s.end(), rng);
            CHECK(dimension(lp, perm) == dimension(lp, g));
            for (std::int64_t mu = 0; mu <= r; ++mu) {
                Divisor up = g;
                const PlaceRef at = mu == 0 ? PlaceRef::at_infinity() : PlaceRef::ramified(mu);
                (mu == 0 ? up.t : up.s[mu - 1]) += 1;
                const std::int64_t lo = dimension(lp, g), hi = dimension(lp, up);
                CHECK(lo <= hi);
                CHECK(hi <= lo + 1);
                CHECK(increment_predicate(lp, up, at) == (hi == lo + 1));
                CHECK(increment_predicate(lp, up, at) == (oracle::ell(lp, up) == oracle::ell(lp, g) + 1));
            }
        }
    }
    CHECK(increment_predicate(LatticeParams::from(5, 9), Divisor::zero(9), PlaceRef::ramified(1)));
    CHECK_FALSE(increment_predicate(LatticeParams::from(5, 9), Divisor{{26, 0, 0, 0, 0, 0, 0, 0, 0}, 1},
                                    PlaceRef::ramified(1)));
}

TEST_CASE("monomial divisors") {
    const LatticeParams lp = LatticeParams::from(6, 5);
    CHECK(monomial_divisor(lp, LatticePoint{0, {0, 0, 0, 0}}) == Divisor::zero(5));
    CHECK(monomial_divisor(lp, LatticePoint{1, {0, 0, 0, 0}}) == Divisor{{1, 1, 1, 1, 1}, -5});
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        LatticePoint pt{static_cast<std::int64_t>(rng() % 21) - 10, {}};
        for (int k = 0; k < 4; ++k) pt.j.push_back(static_cast<std::int64_t>(rng() % 7) - 3);
        CHECK(monomial_divisor(lp, pt).degree() == 0);
        CHECK(pole_orders(lp, pt) == monomial_divisor(lp, pt) * -1);
    }
}

TEST_CASE("monomial evaluation") {
    const KummerCurve c = examples::hermitian_gf4();
    const FiniteField& f = *c.field();
    const auto places = c.enumerate_places();
    const LatticePoint one{0, {0}}, z{1, {0}};
    for (const RationalPlace& p : places) CHECK(evaluate_monomial(c, one, p).value() == 1);
    for (const RationalPlace& p : places) {
        if (!p.is_affine()) continue;
        CHECK(f.pow(evaluate_monomial(c, z, p).value(), c.m()) == c.f_at(p.x));
    }
    CHECK(evaluate_monomial(c, z, RationalPlace::ramified(2, c.root(2))).value() == 0);
    CHECK(kind_of([&] { evaluate_monomial(c, z, RationalPlace::infinity()); }) == ErrorKind::PoleAtPlace);
    CHECK(kind_of([&] { evaluate_monomial(c, LatticePoint{-1, {0}}, RationalPlace::ramified(1, c.root(1))); }) ==
          ErrorKind::PoleAtPlace);
}

TEST_CASE("evaluation is multiplicative wherever both factors are finite") {
    for (const KummerCurve& c : {examples::hermitian_gf4(), examples::example4_curve()}) {
        const LatticeParams lp = c.lattice();
        const FiniteField& f = *c.field();
        std::mt19937_64 rng(606);
        const auto places = c.enumerate_places();
        for (int trial = 0; trial < 300; ++trial) {
            auto rand_pt = [&] {
                LatticePoint pt{static_cast<std::int64_t>(rng() % 13) - 6, {}};
                for (std::int64_t k = 1; k < lp.r; ++k) pt.j.push_back(static_cast<std::int64_t>(rng() % 5) - 2);
                return pt;
            };
            const LatticePoint x = rand_pt(), y = rand_pt();
            LatticePoint xy{x.i + y.i, {}};
            for (std::size_t k = 0; k < x.j.size(); ++k) xy.j.push_back(x.j[k] + y.j[k]);
            const Divisor dx = monomial_divisor(lp, x), dy = monomial_divisor(lp, y);
            for (std::size_t pi = 0; pi < std::min<std::size_t>(places.size(), 1 + lp.r + 8); ++pi) {
                const RationalPlace& p = places[pi];
                auto val = [&](const Divisor& d) {
                    return p.is_infinity() ? d.t : p.is_ramified() ? d.s[p.index - 1] : 0;
                };
                if (val(dx) < 0 || val(dy) < 0) continue;
                const Elem prod = f.mul(evaluate_monomial(c, x, p).value(), evaluate_monomial(c, y, p).value());
                CHECK(evaluate_monomial(c, xy, p).value() == prod);
                CHECK(evaluate_monomial(c, to_theta(lp, xy), p).value() == prod);
            }
        }
    }
}

TEST_CASE("evaluation matrix rank is l(G) - l(G - D)") {
    const KummerCurve c = examples::hermitian_gf4();
    const LatticeParams lp = c.lattice();
    for (std::int64_t a = 0; a <= 6; ++a)
        for (std::int64_t b = 0; b <= 3; ++b)
            for (std::int64_t t = 0; t <= 12; ++t) {
                const Divisor g{{a, b}, t};
                std::vector<RationalPlace> d;
                for (const RationalPlace& p : c.enumerate_places()) {
                    const bool in_supp = p.is_infinity() ? t != 0 : p.is_ramified() ? g.s[p.index - 1] != 0 : false;
                    if (!in_supp) d.push_back(p);
                }
                const auto basis = omega_enumerate(lp, g);
                Matrix m(c.field(), basis.size(), d.size());
                for (std::size_t i = 0; i < basis.size(); ++i)
                    for (std::size_t k = 0; k < d.size(); ++k) m.at(i, k) = evaluate_monomial(c, basis[i], d[k]).value();
                const auto rank = static_cast<std::int64_t>(rank_and_nullspace(m).rank);
                const std::int64_t n = static_cast<std::int64_t>(d.size());
                const std::int64_t deg = g.degree();
                if (deg < n) {
                    CHECK(rank == static_cast<std::int64_t>(basis.size()));
                } else if (deg - n > 2 * lp.genus - 2) {
                    CHECK(rank == static_cast<std::int64_t>(basis.size()) - (deg - n + 1 - lp.genus));
                }
            }
}
