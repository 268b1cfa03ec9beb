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
#include <sstream>

#include "doctest.h"
#include "kummer/agcode.hpp"
#include "kummer/examples.hpp"
#include "kummer/kernels.hpp"
#include "oracles.hpp"

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

bool all_zero(const Matrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](Elem x) { return x == 0; });
}

}  // namespace

TEST_CASE("evaluation sets") {
    const KummerCurve c = examples::hermitian_gf4();
    const Divisor g{{0, 0}, 3};
    const auto all = c.enumerate_places();
    const EvaluationSet d = EvaluationSet::complement(c, g);
    CHECK(d.n() == 8);
    CHECK(kind_of([&] { EvaluationSet::create(c, g, {RationalPlace::infinity()}); }) == ErrorKind::InfinityInD);
    CHECK(kind_of([&] { EvaluationSet::create(c, Divisor{{1, 0}, 0}, {all[1]}); }) == ErrorKind::PlaceInSupport);
    CHECK(kind_of([&] { EvaluationSet::create(c, g, {all[3], all[3]}); }) == ErrorKind::DuplicatePlace);
    CHECK(kind_of([&] { EvaluationSet::create(c, g, {RationalPlace::affine(0, 1)}); }) == ErrorKind::BadParameter);
    CHECK(kind_of([&] { EvaluationSet::complement(c, g, 9); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([&] { EvaluationSet::create(c, Divisor{{1, 0, 0}, 0}, {}); }) == ErrorKind::ArityMismatch);
    CHECK_NOTHROW(EvaluationSet::create(c, Divisor{{1, 0}, 0}, {RationalPlace::infinity()}));

    const EvaluationSet trimmed = EvaluationSet::complement(c, g, 5);
    CHECK(trimmed.n() == 5);
    CHECK(trimmed.dropped().size() == 3);
    CHECK(trimmed.places().back() == d.places()[4]);
    const EvaluationSet s1 = EvaluationSet::complement(c, g, 5, 99), s2 = EvaluationSet::complement(c, g, 5, 99);
    CHECK(s1.places() == s2.places());
    // seeded selection keeps enumeration order
    std::vector<std::size_t> pos;
    for (const auto& p : s1.places()) pos.push_back(std::find(all.begin(), all.end(), p) - all.begin());
    CHECK(std::is_sorted(pos.begin(), pos.end()));
}

TEST_CASE("small codes from the construction examples") {
    const KummerCurve c = examples::hermitian_gf4();
    const Divisor g{{0, 0}, 3};
    const EvaluationSet d = EvaluationSet::complement(c, g);
    const LinearCode cl = build_CL(c, g, d);
    CHECK(cl.n == 8);
    CHECK(cl.k == 3);
    CHECK(cl.bounds.at(0).name == "goppa_L");
    CHECK(cl.bounds.at(0).value == 5);

    const Divisor zero = Divisor::zero(2);
    const EvaluationSet d0 = EvaluationSet::complement(c, zero, 8);
    const LinearCode rep = build_CL(c, zero, d0);
    CHECK(rep.k == 1);
    CHECK(std::all_of(rep.generator.data().begin(), rep.generator.data().end(), [](Elem x) { return x == 1; }));
    CHECK(brute_force_distance(rep).distance == std::optional<std::size_t>(8));

    const KummerCurve e4 = examples::example4_curve();
    const Divisor g4{{28, 1, 0, 0}, 8};
    const LinearCode cl4 = build_CL(e4, g4, EvaluationSet::complement(e4, g4));
    CHECK(cl4.n == 254);
    CHECK(cl4.k == 26);
}

TEST_CASE("duality, dimension law and Singleton on the small curve") {
    const KummerCurve c = examples::hermitian_gf4();
    const LatticeParams lp = c.lattice();
    for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b)
            for (std::int64_t t = 0; t <= 4; ++t) {
                const Divisor g{{a, b}, t};
                const EvaluationSet d = EvaluationSet::complement(c, g);
                const LinearCode cl = build_CL(c, g, d);
                const LinearCode co = build_COmega(c, g, d);
                CHECK(cl.k + co.k == d.n());
                CHECK(all_zero(multiply_transpose(cl.generator, co.generator)));
                CHECK(rank_and_nullspace(co.generator).rank == co.k);
                const auto n = static_cast<std::int64_t>(d.n());
                if (2 * lp.genus - 2 < g.degree() && g.degree() < n)
                    CHECK(static_cast<std::int64_t>(co.k) == n + lp.genus - 1 - g.degree());
                for (const LinearCode* code : {&cl, &co}) {
                    const DistanceResult res = brute_force_distance(*code);
                    if (!res.distance) {
                        CHECK(code->k == 0);
                        continue;
                    }
                    CHECK(code->k + *res.distance <= code->n + 1);
                    for (const DesignedBound& bd : code->bounds)
                        if (bd.name != "goppa_L" || g.degree() < n)
                            CHECK_MESSAGE(bd.value <= static_cast<std::int64_t>(*res.distance), bd.name << " for " << g);
                }
            }
}

TEST_CASE("permuting D permutes columns only") {
    const KummerCurve c = examples::hermitian_gf4();
    const Divisor g{{2, 0}, 2};
    const EvaluationSet d = EvaluationSet::complement(c, g);
    std::vector<RationalPlace> shuffled = d.places();
    std::mt19937_64 rng(3);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const EvaluationSet d2 = EvaluationSet::create(c, g, shuffled);
    const LinearCode x = build_COmega(c, g, d), y = build_COmega(c, g, d2);
    CHECK(x.n == y.n);
    CHECK(x.k == y.k);
    CHECK(brute_force_distance(x).distance == brute_force_distance(y).distance);
}

TEST_CASE("designed distances") {
    const LatticeParams e1 = LatticeParams::from(5, 9);
    const PlaceTuple p1inf = PlaceTuple::leading(1, true);
    const Divisor g1{{51, 0, 0, 0, 0, 0, 0, 0, 0}, 1};
    CHECK(designed_distance(e1, g1, bound::PureGapBox{p1inf, GapBox{{26, 1}, {0, 0}}}) == 24);
    CHECK(designed_distance(e1, g1, bound::GoppaOmega{}) == 22);
    CHECK(designed_distance(e1, g1, bound::GoppaL{368}) == 316);
    CHECK(kind_of([&] {
              designed_distance(e1, Divisor{{50, 0, 0, 0, 0, 0, 0, 0, 0}, 1},
                                bound::PureGapBox{p1inf, GapBox{{26, 1}, {0, 0}}});
          }) == ErrorKind::InconsistentDivisor);
    CHECK(kind_of([&] { designed_distance(e1, g1, bound::PureGapBox{p1inf, GapBox{{27, 1}, {0, 0}}}); }) ==
          ErrorKind::NotPureGapBox);

    const LatticeParams e4 = LatticeParams::from(9, 4);
    const Divisor h{{14, 1, 0, 0}, 4};
    CHECK(designed_distance(e4, Divisor{{28, 1, 0, 0}, 8}, bound::FloorPair{h}) == 16);
    CHECK(kind_of([&] { designed_distance(e4, Divisor{{28, 2, 0, 0}, 8}, bound::FloorPair{h}); }) ==
          ErrorKind::InconsistentDivisor);
    CHECK(kind_of([&] {
              designed_distance(e4, Divisor{{28, 1, 0, 0}, 8}, bound::FloorPair{Divisor{{-1, 0, 0, 0}, 0}});
          }) == ErrorKind::InconsistentDivisor);

    const auto best = best_floor_bound(e4, Divisor{{28, 1, 0, 0}, 8});
    REQUIRE(best.has_value());
    CHECK(best->value == 16);
    const auto best_box = best_pure_gap_bound(e1, g1);
    REQUIRE(best_box.has_value());
    CHECK(best_box->value == 24);
}

TEST_CASE("brute force budget and empty code") {
    const KummerCurve e2 = examples::example2_curve();
    const Divisor g{{26, 1, 0, 0, 0}, 0};
    const LinearCode co = build_COmega(e2, g, EvaluationSet::complement(e2, g, 124));
    CHECK(kind_of([&] { brute_force_distance(co); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([&] { brute_force_distance(co, 1000); }) == ErrorKind::BudgetExceeded);

    const KummerCurve c = examples::hermitian_gf4();
    const Divisor big{{0, 0}, 20};
    const LinearCode full = build_CL(c, big, EvaluationSet::complement(c, big));
    const LinearCode none = build_COmega(c, big, EvaluationSet::complement(c, big));
    CHECK(full.k == 8);
    CHECK(none.k == 0);
    const DistanceResult res = brute_force_distance(none, 1);
    CHECK_FALSE(res.distance.has_value());
}

TEST_CASE("matrix export format") {
    const KummerCurve c = examples::hermitian_gf4();
    const Divisor g{{0, 0}, 3};
    const LinearCode cl = build_CL(c, g, EvaluationSet::complement(c, g));
    std::ostringstream os;
    write_matrix(os, cl);
    std::istringstream is(os.str());
    std::size_t n = 0, k = 0, q = 0;
    is >> n >> k >> q;
    CHECK(n == 8);
    CHECK(k == 3);
    CHECK(q == 4);
    std::string line;
    std::getline(is, line);
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::size_t count = 0;
        Elem v = 0;
        while (ls >> v) {
            CHECK(v < 4);
            CHECK(v == cl.generator.at(rows, count));
            ++count;
        }
        CHECK(count == 8);
        CHECK(line.find("  ") == std::string::npos);
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(os.str().back() == '\n');
}
