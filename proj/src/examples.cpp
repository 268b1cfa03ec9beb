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

#include "kummer/examples.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kummer/agcode.hpp"
#include "kummer/rrlattice.hpp"
#include "kummer/weierstrass.hpp"

namespace kummer::examples {

namespace {

KummerCurve make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus, std::vector<Elem> f,
                 std::int64_t m) {
    FieldPtr field = FiniteField::create(p, e, std::move(modulus));
    std::vector<Elem> roots = KummerCurve::find_roots(*field, f);
    return KummerCurve::create(std::move(field), m, 1, std::move(roots));
}

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << std::boolalpha << v;
    return os.str();
}

std::string tuple_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

class Recorder {
   public:
    explicit Recorder(Report& r) : r_(r) {}

    template <class T>
    void eq(std::string claim, const T& expected, const T& observed) {
        r_.checks.push_back({std::move(claim), str(expected), str(observed), expected == observed});
    }
    void truth(std::string claim, bool observed) { eq(std::move(claim), true, observed); }
    void note(std::string text) { r_.notes.push_back(std::move(text)); }

    // Runs body; a library error becomes a failed check instead of aborting the report.
    template <class F>
    void guarded(const std::string& claim, F&& body) {
        try {
            body();
        } catch (const Error& err) {
            r_.checks.push_back({claim, "no error", err.what(), false});
        }
    }

   private:
    Report& r_;
};

std::string divisor_str(const Divisor& d) { return str(d); }

bool box_listed(const std::vector<BoxCandidate>& found, const GapBox& box) {
    return std::any_of(found.begin(), found.end(), [&](const BoxCandidate& c) { return c.box == box; });
}

std::int64_t bound_named(const LinearCode& code, const std::string& name) {
    for (const DesignedBound& b : code.bounds)
        if (b.name == name) return b.value;
    return -1;
}

void example1(Recorder& rec) {
    const KummerCurve c = example1_curve();
    const LatticeParams lp = c.lattice();
    rec.eq<std::int64_t>("genus", 16, c.genus());
    rec.eq<std::size_t>("rational places N", 370, c.enumerate_places().size());
    const PlaceTuple tuple = PlaceTuple::leading(1, true);
    const std::vector<std::int64_t> p26{26, 1}, p27{27, 1};
    rec.eq("(26,1) pure gap at (P1,Pinf)", true, pure_gap(lp, tuple, p26));
    rec.eq("(27,1) pure gap at (P1,Pinf)", false, pure_gap(lp, tuple, p27));
    rec.eq("(26,1) in semigroup at (P1,Pinf)", false, semigroup_member(lp, tuple, p26));
    rec.eq<std::size_t>("pure gaps at (P1,Pinf) in [1,30]^2", 94, pure_gaps_in_box(lp, tuple, 30).size());
    const auto boxes = box_search(lp, tuple, 40);
    const GapBox box{{26, 1}, {0, 0}};
    rec.truth("box_search lists base (26,1) widths (0,0)", box_listed(boxes, box));
    const Divisor g{{51, 0, 0, 0, 0, 0, 0, 0, 0}, 1};
    rec.eq("induced divisor", divisor_str(g), divisor_str(box.induced_divisor(lp, tuple)));
    rec.guarded("pure-gap box bound", [&] {
        rec.eq<std::int64_t>("pure-gap box bound", 24, designed_distance(lp, g, bound::PureGapBox{tuple, box}));
    });
    rec.guarded("C_Omega n=368", [&] {
        const EvaluationSet d = EvaluationSet::complement(c, g, 368);
        const LinearCode code = build_COmega(c, g, d);
        rec.eq<std::size_t>("C_Omega length", 368, code.n);
        rec.eq<std::size_t>("C_Omega dimension (n-37)", 331, code.k);
        rec.eq<std::int64_t>("attached pure-gap bound", 24, bound_named(code, "pure_gap_box"));
        rec.eq<std::int64_t>("best attached bound", 24, code.best_bound().value_or(-1));
    });
    rec.guarded("C_Omega n=360", [&] {
        const EvaluationSet d = EvaluationSet::complement(c, g, 360);
        const LinearCode code = build_COmega(c, g, d);
        rec.eq<std::size_t>("C_Omega dimension at n=360 (n-37)", 323, code.k);
        rec.note("n=360 drops the " + std::to_string(d.dropped().size()) + " highest-ordered places, last kept " +
                 d.places().back().label());
    });
}

void example2(Recorder& rec) {
    const KummerCurve c = example2_curve();
    const LatticeParams lp = c.lattice();
    rec.eq<std::int64_t>("genus", 10, c.genus());
    rec.eq<std::size_t>("rational places N = q^3+1", 126, c.enumerate_places().size());
    const PlaceTuple tuple = PlaceTuple::leading(2, false);
    const std::vector<std::int64_t> p13{13, 1}, p14{14, 1};
    rec.eq("(13,1) pure gap at (P1,P2)", true, pure_gap(lp, tuple, p13));
    rec.eq("(14,1) pure gap at (P1,P2)", true, pure_gap(lp, tuple, p14));
    const GapBox box{{13, 1}, {1, 0}};
    rec.truth("box_search lists base (13,1) widths (1,0)", box_listed(box_search(lp, tuple, 40), box));
    const Divisor g{{26, 1, 0, 0, 0}, 0};
    rec.eq("induced divisor", divisor_str(g), divisor_str(box.induced_divisor(lp, tuple)));
    rec.eq<std::int64_t>("l(26P1+P2)", 18, dimension(lp, g));
    rec.guarded("pure-gap box bound", [&] {
        rec.eq<std::int64_t>("pure-gap box bound", 12, designed_distance(lp, g, bound::PureGapBox{tuple, box}));
    });
    rec.guarded("C_Omega n=124", [&] {
        const EvaluationSet d = EvaluationSet::complement(c, g, 124);
        const LinearCode code = build_COmega(c, g, d);
        rec.eq<std::size_t>("C_Omega length", 124, code.n);
        rec.eq<std::size_t>("C_Omega dimension (n-18)", 106, code.k);
        rec.eq<std::int64_t>("best attached bound", 12, code.best_bound().value_or(-1));
        rec.note("n=124 uses every place except P1 and P2, including Pinf");
    });
    rec.guarded("C_Omega n=120", [&] {
        const LinearCode code = build_COmega(c, g, EvaluationSet::complement(c, g, 120));
        rec.eq<std::size_t>("C_Omega dimension at n=120 (n-18)", 102, code.k);
    });
}

void example3(Recorder& rec) {
    // y^6 = (x^5 - x)^4 over GF(25): m = 6, r = 5, lambda = 4.
    const std::int64_t m = 6, r = 5, lambda = 4;
    rec.note("the curve y^6=(x^5-x)^4 has gcd(m, r*lambda) = gcd(6, 20) = " + std::to_string(std::gcd(m, r * lambda)) +
             " != 1, so it is outside the supported family; only the lattice formulas with (m,r)=(6,5) are checked "
             "and no code is constructed");
    const FieldPtr gf25 = FiniteField::create(5, 2, {2, 1, 1});
    const std::vector<Elem> f{0, gf25->neg(1), 0, 0, 0, 1};
    bool rejected = false;
    try {
        (void)KummerCurve::create(gf25, m, lambda, KummerCurve::find_roots(*gf25, f));
    } catch (const Error& err) {
        rejected = err.kind() == ErrorKind::GcdViolation;
    }
    rec.truth("curve construction rejected with GcdViolation", rejected);

    const LatticeParams lp = LatticeParams::from(m, r);
    rec.eq<std::int64_t>("genus of the (6,5) lattice", 10, lp.genus);
    const PlaceTuple tuple = PlaceTuple::leading(2, true);
    std::vector<std::string> missing;
    for (std::int64_t i = 8; i <= 9; ++i)
        for (std::int64_t k = 1; k <= 3; ++k) {
            const std::vector<std::int64_t> pt{i, 1, k};
            if (!pure_gap(lp, tuple, pt)) missing.push_back(tuple_str(pt));
        }
    std::string observed = "all pure gaps";
    if (!missing.empty()) {
        observed = "not pure:";
        for (const std::string& s : missing) observed += " " + s;
    }
    rec.eq<std::string>("box {8<=i<=9, j=1, 1<=k<=3} in G0(P1,P2,Pinf)", "all pure gaps", observed);

    const Divisor g{{16, 1, 0, 0, 0}, 3};
    const GapBox box{{8, 1, 1}, {1, 0, 2}};
    rec.eq("induced divisor", divisor_str(g), divisor_str(box.induced_divisor(lp, tuple)));
    const std::int64_t bound = g.degree() - (2 * lp.genus - 2) + box.gain();
    rec.eq<std::int64_t>("bound deg G - (2g-2) + sum t + l", 8, bound);
    const std::int64_t n = (25 - 5) * m + 5 + 1 - 3;
    rec.eq<std::int64_t>("length n = N - 3", 123, n);
    rec.eq<std::int64_t>("k_Omega = n + g - 1 - deg G", 112, n + lp.genus - 1 - g.degree());
}

void example4(Recorder& rec) {
    const KummerCurve c = example4_curve();
    const LatticeParams lp = c.lattice();
    rec.eq<std::int64_t>("genus", 12, c.genus());
    rec.eq<std::size_t>("rational places N", 257, c.enumerate_places().size());
    const Divisor h{{14, 1, 0, 0}, 4};
    const std::vector<LatticePoint> omega = omega_enumerate(lp, h);
    rec.eq<std::size_t>("l(H) for H = 14P1+P2+4Pinf", 8, omega.size());
    std::vector<std::vector<std::int64_t>> expected{{14, -4, -4, -4, -2}, {13, -5, -5, -5, 2}, {9, 0, 0, 0, -9},
                                                    {8, -1, -1, -1, -5},   {7, -2, -2, -2, -1}, {6, -3, -3, -3, 3},
                                                    {0, 0, 0, 0, 0},       {-1, -1, -1, -1, 4}};
    std::vector<std::vector<std::int64_t>> observed;
    for (const LatticePoint& pt : omega) {
        Divisor d = pole_orders(lp, pt);
        d.s.push_back(d.t);
        observed.push_back(d.s);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(observed.begin(), observed.end());
    std::string obs_str;
    for (const auto& v : observed) obs_str += tuple_str(v);
    std::string exp_str;
    for (const auto& v : expected) exp_str += tuple_str(v);
    rec.eq("pole-order tuples of the basis", exp_str, obs_str);
    const Divisor fl = floor_divisor(lp, h);
    rec.eq("floor of H", divisor_str(Divisor{{14, 0, 0, 0}, 4}), divisor_str(fl));
    const Divisor g = h + fl;
    rec.eq("G = H + floor(H)", divisor_str(Divisor{{28, 1, 0, 0}, 8}), divisor_str(g));
    rec.guarded("floor bound", [&] {
        rec.eq<std::int64_t>("floor bound 2 deg H - (2g-2)", 16, designed_distance(lp, g, bound::FloorPair{h}));
    });
    rec.guarded("C_Omega n=254", [&] {
        const EvaluationSet d = EvaluationSet::complement(c, g);
        const LinearCode cl = build_CL(c, g, d);
        rec.eq<std::size_t>("C_L dimension l(G)", 26, cl.k);
        const LinearCode code = build_COmega(c, g, d);
        rec.eq<std::size_t>("C_Omega length", 254, code.n);
        rec.eq<std::size_t>("C_Omega dimension", 228, code.k);
        rec.eq<std::int64_t>("attached floor bound", 16, bound_named(code, "floor_pair"));
        rec.eq<std::int64_t>("best attached bound", 16, code.best_bound().value_or(-1));
    });
}

}  // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

KummerCurve example1_curve() { return make(3, 4, {2, 1, 0, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1}, 5); }
KummerCurve example2_curve() { return make(5, 2, {2, 1, 1}, {0, 1, 0, 0, 0, 1}, 6); }
KummerCurve example4_curve() { return make(2, 6, {1, 1, 0, 0, 0, 0, 1}, {0, 1, 1, 0, 1}, 9); }
KummerCurve hermitian_gf4() { return make(2, 2, {1, 1, 1}, {0, 1, 1}, 3); }

Report verify(int which) {
    Report report;
    report.example = which;
    Recorder rec(report);
    switch (which) {
        case 1: example1(rec); break;
        case 2: example2(rec); break;
        case 3: example3(rec); break;
        case 4: example4(rec); break;
        default: throw Error(ErrorKind::OutOfRange, "no example " + std::to_string(which) + " (expected 1..4)");
    }
    return report;
}

void print(std::ostream& os, const Report& report) {
    for (const std::string& n : report.notes) os << "NOTE example-" << report.example << ": " << n << '\n';
    for (const Check& c : report.checks) {
        os << (c.pass ? "PASS" : "FAIL") << " example-" << report.example << ": " << c.claim << " = " << c.observed;
        if (!c.pass) os << " (expected " << c.expected << ")";
        os << '\n';
    }
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
    os << "example-" << report.example << ": " << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace kummer::examples
