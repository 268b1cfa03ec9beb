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

#include "kummer/agcode.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "kummer/rrlattice.hpp"

namespace kummer {

namespace {

bool in_support(const Divisor& g, const RationalPlace& p) {
    if (p.is_infinity()) return g.t != 0;
    if (p.is_ramified()) return g.s[p.index - 1] != 0;
    return false;
}

void check_support_arity(const KummerCurve& curve, const Divisor& g) {
    if (static_cast<std::int64_t>(g.r()) != curve.r())
        throw Error(ErrorKind::ArityMismatch, "divisor has " + std::to_string(g.r()) + " ramified coefficients, curve has " +
                                                  std::to_string(curve.r()));
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

PlaceTuple support_tuple(const Divisor& g) {
    PlaceTuple t;
    for (std::size_t mu = 1; mu <= g.r(); ++mu)
        if (g.s[mu - 1] != 0) t.ramified.push_back(mu);
    t.infinity = g.t != 0;
    return t;
}

std::int64_t coefficient(const Divisor& g, const PlaceTuple& t, std::size_t k) {
    const PlaceRef p = t.place(k);
    return p.infinity ? g.t : g.s[p.index - 1];
}

}  // namespace

EvaluationSet EvaluationSet::create(const KummerCurve& curve, const Divisor& g, std::vector<RationalPlace> places) {
    check_support_arity(curve, g);
    const FiniteField& f = *curve.field();
    for (std::size_t k = 0; k < places.size(); ++k) {
        const RationalPlace& p = places[k];
        if (p.is_ramified()) {
            if (p.index < 1 || p.index > g.r() || p.x != curve.root(p.index))
                throw Error(ErrorKind::BadParameter, "not a ramified place of the curve: " + p.label());
        } else if (p.is_affine()) {
            const Elem fx = p.x < f.q() ? curve.f_at(p.x) : 0;
            if (p.x >= f.q() || p.y >= f.q() || fx == 0 || f.pow(p.y, curve.m()) != f.pow(fx, curve.lambda()))
                throw Error(ErrorKind::BadParameter, "not an unramified point of the curve: " + p.label());
        }
        if (in_support(g, p)) {
            if (p.is_infinity()) throw Error(ErrorKind::InfinityInD, "Pinf is in supp(G) and cannot be evaluated");
            throw Error(ErrorKind::PlaceInSupport, p.label() + " is in supp(G)");
        }
        for (std::size_t l = 0; l < k; ++l)
            if (places[l] == p) throw Error(ErrorKind::DuplicatePlace, p.label() + " appears twice");
    }
    EvaluationSet set;
    set.places_ = std::move(places);
    return set;
}

EvaluationSet EvaluationSet::complement(const KummerCurve& curve, const Divisor& g, std::optional<std::size_t> n,
                                        std::optional<std::uint64_t> seed) {
    check_support_arity(curve, g);
    std::vector<RationalPlace> avail;
    for (const RationalPlace& p : curve.enumerate_places())
        if (!in_support(g, p)) avail.push_back(p);
    const std::size_t want = n.value_or(avail.size());
    if (want > avail.size())
        throw Error(ErrorKind::OutOfRange, "n = " + std::to_string(want) + " but only " + std::to_string(avail.size()) +
                                               " places lie outside supp(G)");
    std::vector<std::uint8_t> keep(avail.size(), 1);
    if (seed) {
        std::vector<std::size_t> order(avail.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::mt19937_64 rng(*seed);
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
        for (std::size_t i = want; i < order.size(); ++i) keep[order[i]] = 0;
    } else {
        for (std::size_t i = want; i < avail.size(); ++i) keep[i] = 0;
    }
    EvaluationSet set;
    for (std::size_t i = 0; i < avail.size(); ++i) (keep[i] ? set.places_ : set.dropped_).push_back(avail[i]);
    return set;
}

std::optional<std::int64_t> LinearCode::best_bound() const {
    std::optional<std::int64_t> best;
    for (const DesignedBound& b : bounds)
        if (!best || b.value > *best) best = b.value;
    return best;
}

LinearCode build_CL(const KummerCurve& curve, const Divisor& g, const EvaluationSet& d) {
    check_support_arity(curve, g);
    const std::vector<LatticePoint> basis = omega_enumerate(curve, g);
    const std::size_t n = d.n();
    Matrix m(curve.field(), basis.size(), n);
    for (std::size_t row = 0; row < basis.size(); ++row)
        for (std::size_t col = 0; col < n; ++col)
            m.at(row, col) = evaluate_monomial(curve, basis[row], d.places()[col]).value();
    EchelonForm ef = rref(std::move(m));
    const std::size_t k = ef.pivots.size();
    if (g.degree() < static_cast<std::int64_t>(n) && k != basis.size())
        throw Error(ErrorKind::InvariantViolated, "evaluation map is not injective although deg G < n");
    ef.reduced.truncate_rows(k);
    LinearCode code{std::move(ef.reduced), n, k, {}};
    code.bounds.push_back({"goppa_L", static_cast<std::int64_t>(n) - g.degree(), ""});
    return code;
}

LinearCode build_COmega(const KummerCurve& curve, const Divisor& g, const EvaluationSet& d) {
    const LinearCode cl = build_CL(curve, g, d);
    RankNullspace rn = rank_and_nullspace(cl.generator);
    const std::size_t n = d.n();
    const std::size_t k = n - rn.rank;
    const std::int64_t deg = g.degree();
    const std::int64_t gg = curve.genus();
    if (2 * gg - 2 < deg && deg < static_cast<std::int64_t>(n) &&
        static_cast<std::int64_t>(k) != static_cast<std::int64_t>(n) + gg - 1 - deg)
        throw Error(ErrorKind::InvariantViolated, "dim C_Omega = " + std::to_string(k) + ", expected n + g - 1 - deg G");
    LinearCode code{std::move(rn.nullspace), n, k, omega_bounds(curve.lattice(), g)};
    return code;
}

std::int64_t designed_distance(const LatticeParams& lp, const Divisor& g, const BoundMethod& method) {
    const std::int64_t base = g.degree() - (2 * lp.genus - 2);
    if (const auto* gl = std::get_if<bound::GoppaL>(&method)) return static_cast<std::int64_t>(gl->n) - g.degree();
    if (std::holds_alternative<bound::GoppaOmega>(method)) return base;
    if (const auto* pg = std::get_if<bound::PureGapBox>(&method)) {
        const GapBox box = GapBox::create(lp, pg->places, pg->box.base, pg->box.widths);
        if (box.induced_divisor(lp, pg->places) != g)
            throw Error(ErrorKind::InconsistentDivisor, "G is not the divisor induced by the box");
        return base + box.gain();
    }
    const Divisor& h = std::get<bound::FloorPair>(method).h;
    if (h.r() != g.r()) throw Error(ErrorKind::ArityMismatch, "H and G have different arity");
    if (!h.is_effective()) throw Error(ErrorKind::InconsistentDivisor, "H is not effective");
    if (h + floor_divisor(lp, h) != g) throw Error(ErrorKind::InconsistentDivisor, "G != H + floor(H)");
    return 2 * h.degree() - (2 * lp.genus - 2);
}

std::optional<DesignedBound> best_pure_gap_bound(const LatticeParams& lp, const Divisor& g) {
    const PlaceTuple places = support_tuple(g);
    const std::size_t l = places.arity();
    if (l == 0) return std::nullopt;
    std::vector<std::int64_t> coeff(l);
    for (std::size_t k = 0; k < l; ++k) {
        coeff[k] = coefficient(g, places, k);
        if (coeff[k] < 1) return std::nullopt;
    }
    std::optional<DesignedBound> best;
    std::vector<std::int64_t> beta(l, 1), widths(l), pt(l);
    const auto box_is_pure = [&] {
        pt = beta;
        while (true) {
            if (!pure_gap(lp, places, pt)) return false;
            std::size_t d = 0;
            for (; d < l; ++d) {
                if (pt[d] < beta[d] + widths[d]) {
                    ++pt[d];
                    break;
                }
                pt[d] = beta[d];
            }
            if (d == l) return true;
        }
    };
    while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < l; ++k) {
            widths[k] = coeff[k] + 1 - 2 * beta[k];
            ok = ok && widths[k] >= 0;
        }
        if (ok && box_is_pure()) {
            GapBox box{beta, widths};
            const std::int64_t value = g.degree() - (2 * lp.genus - 2) + box.gain();
            if (!best || value > best->value)
                best = DesignedBound{"pure_gap_box", value,
                                     places.label() + " base=" + join(beta) + " widths=" + join(widths)};
        }
        std::size_t d = 0;
        for (; d < l; ++d) {
            if (2 * (beta[d] + 1) - 1 <= coeff[d]) {
                ++beta[d];
                break;
            }
            beta[d] = 1;
        }
        if (d == l) break;
    }
    return best;
}

std::optional<DesignedBound> best_floor_bound(const LatticeParams& lp, const Divisor& g, std::uint64_t budget) {
    if (!g.is_effective()) return std::nullopt;
    std::uint64_t count = 1;
    for (std::int64_t c : g.s) {
        count *= static_cast<std::uint64_t>(c + 1);
        if (count > budget) return std::nullopt;
    }
    count *= static_cast<std::uint64_t>(g.t + 1);
    if (count > budget) return std::nullopt;
    std::optional<DesignedBound> best;
    Divisor h = Divisor::zero(g.r());
    const std::size_t dims = g.r() + 1;
    const auto coord = [&](Divisor& x, std::size_t k) -> std::int64_t& { return k < x.r() ? x.s[k] : x.t; };
    const auto limit = [&](std::size_t k) { return k < g.r() ? g.s[k] : g.t; };
    while (true) {
        if (h + floor_divisor(lp, h) == g) {
            const std::int64_t value = 2 * h.degree() - (2 * lp.genus - 2);
            if (!best || value > best->value) {
                std::ostringstream os;
                os << "H=" << h;
                best = DesignedBound{"floor_pair", value, os.str()};
            }
        }
        std::size_t d = 0;
        for (; d < dims; ++d) {
            if (coord(h, d) < limit(d)) {
                ++coord(h, d);
                break;
            }
            coord(h, d) = 0;
        }
        if (d == dims) break;
    }
    return best;
}

std::vector<DesignedBound> omega_bounds(const LatticeParams& lp, const Divisor& g) {
    std::vector<DesignedBound> out;
    out.push_back({"goppa_omega", g.degree() - (2 * lp.genus - 2), ""});
    if (auto b = best_pure_gap_bound(lp, g)) out.push_back(std::move(*b));
    if (auto b = best_floor_bound(lp, g)) out.push_back(std::move(*b));
    return out;
}

DistanceResult brute_force_distance(const LinearCode& code, std::uint64_t budget) {
    if (code.k == 0) return {};
    const std::uint64_t q = code.generator.field()->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k; ++i) {
        if (total > budget / q) throw Error(ErrorKind::BudgetExceeded, "q^k exceeds the budget of " + std::to_string(budget));
        total *= q;
    }
    if (total > budget) throw Error(ErrorKind::BudgetExceeded, "q^k exceeds the budget of " + std::to_string(budget));
    const kernels::MinWeight mw = kernels::parallel::min_weight(code.generator);
    return {mw.weight, mw.codewords};
}

void write_matrix(std::ostream& os, const LinearCode& code) {
    os << code.n << ' ' << code.k << ' ' << code.generator.field()->q() << '\n';
    for (std::size_t r = 0; r < code.k; ++r) {
        const auto row = code.generator.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << '\n';
    }
}

}  // namespace kummer
