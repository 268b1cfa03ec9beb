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

#include "kummer/rrlattice.hpp"

#include <numeric>

namespace kummer {

namespace {

void require_arity(const LatticeParams& lp, const Divisor& g) {
    if (static_cast<std::int64_t>(g.s.size()) != lp.r)
        throw Error(ErrorKind::ArityMismatch, "divisor has " + std::to_string(g.s.size()) + " ramified coefficients, curve has r=" +
                                                  std::to_string(lp.r));
}

// Visits the points of Omega(G) in increasing i. w(i) = r i + m sum_mu j_mu(i) is not monotone (several
// ceilings can step down together) but w(i + m) = w(i) + m, so once m consecutive i fail w <= t every
// later i fails as well.
template <typename Visit>
void walk_omega(const LatticeParams& lp, const Divisor& g, Visit&& visit) {
    require_arity(lp, g);
    const std::int64_t m = lp.m, r = lp.r;
    std::vector<std::int64_t> j(static_cast<std::size_t>(r - 1));
    std::int64_t misses = 0;
    for (std::int64_t i = -g.s[0]; misses < m; ++i) {
        std::int64_t w = r * i;
        for (std::int64_t mu = 1; mu < r; ++mu) {
            const std::int64_t jm = ceil_div(-i - g.s[static_cast<std::size_t>(mu)], m);
            j[static_cast<std::size_t>(mu - 1)] = jm;
            w += m * jm;
        }
        if (w <= g.t) {
            visit(i, j);
            misses = 0;
        } else {
            ++misses;
        }
    }
}

LatticePoint as_lattice(const LatticeParams& lp, const BasisMonomial& b) {
    if (const auto* e = std::get_if<LatticePoint>(&b)) return *e;
    return to_lattice(lp, std::get<ThetaPoint>(b));
}

}  // namespace

std::vector<LatticePoint> omega_enumerate(const LatticeParams& lp, const Divisor& g) {
    std::vector<LatticePoint> out;
    walk_omega(lp, g, [&](std::int64_t i, const std::vector<std::int64_t>& j) { out.push_back({i, j}); });
    return out;
}

std::int64_t dimension(const LatticeParams& lp, const Divisor& g) {
    std::int64_t count = 0;
    walk_omega(lp, g, [&](std::int64_t, const std::vector<std::int64_t>&) { ++count; });
    return count;
}

ThetaPoint to_theta(const LatticeParams& lp, const LatticePoint& pt) {
    const std::int64_t sum_j = std::accumulate(pt.j.begin(), pt.j.end(), std::int64_t{0});
    ThetaPoint th;
    th.u = -lp.r * pt.i - lp.m * sum_j;
    th.v.reserve(pt.j.size());
    for (auto jm : pt.j) th.v.push_back(lp.b * pt.i - lp.a * sum_j + jm);
    return th;
}

LatticePoint to_lattice(const LatticeParams& lp, const ThetaPoint& pt) {
    const std::int64_t sum_v = std::accumulate(pt.v.begin(), pt.v.end(), std::int64_t{0});
    LatticePoint e;
    e.i = -(lp.a + lp.b * lp.m) * pt.u - lp.m * sum_v;
    e.j.reserve(pt.v.size());
    for (auto vm : pt.v) e.j.push_back(lp.b * pt.u + sum_v + vm);
    return e;
}

std::vector<ThetaPoint> theta_enumerate(const LatticeParams& lp, const Divisor& g) {
    std::vector<ThetaPoint> out;
    walk_omega(lp, g, [&](std::int64_t i, const std::vector<std::int64_t>& j) { out.push_back(to_theta(lp, {i, j})); });
    return out;
}

bool increment_predicate(const LatticeParams& lp, const Divisor& g, PlaceRef at) {
    require_arity(lp, g);
    const std::int64_t m = lp.m;
    const auto& s = g.s;
    if (at.infinity) {
        // m sum_{mu>=2} ceil((-a t - s_mu)/m) <= s_1 + (a + b m) t
        std::int64_t lhs = 0;
        for (std::size_t mu = 1; mu < s.size(); ++mu) lhs += m * ceil_div(-lp.a * g.t - s[mu], m);
        return lhs <= s[0] + (lp.a + lp.b * m) * g.t;
    }
    if (at.index < 1 || at.index > s.size()) throw Error(ErrorKind::IndexOutOfRange, "place P" + std::to_string(at.index));
    // Omega is symmetric in s_1..s_r, so the P_1 criterion applies at P_mu with s_mu in front:
    // m sum_{nu != mu} ceil((s_mu - s_nu)/m) <= t + r s_mu
    const std::size_t mu = at.index - 1;
    std::int64_t lhs = 0;
    for (std::size_t nu = 0; nu < s.size(); ++nu)
        if (nu != mu) lhs += m * ceil_div(s[mu] - s[nu], m);
    return lhs <= g.t + lp.r * s[mu];
}

Divisor monomial_divisor(const LatticeParams& lp, const BasisMonomial& b) {
    const auto r = static_cast<std::size_t>(lp.r);
    Divisor d = Divisor::zero(r);
    if (const auto* e = std::get_if<LatticePoint>(&b)) {
        d.s[0] = e->i;
        std::int64_t sum_j = 0;
        for (std::size_t mu = 1; mu < r; ++mu) {
            d.s[mu] = e->i + lp.m * e->j[mu - 1];
            sum_j += e->j[mu - 1];
        }
        d.t = -(lp.r * e->i + lp.m * sum_j);
        return d;
    }
    const auto& th = std::get<ThetaPoint>(b);
    const std::int64_t sum_v = std::accumulate(th.v.begin(), th.v.end(), std::int64_t{0});
    d.s[0] = -(lp.a + lp.b * lp.m) * th.u - lp.m * sum_v;
    for (std::size_t mu = 1; mu < r; ++mu) d.s[mu] = -lp.a * th.u + lp.m * th.v[mu - 1];
    d.t = th.u;
    return d;
}

Divisor pole_orders(const LatticeParams& lp, const LatticePoint& pt) { return monomial_divisor(lp, pt) * -1; }

FieldElement evaluate_monomial(const KummerCurve& curve, const BasisMonomial& b, const RationalPlace& place) {
    const LatticeParams lp = curve.lattice();
    const LatticePoint e = as_lattice(lp, b);
    const FiniteField& f = *curve.field();
    const auto r = static_cast<std::size_t>(lp.r);
    auto value = [&](Elem v) { return FieldElement(curve.field(), v); };
    auto pole = [&]() { return Error(ErrorKind::PoleAtPlace, "monomial has a pole at " + place.label()); };

    switch (place.kind) {
        case RationalPlace::Kind::Affine: {
            const Elem fx = curve.f_at(place.x);
            const Elem z = f.mul(f.pow(place.y, curve.A()), f.pow(fx, curve.B()));
            Elem acc = f.pow(z, e.i);
            for (std::size_t mu = 2; mu <= r; ++mu) acc = f.mul(acc, f.pow(f.sub(place.x, curve.root(mu)), e.j[mu - 2]));
            return value(acc);
        }
        case RationalPlace::Kind::Infinity: {
            // Valuation zero forces i = m k, sum j = -r k, leaving a degree-0 quotient of monic polynomials in x.
            const Divisor d = monomial_divisor(lp, e);
            if (d.t < 0) throw pole();
            return value(d.t > 0 ? 0 : 1);
        }
        case RationalPlace::Kind::Ramified: break;
    }

    const std::size_t mu = place.index;
    if (mu < 1 || mu > r) throw Error(ErrorKind::IndexOutOfRange, "place P" + std::to_string(mu));
    const Elem alpha_mu = curve.root(mu);
    if (mu == 1) {
        if (e.i < 0) throw pole();
        if (e.i > 0) return value(0);
        Elem acc = 1;
        for (std::size_t nu = 2; nu <= r; ++nu) acc = f.mul(acc, f.pow(f.sub(alpha_mu, curve.root(nu)), e.j[nu - 2]));
        return value(acc);
    }
    const std::int64_t j_mu = e.j[mu - 2];
    const std::int64_t w = e.i + lp.m * j_mu;
    if (w < 0) throw pole();
    if (w > 0) return value(0);
    // i = -m j_mu, so z^i = f^{-j_mu} and E = (x - alpha_1)^{-j_mu} prod_{nu>=2} (x - alpha_nu)^{j_nu - j_mu}.
    Elem acc = f.pow(f.sub(alpha_mu, curve.root(1)), -j_mu);
    for (std::size_t nu = 2; nu <= r; ++nu) {
        if (nu == mu) continue;
        acc = f.mul(acc, f.pow(f.sub(alpha_mu, curve.root(nu)), e.j[nu - 2] - j_mu));
    }
    return value(acc);
}

}  // namespace kummer
