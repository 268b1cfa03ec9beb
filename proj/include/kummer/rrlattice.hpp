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
   Riemann-Roch spaces of divisors supported on P_1..P_r, P_inf.

   L(G) has the monomial basis E = z^i (x-alpha_2)^j_2 ... (x-alpha_r)^j_r over
   the lattice points (i, j_2..j_r) with i + s_1 >= 0, 0 <= i + m j_mu + s_mu < m
   and r i + m sum(j) <= t, where z = y^A f^B has divisor P_1+...+P_r - r P_inf.
   Given i, every j_mu is forced (j_mu = ceil((-i - s_mu)/m)), so enumeration is
   a walk over i alone.

   The same space has a second basis Lambda_{u,v} = beta^u prod h_mu^v_mu with
   beta = z^-a (x-alpha_1)^-b and h_mu = (x-alpha_mu)/(x-alpha_1); the two are
   related by an integral unimodular change of coordinates.
*/

#ifndef KUMMER_RRLATTICE_HPP
#define KUMMER_RRLATTICE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/divisor.hpp"

namespace kummer {

struct LatticePoint {
    std::int64_t i = 0;
    std::vector<std::int64_t> j;  // j_2 .. j_r
    bool operator==(const LatticePoint&) const = default;
};

struct ThetaPoint {
    std::int64_t u = 0;
    std::vector<std::int64_t> v;  // v_2 .. v_r
    bool operator==(const ThetaPoint&) const = default;
};

/// E(LatticePoint) or Lambda(ThetaPoint).
using BasisMonomial = std::variant<LatticePoint, ThetaPoint>;

struct PlaceRef {
    bool infinity = false;
    std::size_t index = 0;  // 1-based ramified index when !infinity

    static PlaceRef at_infinity() { return {true, 0}; }
    static PlaceRef ramified(std::size_t mu) { return {false, mu}; }
    bool operator==(const PlaceRef&) const = default;
};

/// Points of Omega(G) ordered by i ascending.
std::vector<LatticePoint> omega_enumerate(const LatticeParams& lp, const Divisor& g);

/// #Omega(G) = l(G), without materializing the points.
std::int64_t dimension(const LatticeParams& lp, const Divisor& g);

/// Image of omega_enumerate under the coordinate change to Theta.
std::vector<ThetaPoint> theta_enumerate(const LatticeParams& lp, const Divisor& g);

ThetaPoint to_theta(const LatticeParams& lp, const LatticePoint& pt);
LatticePoint to_lattice(const LatticeParams& lp, const ThetaPoint& pt);

/// Whether l(G) = l(G - P) + 1, decided by the closed-form inequality at P.
bool increment_predicate(const LatticeParams& lp, const Divisor& g, PlaceRef at);

Divisor monomial_divisor(const LatticeParams& lp, const BasisMonomial& b);

/// The Example-style columns (-i, -i-m j_2, ..., r i + m sum j): minus the monomial's divisor.
Divisor pole_orders(const LatticeParams& lp, const LatticePoint& pt);

/// Value of a basis monomial at a rational place where it has no pole.
FieldElement evaluate_monomial(const KummerCurve& curve, const BasisMonomial& b, const RationalPlace& place);

inline std::vector<LatticePoint> omega_enumerate(const KummerCurve& c, const Divisor& g) {
    return omega_enumerate(c.lattice(), g);
}
inline std::int64_t dimension(const KummerCurve& c, const Divisor& g) { return dimension(c.lattice(), g); }
inline std::vector<ThetaPoint> theta_enumerate(const KummerCurve& c, const Divisor& g) {
    return theta_enumerate(c.lattice(), g);
}
inline bool increment_predicate(const KummerCurve& c, const Divisor& g, PlaceRef at) {
    return increment_predicate(c.lattice(), g, at);
}
inline Divisor monomial_divisor(const KummerCurve& c, const BasisMonomial& b) { return monomial_divisor(c.lattice(), b); }

}  // namespace kummer

#endif
