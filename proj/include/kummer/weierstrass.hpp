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
   Weierstrass semigroups, gaps and pure gaps at the totally ramified places,
   decided by closed-form ceiling inequalities, plus divisor floors.

   For G = sum s_mu P_mu + t P_inf, whether l(G) = l(G - P) + 1 has a closed form
   at every distinguished place P (see increment_predicate). A coordinate tuple on
   a set of places is in the semigroup when the increment holds at every selected
   place and is a pure gap when it fails at every selected place.
*/

#ifndef KUMMER_WEIERSTRASS_HPP
#define KUMMER_WEIERSTRASS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/divisor.hpp"
#include "kummer/rrlattice.hpp"

namespace kummer {

/// A set of distinguished places: some ramified P_mu (in the given order) and optionally P_inf, which comes last.
struct PlaceTuple {
    std::vector<std::size_t> ramified;  // 1-based
    bool infinity = false;

    /// P_1, ..., P_l (and P_inf).
    static PlaceTuple leading(std::size_t l, bool infinity);

    std::size_t arity() const noexcept { return ramified.size() + (infinity ? 1 : 0); }
    void validate(const LatticeParams& lp) const;

    /// The divisor sum coords_i Q_i; places outside the tuple get coefficient 0.
    Divisor embed(const LatticeParams& lp, std::span<const std::int64_t> coords) const;
    PlaceRef place(std::size_t k) const;
    std::string label() const;
};

bool semigroup_member(const LatticeParams& lp, const PlaceTuple& places, std::span<const std::int64_t> coords);
bool pure_gap(const LatticeParams& lp, const PlaceTuple& places, std::span<const std::int64_t> coords);

/// Gaps at a single place (the one-point formulas), those <= limit, ascending. The full set has g elements.
std::vector<std::int64_t> one_point_gaps(const LatticeParams& lp, PlaceRef which, std::int64_t limit);

/// Axis-aligned box of pure gaps: base_i <= k_i <= base_i + widths_i.
struct GapBox {
    std::vector<std::int64_t> base;
    std::vector<std::int64_t> widths;

    /// Checks every point of the box with pure_gap; NotPureGapBox otherwise.
    static GapBox create(const LatticeParams& lp, const PlaceTuple& places, std::vector<std::int64_t> base,
                         std::vector<std::int64_t> widths);

    /// sum (2 base_i + widths_i - 1) Q_i.
    Divisor induced_divisor(const LatticeParams& lp, const PlaceTuple& places) const;
    /// sum widths_i + number of places: how far the distance bound exceeds deg(G) - (2g - 2).
    std::int64_t gain() const;
    bool operator==(const GapBox&) const = default;
};

struct BoxCandidate {
    GapBox box;
    Divisor divisor;
    std::int64_t gain = 0;
};

/// Every maximal box of pure gaps inside [1, bound]^arity, best first
/// (largest gain, then smallest deg G, then lexicographic base and widths).
std::vector<BoxCandidate> box_search(const LatticeParams& lp, const PlaceTuple& places, std::int64_t bound);

/// Pure gaps in [1, bound]^arity, lexicographic in the tuple order.
std::vector<std::vector<std::int64_t>> pure_gaps_in_box(const LatticeParams& lp, const PlaceTuple& places,
                                                        std::int64_t bound);

/// Floor of H from the maxima of the pole orders over Omega(H); EmptyRiemannRochSpace when l(H) = 0.
Divisor floor_divisor(const LatticeParams& lp, const Divisor& h);

inline Divisor floor_divisor(const KummerCurve& c, const Divisor& h) { return floor_divisor(c.lattice(), h); }

}  // namespace kummer

#endif
