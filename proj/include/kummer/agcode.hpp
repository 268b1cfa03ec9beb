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
   Algebraic-geometric codes C_L(D, G) and C_Omega(D, G) as explicit matrices.

   C_L is the evaluation of the monomial basis of L(G) at the places of D,
   row-reduced to a full-rank generator in reduced echelon form. C_Omega is
   built as its dual (null space), also in reduced echelon form.
*/

#ifndef KUMMER_AGCODE_HPP
#define KUMMER_AGCODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/gf.hpp"
#include "kummer/kernels.hpp"
#include "kummer/weierstrass.hpp"

namespace kummer {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

class EvaluationSet {
   public:
    /// Validates: distinct places on the curve, none in supp(G).
    static EvaluationSet create(const KummerCurve& curve, const Divisor& g, std::vector<RationalPlace> places);

    /// All rational places outside supp(G) in enumeration order. With n smaller than that, the
    /// highest-ordered places are dropped, or a seeded uniform choice of them when seed is set.
    static EvaluationSet complement(const KummerCurve& curve, const Divisor& g, std::optional<std::size_t> n = {},
                                    std::optional<std::uint64_t> seed = {});

    const std::vector<RationalPlace>& places() const noexcept { return places_; }
    const std::vector<RationalPlace>& dropped() const noexcept { return dropped_; }
    std::size_t n() const noexcept { return places_.size(); }

   private:
    std::vector<RationalPlace> places_;
    std::vector<RationalPlace> dropped_;
};

struct DesignedBound {
    std::string name;
    std::int64_t value = 0;
    std::string detail;
};

struct LinearCode {
    Matrix generator;  // k x n, reduced echelon form
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<DesignedBound> bounds;

    std::optional<std::int64_t> best_bound() const;
};

LinearCode build_CL(const KummerCurve& curve, const Divisor& g, const EvaluationSet& d);
LinearCode build_COmega(const KummerCurve& curve, const Divisor& g, const EvaluationSet& d);

namespace bound {
struct GoppaL {
    std::size_t n;
};
struct GoppaOmega {};
struct PureGapBox {
    PlaceTuple places;
    GapBox box;
};
struct FloorPair {
    Divisor h;
};
}  // namespace bound

using BoundMethod = std::variant<bound::GoppaL, bound::GoppaOmega, bound::PureGapBox, bound::FloorPair>;

/// The designed distance for G by one method; InconsistentDivisor when G does not have the required shape.
std::int64_t designed_distance(const LatticeParams& lp, const Divisor& g, const BoundMethod& method);

/// Largest pure-gap-box bound over every box decomposition G = sum (2 beta_i + t_i - 1) Q_i, Q = supp(G).
std::optional<DesignedBound> best_pure_gap_bound(const LatticeParams& lp, const Divisor& g);

/// Largest floor bound over every effective H with G = H + floor(H); nullopt if none or search exceeds budget.
std::optional<DesignedBound> best_floor_bound(const LatticeParams& lp, const Divisor& g,
                                              std::uint64_t budget = 1u << 20);

/// Goppa bound plus any pure-gap-box and floor bounds that apply to G (all lower bounds on d_Omega).
std::vector<DesignedBound> omega_bounds(const LatticeParams& lp, const Divisor& g);

struct DistanceResult {
    std::optional<std::size_t> distance;  // empty for the zero code
    std::uint64_t codewords = 0;
};

/// Exhaustive minimum weight; BudgetExceeded when q^k > budget.
DistanceResult brute_force_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// "n k q" then k lines of n codec integers.
void write_matrix(std::ostream& os, const LinearCode& code);

}  // namespace kummer

#endif
