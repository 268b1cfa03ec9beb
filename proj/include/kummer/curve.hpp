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

#ifndef KUMMER_CURVE_HPP
#define KUMMER_CURVE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kummer/divisor.hpp"
#include "kummer/gf.hpp"

namespace kummer {

struct RationalPlace {
    enum class Kind { Infinity, Ramified, Affine };

    Kind kind = Kind::Infinity;
    std::size_t index = 0;  // 1-based root index for Ramified
    Elem x = 0;             // alpha_index for Ramified
    Elem y = 0;

    static RationalPlace infinity() { return {}; }
    static RationalPlace ramified(std::size_t mu, Elem alpha) { return {Kind::Ramified, mu, alpha, 0}; }
    static RationalPlace affine(Elem x, Elem y) { return {Kind::Affine, 0, x, y}; }

    bool is_infinity() const noexcept { return kind == Kind::Infinity; }
    bool is_ramified() const noexcept { return kind == Kind::Ramified; }
    bool is_affine() const noexcept { return kind == Kind::Affine; }

    std::string label() const;
    bool operator==(const RationalPlace&) const = default;
};

/// The integer data that the lattice-point sets, semigroups and floors depend on:
/// m, r, the Bezout pair a*r + b*m = 1 (a least nonnegative) and the genus.
struct LatticeParams {
    std::int64_t m = 0;
    std::int64_t r = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t genus = 0;

    /// Requires m >= 2, r >= 1, gcd(m, r) = 1.
    static LatticeParams from(std::int64_t m, std::int64_t r);
};

/// Functions with closed-form divisors on the curve.
enum class CurveFunction { XMinusRoot, Y, F, Z };

/// y^m = f(x)^lambda with f = prod (x - alpha_i) over distinct alpha_i in GF(q), gcd(m, r*lambda) = gcd(p, m) = 1.
class KummerCurve {
   public:
    static KummerCurve create(FieldPtr field, std::int64_t m, std::int64_t lambda, std::vector<Elem> roots);

    /// Roots of a monic f (codec coefficients low-to-high) by exhaustive search; NotSplit unless f has deg f distinct roots.
    static std::vector<Elem> find_roots(const FiniteField& field, std::span<const Elem> coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    std::int64_t m() const noexcept { return m_; }
    std::int64_t lambda() const noexcept { return lambda_; }
    std::int64_t r() const noexcept { return static_cast<std::int64_t>(roots_.size()); }
    const std::vector<Elem>& roots() const noexcept { return roots_; }
    Elem root(std::size_t mu) const;  // 1-based

    std::int64_t genus() const noexcept { return genus_; }
    // A*lambda + B*m = 1 and a*r + b*m = 1, A and a least nonnegative.
    std::int64_t A() const noexcept { return A_; }
    std::int64_t B() const noexcept { return B_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

    LatticeParams lattice() const noexcept { return {m_, r(), a_, b_, genus_}; }

    Elem f_at(Elem x) const;

    Divisor principal_divisor(CurveFunction fn, std::size_t index = 1) const;

    /// Infinity, Ramified(1..r), then Affine ordered by (x, y) codec.
    std::vector<RationalPlace> enumerate_places() const;

    std::string describe() const;

   private:
    KummerCurve() = default;

    FieldPtr field_;
    std::int64_t m_ = 0;
    std::int64_t lambda_ = 0;
    std::vector<Elem> roots_;
    std::int64_t genus_ = 0;
    std::int64_t A_ = 0, B_ = 0, a_ = 0, b_ = 0;
};

/// Genus of y^m = f^lambda with deg f = r; does not need a field.
std::int64_t kummer_genus(std::int64_t m, std::int64_t r);

/// Least nonnegative x with x*u = 1 (mod m); requires gcd(u, m) = 1.
std::int64_t inverse_mod(std::int64_t u, std::int64_t m);

/// Ceiling division for a positive divisor.
constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d) noexcept {
    return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) noexcept {
    return n >= 0 ? n / d : -((-n + d - 1) / d);
}

}  // namespace kummer

#endif
