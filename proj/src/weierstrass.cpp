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

#include "kummer/weierstrass.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "kummer/kernels.hpp"

namespace kummer {

PlaceTuple PlaceTuple::leading(std::size_t l, bool infinity) {
    PlaceTuple t;
    for (std::size_t mu = 1; mu <= l; ++mu) t.ramified.push_back(mu);
    t.infinity = infinity;
    return t;
}

void PlaceTuple::validate(const LatticeParams& lp) const {
    if (arity() == 0) throw Error(ErrorKind::BadArity, "place tuple selects no places");
    std::vector<bool> seen(static_cast<std::size_t>(lp.r) + 1, false);
    for (auto mu : ramified) {
        if (mu < 1 || mu > static_cast<std::size_t>(lp.r))
            throw Error(ErrorKind::IndexOutOfRange, "place P" + std::to_string(mu) + " with r=" + std::to_string(lp.r));
        if (seen[mu]) throw Error(ErrorKind::BadArity, "place P" + std::to_string(mu) + " repeated");
        seen[mu] = true;
    }
}

Divisor PlaceTuple::embed(const LatticeParams& lp, std::span<const std::int64_t> coords) const {
    validate(lp);
    if (coords.size() != arity())
        throw Error(ErrorKind::BadArity,
                    std::to_string(coords.size()) + " coordinates for " + std::to_string(arity()) + " places");
    Divisor d = Divisor::zero(static_cast<std::size_t>(lp.r));
    for (std::size_t k = 0; k < ramified.size(); ++k) d.s[ramified[k] - 1] = coords[k];
    if (infinity) d.t = coords.back();
    return d;
}

PlaceRef PlaceTuple::place(std::size_t k) const {
    return k < ramified.size() ? PlaceRef::ramified(ramified[k]) : PlaceRef::at_infinity();
}

std::string PlaceTuple::label() const {
    std::string out;
    for (auto mu : ramified) out += (out.empty() ? "P" : ",P") + std::to_string(mu);
    if (infinity) out += out.empty() ? "Pinf" : ",Pinf";
    return out;
}

bool semigroup_member(const LatticeParams& lp, const PlaceTuple& places, std::span<const std::int64_t> coords) {
    const Divisor g = places.embed(lp, coords);
    for (auto c : coords)
        if (c < 0) throw Error(ErrorKind::NegativeCoordinate, "semigroup coordinates must be nonnegative");
    for (std::size_t k = 0; k < places.arity(); ++k)
        if (!increment_predicate(lp, g, places.place(k))) return false;
    return true;
}

bool pure_gap(const LatticeParams& lp, const PlaceTuple& places, std::span<const std::int64_t> coords) {
    const Divisor g = places.embed(lp, coords);
    for (auto c : coords)
        if (c < 1) throw Error(ErrorKind::NonPositiveCoordinate, "pure-gap coordinates must be positive");
    for (std::size_t k = 0; k < places.arity(); ++k)
        if (increment_predicate(lp, g, places.place(k))) return false;
    return true;
}

std::vector<std::int64_t> one_point_gaps(const LatticeParams& lp, PlaceRef which, std::int64_t limit) {
    const std::int64_t m = lp.m, r = lp.r;
    if (!which.infinity && (which.index < 1 || which.index > static_cast<std::size_t>(r)))
        throw Error(ErrorKind::IndexOutOfRange, "place P" + std::to_string(which.index));
    std::vector<std::int64_t> gaps;
    const std::int64_t j_max = m - 1 - m / r;
    for (std::int64_t j = 1; j <= j_max; ++j) {
        if (which.infinity) {
            for (std::int64_t k = ceil_div(r * j, m); k <= r - 1; ++k) gaps.push_back(m * k - r * j);
        } else {
            for (std::int64_t k = 0; k <= r - 2 - floor_div(r * j, m); ++k) gaps.push_back(m * k + j);
        }
    }
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::remove_if(gaps.begin(), gaps.end(), [&](std::int64_t v) { return v > limit; }), gaps.end());
    return gaps;
}

GapBox GapBox::create(const LatticeParams& lp, const PlaceTuple& places, std::vector<std::int64_t> base,
                      std::vector<std::int64_t> widths) {
    if (base.size() != places.arity() || widths.size() != places.arity())
        throw Error(ErrorKind::BadArity, "box dimension does not match the place tuple");
    for (auto w : widths)
        if (w < 0) throw Error(ErrorKind::NegativeCoordinate, "box widths must be nonnegative");
    std::vector<std::int64_t> point = base;
    std::function<void(std::size_t)> visit = [&](std::size_t d) {
        if (d == point.size()) {
            if (!pure_gap(lp, places, point)) {
                std::string where;
                for (auto c : point) where += (where.empty() ? "" : ",") + std::to_string(c);
                throw Error(ErrorKind::NotPureGapBox, "(" + where + ") is not a pure gap at " + places.label());
            }
            return;
        }
        for (std::int64_t v = base[d]; v <= base[d] + widths[d]; ++v) {
            point[d] = v;
            visit(d + 1);
        }
        point[d] = base[d];
    };
    visit(0);
    return {std::move(base), std::move(widths)};
}

Divisor GapBox::induced_divisor(const LatticeParams& lp, const PlaceTuple& places) const {
    std::vector<std::int64_t> coeffs(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) coeffs[i] = 2 * base[i] + widths[i] - 1;
    return places.embed(lp, coeffs);
}

std::int64_t GapBox::gain() const {
    std::int64_t total = static_cast<std::int64_t>(widths.size());
    for (auto w : widths) total += w;
    return total;
}

namespace {

constexpr std::size_t kMaxGridCells = std::size_t{1} << 24;

// Inclusive prefix sums over [0, bound]^dims, index 0 on each axis being the empty prefix.
class PrefixCounts {
   public:
    PrefixCounts(const kernels::GridShape& shape, const std::vector<std::uint8_t>& grid)
        : dims_(shape.dims), side_(static_cast<std::size_t>(shape.bound) + 1) {
        std::size_t total = 1;
        for (std::size_t d = 0; d < dims_; ++d) total *= side_;
        sums_.assign(total, 0);
        std::vector<std::int64_t> c(dims_);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            shape.coords(i, c);
            sums_[flat(c)] = grid[i];
        }
        std::size_t stride = 1;
        for (std::size_t d = 0; d < dims_; ++d) {
            for (std::size_t i = 0; i < total; ++i)
                if ((i / stride) % side_ != 0) sums_[i] += sums_[i - stride];
            stride *= side_;
        }
    }

    /// Number of marked cells in [lo, hi] (inclusive, 1-based).
    std::int64_t count(std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) const {
        std::int64_t total = 0;
        std::vector<std::int64_t> corner(dims_);
        for (std::size_t mask = 0; mask < (std::size_t{1} << dims_); ++mask) {
            int sign = 1;
            for (std::size_t d = 0; d < dims_; ++d) {
                if (mask & (std::size_t{1} << d)) {
                    corner[d] = lo[d] - 1;
                    sign = -sign;
                } else {
                    corner[d] = hi[d];
                }
            }
            total += sign * sums_[flat(corner)];
        }
        return total;
    }

   private:
    std::size_t flat(std::span<const std::int64_t> c) const {
        std::size_t idx = 0;
        for (std::size_t d = dims_; d-- > 0;) idx = idx * side_ + static_cast<std::size_t>(c[d]);
        return idx;
    }

    std::size_t dims_;
    std::size_t side_;
    std::vector<std::int64_t> sums_;
};

}  // namespace

std::vector<std::vector<std::int64_t>> pure_gaps_in_box(const LatticeParams& lp, const PlaceTuple& places,
                                                        std::int64_t bound) {
    places.validate(lp);
    if (bound < 1) return {};
    const kernels::GridShape shape{places.arity(), bound};
    if (shape.size() > kMaxGridCells) throw Error(ErrorKind::BadParameter, "search rectangle too large");
    const auto grid = kernels::parallel::predicate_grid(
        shape, [&](std::span<const std::int64_t> c) { return pure_gap(lp, places, c); });
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> c(shape.dims);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!grid[i]) continue;
        shape.coords(i, c);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoxCandidate> box_search(const LatticeParams& lp, const PlaceTuple& places, std::int64_t bound) {
    places.validate(lp);
    if (bound < 1) return {};
    const kernels::GridShape shape{places.arity(), bound};
    if (shape.size() > kMaxGridCells) throw Error(ErrorKind::BadParameter, "search rectangle too large");
    const auto grid = kernels::parallel::predicate_grid(
        shape, [&](std::span<const std::int64_t> c) { return pure_gap(lp, places, c); });
    const PrefixCounts prefix(shape, grid);
    const std::size_t dims = shape.dims;

    auto all_pure = [&](std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) {
        std::int64_t volume = 1;
        for (std::size_t d = 0; d < dims; ++d) {
            if (lo[d] < 1 || hi[d] > bound) return false;
            volume *= hi[d] - lo[d] + 1;
        }
        return prefix.count(lo, hi) == volume;
    };

    std::vector<BoxCandidate> found;
    std::vector<std::int64_t> base(dims), hi(dims);
    auto is_maximal = [&]() {
        for (std::size_t d = 0; d < dims; ++d) {
            ++hi[d];
            const bool grows_right = all_pure(base, hi);
            --hi[d];
            --base[d];
            const bool grows_left = all_pure(base, hi);
            ++base[d];
            if (grows_right || grows_left) return false;
        }
        return true;
    };
    // Feasible widths form a down-closed set; walk it one axis at a time.
    std::function<void(std::size_t)> grow = [&](std::size_t d) {
        if (d == dims) {
            if (!is_maximal()) return;
            GapBox box{base, std::vector<std::int64_t>(dims)};
            for (std::size_t k = 0; k < dims; ++k) box.widths[k] = hi[k] - base[k];
            Divisor g = box.induced_divisor(lp, places);
            const std::int64_t gain = box.gain();
            found.push_back({std::move(box), std::move(g), gain});
            return;
        }
        for (hi[d] = base[d]; all_pure(base, hi); ++hi[d]) grow(d + 1);
        hi[d] = base[d];
    };

    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!grid[i]) continue;
        shape.coords(i, base);
        hi = base;
        grow(0);
    }

    std::sort(found.begin(), found.end(), [](const BoxCandidate& x, const BoxCandidate& y) {
        return std::make_tuple(-x.gain, x.divisor.degree(), x.box.base, x.box.widths) <
               std::make_tuple(-y.gain, y.divisor.degree(), y.box.base, y.box.widths);
    });
    return found;
}

Divisor floor_divisor(const LatticeParams& lp, const Divisor& h) {
    const auto points = omega_enumerate(lp, h);
    if (points.empty()) throw Error(ErrorKind::EmptyRiemannRochSpace, "floor is undefined when l(H) = 0");
    Divisor fl = pole_orders(lp, points.front());
    for (const auto& pt : points) {
        const Divisor d = pole_orders(lp, pt);
        for (std::size_t mu = 0; mu < fl.s.size(); ++mu) fl.s[mu] = std::max(fl.s[mu], d.s[mu]);
        fl.t = std::max(fl.t, d.t);
    }
    return fl;
}

}  // namespace kummer
