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
   Data-parallel kernels. Every kernel has a plain serial reference in
   kernels::serial and an OpenMP version in kernels::parallel; the two must
   return identical results, which the unit tests check and bench/ times.
   Library code calls the parallel versions.
*/

#ifndef KUMMER_KERNELS_HPP
#define KUMMER_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kummer/gf.hpp"

namespace kummer::kernels {

/// Marks an x with no affine points (a root of f).
inline constexpr Elem kNoValue = 0xffffffffu;

struct MinWeight {
    std::optional<std::size_t> weight;  // empty when k == 0
    std::uint64_t codewords = 0;        // nonzero codewords visited
};

/// Flat grid over [1, bound]^dims; index = sum (c_i - 1) * bound^i.
struct GridShape {
    std::size_t dims;
    std::int64_t bound;

    std::size_t size() const;
    void coords(std::size_t index, std::span<std::int64_t> out) const;
    std::size_t index(std::span<const std::int64_t> coords) const;
};

using GridPredicate = std::function<bool(std::span<const std::int64_t>)>;

namespace serial {

/// In-place RREF of a rows x cols row-major block; returns pivot columns.
std::vector<std::size_t> rref_inplace(const FiniteField& f, std::span<Elem> data, std::size_t rows,
                                      std::size_t cols);

/// All (x, y) with y^m = rhs[x], rhs[x] != kNoValue, in (x, y) codec order. Direct double loop.
std::vector<std::pair<Elem, Elem>> affine_points(const FiniteField& f, std::span<const Elem> rhs,
                                                 std::uint32_t m);

std::vector<std::uint8_t> predicate_grid(const GridShape& shape, const GridPredicate& pred);

/// Minimum Hamming weight over all nonzero messages, recomputing each codeword from scratch.
MinWeight min_weight(const Matrix& generator);

}  // namespace serial

namespace parallel {

std::vector<std::size_t> rref_inplace(const FiniteField& f, std::span<Elem> data, std::size_t rows,
                                      std::size_t cols);

std::vector<std::pair<Elem, Elem>> affine_points(const FiniteField& f, std::span<const Elem> rhs,
                                                 std::uint32_t m);

std::vector<std::uint8_t> predicate_grid(const GridShape& shape, const GridPredicate& pred);

/// Same result as serial::min_weight; message space is split into contiguous blocks walked with an odometer.
MinWeight min_weight(const Matrix& generator);

}  // namespace parallel

}  // namespace kummer::kernels

#endif
