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

#include "kummer/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace kummer::kernels {

std::size_t GridShape::size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dims; ++i) n *= static_cast<std::size_t>(bound);
    return dims == 0 ? 0 : n;
}

void GridShape::coords(std::size_t index, std::span<std::int64_t> out) const {
    for (std::size_t i = 0; i < dims; ++i) {
        out[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(bound)) + 1;
        index /= static_cast<std::size_t>(bound);
    }
}

std::size_t GridShape::index(std::span<const std::int64_t> c) const {
    std::size_t idx = 0;
    for (std::size_t i = dims; i-- > 0;) idx = idx * static_cast<std::size_t>(bound) + static_cast<std::size_t>(c[i] - 1);
    return idx;
}

namespace {

// Row operations shared by both elimination variants. Returns the pivot row index or rows if none.
std::size_t find_pivot(std::span<const Elem> data, std::size_t rows, std::size_t cols, std::size_t from,
                       std::size_t col) {
    for (std::size_t r = from; r < rows; ++r)
        if (data[r * cols + col] != 0) return r;
    return rows;
}

void normalize_and_swap(const FiniteField& f, std::span<Elem> data, std::size_t cols, std::size_t target,
                        std::size_t found, std::size_t col) {
    if (found != target)
        std::swap_ranges(data.begin() + found * cols, data.begin() + (found + 1) * cols, data.begin() + target * cols);
    const Elem inv = f.inv(data[target * cols + col]);
    for (std::size_t c = col; c < cols; ++c) data[target * cols + c] = f.mul(data[target * cols + c], inv);
}

void eliminate_row(const FiniteField& f, std::span<Elem> data, std::size_t cols, std::size_t pivot_row,
                   std::size_t r, std::size_t col) {
    const Elem factor = data[r * cols + col];
    if (factor == 0) return;
    const Elem neg = f.neg(factor);
    for (std::size_t c = col; c < cols; ++c)
        data[r * cols + c] = f.add(data[r * cols + c], f.mul(neg, data[pivot_row * cols + c]));
}

template <bool Parallel>
std::vector<std::size_t> rref_impl(const FiniteField& f, std::span<Elem> data, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        const std::size_t found = find_pivot(data, rows, cols, next, col);
        if (found == rows) continue;
        normalize_and_swap(f, data, cols, next, found, col);
        const auto n = static_cast<std::int64_t>(rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (rows * cols > 4096)
            for (std::int64_t r = 0; r < n; ++r)
                if (static_cast<std::size_t>(r) != next) eliminate_row(f, data, cols, next, static_cast<std::size_t>(r), col);
        } else {
            for (std::int64_t r = 0; r < n; ++r)
                if (static_cast<std::size_t>(r) != next) eliminate_row(f, data, cols, next, static_cast<std::size_t>(r), col);
        }
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

std::uint64_t message_count(const Matrix& g) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / g.field()->q()) return std::numeric_limits<std::uint64_t>::max();
        total *= g.field()->q();
    }
    return total;
}

// Codeword of message index `msg` (base-q digits, digit d multiplies row d).
void encode(const Matrix& g, std::uint64_t msg, std::vector<Elem>& word) {
    const FiniteField& f = *g.field();
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t d = 0; d < g.rows(); ++d) {
        const Elem coef = static_cast<Elem>(msg % f.q());
        msg /= f.q();
        if (coef == 0) continue;
        auto row = g.row(d);
        for (std::size_t c = 0; c < g.cols(); ++c) word[c] = f.add(word[c], f.mul(coef, row[c]));
    }
}

std::size_t weight(std::span<const Elem> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem v) { return v != 0; }));
}

}  // namespace

namespace serial {

std::vector<std::size_t> rref_inplace(const FiniteField& f, std::span<Elem> data, std::size_t rows, std::size_t cols) {
    return rref_impl<false>(f, data, rows, cols);
}

std::vector<std::pair<Elem, Elem>> affine_points(const FiniteField& f, std::span<const Elem> rhs, std::uint32_t m) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < f.q(); ++x) {
        if (rhs[x] == kNoValue) continue;
        for (Elem y = 0; y < f.q(); ++y)
            if (f.pow(y, m) == rhs[x]) out.emplace_back(x, y);
    }
    return out;
}

std::vector<std::uint8_t> predicate_grid(const GridShape& shape, const GridPredicate& pred) {
    std::vector<std::uint8_t> grid(shape.size(), 0);
    std::vector<std::int64_t> c(shape.dims);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        shape.coords(i, c);
        grid[i] = pred(c) ? 1 : 0;
    }
    return grid;
}

MinWeight min_weight(const Matrix& generator) {
    MinWeight result;
    if (generator.rows() == 0) return result;
    const std::uint64_t total = message_count(generator);
    std::vector<Elem> word(generator.cols());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        encode(generator, msg, word);
        best = std::min(best, weight(word));
    }
    result.weight = best;
    result.codewords = total - 1;
    return result;
}

}  // namespace serial

namespace parallel {

std::vector<std::size_t> rref_inplace(const FiniteField& f, std::span<Elem> data, std::size_t rows, std::size_t cols) {
    return rref_impl<true>(f, data, rows, cols);
}

std::vector<std::pair<Elem, Elem>> affine_points(const FiniteField& f, std::span<const Elem> rhs, std::uint32_t m) {
    const std::uint32_t q = f.q();
    std::vector<Elem> power(q);
    for (Elem y = 0; y < q; ++y) power[y] = f.pow(y, m);

    std::vector<std::vector<Elem>> per_x(q);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(q); ++xi) {
        const auto x = static_cast<Elem>(xi);
        if (rhs[x] == kNoValue) continue;
        for (Elem y = 0; y < q; ++y)
            if (power[y] == rhs[x]) per_x[x].push_back(y);
    }

    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < q; ++x)
        for (Elem y : per_x[x]) out.emplace_back(x, y);
    return out;
}

std::vector<std::uint8_t> predicate_grid(const GridShape& shape, const GridPredicate& pred) {
    std::vector<std::uint8_t> grid(shape.size(), 0);
    const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel
    {
        std::vector<std::int64_t> c(shape.dims);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            shape.coords(static_cast<std::size_t>(i), c);
            grid[static_cast<std::size_t>(i)] = pred(c) ? 1 : 0;
        }
    }
    return grid;
}

MinWeight min_weight(const Matrix& generator) {
    MinWeight result;
    const std::size_t k = generator.rows();
    if (k == 0) return result;
    const FiniteField& f = *generator.field();
    const std::uint32_t q = f.q();
    const std::size_t n = generator.cols();
    const std::uint64_t total = message_count(generator);

    // Blocks of q messages share digits 1..k-1; digit 0 is walked incrementally inside a block.
    const std::uint64_t blocks = total / q;
    std::size_t best = std::numeric_limits<std::size_t>::max();

#pragma omp parallel reduction(min : best)
    {
        std::vector<Elem> base(n), word(n);
        auto row0 = generator.row(0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            encode(generator, static_cast<std::uint64_t>(b) * q, base);
            for (Elem c0 = 0; c0 < q; ++c0) {
                if (b == 0 && c0 == 0) continue;
                for (std::size_t c = 0; c < n; ++c) word[c] = f.add(base[c], f.mul(c0, row0[c]));
                best = std::min(best, weight(word));
            }
        }
    }
    result.weight = best;
    result.codewords = total - 1;
    return result;
}

}  // namespace parallel

}  // namespace kummer::kernels
