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

// Times each kernel's serial reference against its OpenMP version and checks
// that both return the same result.
//
//   bench_kernels [--threads N] [--repeat R]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "kummer/kernels.hpp"
#include "kummer/weierstrass.hpp"

using namespace kummer;
namespace ks = kummer::kernels::serial;
namespace kp = kummer::kernels::parallel;

namespace {

double best_of(int repeat, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

template <class Result>
void compare(const char* name, int repeat, const std::function<Result()>& serial,
             const std::function<Result()>& parallel) {
    Result a{}, b{};
    const double ts = best_of(repeat, [&] { a = serial(); });
    const double tp = best_of(repeat, [&] { b = parallel(); });
    std::printf("%-16s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
                a == b ? "match" : "MISMATCH");
}

FieldPtr first_irreducible(std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint32_t> mod(e + 1, 0);
    mod[e] = 1;
    for (std::uint64_t code = 1;; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < e; ++i, c /= p) mod[i] = static_cast<std::uint32_t>(c % p);
        if (is_irreducible(p, mod)) return FiniteField::create(p, e, mod);
    }
}

}  // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string arg = argv[i];
        if (arg == "--threads")
            omp_set_num_threads(std::stoi(argv[i + 1]));
        else if (arg == "--repeat")
            repeat = std::stoi(argv[i + 1]);
    }
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937_64 rng(7);

    const FieldPtr f81 = FiniteField::create(3, 4, {2, 1, 0, 0, 1});
    Matrix dense(f81, 300, 600);
    for (auto& x : dense.data()) x = static_cast<Elem>(rng() % f81->q());
    using Rref = std::pair<std::vector<std::size_t>, std::vector<Elem>>;
    auto rref_with = [&](auto fn) {
        return [&dense, f81, fn]() -> Rref {
            std::vector<Elem> data = dense.data();
            auto piv = fn(*f81, std::span<Elem>(data), dense.rows(), dense.cols());
            return {piv, data};
        };
    };
    compare<Rref>("rref 300x600", repeat, rref_with(ks::rref_inplace), rref_with(kp::rref_inplace));

    const FieldPtr big = first_irreducible(2, 12);
    std::vector<Elem> rhs(big->q());
    for (Elem x = 0; x < big->q(); ++x) rhs[x] = big->add(big->pow(x, 64), x);
    for (auto& v : rhs)
        if (v == 0) v = kernels::kNoValue;
    using Points = std::vector<std::pair<Elem, Elem>>;
    compare<Points>(
        "points GF(4096)", repeat, [&] { return ks::affine_points(*big, rhs, 65); },
        [&] { return kp::affine_points(*big, rhs, 65); });

    const LatticeParams lp = LatticeParams::from(6, 5);
    const PlaceTuple places = PlaceTuple::leading(2, true);
    const kernels::GridShape shape{3, 60};
    const kernels::GridPredicate pred = [&](std::span<const std::int64_t> c) { return pure_gap(lp, places, c); };
    using Grid = std::vector<std::uint8_t>;
    compare<Grid>(
        "pure-gap grid", repeat, [&] { return ks::predicate_grid(shape, pred); },
        [&] { return kp::predicate_grid(shape, pred); });

    const FieldPtr f4 = FiniteField::create(2, 2, {1, 1, 1});
    Matrix gen(f4, 9, 40);
    for (auto& x : gen.data()) x = static_cast<Elem>(rng() % 4);
    using Weight = std::pair<std::optional<std::size_t>, std::uint64_t>;
    compare<Weight>(
        "min weight 4^9", repeat,
        [&]() -> Weight {
            const auto r = ks::min_weight(gen);
            return {r.weight, r.codewords};
        },
        [&]() -> Weight {
            const auto r = kp::min_weight(gen);
            return {r.weight, r.codewords};
        });
    return 0;
}
