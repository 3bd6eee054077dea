// SPDX-License-Identifier: Apache-2.0
//
// groupframe: group frames with few distinct inner products
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Seeded random comparison frames: i.i.d. complex Gaussian matrices and
// random row selections of the DFT matrix.
//
// Both draw from std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are implementation-defined, so normal
// variates (Box-Muller) and bounded integers (rejection) are derived here to
// keep a seed's frame identical across toolchains.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupframe/frame.hpp"
#include "groupframe/frames.hpp"

namespace groupframe {

enum class BaselineKind { Gaussian, RandomFourier };

struct BaselineSpec {
    BaselineKind kind = BaselineKind::Gaussian;
    u64 n = 0;  // columns
    u64 m = 0;  // rows
    std::uint64_t seed = 0;

    void validate() const {
        if (m < 1 || n <= m) throw std::invalid_argument("BaselineSpec: need n > m >= 1 (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
};

inline constexpr const char* kGaussianPrng = "mt19937_64/box-muller/v1";
inline constexpr const char* kRandomFourierPrng = "mt19937_64/fisher-yates/v1";

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11U) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = gen();
    while (x < threshold) x = gen();
    return x % bound;
}

}  // namespace detail

/// Entries (g1 + i g2) / sqrt(2) with g1, g2 standard normal, filled column by column; columns normalized.
inline FrameMatrix gaussian_frame(const BaselineSpec& spec) {
    if (spec.kind != BaselineKind::Gaussian) throw std::invalid_argument("gaussian_frame: spec kind is not gaussian");
    spec.validate();
    std::mt19937_64 gen(spec.seed);
    const auto rows = static_cast<Eigen::Index>(spec.m);
    const auto cols = static_cast<Eigen::Index>(spec.n);
    ComplexMatrix M(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double u1 = 1.0 - detail::unit_uniform(gen);  // (0, 1]
            const double u2 = detail::unit_uniform(gen);
            const double radius = std::sqrt(-2.0 * std::log(u1));
            const double theta = 2.0 * std::numbers::pi * u2;
            M(i, j) = cplx(radius * std::cos(theta), radius * std::sin(theta)) * std::numbers::sqrt2 * 0.5;
        }
        M.col(j) /= M.col(j).norm();
    }
    Provenance prov("gaussian");
    prov.set_number("n", spec.n);
    prov.set_number("m", spec.m);
    prov.set_number("seed", spec.seed);
    prov.set("prng", kGaussianPrng);
    return FrameMatrix(std::move(M), std::move(prov));
}

/// m exponents drawn uniformly without replacement from {0, ..., n-1}, sorted.
inline std::vector<u64> random_exponents(u64 n, u64 m, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<u64> pool(n);
    std::iota(pool.begin(), pool.end(), u64{0});
    for (u64 i = 0; i < m; ++i) {
        const u64 j = i + detail::uniform_below(gen, n - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<u64> picked(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(picked.begin(), picked.end());
    return picked;
}

/// Cyclic frame on m randomly selected DFT rows (0 may be selected).
inline FrameMatrix random_fourier_frame(const BaselineSpec& spec) {
    if (spec.kind != BaselineKind::RandomFourier) throw std::invalid_argument("random_fourier_frame: spec kind is not random_fourier");
    spec.validate();
    const auto exponents = random_exponents(spec.n, spec.m, spec.seed);
    Provenance prov("random-fourier");
    prov.set_number("seed", spec.seed);
    prov.set("prng", kRandomFourierPrng);
    return build_cyclic_frame(CyclicFrameSpec(spec.n, exponents), std::move(prov));
}

}  // namespace groupframe
