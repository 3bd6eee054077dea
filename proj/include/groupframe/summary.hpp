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

// One summary row per frame: coherence, the applicable bounds, the number of
// distinct inner-product magnitudes, and the tight / equiangular flags.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "groupframe/analysis.hpp"
#include "groupframe/frame.hpp"

namespace groupframe {

struct ReportRow {
    u64 n = 0;  // columns
    u64 m = 0;  // rows
    std::string family;
    double coherence = 0.0;
    std::optional<double> welch;
    std::optional<double> sqrt_r_bound;
    std::optional<double> thm_bound;
    std::size_t distinct_values = 0;
    bool tight = false;
    bool equiangular = false;

    bool welch_achieved(double tol = 5e-4) const { return welch && std::abs(coherence - *welch) <= tol; }
};

inline constexpr double kEquiangularTolerance = 1e-9;

/// Gram-based summary of an arbitrary frame; columns are normalized first if needed.
inline ReportRow summarize_frame(const FrameMatrix& input) {
    if (input.cols() < 2) throw std::invalid_argument("summarize_frame: need at least two columns");
    const FrameMatrix frame = [&] {
        if (input.normalized()) return input;
        ComplexMatrix M = input.entries();
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            const double norm = M.col(j).norm();
            if (norm == 0.0) throw std::invalid_argument("summarize_frame: column " + std::to_string(j) + " is zero");
            M.col(j) /= norm;
        }
        return FrameMatrix(std::move(M), input.provenance());
    }();

    ReportRow row;
    row.n = frame.cols();
    row.m = frame.rows();
    row.family = frame.provenance().family();
    const auto range = off_diagonal_range(frame);
    row.coherence = range.max;
    row.equiangular = range.max - range.min <= kEquiangularTolerance;
    row.distinct_values = gram_magnitude_clusters(frame).size();
    row.tight = tightness(frame).is_tight;
    if (row.n > row.m) {
        row.welch = welch_bound(row.n, row.m);
        row.sqrt_r_bound = std::sqrt(static_cast<double>(row.distinct_values)) * *row.welch;
    }
    const auto& prov = frame.provenance();
    if (row.family == "prime-cyclic" && prov.get("n") && prov.get("m")) {
        const u64 n = std::stoull(*prov.get("n"));
        const u64 m = std::stoull(*prov.get("m"));
        if (n == row.n && m == row.m) {
            const BoundSet b = bound_set(n, m);
            row.thm_bound = b.best_theorem_bound();
            row.sqrt_r_bound = b.sqrt_r_bound;
        }
    }
    return row;
}

/// Summary of the prime group frame from its coset spectrum; only the
/// tightness check touches the frame matrix.
inline ReportRow summarize_prime_group(u64 n, u64 m) {
    const CyclicFrameSpec spec = prime_group_spec(n, m);
    const auto s = group_spectrum(spec);
    const BoundSet b = bound_set(n, m);
    ReportRow row;
    row.n = n;
    row.m = m;
    row.family = "prime-cyclic";
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t l = 1; l < s.c.size(); ++l) {
        const double v = std::abs(s.c[l]);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    row.coherence = hi;
    row.equiangular = hi - lo <= kEquiangularTolerance;
    row.distinct_values = s.clusters.size();
    row.tight = tightness(build_prime_group_frame(n, m)).is_tight;
    row.welch = b.welch;
    row.sqrt_r_bound = b.sqrt_r_bound;
    row.thm_bound = b.best_theorem_bound();
    return row;
}

}  // namespace groupframe
