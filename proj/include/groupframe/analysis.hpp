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

// Coherence, tightness and inner-product spectra of frames, plus the
// closed-form coherence values and bounds for prime-order cyclic group frames.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groupframe/frame.hpp"
#include "groupframe/frames.hpp"
#include "groupframe/numtheory.hpp"
#include "groupframe/report.hpp"

namespace groupframe {

// ---------------------------------------------------------------------------
// Gram-level measurements
// ---------------------------------------------------------------------------

namespace detail {

inline void require_normalized(const FrameMatrix& frame, const char* what) {
    if (!frame.normalized()) throw std::invalid_argument(std::string(what) + ": frame columns are not unit-norm");
}

/// Calls f(first_column, block) with block = M^* M[:, first_column .. first_column + width).
template <typename F>
void for_each_gram_block(const FrameMatrix& frame, F&& f, Eigen::Index block_cols = 512) {
    const ComplexMatrix& M = frame.entries();
    const Eigen::Index n = M.cols();
    ComplexMatrix block;
    for (Eigen::Index j0 = 0; j0 < n; j0 += block_cols) {
        const Eigen::Index width = std::min(block_cols, n - j0);
        block.noalias() = M.adjoint() * M.middleCols(j0, width);
        f(j0, block);
    }
}

}  // namespace detail

/// G[i][j] = <f_i, f_j> = f_i^* f_j.
inline ComplexMatrix gram(const FrameMatrix& frame) {
    detail::require_normalized(frame, "gram");
    ComplexMatrix G;
    G.noalias() = frame.entries().adjoint() * frame.entries();
    return G;
}

struct OffDiagonalRange {
    double min = 0.0;
    double max = 0.0;
};

/// Smallest and largest |<f_i, f_j>| over i != j.
inline OffDiagonalRange off_diagonal_range(const FrameMatrix& frame) {
    detail::require_normalized(frame, "off_diagonal_range");
    if (frame.cols() < 2) throw std::invalid_argument("off_diagonal_range: need at least two columns");
    OffDiagonalRange range{std::numeric_limits<double>::infinity(), 0.0};
    detail::for_each_gram_block(frame, [&](Eigen::Index j0, const ComplexMatrix& block) {
        for (Eigen::Index j = 0; j < block.cols(); ++j) {
            for (Eigen::Index i = 0; i < block.rows(); ++i) {
                if (i == j0 + j) continue;
                const double v = std::abs(block(i, j));
                range.min = std::min(range.min, v);
                range.max = std::max(range.max, v);
            }
        }
    });
    return range;
}

/// Largest |<f_i, f_j>| over distinct columns.
inline double coherence(const FrameMatrix& frame) {
    if (frame.cols() < 2) throw std::invalid_argument("coherence: need at least two columns");
    return off_diagonal_range(frame).max;
}

struct Tightness {
    bool is_tight = false;
    double lambda = 0.0;
    double residual = 0.0;
};

inline constexpr double kTightTolerance = 1e-9;

/// Compares M M^* against lambda I with lambda = trace(M M^*) / rows.
inline Tightness tightness(const FrameMatrix& frame) {
    const ComplexMatrix& M = frame.entries();
    ComplexMatrix S;
    S.noalias() = M * M.adjoint();
    const double lambda = S.trace().real() / static_cast<double>(S.rows());
    S.diagonal().array() -= lambda;
    const double residual = S.cwiseAbs().maxCoeff();
    return {residual <= kTightTolerance, lambda, residual};
}

inline bool is_equiangular(const FrameMatrix& frame, double tol) {
    const auto range = off_diagonal_range(frame);
    return range.max - range.min <= tol;
}

/// sum_{i,j} |<f_i, f_j>|^2, evaluated as ||M M^*||_F^2.
inline double frame_potential(const FrameMatrix& frame) {
    const ComplexMatrix& M = frame.entries();
    ComplexMatrix S;
    S.noalias() = M * M.adjoint();
    return S.squaredNorm();
}

// ---------------------------------------------------------------------------
// Clustering of inner-product magnitudes
// ---------------------------------------------------------------------------

inline constexpr double kClusterGap = 1e-7;

struct MagnitudeCluster {
    double magnitude = 0.0;
    std::size_t multiplicity = 0;
};

/// Greedy clustering of sorted values: a new cluster starts wherever
/// consecutive values differ by more than gap.
inline std::vector<MagnitudeCluster> cluster_magnitudes(std::vector<double> values, double gap = kClusterGap) {
    std::sort(values.begin(), values.end());
    std::vector<MagnitudeCluster> clusters;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 || values[i] - values[i - 1] > gap) {
            if (!clusters.empty()) clusters.back().magnitude = sum / static_cast<double>(clusters.back().multiplicity);
            clusters.push_back({0.0, 0});
            sum = 0.0;
        }
        sum += values[i];
        ++clusters.back().multiplicity;
    }
    if (!clusters.empty()) clusters.back().magnitude = sum / static_cast<double>(clusters.back().multiplicity);
    return clusters;
}

/// Clusters of |<f_i, f_j>| over all ordered pairs i != j. Only i < j is
/// scanned; multiplicities are doubled for the mirrored pair.
inline std::vector<MagnitudeCluster> gram_magnitude_clusters(const FrameMatrix& frame, double gap = kClusterGap) {
    detail::require_normalized(frame, "gram_magnitude_clusters");
    std::vector<double> mags;
    mags.reserve(frame.cols() * (frame.cols() - 1) / 2);
    detail::for_each_gram_block(frame, [&](Eigen::Index j0, const ComplexMatrix& block) {
        for (Eigen::Index j = 0; j < block.cols(); ++j) {
            for (Eigen::Index i = 0; i < j0 + j; ++i) mags.push_back(std::abs(block(i, j)));
        }
    });
    auto clusters = cluster_magnitudes(std::move(mags), gap);
    for (auto& c : clusters) c.multiplicity *= 2;
    return clusters;
}

// ---------------------------------------------------------------------------
// Group inner products of cyclic frames
// ---------------------------------------------------------------------------

/// c_l = v^* U^l v / |v|^2 for l = 0..n-1, with alpha_l = |c_l|^2.
struct InnerProductSpectrum {
    std::vector<cplx> c;
    std::vector<double> alpha;
    std::vector<MagnitudeCluster> clusters;  // over l != 0
};

namespace detail {

inline std::vector<cplx> roots_table(u64 n) {
    std::vector<cplx> roots(n);
    for (u64 e = 0; e < n; ++e) roots[e] = root_of_unity(static_cast<std::int64_t>(e), static_cast<std::int64_t>(n));
    return roots;
}

}  // namespace detail

/// Evaluates c_l directly from the exponent sums (1/m) sum_k w^{l k}.
inline InnerProductSpectrum group_spectrum(const CyclicFrameSpec& spec) {
    const u64 n = spec.n;
    const auto roots = detail::roots_table(n);
    InnerProductSpectrum s;
    s.c.assign(n, cplx(0.0, 0.0));
    for (u64 k : spec.exponents) {
        u64 e = 0;
        for (u64 l = 0; l < n; ++l) {
            s.c[l] += roots[e];
            e += k;
            if (e >= n) e -= n;
        }
    }
    const double inv_m = 1.0 / static_cast<double>(spec.m());
    s.alpha.resize(n);
    std::vector<double> mags;
    mags.reserve(n - 1);
    for (u64 l = 0; l < n; ++l) {
        s.c[l] *= inv_m;
        s.alpha[l] = std::norm(s.c[l]);
        if (l != 0) mags.push_back(std::abs(s.c[l]));
    }
    s.clusters = cluster_magnitudes(std::move(mags));
    return s;
}

/// max_{l != 0} |c_l|; equals the Gram coherence of build_cyclic_frame(spec).
inline double spectrum_coherence(const InnerProductSpectrum& s) {
    double mu = 0.0;
    for (std::size_t l = 1; l < s.c.size(); ++l) mu = std::max(mu, std::abs(s.c[l]));
    return mu;
}

inline CyclicFrameSpec prime_group_spec(u64 n, u64 m) {
    const Subgroup K = subgroup_of_order(find_generator(n), m);
    return CyclicFrameSpec(n, std::vector<u64>(K.elements().begin(), K.elements().end()));
}

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

/// sqrt((n - m) / (m (n - 1))) for n unit vectors in dimension m.
inline double welch_bound(u64 n, u64 m) {
    if (m < 1 || n <= m) throw std::invalid_argument("welch_bound: need n > m >= 1 (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    return std::sqrt((nd - md) / (md * (nd - 1.0)));
}

/// Coherence ceiling for a unit-norm tight frame with r equally frequent magnitudes.
inline double sqrt_r_bound(u64 n, u64 m, u64 r) {
    if (r < 1) throw std::invalid_argument("sqrt_r_bound: r must be >= 1");
    return std::sqrt(static_cast<double>(r)) * welch_bound(n, m);
}

/// sqrt((1/m)(r + 1/m)), the common modulus of the nontrivial w-spectrum entries.
inline double beta_value(u64 m, u64 r) {
    const double md = static_cast<double>(m);
    return std::sqrt((static_cast<double>(r) + 1.0 / md) / md);
}

enum class Thm5Branch {
    TwoValues,    // 4 | n - 1: inner products (-1 +- sqrt(1 + 2m)) / 2m
    Equiangular,  // otherwise: +-sqrt((1/m)(1/2 + 1/2m)), coherence = Welch
};

struct Thm5Result {
    double value = 0.0;
    Thm5Branch branch = Thm5Branch::Equiangular;
    double inner_product_lo = 0.0;
    double inner_product_hi = 0.0;
};

/// Exact coherence of the prime group frame when (n - 1) / m = 2.
inline Thm5Result thm5_exact_coherence(u64 n, u64 m) {
    if (m == 0 || (n - 1) % m != 0 || (n - 1) / m != 2) throw std::invalid_argument("thm5_exact_coherence: requires (n-1)/m = 2");
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    Thm5Result out;
    if ((n - 1) % 4 == 0) {
        out.branch = Thm5Branch::TwoValues;
        out.value = std::sqrt((nd - md - 0.5) / (md * (nd - 1.0))) + 1.0 / (2.0 * md);
        out.inner_product_lo = (-1.0 - std::sqrt(1.0 + 2.0 * md)) / (2.0 * md);
        out.inner_product_hi = (-1.0 + std::sqrt(1.0 + 2.0 * md)) / (2.0 * md);
    } else {
        out.branch = Thm5Branch::Equiangular;
        out.value = welch_bound(n, m);
        const double v = std::sqrt((0.5 + 0.5 / md) / md);
        out.inner_product_lo = -v;
        out.inner_product_hi = v;
    }
    return out;
}

struct R3Bounds {
    double upper = 0.0;
    double asymptotic_lower = 0.0;  // holds only as m grows; never assert it for finite m
};

inline R3Bounds thm6_r3_bounds(u64 m) {
    if (m < 1) throw std::invalid_argument("thm6_r3_bounds: m must be >= 1");
    const double md = static_cast<double>(m);
    return {(2.0 * std::sqrt((3.0 + 1.0 / md) / md) + 1.0 / md) / 3.0, 1.0 / std::sqrt(md)};
}

/// (1/r)((r - 1) beta + 1/m).
inline double thm7_general_upper(u64 m, u64 r) {
    if (m < 1 || r < 1) throw std::invalid_argument("thm7_general_upper: m, r must be >= 1");
    const double rd = static_cast<double>(r);
    return ((rd - 1.0) * beta_value(m, r) + 1.0 / static_cast<double>(m)) / rd;
}

/// (1/r) sqrt((1/m + (r/2 - 1) beta)^2 + (r/2)^2 beta^2), for odd m (which forces even r).
inline double thm8_modd_upper(u64 m, u64 r) {
    if (m % 2 == 0) throw std::invalid_argument("thm8_modd_upper: m must be odd");
    if (r == 0 || r % 2 != 0) throw std::invalid_argument("thm8_modd_upper: odd m with prime n forces even r");
    const double rd = static_cast<double>(r);
    const double beta = beta_value(m, r);
    const double re = 1.0 / static_cast<double>(m) + (rd / 2.0 - 1.0) * beta;
    const double im = (rd / 2.0) * beta;
    return std::sqrt(re * re + im * im) / rd;
}

struct BoundSet {
    u64 n = 0;
    u64 m = 0;
    u64 r = 0;
    double welch = 0.0;
    double sqrt_r_bound = 0.0;
    std::optional<Thm5Result> thm5;
    std::optional<R3Bounds> thm6;
    double thm7_upper = 0.0;
    std::optional<double> thm8_upper;
    double beta = 0.0;

    /// Exact value when r = 2, otherwise the tightest applicable upper bound.
    double best_theorem_bound() const {
        if (thm5) return thm5->value;
        double best = thm7_upper;
        if (thm6) best = std::min(best, thm6->upper);
        if (thm8_upper) best = std::min(best, *thm8_upper);
        return best;
    }
};

inline BoundSet bound_set(u64 n, u64 m) {
    if (m == 0 || (n - 1) % m != 0) throw std::invalid_argument("bound_set: m must divide n-1");
    BoundSet b;
    b.n = n;
    b.m = m;
    b.r = (n - 1) / m;
    b.welch = welch_bound(n, m);
    b.sqrt_r_bound = sqrt_r_bound(n, m, b.r);
    if (b.r == 2) b.thm5 = thm5_exact_coherence(n, m);
    if (b.r == 3) b.thm6 = thm6_r3_bounds(m);
    b.thm7_upper = thm7_general_upper(m, b.r);
    if (m % 2 == 1 && b.r % 2 == 0) b.thm8_upper = thm8_modd_upper(m, b.r);
    b.beta = beta_value(m, b.r);
    return b;
}

// ---------------------------------------------------------------------------
// Fourier pairing between difference counts and squared inner products
// ---------------------------------------------------------------------------

/// alpha_l = (1/m^2) sum_t a_t w^{l t}.
inline std::vector<double> alpha_from_counts(u64 n, u64 m, const std::vector<double>& a) {
    if (a.size() != n) throw std::invalid_argument("alpha_from_counts: length mismatch");
    const auto roots = detail::roots_table(n);
    const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    std::vector<double> alpha(n);
    for (u64 l = 0; l < n; ++l) {
        cplx acc(0.0, 0.0);
        u64 e = 0;
        for (u64 t = 0; t < n; ++t) {
            acc += a[t] * roots[e];
            e += l;
            if (e >= n) e -= n;
        }
        alpha[l] = acc.real() * scale;
    }
    return alpha;
}

/// a_t = (m^2/n) sum_l alpha_l w^{-t l}.
inline std::vector<double> counts_from_alpha(u64 n, u64 m, const std::vector<double>& alpha) {
    if (alpha.size() != n) throw std::invalid_argument("counts_from_alpha: length mismatch");
    const auto roots = detail::roots_table(n);
    const double scale = static_cast<double>(m) * static_cast<double>(m) / static_cast<double>(n);
    std::vector<double> a(n);
    for (u64 t = 0; t < n; ++t) {
        cplx acc(0.0, 0.0);
        u64 e = 0;  // t * l mod n; w^{-e} = conj(w^e)
        for (u64 l = 0; l < n; ++l) {
            acc += alpha[l] * std::conj(roots[e]);
            e += t;
            if (e >= n) e -= n;
        }
        a[t] = acc.real() * scale;
    }
    return a;
}

struct FourierPairing {
    std::vector<double> alpha_from_a;
    std::vector<double> a_from_alpha;
};

/// Transforms the exact difference counts of K into alpha, and the directly
/// measured alpha = |c_l|^2 back into counts.
inline FourierPairing fourier_pairing(const CyclicFrameSpec& spec) {
    const auto counts = difference_counts_of(spec.n, spec.exponents);
    const std::vector<double> a(counts.a.begin(), counts.a.end());
    const auto spectrum = group_spectrum(spec);
    return {alpha_from_counts(spec.n, spec.m(), a), counts_from_alpha(spec.n, spec.m(), spectrum.alpha)};
}

/// Round trip a -> alpha -> a starting from exact counts.
inline FourierPairing fourier_pairing(const DifferenceCounts& counts) {
    const std::vector<double> a(counts.a.begin(), counts.a.end());
    FourierPairing out;
    out.alpha_from_a = alpha_from_counts(counts.n, counts.m, a);
    out.a_from_alpha = counts_from_alpha(counts.n, counts.m, out.alpha_from_a);
    return out;
}

// ---------------------------------------------------------------------------
// Coset inner products and their DFT
// ---------------------------------------------------------------------------

/// w = F c with c = [c_1, c_x, ..., c_{x^{r-1}}] and F_{ij} = gamma^{ij}, gamma = e^{2 pi i / r}.
struct WSpectrum {
    u64 n = 0;
    u64 m = 0;
    u64 r = 0;
    u64 generator = 0;
    std::vector<cplx> c_coset;
    std::vector<cplx> w;
    double beta = 0.0;
};

inline WSpectrum w_spectrum(u64 n, u64 m) {
    const GroupContext ctx = find_generator(n);
    const Subgroup K = subgroup_of_order(ctx, m);
    const u64 r = K.index();
    WSpectrum ws{n, m, r, ctx.generator(), {}, {}, beta_value(m, r)};
    const double inv_m = 1.0 / static_cast<double>(m);
    for (u64 d = 0; d < r; ++d) {
        const u64 shift = ctx.power(d);
        cplx acc(0.0, 0.0);
        for (u64 k : K.elements()) acc += root_of_unity(static_cast<std::int64_t>(detail::mul_mod(shift, k, n)), static_cast<std::int64_t>(n));
        ws.c_coset.push_back(acc * inv_m);
    }
    for (u64 i = 0; i < r; ++i) {
        cplx acc(0.0, 0.0);
        for (u64 t = 0; t < r; ++t) acc += root_of_unity(static_cast<std::int64_t>((i * t) % r), static_cast<std::int64_t>(r)) * ws.c_coset[t];
        ws.w.push_back(acc);
    }
    return ws;
}

/// w_1 = -1/m, |w_i| = beta for i > 1, and the conjugation symmetries of c and w
/// that follow from the position of -1 among the cosets.
inline VerificationReport verify_w_spectrum(const WSpectrum& ws, double tol = 1e-9) {
    VerificationReport report;
    const std::string tag = "(n=" + std::to_string(ws.n) + ", m=" + std::to_string(ws.m) + ")";
    const double inv_m = 1.0 / static_cast<double>(ws.m);
    const std::size_t r = ws.r;

    const double w0_err = std::abs(ws.w[0] - cplx(-inv_m, 0.0));
    report.add("w_1 = -1/m " + tag, w0_err <= tol, "deviation " + std::to_string(w0_err));

    double mod_err = 0.0;
    for (std::size_t i = 1; i < r; ++i) mod_err = std::max(mod_err, std::abs(std::abs(ws.w[i]) - ws.beta));
    report.add("|w_i| = beta " + tag, mod_err <= tol, "deviation " + std::to_string(mod_err));

    double sym_err = 0.0;
    double c_err = 0.0;
    if (ws.m % 2 == 0) {
        // -1 in K: c real and conj(w_i) = w_{r-i+2} (1-based).
        for (std::size_t d = 0; d < r; ++d) c_err = std::max(c_err, std::abs(ws.c_coset[d].imag()));
        for (std::size_t i = 1; i < r; ++i) sym_err = std::max(sym_err, std::abs(std::conj(ws.w[i]) - ws.w[r - i]));
    } else {
        // -1 in x^{r/2} K: c_{x^d} = conj(c_{x^{d+r/2}}) and conj(w_i) = (-1)^{i-1} w_{r-i+2} (1-based).
        for (std::size_t d = 0; d < r; ++d) c_err = std::max(c_err, std::abs(ws.c_coset[d] - std::conj(ws.c_coset[(d + r / 2) % r])));
        for (std::size_t i = 1; i < r; ++i) {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            sym_err = std::max(sym_err, std::abs(std::conj(ws.w[i]) - sign * ws.w[r - i]));
        }
    }
    report.add("coset inner-product conjugation symmetry " + tag, c_err <= tol, "deviation " + std::to_string(c_err));
    report.add("w conjugation symmetry " + tag, sym_err <= tol, "deviation " + std::to_string(sym_err));
    return report;
}

/// Max-entry residual of c c^* = (1/m)[I - diag(c) + P (I + A) C] for r = 3,
/// with A_{ij} = a_{x^{j-i}}, C_{ij} = c_{x^{i-j}} and P the index reversal mod 3.
inline double verify_r3_matrix_identity(u64 n, u64 m) {
    if (m == 0 || (n - 1) % m != 0 || (n - 1) / m != 3) throw std::invalid_argument("verify_r3_matrix_identity: requires (n-1)/m = 3");
    const WSpectrum ws = w_spectrum(n, m);
    const GroupContext ctx(n, ws.generator);
    const auto counts = difference_counts(subgroup_of_order(ctx, m));
    Eigen::Matrix3cd A, C, P = Eigen::Matrix3cd::Zero();
    Eigen::Vector3cd c;
    for (int i = 0; i < 3; ++i) {
        c(i) = ws.c_coset[static_cast<std::size_t>(i)];
        P(i, (3 - i) % 3) = 1.0;
        for (int j = 0; j < 3; ++j) {
            A(i, j) = static_cast<double>(counts.a[ctx.power(static_cast<u64>((j - i + 3) % 3))]);
            C(i, j) = ws.c_coset[static_cast<std::size_t>((i - j + 3) % 3)];
        }
    }
    const Eigen::Matrix3cd I = Eigen::Matrix3cd::Identity();
    const Eigen::Matrix3cd lhs = c * c.adjoint();
    const Eigen::Matrix3cd diag_c = c.asDiagonal();
    const Eigen::Matrix3cd rhs = (I - diag_c + P * (I + A) * C) / static_cast<double>(m);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Dihedral frames
// ---------------------------------------------------------------------------

struct Dominance {
    double mu_cyclic = 0.0;
    double mu_dihedral = 0.0;
    bool dominated = false;
};

/// Compares a dihedral frame with the cyclic frame built from the same (n, K).
inline Dominance dihedral_dominance(const FrameMatrix& cyclic, const FrameMatrix& dihedral) {
    const auto& pc = cyclic.provenance();
    const auto& pd = dihedral.provenance();
    if (pd.family() != "dihedral") throw std::invalid_argument("dihedral_dominance: second frame is not dihedral");
    if (pc.family() != "cyclic" && pc.family() != "prime-cyclic") throw std::invalid_argument("dihedral_dominance: first frame is not cyclic");
    if (pc.get("n") != pd.get("n") || pc.get("exponents") != pd.get("exponents")) {
        throw std::invalid_argument("dihedral_dominance: frames built from different (n, K)");
    }
    Dominance out;
    out.mu_cyclic = coherence(cyclic);
    out.mu_dihedral = coherence(dihedral);
    out.dominated = out.mu_dihedral <= out.mu_cyclic + 1e-9;
    return out;
}

/// D (n - 1) / m distinct inner products at most, for K the order-m subgroup.
inline u64 dihedral_distinct_count_bound(u64 D, u64 n, u64 m) {
    if (m == 0 || (n - 1) % m != 0) throw std::invalid_argument("dihedral_distinct_count_bound: m must divide n-1");
    return D * ((n - 1) / m);
}

// ---------------------------------------------------------------------------
// Group-law multiplicity of Gram entries
// ---------------------------------------------------------------------------

/// Maps an ordered column pair (i, j) to the index of the group element U_i^{-1} U_j.
struct GroupLaw {
    std::size_t order = 0;
    std::function<std::size_t(std::size_t, std::size_t)> element;
};

inline GroupLaw cyclic_group_law(u64 n) {
    return {n, [n](std::size_t i, std::size_t j) { return static_cast<std::size_t>((j + n - i) % n); }};
}

/// Columns in lexicographic tuple order, first factor slowest.
inline GroupLaw abelian_group_law(std::vector<u64> orders) {
    std::size_t total = 1;
    for (u64 o : orders) total *= o;
    return {total, [orders](std::size_t i, std::size_t j) {
                std::size_t index = 0;
                std::size_t stride = 1;
                for (std::size_t f = orders.size(); f-- > 0;) {
                    const std::size_t o = orders[f];
                    const std::size_t ai = (i / stride) % o;
                    const std::size_t aj = (j / stride) % o;
                    index += ((aj + o - ai) % o) * stride;
                    stride *= o;
                }
                return index;
            }};
}

/// Column a*D + b is s^a t^b; (s^a t^b)^{-1} s^a' t^b' = s^{(a'-a) twist^{-b}} t^{b'-b}.
inline GroupLaw dihedral_group_law(u64 n, u64 twist, u64 D) {
    const u64 twist_inv = mod_inverse(twist % n, n);
    std::vector<u64> inv_powers(D);
    inv_powers[0] = 1;
    for (u64 b = 1; b < D; ++b) inv_powers[b] = detail::mul_mod(inv_powers[b - 1], twist_inv, n);
    return {n * D, [n, D, inv_powers](std::size_t i, std::size_t j) {
                const u64 a = i / D, b = i % D;
                const u64 a2 = j / D, b2 = j % D;
                const u64 s = detail::mul_mod((a2 + n - a) % n, inv_powers[b], n);
                return static_cast<std::size_t>(s * D + (b2 + D - b) % D);
            }};
}

/// Every group element's inner product v^* U_g v occurs for exactly n' ordered
/// column pairs, with all those Gram entries equal within tol.
inline VerificationReport verify_group_multiplicity(const FrameMatrix& frame, const GroupLaw& law, double tol = 1e-9) {
    VerificationReport report;
    const std::string tag = "(" + frame.provenance().family() + ", " + std::to_string(frame.rows()) + "x" + std::to_string(frame.cols()) + ")";
    if (law.order != frame.cols()) {
        report.add("group order matches column count " + tag, false, std::to_string(law.order));
        return report;
    }
    const ComplexMatrix G = gram(frame);
    const std::size_t N = frame.cols();
    std::vector<std::size_t> count(N, 0);
    std::vector<cplx> value(N);
    double spread = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < N; ++i) {
            const std::size_t g = law.element(i, j);
            const cplx v = G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (count[g]++ == 0) {
                value[g] = v;
            } else {
                spread = std::max(spread, std::abs(v - value[g]));
            }
        }
    }
    const bool counts_ok = std::all_of(count.begin(), count.end(), [N](std::size_t c) { return c == N; });
    report.add("each group element covers n' ordered pairs " + tag, counts_ok);
    report.add("Gram entries constant per group element " + tag, spread <= tol, "spread " + std::to_string(spread));
    return report;
}

}  // namespace groupframe
