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

// Builders for the three frame families: cyclic (harmonic) frames from an
// exponent set, direct-product abelian frames, and generalized dihedral frames
// seeded with a Zadoff-Chu sequence. Every builder returns unit-norm columns.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupframe/frame.hpp"
#include "groupframe/numtheory.hpp"

namespace groupframe {

namespace detail {

inline std::string join(const std::vector<u64>& values, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

inline std::vector<u64> reduce_distinct(u64 n, const std::vector<u64>& exponents, const char* what) {
    if (n < 2) throw std::invalid_argument(std::string(what) + ": modulus must be >= 2");
    if (exponents.empty()) throw std::invalid_argument(std::string(what) + ": empty exponent list");
    std::vector<u64> reduced;
    reduced.reserve(exponents.size());
    std::set<u64> seen;
    for (u64 k : exponents) {
        const u64 e = k % n;
        if (!seen.insert(e).second) throw std::invalid_argument(std::string(what) + ": duplicate exponent " + std::to_string(e) + " mod " + std::to_string(n));
        reduced.push_back(e);
    }
    return reduced;
}

}  // namespace detail

/// Exponent set K for U = diag(w^{k_1}, ..., w^{k_m}) acting on Z/nZ.
struct CyclicFrameSpec {
    u64 n = 0;
    std::vector<u64> exponents;

    CyclicFrameSpec(u64 modulus, const std::vector<u64>& k)
        : n(modulus), exponents(detail::reduce_distinct(modulus, k, "CyclicFrameSpec")) {
        if (exponents.size() == 1 && exponents[0] == 0) throw std::invalid_argument("CyclicFrameSpec: K = {0} gives identical columns");
    }

    std::size_t m() const { return exponents.size(); }
};

/// Direct product Z/n_1 x ... x Z/n_L with one exponent list per factor.
struct AbelianFrameSpec {
    std::vector<u64> factor_orders;
    std::vector<std::vector<u64>> exponent_lists;

    AbelianFrameSpec(std::vector<u64> orders, std::vector<std::vector<u64>> lists)
        : factor_orders(std::move(orders)) {
        if (factor_orders.empty()) throw std::invalid_argument("AbelianFrameSpec: no factors");
        if (lists.size() != factor_orders.size()) throw std::invalid_argument("AbelianFrameSpec: one exponent list per factor required");
        for (std::size_t j = 0; j < lists.size(); ++j) {
            if (lists[j].size() != lists[0].size()) throw std::invalid_argument("AbelianFrameSpec: exponent lists differ in length");
            exponent_lists.push_back(detail::reduce_distinct(factor_orders[j], lists[j], "AbelianFrameSpec"));
        }
    }

    std::size_t m() const { return exponent_lists[0].size(); }
    u64 columns() const {
        u64 total = 1;
        for (u64 nj : factor_orders) total *= nj;
        return total;
    }
};

/// Generalized dihedral group <s, t | s^n, t^D, t s t^-1 = s^twist> with exponents K.
struct DihedralFrameSpec {
    u64 n = 0;
    u64 twist = 0;
    u64 D = 0;
    std::vector<u64> exponents;

    DihedralFrameSpec(u64 modulus, u64 twist_param, const std::vector<u64>& k, std::optional<u64> order = std::nullopt)
        : n(modulus), twist(twist_param % modulus), exponents(detail::reduce_distinct(modulus, k, "DihedralFrameSpec")) {
        if (n < 3 || !is_prime(n)) throw std::invalid_argument("DihedralFrameSpec: n=" + std::to_string(n) + " is not an odd prime");
        if (twist == 0) throw std::invalid_argument("DihedralFrameSpec: twist " + std::to_string(twist_param) + " not coprime to n");
        D = multiplicative_order(twist, n);
        if (order && *order != D) {
            throw std::invalid_argument("DihedralFrameSpec: D=" + std::to_string(*order) + " but the order of " + std::to_string(twist) + " mod " + std::to_string(n) + " is " + std::to_string(D));
        }
        if (exponents.size() == 1 && exponents[0] == 0) throw std::invalid_argument("DihedralFrameSpec: K = {0} gives identical columns");
    }

    std::size_t m() const { return exponents.size(); }
};

/// Constant-amplitude zero-autocorrelation seed block, indexed d = 0..D-1.
struct ZCSequence {
    std::size_t D = 0;
    std::vector<cplx> w;
};

/// w_d = e^{i pi d^2 / D} for even D, e^{i pi d(d+1) / D} for odd D.
inline ZCSequence zadoff_chu(std::size_t D) {
    if (D == 0) throw std::invalid_argument("zadoff_chu: length must be positive");
    ZCSequence seq{D, {}};
    seq.w.reserve(D);
    const auto twoD = static_cast<std::int64_t>(2 * D);
    for (std::size_t d = 0; d < D; ++d) {
        const u64 q = (D % 2 == 0) ? (d * d) % (2 * D) : (d * (d + 1)) % (2 * D);
        seq.w.push_back(root_of_unity(static_cast<std::int64_t>(q), twoD));
    }
    return seq;
}

/// Columns U^l v, l = 0..n-1, with v = 1/sqrt(m) * ones.
inline FrameMatrix build_cyclic_frame(const CyclicFrameSpec& spec, Provenance provenance = Provenance("cyclic")) {
    const auto m = static_cast<Eigen::Index>(spec.m());
    const auto n = static_cast<Eigen::Index>(spec.n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    ComplexMatrix M(m, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index i = 0; i < m; ++i) {
            const u64 e = detail::mul_mod(spec.exponents[static_cast<std::size_t>(i)], static_cast<u64>(l), spec.n);
            M(i, l) = root_of_unity(static_cast<std::int64_t>(e), n) * scale;
        }
    }
    if (!provenance.get("n")) provenance.set_number("n", spec.n);
    if (!provenance.get("m")) provenance.set_number("m", spec.m());
    if (!provenance.get("exponents")) provenance.set("exponents", detail::join(spec.exponents));
    return FrameMatrix(std::move(M), std::move(provenance));
}

/// Frame generated by the unique order-m subgroup of (Z/nZ)^x, n prime.
inline FrameMatrix build_prime_group_frame(u64 n, u64 m) {
    const GroupContext ctx = find_generator(n);
    const Subgroup K = subgroup_of_order(ctx, m);
    const std::vector<u64> exponents(K.elements().begin(), K.elements().end());
    Provenance prov("prime-cyclic");
    prov.set_number("n", n);
    prov.set_number("m", m);
    prov.set_number("generator", ctx.generator());
    prov.set("exponents", detail::join(exponents));
    return build_cyclic_frame(CyclicFrameSpec(n, exponents), std::move(prov));
}

/// Columns U_1^{a_1} ... U_L^{a_L} v over all tuples, a_1 varying slowest.
inline FrameMatrix build_abelian_frame(const AbelianFrameSpec& spec) {
    const std::size_t L = spec.factor_orders.size();
    const auto m = static_cast<Eigen::Index>(spec.m());
    const u64 total = spec.columns();
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    ComplexMatrix M(m, static_cast<Eigen::Index>(total));
    std::vector<u64> tuple(L, 0);
    for (u64 col = 0; col < total; ++col) {
        for (Eigen::Index i = 0; i < m; ++i) {
            cplx value;
            for (std::size_t j = 0; j < L; ++j) {
                const u64 nj = spec.factor_orders[j];
                const u64 e = detail::mul_mod(spec.exponent_lists[j][static_cast<std::size_t>(i)], tuple[j], nj);
                const cplx root = root_of_unity(static_cast<std::int64_t>(e), static_cast<std::int64_t>(nj));
                value = (j == 0) ? root : value * root;
            }
            M(i, static_cast<Eigen::Index>(col)) = value * scale;
        }
        for (std::size_t j = L; j-- > 0;) {
            if (++tuple[j] < spec.factor_orders[j]) break;
            tuple[j] = 0;
        }
    }
    Provenance prov("abelian");
    prov.set("orders", detail::join(spec.factor_orders));
    prov.set_number("m", spec.m());
    std::string lists;
    for (std::size_t j = 0; j < L; ++j) {
        if (j) lists += ';';
        lists += detail::join(spec.exponent_lists[j]);
    }
    prov.set("exponents", lists);
    return FrameMatrix(std::move(M), std::move(prov));
}

/// Columns [s]^a [t]^b v, a = 0..n-1 outer, b = 0..D-1 inner, where
/// [s] = blockdiag(S^{k_1}, ..., S^{k_m}), S = diag(w, w^twist, ..., w^{twist^{D-1}}),
/// [t] = blockdiag(T, ..., T) with (T u)_d = u_{d+1}, and v = [w; ...; w] / sqrt(Dm).
inline FrameMatrix build_dihedral_frame(const DihedralFrameSpec& spec) {
    const u64 n = spec.n;
    const std::size_t D = spec.D;
    const std::size_t m = spec.m();
    const ZCSequence zc = zadoff_chu(D);
    const double scale = 1.0 / std::sqrt(static_cast<double>(D * m));

    std::vector<u64> twist_powers(D);
    twist_powers[0] = 1;
    for (std::size_t d = 1; d < D; ++d) twist_powers[d] = detail::mul_mod(twist_powers[d - 1], spec.twist, n);

    ComplexMatrix M(static_cast<Eigen::Index>(D * m), static_cast<Eigen::Index>(D * n));
    for (u64 a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < D; ++b) {
            const auto col = static_cast<Eigen::Index>(a * D + b);
            for (std::size_t j = 0; j < m; ++j) {
                const u64 ak = detail::mul_mod(a, spec.exponents[j], n);
                for (std::size_t d = 0; d < D; ++d) {
                    const u64 e = detail::mul_mod(ak, twist_powers[d], n);
                    const cplx phase = root_of_unity(static_cast<std::int64_t>(e), static_cast<std::int64_t>(n));
                    M(static_cast<Eigen::Index>(j * D + d), col) = phase * zc.w[(d + b) % D] * scale;
                }
            }
        }
    }
    Provenance prov("dihedral");
    prov.set_number("n", n);
    prov.set_number("m", m);
    prov.set_number("twist", spec.twist);
    prov.set_number("D", D);
    prov.set("exponents", detail::join(spec.exponents));
    return FrameMatrix(std::move(M), std::move(prov));
}

}  // namespace groupframe
