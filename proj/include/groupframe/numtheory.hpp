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

// Exact modular arithmetic over the multiplicative group of a prime field:
// primitive roots, the unique subgroup of each order, its cosets, additive
// difference counts and translation degrees between cosets.
//
// Everything here is integer arithmetic; no floating point.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groupframe/report.hpp"

namespace groupframe {

using u64 = std::uint64_t;

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 n) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n);
}

inline u64 pow_mod(u64 base, u64 exp, u64 n) {
    u64 result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1U;
    }
    return result;
}

/// Distinct prime factors by trial division; fine for n up to ~1e12.
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Deterministic Miller-Rabin; exact for every 64-bit input.
inline bool is_prime(u64 n) {
    if (n < 2) throw std::invalid_argument("is_prime: n must be >= 2");
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 multiplicative_order(u64 a, u64 n) {
    if (n < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: element not coprime to modulus");
    u64 order = 1;
    u64 v = a;
    while (v != 1 % n) {
        v = detail::mul_mod(v, a, n);
        ++order;
    }
    return order;
}

inline u64 mod_inverse(u64 a, u64 prime_n) { return detail::pow_mod(a, prime_n - 2, prime_n); }

/// Odd primes p with lo <= p <= hi.
inline std::vector<u64> odd_primes_between(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p = std::max<u64>(lo, 3); p <= hi; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

/// Positive divisors of n in increasing order.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// A prime modulus together with a fixed primitive root.
class GroupContext {
public:
    GroupContext(u64 n, u64 generator) : n_(n), x_(generator) {
        if (n < 3 || !is_prime(n)) throw std::invalid_argument("GroupContext: modulus " + std::to_string(n) + " is not an odd prime");
        if (generator < 2 || generator >= n) throw std::invalid_argument("GroupContext: generator out of range");
        for (u64 p : detail::prime_factors(n - 1)) {
            if (detail::pow_mod(generator, (n - 1) / p, n) == 1) {
                throw std::invalid_argument("GroupContext: " + std::to_string(generator) + " is not a primitive root mod " + std::to_string(n));
            }
        }
    }

    u64 modulus() const { return n_; }
    u64 generator() const { return x_; }
    u64 group_order() const { return n_ - 1; }
    u64 power(u64 e) const { return detail::pow_mod(x_, e, n_); }

private:
    u64 n_;
    u64 x_;
};

/// Smallest primitive root of the prime n.
inline GroupContext find_generator(u64 n) {
    if (n < 3 || !is_prime(n)) throw std::invalid_argument("find_generator: " + std::to_string(n) + " is not an odd prime");
    const auto factors = detail::prime_factors(n - 1);
    for (u64 x = 2; x < n; ++x) {
        bool primitive = std::all_of(factors.begin(), factors.end(),
                                     [&](u64 p) { return detail::pow_mod(x, (n - 1) / p, n) != 1; });
        if (primitive) return GroupContext(n, x);
    }
    throw std::logic_error("find_generator: no primitive root found");
}

/// The unique order-m subgroup K of (Z/nZ)^x, i.e. the nonzero r-th powers.
class Subgroup {
public:
    Subgroup(GroupContext ctx, u64 m) : ctx_(ctx), m_(m) {
        const u64 n = ctx.modulus();
        if (m == 0 || (n - 1) % m != 0) {
            throw std::invalid_argument("subgroup order " + std::to_string(m) + " does not divide n-1 = " + std::to_string(n - 1));
        }
        r_ = (n - 1) / m;
        const u64 k = ctx.power(r_);
        elements_.reserve(m);
        u64 v = 1;
        for (u64 j = 0; j < m; ++j) {
            elements_.push_back(v);
            v = detail::mul_mod(v, k, n);
        }
        std::sort(elements_.begin(), elements_.end());
    }

    const GroupContext& context() const { return ctx_; }
    u64 modulus() const { return ctx_.modulus(); }
    u64 order() const { return m_; }
    u64 index() const { return r_; }
    std::span<const u64> elements() const { return elements_; }
    bool contains(u64 t) const { return std::binary_search(elements_.begin(), elements_.end(), t % ctx_.modulus()); }

private:
    GroupContext ctx_;
    u64 m_;
    u64 r_ = 0;
    std::vector<u64> elements_;
};

inline Subgroup subgroup_of_order(const GroupContext& ctx, u64 m) { return Subgroup(ctx, m); }

/// Cosets K, xK, ..., x^{r-1}K in generator-power order.
class CosetTable {
public:
    explicit CosetTable(Subgroup sub) : sub_(std::move(sub)) {
        const u64 n = sub_.modulus();
        const u64 r = sub_.index();
        cosets_.resize(r);
        coset_of_.assign(n, kNoCoset);
        for (u64 d = 0; d < r; ++d) {
            const u64 shift = sub_.context().power(d);
            auto& coset = cosets_[d];
            coset.reserve(sub_.order());
            for (u64 k : sub_.elements()) {
                const u64 t = detail::mul_mod(shift, k, n);
                coset.push_back(t);
                coset_of_[t] = d;
            }
            std::sort(coset.begin(), coset.end());
        }
    }

    const Subgroup& subgroup() const { return sub_; }
    std::size_t count() const { return cosets_.size(); }
    std::span<const u64> coset(std::size_t d) const { return cosets_.at(d); }

    /// Index d with t in x^d K; t must be a nonzero residue.
    std::size_t coset_of(u64 t) const {
        t %= sub_.modulus();
        if (t == 0) throw std::invalid_argument("coset_of: 0 lies in no coset");
        return coset_of_[t];
    }

private:
    static constexpr std::size_t kNoCoset = static_cast<std::size_t>(-1);
    Subgroup sub_;
    std::vector<std::vector<u64>> cosets_;
    std::vector<std::size_t> coset_of_;
};

inline CosetTable coset_table(const Subgroup& sub) { return CosetTable(sub); }

/// a[t] = #{(k_i, k_j) in K x K : k_i - k_j = t mod n}.
struct DifferenceCounts {
    u64 n = 0;
    u64 m = 0;
    std::vector<u64> a;
};

/// Difference counts of an arbitrary set of residues (not necessarily a subgroup).
inline DifferenceCounts difference_counts_of(u64 n, std::span<const u64> exponents) {
    DifferenceCounts out{n, exponents.size(), std::vector<u64>(n, 0)};
    for (u64 ki : exponents) {
        for (u64 kj : exponents) {
            ++out.a[(ki % n + n - kj % n) % n];
        }
    }
    return out;
}

inline DifferenceCounts difference_counts(const Subgroup& sub) {
    return difference_counts_of(sub.modulus(), sub.elements());
}

inline bool is_difference_set(const DifferenceCounts& counts) {
    if (counts.a.size() < 2) return true;
    return std::all_of(counts.a.begin() + 1, counts.a.end(), [&](u64 v) { return v == counts.a[1]; });
}

inline bool is_difference_set(const Subgroup& sub) { return is_difference_set(difference_counts(sub)); }

/// Either a coset index d (meaning x^d K) or the singleton {0}.
class CosetRef {
public:
    static CosetRef coset(std::size_t d) { return CosetRef(false, d); }
    static CosetRef zero() { return CosetRef(true, 0); }

    bool is_zero() const { return zero_; }
    std::size_t index() const {
        if (zero_) throw std::logic_error("CosetRef: zero target has no coset index");
        return d_;
    }

private:
    CosetRef(bool zero, std::size_t d) : zero_(zero), d_(d) {}
    bool zero_;
    std::size_t d_;
};

/// |(1 + S) ∩ T| for S, T each a coset x^d K or {0}.
inline u64 translation_degree(const CosetTable& table, CosetRef from, CosetRef to) {
    if (from.is_zero() && to.is_zero()) throw std::invalid_argument("translation_degree: both arguments are the zero target");
    const u64 n = table.subgroup().modulus();
    const auto check = [&](CosetRef c) {
        if (!c.is_zero() && c.index() >= table.count()) throw std::out_of_range("translation_degree: coset index out of range");
    };
    check(from);
    check(to);
    if (from.is_zero()) {
        // 1 + 0 = 1 lies in K.
        return to.index() == 0 ? 1 : 0;
    }
    u64 count = 0;
    for (u64 t : table.coset(from.index())) {
        const u64 shifted = (t + 1) % n;
        if (to.is_zero()) {
            count += shifted == 0 ? 1 : 0;
        } else if (shifted != 0 && table.coset_of(shifted) == to.index()) {
            ++count;
        }
    }
    return count;
}

inline u64 translation_degree(const CosetTable& table, std::size_t from, std::size_t to) {
    return translation_degree(table, CosetRef::coset(from), CosetRef::coset(to));
}

/// Index of the coset containing -1.
inline std::size_t coset_of_minus_one(const CosetTable& table) { return table.coset_of(table.subgroup().modulus() - 1); }

/// Checks every combinatorial identity about translation degrees, difference
/// counts and the position of -1 that applies to the given (n, m, r) regime.
inline VerificationReport verify_translation_identities(const Subgroup& sub) {
    VerificationReport report;
    const CosetTable table(sub);
    const u64 n = sub.modulus();
    const u64 m = sub.order();
    const std::size_t r = table.count();
    const auto counts = difference_counts(sub);
    const auto& a = counts.a;
    const GroupContext& ctx = sub.context();
    const std::string tag = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";

    std::vector<std::vector<u64>> deg(r, std::vector<u64>(r));
    std::vector<u64> deg_zero(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) deg[i][j] = translation_degree(table, i, j);
        deg_zero[i] = translation_degree(table, CosetRef::coset(i), CosetRef::zero());
    }

    // Difference counts are constant on cosets: a_t = a_{x^d} for t in x^d K.
    {
        std::string witness;
        for (u64 t = 1; t < n && witness.empty(); ++t) {
            const u64 rep = ctx.power(table.coset_of(t));
            if (a[t] != a[rep]) witness = "t=" + std::to_string(t);
        }
        report.add("difference counts constant on cosets " + tag, witness.empty(), witness);
        report.add("a_0 = m " + tag, a[0] == m, "a_0=" + std::to_string(a[0]));
    }

    // Row sums: a_{tK,0} + sum_i a_{tK, x^i K} = |tK|.
    {
        std::string witness;
        for (std::size_t i = 0; i < r && witness.empty(); ++i) {
            u64 s = deg_zero[i];
            for (std::size_t j = 0; j < r; ++j) s += deg[i][j];
            if (s != m) witness = "coset " + std::to_string(i) + " sums to " + std::to_string(s);
        }
        report.add("translation degree row sums " + tag, witness.empty(), witness);
    }

    // Shifting: a_{x^i K, x^j K} = a_{x^{r-i} K, x^{r-i+j} K}.
    {
        std::string witness;
        for (std::size_t i = 0; i < r && witness.empty(); ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                const std::size_t i2 = (r - i) % r;
                const std::size_t j2 = (r - i + j) % r;
                if (deg[i][j] != deg[i2][j2]) {
                    witness = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                    break;
                }
            }
        }
        report.add("translation degree shifting " + tag, witness.empty(), witness);
    }

    // Position of -1: in K iff m even; otherwise r even and -1 in x^{r/2} K.
    const std::size_t minus_one = coset_of_minus_one(table);
    {
        bool ok;
        if (m % 2 == 0) {
            ok = minus_one == 0;
        } else {
            ok = r % 2 == 0 && minus_one == r / 2;
        }
        report.add("position of -1 " + tag, ok, "-1 in coset " + std::to_string(minus_one));
    }

    if (minus_one == 0) {
        // Symmetry of translation degrees and a_t = a_{K, tK}; both need -1 in K.
        std::string witness;
        for (std::size_t i = 0; i < r && witness.empty(); ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (deg[i][j] != deg[j][i]) {
                    witness = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                    break;
                }
            }
        }
        report.add("translation degree symmetry " + tag, witness.empty(), witness);

        std::string link;
        for (std::size_t d = 0; d < r && link.empty(); ++d) {
            if (a[ctx.power(d)] != deg[0][d]) link = "d=" + std::to_string(d);
        }
        report.add("a_t = a_{K,tK} " + tag, link.empty(), link);
    }

    if (r == 2) {
        const u64 a1 = a[1];
        const u64 ax = a[ctx.generator()];
        bool ok;
        if ((n - 1) % 4 == 0) {
            ok = 2 * a1 + 2 == m && 2 * ax == m;
        } else {
            ok = 2 * a1 + 1 == m && 2 * ax + 1 == m;
        }
        report.add("r=2 difference counts " + tag, ok, "a_1=" + std::to_string(a1) + " a_x=" + std::to_string(ax));
    }

    if (r == 3) {
        const bool ok = deg[1][2] == deg[0][0] + 1;
        report.add("r=3 unit gap a_{xK,x^2K} - a_{K,K} = 1 " + tag, ok,
                   std::to_string(deg[1][2]) + " - " + std::to_string(deg[0][0]));
    }

    return report;
}

}  // namespace groupframe
