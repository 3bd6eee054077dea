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

// Exhaustive invariant suites over all (prime n, divisor m) in a range.
// Each suite returns a report; nothing here throws on a failed identity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "groupframe/analysis.hpp"
#include "groupframe/baselines.hpp"
#include "groupframe/frames.hpp"
#include "groupframe/numtheory.hpp"
#include "groupframe/report.hpp"

namespace groupframe {

enum class Suite { NumTheory, Spectra, Bounds, Dihedral, Pairing };

inline std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "numtheory") return Suite::NumTheory;
    if (name == "spectra") return Suite::Spectra;
    if (name == "bounds") return Suite::Bounds;
    if (name == "dihedral") return Suite::Dihedral;
    if (name == "pairing") return Suite::Pairing;
    return std::nullopt;
}

inline const char* suite_name(Suite s) {
    switch (s) {
        case Suite::NumTheory: return "numtheory";
        case Suite::Spectra: return "spectra";
        case Suite::Bounds: return "bounds";
        case Suite::Dihedral: return "dihedral";
        case Suite::Pairing: return "pairing";
    }
    return "?";
}

struct VerifyOptions {
    u64 min_n = 3;
    u64 max_n = 100;
    // Gram-level cross checks (Lemma 2 multiplicity, spectrum vs Gram) only up to here.
    u64 gram_max_n = 100;
    // Dihedral instances are skipped when the frame would exceed these sizes.
    u64 dihedral_max_cols = 800;
    u64 dihedral_max_rows = 200;
    // Random non-subgroup exponent sets per prime in the pairing suite.
    u64 random_sets_per_prime = 2;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::string tag(u64 n, u64 m) { return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")"; }

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

template <typename F>
void for_each_instance(const VerifyOptions& opt, F&& f) {
    for (u64 n : odd_primes_between(opt.min_n, opt.max_n)) {
        for (u64 m : divisors(n - 1)) f(n, m);
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Subgroup closure and shape, coset partition, difference counts and all
/// translation-degree identities.
inline VerificationReport verify_numtheory(const VerifyOptions& opt) {
    VerificationReport report;
    detail::for_each_instance(opt, [&](u64 n, u64 m) {
        const std::string tag = detail::tag(n, m);
        const GroupContext ctx = find_generator(n);
        const Subgroup K = subgroup_of_order(ctx, m);
        const u64 r = K.index();
        const auto elems = K.elements();

        report.add("subgroup size " + tag, elems.size() == m && r * m == n - 1);
        report.add("subgroup contains 1 " + tag, K.contains(1));
        {
            std::string witness;
            for (std::size_t i = 0; i < elems.size() && witness.empty(); ++i) {
                for (u64 b : elems) {
                    if (!K.contains(detail::mul_mod(elems[i], b, n))) {
                        witness = std::to_string(elems[i]) + "*" + std::to_string(b);
                        break;
                    }
                }
            }
            report.add("subgroup closed under multiplication " + tag, witness.empty(), witness);
        }
        {
            std::vector<u64> powers;
            for (u64 t = 1; t < n; ++t) powers.push_back(detail::pow_mod(t, r, n));
            std::sort(powers.begin(), powers.end());
            powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
            report.add("subgroup equals r-th powers " + tag, std::equal(powers.begin(), powers.end(), elems.begin(), elems.end()));
        }

        const CosetTable table(K);
        {
            std::vector<int> seen(n, 0);
            for (std::size_t d = 0; d < table.count(); ++d) {
                for (u64 t : table.coset(d)) ++seen[t];
            }
            bool partition = seen[0] == 0;
            for (u64 t = 1; t < n; ++t) partition = partition && seen[t] == 1;
            report.add("cosets partition the nonzero residues " + tag, partition && table.count() == r);

            std::string witness;
            for (u64 t = 1; t < n && witness.empty(); ++t) {
                const std::size_t d = table.coset_of(t);
                const u64 inv = mod_inverse(ctx.power(d), n);
                if (!K.contains(detail::mul_mod(t, inv, n))) witness = "t=" + std::to_string(t);
            }
            report.add("coset lookup consistent " + tag, witness.empty(), witness);
        }

        const auto counts = difference_counts(K);
        u64 total = 0;
        for (u64 v : counts.a) total += v;
        report.add("difference counts sum to m^2 " + tag, total == m * m, std::to_string(total));

        if (r == 2) {
            const bool expect = (n - 1) % 4 != 0;
            report.add("r=2 difference set iff n = 3 mod 4 " + tag, is_difference_set(counts) == expect);
        }
        report.merge(verify_translation_identities(K));
    });
    return report;
}

/// Coset spectrum shape (cluster count and multiplicities), sum and reality
/// properties of c, plus Gram-level cross checks on small instances.
inline VerificationReport verify_spectra(const VerifyOptions& opt) {
    VerificationReport report;
    detail::for_each_instance(opt, [&](u64 n, u64 m) {
        const std::string tag = detail::tag(n, m);
        const u64 r = (n - 1) / m;
        const CyclicFrameSpec spec = prime_group_spec(n, m);
        const auto s = group_spectrum(spec);

        std::size_t mult_total = 0;
        bool multiples = true;
        for (const auto& cl : s.clusters) {
            mult_total += cl.multiplicity;
            multiples = multiples && cl.multiplicity > 0 && cl.multiplicity % m == 0;
        }
        report.add("at most r distinct magnitudes " + tag, s.clusters.size() <= r, std::to_string(s.clusters.size()) + " clusters");
        report.add("cluster multiplicities are multiples of m " + tag, multiples && mult_total == n - 1);

        cplx sum(0.0, 0.0);
        for (const cplx& v : s.c) sum += v;
        report.add("sum of c_l vanishes " + tag, std::abs(sum) <= 1e-9, detail::num(std::abs(sum)));
        report.add("c_0 = 1 " + tag, std::abs(s.c[0] - cplx(1.0, 0.0)) <= 1e-12);

        if (r == 3) {
            double im = 0.0;
            for (const cplx& v : s.c) im = std::max(im, std::abs(v.imag()));
            report.add("r=3 inner products real " + tag, im <= 1e-9, detail::num(im));
        }

        if (n <= opt.gram_max_n) {
            const FrameMatrix F = build_cyclic_frame(spec);
            const double mu_gram = coherence(F);
            const double mu_spec = spectrum_coherence(s);
            report.add("spectrum coherence matches Gram " + tag, std::abs(mu_gram - mu_spec) <= 1e-9, detail::num(std::abs(mu_gram - mu_spec)));
            const auto gram_clusters = gram_magnitude_clusters(F);
            report.add("Gram distinct magnitudes at most r " + tag, gram_clusters.size() <= r);
            report.merge(verify_group_multiplicity(F, cyclic_group_law(n)));
        }
    });
    return report;
}

/// Welch lower bound, exact r=2 coherence, the upper bound chain, the
/// w-spectrum lemma and the r=3 matrix identity.
inline VerificationReport verify_bounds(const VerifyOptions& opt) {
    VerificationReport report;
    constexpr double slack = 1e-9;
    detail::for_each_instance(opt, [&](u64 n, u64 m) {
        const std::string tag = detail::tag(n, m);
        const auto s = group_spectrum(prime_group_spec(n, m));
        const double mu = spectrum_coherence(s);
        const BoundSet b = bound_set(n, m);

        report.add("coherence >= Welch " + tag, mu >= b.welch - slack, detail::num(mu - b.welch));
        if (b.thm5) {
            const bool branch_ok = (b.thm5->branch == Thm5Branch::TwoValues) == ((n - 1) % 4 == 0);
            report.add("r=2 exact coherence " + tag, std::abs(mu - b.thm5->value) <= slack && branch_ok, detail::num(std::abs(mu - b.thm5->value)));
        }
        if (b.thm8_upper) {
            report.add("coherence <= m-odd bound " + tag, mu <= *b.thm8_upper + slack, detail::num(mu - *b.thm8_upper));
            report.add("m-odd bound <= general bound " + tag, *b.thm8_upper <= b.thm7_upper + slack);
        }
        report.add("coherence <= general bound " + tag, mu <= b.thm7_upper + slack, detail::num(mu - b.thm7_upper));
        report.add("general bound <= sqrt(r) Welch " + tag, b.thm7_upper <= b.sqrt_r_bound + slack, detail::num(b.thm7_upper - b.sqrt_r_bound));
        if (b.thm6) {
            report.add("coherence <= r=3 upper bound " + tag, mu <= b.thm6->upper + slack, detail::num(mu - b.thm6->upper));
            const double res = verify_r3_matrix_identity(n, m);
            report.add("r=3 matrix identity " + tag, res <= 1e-9, detail::num(res));
        }
        report.merge(verify_w_spectrum(w_spectrum(n, m)));
    });
    return report;
}

/// Zadoff-Chu autocorrelation, dihedral tightness, dominance over the cyclic
/// frame, the distinct-value count, and the D = 2 real/imaginary formulas.
inline VerificationReport verify_dihedral(const VerifyOptions& opt) {
    VerificationReport report;
    for (std::size_t D = 1; D <= 64; ++D) {
        const ZCSequence zc = zadoff_chu(D);
        double unit = 0.0;
        double corr = 0.0;
        for (std::size_t d = 0; d < D; ++d) unit = std::max(unit, std::abs(std::abs(zc.w[d]) - 1.0));
        for (std::size_t b = 1; b < D; ++b) {
            cplx acc(0.0, 0.0);
            for (std::size_t d = 0; d < D; ++d) acc += std::conj(zc.w[d]) * zc.w[(d + b) % D];
            corr = std::max(corr, std::abs(acc));
        }
        report.add("ZC unit modulus D=" + std::to_string(D), unit <= 1e-12, detail::num(unit));
        report.add("ZC zero autocorrelation D=" + std::to_string(D), corr <= 1e-9, detail::num(corr));
    }

    detail::for_each_instance(opt, [&](u64 n, u64 m) {
        const GroupContext ctx = find_generator(n);
        const Subgroup K = subgroup_of_order(ctx, m);
        const std::vector<u64> exps(K.elements().begin(), K.elements().end());
        const FrameMatrix cyc = build_cyclic_frame(CyclicFrameSpec(n, exps));
        const auto spectrum = group_spectrum(CyclicFrameSpec(n, exps));

        for (u64 D : divisors(n - 1)) {
            if (D * n > opt.dihedral_max_cols || D * m > opt.dihedral_max_rows) continue;
            const u64 twist = ctx.power((n - 1) / D);
            const std::string tag = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", twist=" + std::to_string(twist) + ", D=" + std::to_string(D) + ")";
            const FrameMatrix dih = build_dihedral_frame(DihedralFrameSpec(n, twist, exps, D));

            const Tightness t = tightness(dih);
            const double lambda = static_cast<double>(n) / static_cast<double>(m);
            report.add("dihedral frame tight " + tag, t.is_tight && std::abs(t.lambda - lambda) <= 1e-9, "residual " + detail::num(t.residual));

            const Dominance dom = dihedral_dominance(cyc, dih);
            report.add("dihedral coherence <= cyclic " + tag, dom.dominated, detail::num(dom.mu_dihedral - dom.mu_cyclic));

            const auto clusters = gram_magnitude_clusters(dih);
            const u64 bound = dihedral_distinct_count_bound(D, n, m);
            report.add("dihedral distinct magnitudes bounded " + tag, clusters.size() <= bound,
                       std::to_string(clusters.size()) + " > " + std::to_string(bound));

            if (D * n <= opt.gram_max_n * 4) report.merge(verify_group_multiplicity(dih, dihedral_group_law(n, twist, D)));

            if (D == 2) {
                const ComplexMatrix& M = dih.entries();
                double err = 0.0;
                for (u64 a = 0; a < n; ++a) {
                    const cplx g0 = M.col(0).dot(M.col(static_cast<Eigen::Index>(2 * a)));
                    const cplx g1 = M.col(0).dot(M.col(static_cast<Eigen::Index>(2 * a + 1)));
                    err = std::max(err, std::abs(g0 - cplx(spectrum.c[a].real(), 0.0)));
                    err = std::max(err, std::abs(g1 - cplx(-spectrum.c[a].imag(), 0.0)));
                }
                report.add("D=2 inner products are Re c and -Im c " + tag, err <= 1e-9, detail::num(err));
            }
        }
    });
    return report;
}

/// Fourier pairing between difference counts and |c_l|^2, on subgroups and
/// on seeded random exponent sets that are not subgroups.
inline VerificationReport verify_pairing(const VerifyOptions& opt) {
    VerificationReport report;
    auto check = [&report](const CyclicFrameSpec& spec, const std::string& tag) {
        const u64 n = spec.n;
        const u64 m = spec.m();
        const auto counts = difference_counts_of(n, spec.exponents);
        const auto p = fourier_pairing(spec);
        const auto spectrum = group_spectrum(spec);
        double a_err = 0.0;
        double alpha_err = 0.0;
        for (u64 t = 0; t < n; ++t) {
            a_err = std::max(a_err, std::abs(p.a_from_alpha[t] - static_cast<double>(counts.a[t])));
            alpha_err = std::max(alpha_err, std::abs(p.alpha_from_a[t] - spectrum.alpha[t]));
        }
        report.add("counts recovered from measured alpha " + tag, a_err <= 1e-6, detail::num(a_err));
        report.add("alpha from counts matches measured alpha " + tag, alpha_err <= 1e-9, detail::num(alpha_err));

        const auto rt = fourier_pairing(counts);
        double rt_err = 0.0;
        for (u64 t = 0; t < n; ++t) rt_err = std::max(rt_err, std::abs(rt.a_from_alpha[t] - static_cast<double>(counts.a[t])));
        report.add("a -> alpha -> a round trip " + tag, rt_err <= 1e-6, detail::num(rt_err));
        report.add("alpha_0 = 1 and a_0 = m " + tag, std::abs(rt.alpha_from_a[0] - 1.0) <= 1e-9 && counts.a[0] == m);
    };

    std::mt19937_64 gen(opt.seed);
    for (u64 n : odd_primes_between(opt.min_n, opt.max_n)) {
        for (u64 m : divisors(n - 1)) check(prime_group_spec(n, m), detail::tag(n, m));
        for (u64 i = 0; i < opt.random_sets_per_prime; ++i) {
            const u64 m = 2 + detail::uniform_below(gen, n - 2);
            const std::uint64_t seed = gen();
            const auto exps = random_exponents(n, m, seed);
            check(CyclicFrameSpec(n, exps), "(n=" + std::to_string(n) + ", random m=" + std::to_string(m) + ", seed=" + std::to_string(seed) + ")");
        }
    }
    return report;
}

inline VerificationReport run_suite(Suite suite, const VerifyOptions& opt) {
    switch (suite) {
        case Suite::NumTheory: return verify_numtheory(opt);
        case Suite::Spectra: return verify_spectra(opt);
        case Suite::Bounds: return verify_bounds(opt);
        case Suite::Dihedral: return verify_dihedral(opt);
        case Suite::Pairing: return verify_pairing(opt);
    }
    return {};
}

}  // namespace groupframe
