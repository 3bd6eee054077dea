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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "catch_amalgamated.hpp"
#include "groupframe/analysis.hpp"
#include "groupframe/baselines.hpp"
#include "groupframe/frames.hpp"

using namespace groupframe;
using Catch::Matchers::WithinAbs;

namespace {

FrameMatrix identity_frame(Eigen::Index d) { return FrameMatrix(ComplexMatrix::Identity(d, d), Provenance("identity")); }

std::vector<u64> subgroup_vec(u64 n, u64 m) {
    const auto K = subgroup_of_order(find_generator(n), m);
    return {K.elements().begin(), K.elements().end()};
}

// Quadratic Gauss sum for p = 3 mod 4: sum of w^q over residues q is (-1 + i sqrt(p)) / 2.
cplx gauss_residue_sum(u64 p) { return {-0.5, std::sqrt(static_cast<double>(p)) / 2.0}; }

}  // namespace

TEST_CASE("gram of an orthonormal basis is the identity") {
    const auto G = gram(identity_frame(5));
    CHECK((G - ComplexMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(gram(FrameMatrix(2.0 * ComplexMatrix::Identity(2, 2), Provenance("raw"))), std::invalid_argument);
}

TEST_CASE("gram of the n = 7 quadratic residue frame") {
    const auto F = build_cyclic_frame(CyclicFrameSpec(7, {1, 2, 4}));
    const auto G = gram(F);
    CHECK_THAT(std::abs(G(0, 1)), WithinAbs(std::sqrt(8.0) / 6.0, 1e-14));
    CHECK(std::abs(G(0, 1) - gauss_residue_sum(7) / 3.0) <= 1e-14);
    CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
    for (Eigen::Index i = 0; i < 7; ++i) CHECK(std::abs(G(i, i) - cplx(1, 0)) <= 1e-12);
}

TEST_CASE("gram is Hermitian for random frames") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto G = gram(gaussian_frame({BaselineKind::Gaussian, 40, 9, seed}));
        CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("coherence examples") {
    CHECK_THAT(coherence(build_prime_group_frame(251, 125)), WithinAbs(0.0635, 5e-4));
    CHECK_THAT(coherence(build_prime_group_frame(499, 166)), WithinAbs(0.0888, 5e-4));
    CHECK(coherence(identity_frame(4)) == 0.0);
    CHECK_THROWS_AS(coherence(FrameMatrix(ComplexMatrix::Ones(3, 1) / std::sqrt(3.0), Provenance("one"))), std::invalid_argument);
}

TEST_CASE("coherence agrees with a direct pairwise scan") {
    const auto F = gaussian_frame({BaselineKind::Gaussian, 700, 20, 3});  // spans two Gram blocks
    double mu = 0.0;
    const auto& M = F.entries();
    for (Eigen::Index i = 0; i < M.cols(); ++i)
        for (Eigen::Index j = i + 1; j < M.cols(); ++j) mu = std::max(mu, std::abs(M.col(i).dot(M.col(j))));
    CHECK_THAT(coherence(F), WithinAbs(mu, 1e-15));
}

TEST_CASE("tightness examples") {
    const auto t13 = tightness(build_prime_group_frame(13, 4));
    CHECK(t13.is_tight);
    CHECK_THAT(t13.lambda, WithinAbs(13.0 / 4.0, 1e-12));

    const auto td = tightness(build_dihedral_frame(DihedralFrameSpec(7, 6, {1, 2, 4})));
    CHECK(td.is_tight);
    CHECK_THAT(td.lambda, WithinAbs(7.0 / 3.0, 1e-12));

    ComplexMatrix M = ComplexMatrix::Zero(2, 3);
    M(0, 0) = 1.0;
    M(0, 1) = 1.0;
    M(1, 2) = 1.0;
    const auto bad = tightness(FrameMatrix(M, Provenance("repeat")));
    CHECK_FALSE(bad.is_tight);
    CHECK(bad.residual > 1e-3);
    CHECK_THAT(bad.lambda, WithinAbs(1.5, 1e-15));
}

TEST_CASE("is_equiangular examples") {
    CHECK(is_equiangular(build_prime_group_frame(7, 3), 1e-9));
    CHECK_FALSE(is_equiangular(build_prime_group_frame(13, 6), 1e-9));
    CHECK(is_equiangular(identity_frame(3), 1e-9));
}

TEST_CASE("frame potential of tight frames is n^2 / m") {
    for (auto [n, m] : std::vector<std::pair<u64, u64>>{{13, 4}, {31, 10}, {101, 25}}) {
        CHECK_THAT(frame_potential(build_prime_group_frame(n, m)), WithinAbs(static_cast<double>(n * n) / static_cast<double>(m), 1e-6));
    }
    const auto g = gaussian_frame({BaselineKind::Gaussian, 30, 5, 7});
    CHECK(frame_potential(g) > 30.0 * 30.0 / 5.0 + 1e-3);
}

TEST_CASE("cluster_magnitudes groups by sorted gaps") {
    const auto c = cluster_magnitudes({0.5, 0.1, 0.5 + 5e-8, 0.1 + 2e-8, 0.3});
    REQUIRE(c.size() == 3);
    CHECK(c[0].multiplicity == 2);
    CHECK(c[1].multiplicity == 1);
    CHECK(c[2].multiplicity == 2);
    CHECK(cluster_magnitudes({}).empty());
}

TEST_CASE("group_spectrum examples") {
    const auto s499 = group_spectrum(prime_group_spec(499, 166));
    REQUIRE(s499.clusters.size() == 3);
    for (const auto& c : s499.clusters) CHECK(c.multiplicity == 166);

    const auto s7 = group_spectrum(CyclicFrameSpec(7, {1, 2, 4}));
    REQUIRE(s7.clusters.size() == 1);
    CHECK_THAT(s7.clusters[0].magnitude, WithinAbs(std::sqrt(8.0) / 6.0, 1e-14));
    CHECK(s7.clusters[0].multiplicity == 6);

    const auto s13 = group_spectrum(prime_group_spec(13, 12));
    REQUIRE(s13.clusters.size() == 1);
    CHECK_THAT(s13.clusters[0].magnitude, WithinAbs(1.0 / 12.0, 1e-14));

    CHECK(std::abs(s7.c[0] - cplx(1, 0)) <= 1e-15);
    CHECK_THAT(s7.alpha[0], WithinAbs(1.0, 1e-15));
}

TEST_CASE("group_spectrum equals the first Gram row") {
    const std::vector<CyclicFrameSpec> specs = {prime_group_spec(61, 12), CyclicFrameSpec(60, {0, 7, 13, 22, 59}), CyclicFrameSpec(97, random_exponents(97, 30, 5))};
    for (const auto& spec : specs) {
        const auto F = build_cyclic_frame(spec);
        const auto G = gram(F);
        const auto s = group_spectrum(spec);
        for (u64 l = 0; l < spec.n; ++l) REQUIRE(std::abs(G(0, static_cast<Eigen::Index>(l)) - s.c[l]) <= 1e-13);
        CHECK_THAT(spectrum_coherence(s), WithinAbs(coherence(F), 1e-13));
    }
}

TEST_CASE("welch_bound examples") {
    CHECK_THAT(welch_bound(251, 125), WithinAbs(0.0635, 5e-4));
    CHECK_THAT(welch_bound(521, 130), WithinAbs(0.0761, 5e-4));
    CHECK_THAT(welch_bound(3, 2), WithinAbs(0.5, 1e-15));
    CHECK_THROWS_AS(welch_bound(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(welch_bound(4, 0), std::invalid_argument);
}

TEST_CASE("sqrt_r_bound examples") {
    CHECK(sqrt_r_bound(100, 10, 1) == welch_bound(100, 10));
    CHECK_THAT(sqrt_r_bound(499, 166, 3), WithinAbs(0.1100, 1e-3));
    const double b = sqrt_r_bound(503, 251, 2);
    CHECK_THAT(b, WithinAbs(std::sqrt(2.0) * 0.0447, 1e-4));
    CHECK(b >= coherence(build_prime_group_frame(503, 251)));
    CHECK_THROWS(sqrt_r_bound(10, 3, 0));
}

TEST_CASE("r = 2 exact coherence examples") {
    const auto a = thm5_exact_coherence(13, 6);
    CHECK(a.branch == Thm5Branch::TwoValues);
    CHECK_THAT(a.value, WithinAbs(0.383796, 1e-6));
    CHECK_THAT(coherence(build_prime_group_frame(13, 6)), WithinAbs(a.value, 1e-12));
    CHECK_THAT(a.inner_product_lo, WithinAbs((-1.0 - std::sqrt(13.0)) / 12.0, 1e-15));
    CHECK_THAT(a.inner_product_hi, WithinAbs((-1.0 + std::sqrt(13.0)) / 12.0, 1e-15));
    const auto s13 = group_spectrum(prime_group_spec(13, 6));
    for (std::size_t l = 1; l < 13; ++l) {
        CHECK(std::abs(s13.c[l].imag()) <= 1e-14);
        const double v = s13.c[l].real();
        CHECK(std::min(std::abs(v - a.inner_product_lo), std::abs(v - a.inner_product_hi)) <= 1e-14);
    }

    const auto b = thm5_exact_coherence(7, 3);
    CHECK(b.branch == Thm5Branch::Equiangular);
    CHECK_THAT(b.value, WithinAbs(std::sqrt(4.0 / 18.0), 1e-15));
    CHECK_THAT(b.value, WithinAbs(0.471405, 1e-6));
    CHECK_THAT(std::abs(gauss_residue_sum(7) / 3.0), WithinAbs(b.value, 1e-15));

    const auto c = thm5_exact_coherence(251, 125);
    CHECK(c.branch == Thm5Branch::Equiangular);
    CHECK_THAT(c.value, WithinAbs(0.0635, 5e-4));

    CHECK_THROWS_AS(thm5_exact_coherence(13, 4), std::invalid_argument);
}

TEST_CASE("r = 3 bounds examples") {
    const auto b = thm6_r3_bounds(166);
    CHECK_THAT(b.upper, WithinAbs(0.09172, 1e-5));
    CHECK_THAT(b.asymptotic_lower, WithinAbs(0.07761, 1e-5));
    const double mu = coherence(build_prime_group_frame(499, 166));
    CHECK(b.asymptotic_lower <= mu);
    CHECK(mu <= b.upper);

    const auto big = thm6_r3_bounds(100000000);
    CHECK_THAT(big.upper / big.asymptotic_lower, WithinAbs(std::sqrt(4.0 / 3.0), 1e-3));

    const auto small = thm6_r3_bounds(4);
    CHECK_THAT(small.upper, WithinAbs((2.0 * std::sqrt(3.25 / 4.0) + 0.25) / 3.0, 1e-15));
    CHECK_THAT(small.upper, WithinAbs(0.684259, 1e-6));
    CHECK(coherence(build_prime_group_frame(13, 4)) <= small.upper);
}

TEST_CASE("general-r bound examples") {
    CHECK_THAT(thm7_general_upper(130, 4), WithinAbs(0.13361, 1e-5));
    CHECK(coherence(build_prime_group_frame(521, 130)) <= thm7_general_upper(130, 4));
    for (u64 m : {1ULL, 6ULL, 40ULL}) CHECK_THAT(thm7_general_upper(m, 1), WithinAbs(1.0 / static_cast<double>(m), 1e-15));
    CHECK_THAT(thm7_general_upper(166, 3), WithinAbs(thm6_r3_bounds(166).upper, 1e-15));
}

TEST_CASE("odd-m bound examples") {
    CHECK_THAT(thm8_modd_upper(175, 4), WithinAbs(0.08522, 1e-5));
    CHECK(coherence(build_prime_group_frame(701, 175)) <= thm8_modd_upper(175, 4));
    for (u64 m : {3ULL, 9ULL, 125ULL}) {
        const double md = static_cast<double>(m);
        const double beta = beta_value(m, 2);
        CHECK_THAT(thm8_modd_upper(m, 2), WithinAbs(0.5 * std::sqrt(1.0 / (md * md) + beta * beta), 1e-15));
    }
    CHECK_THROWS_AS(thm8_modd_upper(333, 3), std::invalid_argument);
    CHECK_THROWS_AS(thm8_modd_upper(4, 2), std::invalid_argument);
    for (u64 m = 1; m < 400; m += 2) {
        for (u64 r = 2; r <= 12; r += 2) REQUIRE(thm8_modd_upper(m, r) <= thm7_general_upper(m, r) + 1e-15);
    }
}

TEST_CASE("bound_set collects the applicable bounds") {
    const auto b = bound_set(701, 175);
    CHECK(b.r == 4);
    CHECK(b.thm8_upper.has_value());
    CHECK_FALSE(b.thm5.has_value());
    CHECK_FALSE(b.thm6.has_value());
    CHECK(b.best_theorem_bound() == *b.thm8_upper);
    CHECK(b.welch <= b.best_theorem_bound());
    CHECK(b.beta > 0.0);

    const auto r2 = bound_set(13, 6);
    CHECK(r2.best_theorem_bound() == r2.thm5->value);
    const auto r3 = bound_set(499, 166);
    CHECK(r3.thm6.has_value());
    CHECK_THROWS(bound_set(13, 5));
}

TEST_CASE("fourier pairing examples") {
    const auto p7 = fourier_pairing(CyclicFrameSpec(7, {1, 2, 4}));
    const std::vector<double> expect = {3, 1, 1, 1, 1, 1, 1};
    for (std::size_t t = 0; t < 7; ++t) CHECK_THAT(p7.a_from_alpha[t], WithinAbs(expect[t], 1e-9));

    const auto p13 = fourier_pairing(prime_group_spec(13, 6));
    CHECK_THAT(p13.a_from_alpha[1], WithinAbs(2.0, 1e-9));
    CHECK_THAT(p13.a_from_alpha[2], WithinAbs(3.0, 1e-9));
    CHECK_THAT(p13.a_from_alpha[0], WithinAbs(6.0, 1e-9));
    CHECK_THAT(p13.alpha_from_a[0], WithinAbs(1.0, 1e-12));
}

TEST_CASE("fourier pairing round trip on non-subgroup sets") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const u64 n = 50 + seed * 7;
        const u64 m = 3 + seed % 20;
        const CyclicFrameSpec spec(n, random_exponents(n, m, seed));
        const auto counts = difference_counts_of(n, spec.exponents);
        const auto rt = fourier_pairing(counts);
        const auto direct = fourier_pairing(spec);
        for (u64 t = 0; t < n; ++t) {
            REQUIRE(std::abs(rt.a_from_alpha[t] - static_cast<double>(counts.a[t])) <= 1e-6);
            REQUIRE(std::abs(direct.a_from_alpha[t] - static_cast<double>(counts.a[t])) <= 1e-6);
        }
    }
    CHECK_THROWS(alpha_from_counts(5, 2, {1.0, 2.0}));
}

TEST_CASE("w-spectrum examples") {
    const auto w13 = w_spectrum(13, 4);
    REQUIRE(w13.w.size() == 3);
    CHECK(std::abs(w13.w[0] - cplx(-0.25, 0.0)) <= 1e-12);
    CHECK_THAT(std::abs(w13.w[1]), WithinAbs(std::sqrt(0.8125), 1e-12));
    CHECK_THAT(std::abs(w13.w[2]), WithinAbs(0.901388, 1e-6));

    const auto w7 = w_spectrum(7, 3);
    CHECK(std::abs(w7.w[0] - cplx(-1.0 / 3.0, 0.0)) <= 1e-12);
    CHECK_THAT(std::abs(w7.w[1]), WithinAbs(std::sqrt(7.0 / 9.0), 1e-12));

    // Coset sums by brute force: c_{x^d} = (1/m) sum_k w^{x^d k}.
    const auto T = coset_table(subgroup_of_order(GroupContext(13, 2), 4));
    for (std::size_t d = 0; d < 3; ++d) {
        cplx acc(0, 0);
        for (u64 t : T.coset(d)) acc += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / 13.0);
        CHECK(std::abs(acc / 4.0 - w13.c_coset[d]) <= 1e-14);
    }

    const auto w13odd = w_spectrum(13, 3);
    CHECK(verify_w_spectrum(w13odd).all_passed());
    CHECK(verify_w_spectrum(w13).all_passed());
    CHECK(verify_w_spectrum(w7).all_passed());
}

TEST_CASE("r = 3 matrix identity") {
    CHECK(verify_r3_matrix_identity(13, 4) <= 1e-9);
    CHECK(verify_r3_matrix_identity(499, 166) <= 1e-9);
    CHECK(verify_r3_matrix_identity(7, 2) <= 1e-9);
    CHECK_THROWS_AS(verify_r3_matrix_identity(7, 3), std::invalid_argument);
}

TEST_CASE("dihedral dominance examples") {
    const auto cyc7 = build_cyclic_frame(CyclicFrameSpec(7, {1, 2, 4}));
    const auto d7 = dihedral_dominance(cyc7, build_dihedral_frame(DihedralFrameSpec(7, 6, {1, 2, 4})));
    CHECK(d7.dominated);
    CHECK_THAT(d7.mu_dihedral, WithinAbs(std::sqrt(7.0) / 6.0, 1e-12));
    CHECK_THAT(d7.mu_cyclic, WithinAbs(std::sqrt(8.0) / 6.0, 1e-12));

    const auto d1 = dihedral_dominance(cyc7, build_dihedral_frame(DihedralFrameSpec(7, 1, {1, 2, 4})));
    CHECK(d1.mu_dihedral == d1.mu_cyclic);

    const auto cubes = subgroup_vec(13, 4);
    const auto d13 = dihedral_dominance(build_cyclic_frame(CyclicFrameSpec(13, cubes)), build_dihedral_frame(DihedralFrameSpec(13, 12, cubes)));
    CHECK(d13.dominated);

    CHECK_THROWS_AS(dihedral_dominance(cyc7, build_dihedral_frame(DihedralFrameSpec(7, 6, {3, 5, 6}))), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_dominance(cyc7, cyc7), std::invalid_argument);
}

TEST_CASE("dihedral distinct-value count bound") {
    CHECK(dihedral_distinct_count_bound(2, 499, 166) == 6);
    CHECK(dihedral_distinct_count_bound(2, 7, 3) == 4);
    CHECK(dihedral_distinct_count_bound(1, 61, 12) == 5);
    const auto F = build_dihedral_frame(DihedralFrameSpec(7, 6, {1, 2, 4}));
    CHECK(gram_magnitude_clusters(F).size() <= 4);
    CHECK_THROWS(dihedral_distinct_count_bound(2, 13, 5));
}

TEST_CASE("Gram entries repeat exactly n' times per group element") {
    CHECK(verify_group_multiplicity(build_prime_group_frame(31, 6), cyclic_group_law(31)).all_passed());
    CHECK(verify_group_multiplicity(build_abelian_frame(AbelianFrameSpec({3, 5}, {{0, 1, 2}, {1, 3, 4}})), abelian_group_law({3, 5})).all_passed());
    CHECK(verify_group_multiplicity(build_dihedral_frame(DihedralFrameSpec(13, 5, subgroup_vec(13, 6))), dihedral_group_law(13, 5, 4)).all_passed());
    // A frame that is not an orbit of this group fails the check.
    CHECK_FALSE(verify_group_multiplicity(gaussian_frame({BaselineKind::Gaussian, 31, 6, 1}), cyclic_group_law(31)).all_passed());
}
