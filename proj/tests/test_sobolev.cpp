/*
 * Copyright 2026 sphstat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "sphstat/quadrature.hpp"
#include "sphstat/sampling.hpp"
#include "sphstat/sobolev.hpp"
#include "sphstat/specfun.hpp"

using namespace sphstat;
using namespace sphstat::sobolev;
using Catch::Approx;

namespace {

// Random orthogonal matrix via QR of a Gaussian matrix (test-only oracle).
Eigen::MatrixXd random_rotation(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = normal(gen);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
}

const std::vector<WeightScheme> kAllSchemes = {
    WeightScheme::rayleigh(),       WeightScheme::bingham(),
    WeightScheme::k_sobolev(3),     WeightScheme::finite(3),
    WeightScheme::hybrid({1, 2}),   WeightScheme::decay_adjusted(3)};

}  // namespace

TEST_CASE("weight rules per variant") {
    const auto rayleigh = WeightScheme::rayleigh();
    CHECK(rayleigh.weight(1, 50) == 1.0);
    CHECK(rayleigh.weight(2, 50) == 0.0);

    const auto finite3 = WeightScheme::finite(3);
    CHECK(finite3.weight(3, 9) == 1.0);
    CHECK(finite3.weight(4, 9) == 0.0);

    const auto decay3 = WeightScheme::decay_adjusted(3);
    CHECK(decay3.weight(1, 100) == 1.0);
    // (2! * 100^-2)^(1/4)
    CHECK(decay3.weight(2, 100) == Approx(std::pow(2e-4, 0.25)).epsilon(1e-12));
    CHECK(decay3.weight(2, 100) == Approx(0.11892).margin(5e-6));
    CHECK(decay3.weight(4, 100) == 0.0);

    const auto hybrid = WeightScheme::hybrid({1, 2});
    CHECK(hybrid.weight(1, 7) == 1.0);
    CHECK(hybrid.weight(2, 7) == 1.0);
    CHECK(hybrid.weight(3, 7) == 0.0);

    const auto custom = WeightScheme::custom({{1, 0.5}, {4, 2.0}});
    CHECK(custom.weight(1, 3) == 0.5);
    CHECK(custom.weight(2, 3) == 0.0);
    CHECK(custom.weight(4, 3) == 2.0);
    CHECK(custom.max_degree() == 4);

    CHECK_THROWS_AS(WeightScheme::finite(1), std::domain_error);
    CHECK_THROWS_AS(WeightScheme::custom({{1, -0.5}}), std::domain_error);
}

TEST_CASE("scheme parsing") {
    CHECK(WeightScheme::parse("rayleigh").name() == "rayleigh");
    CHECK(WeightScheme::parse("bingham").weight(2, 5) == 1.0);
    CHECK(WeightScheme::parse("k:3").weight(3, 5) == 1.0);
    CHECK(WeightScheme::parse("finite:4").weight(4, 5) == 1.0);
    CHECK(WeightScheme::parse("decay:2").weight(2, 9) > 0.0);
    CHECK(WeightScheme::parse("hybrid").weight(2, 9) == 1.0);
    CHECK_THROWS_AS(WeightScheme::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(WeightScheme::parse("k:x"), std::invalid_argument);
}

TEST_CASE("psi kernel closed forms") {
    SECTION("Rayleigh kernel is (d+1) x") {
        for (int d : {2, 3, 10, 400})
            for (double x : {-1.0, -0.2, 0.0, 0.7})
                CHECK(psi_kernel(WeightScheme::rayleigh(), d, x) ==
                      Approx((d + 1.0) * x).margin(1e-10));
    }
    SECTION("Bingham kernel vanishes at the C_2 root") {
        CHECK(psi_kernel(WeightScheme::bingham(), 3, 0.5) == Approx(0.0).margin(1e-14));
    }
    SECTION("linearity: hybrid = rayleigh + bingham") {
        for (double x : {-0.8, 0.1, 0.9})
            CHECK(psi_kernel(WeightScheme::hybrid({1, 2}), 10, x) ==
                  Approx(psi_kernel(WeightScheme::rayleigh(), 10, x) +
                         psi_kernel(WeightScheme::bingham(), 10, x))
                      .margin(1e-10));
    }
    SECTION("circle branch uses the Chebyshev form") {
        const double theta = 1.1;
        CHECK(psi_kernel(WeightScheme::rayleigh(), 1, std::cos(theta)) ==
              Approx(2.0 * std::cos(theta)).margin(1e-12));
        CHECK(psi_kernel(WeightScheme::finite(3), 1, std::cos(theta)) ==
              Approx(2.0 * (std::cos(theta) + std::cos(2 * theta) + std::cos(3 * theta)))
                  .margin(1e-12));
    }
}

TEST_CASE("sigma_n closed forms") {
    CHECK(sigma_n(WeightScheme::rayleigh(), 100) == Approx(std::sqrt(202.0)).epsilon(1e-12));
    CHECK(sigma_n(WeightScheme::rayleigh(), 100) == Approx(14.2127).margin(5e-5));
    CHECK(sigma_n(WeightScheme::bingham(), 3) == Approx(std::sqrt(18.0)).epsilon(1e-12));
    for (int d : {2, 5, 30, 1000}) {
        const double expected =
            std::sqrt(2.0 * (specfun::harmonic_dim(1, d) + specfun::harmonic_dim(2, d)));
        CHECK(sigma_n(WeightScheme::hybrid({1, 2}), d) == Approx(expected).epsilon(1e-10));
    }
    // log-scale path survives d = 1000 at degree 6
    CHECK(std::isfinite(sigma_n(WeightScheme::finite(6), 1000)));
    CHECK_THROWS_AS(sigma_n(WeightScheme::custom({{2, 0.0}}), 10), std::domain_error);
}

TEST_CASE("statistic on tiny samples") {
    SECTION("n = 1 gives the trivial report") {
        Eigen::MatrixXd one(1, 11);
        one.setZero();
        one(0, 0) = 1.0;
        const auto report = statistic(SphereSample::checked(one), WeightScheme::rayleigh());
        CHECK(report.raw_statistic == 0.0);
        CHECK(report.standardized == 0.0);
        CHECK(report.p_value == Approx(0.5));
    }
    SECTION("antipodal pair under Rayleigh") {
        for (int d : {2, 5, 42}) {
            Eigen::MatrixXd pair(2, d + 1);
            pair.setZero();
            pair(0, 0) = 1.0;
            pair(1, 0) = -1.0;
            const auto report =
                statistic(SphereSample::checked(pair), WeightScheme::rayleigh());
            CHECK(report.raw_statistic == Approx(-(d + 1.0)).epsilon(1e-12));
            CHECK(report.standardized == Approx(-std::sqrt((d + 1.0) / 2.0)).epsilon(1e-12));
            CHECK(report.p_value ==
                  Approx(specfun::normal_sf(report.standardized)).epsilon(1e-12));
        }
    }
}

TEST_CASE("statistic invariances") {
    Rng rng(101, 0);
    const auto sample = sampling::uniform_sphere(rng, 60, 8);

    SECTION("rotation invariance") {
        const Eigen::MatrixXd rotation = random_rotation(9, 7);
        const Eigen::MatrixXd rotated = sample.data() * rotation;
        for (const auto& scheme : kAllSchemes) {
            const double base = statistic(sample, scheme).raw_statistic;
            const double after =
                statistic(SphereSample::normalized(rotated), scheme).raw_statistic;
            CHECK(after == Approx(base).margin(1e-9 * (1.0 + std::fabs(base))));
        }
    }
    SECTION("permutation invariance") {
        std::vector<int> perm(sample.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 gen(3);
        std::shuffle(perm.begin(), perm.end(), gen);
        Eigen::MatrixXd shuffled(sample.n(), sample.ambient_dim());
        for (Eigen::Index i = 0; i < sample.n(); ++i)
            shuffled.row(i) = sample.data().row(perm[i]);
        for (const auto& scheme : kAllSchemes) {
            const double base = statistic(sample, scheme).raw_statistic;
            const double after =
                statistic(SphereSample::checked(shuffled), scheme).raw_statistic;
            CHECK(after == Approx(base).margin(1e-9 * (1.0 + std::fabs(base))));
        }
    }
    SECTION("gram path equals sample path") {
        for (const auto& scheme : kAllSchemes) {
            const auto direct = statistic(sample, scheme);
            const auto via_gram =
                statistic_from_gram(sample.gram(), sample.sphere_dim(), scheme);
            CHECK(via_gram.raw_statistic == direct.raw_statistic);
            CHECK(via_gram.p_value == direct.p_value);
        }
    }
}

TEST_CASE("custom scheme pinned to a dimension") {
    const auto pinned = WeightScheme::custom({{1, 1.0}}, 7);
    Rng rng(5, 0);
    const auto sample = sampling::uniform_sphere(rng, 10, 8);
    CHECK_THROWS_AS(statistic(sample, pinned), std::invalid_argument);
    const auto matching = sampling::uniform_sphere(rng, 10, 7);
    CHECK_NOTHROW(statistic(matching, pinned));
}

TEST_CASE("k0-standardized statistic") {
    SECTION("degree 2 at the C_2 root is exactly zero") {
        Eigen::MatrixXd pair(2, 4);
        pair << 1, 0, 0, 0, 0.5, std::sqrt(0.75), 0, 0;
        const auto sample = SphereSample::checked(pair);
        CHECK(sample.data().row(0).dot(sample.data().row(1)) == Approx(0.5));
        CHECK(k0_standardized(sample, 2) == Approx(0.0).margin(1e-14));
    }
    SECTION("antipodal pair, k0 = 1, d = 4") {
        Eigen::MatrixXd pair(2, 5);
        pair.setZero();
        pair(0, 0) = 1.0;
        pair(1, 0) = -1.0;
        // sqrt(2)/(sqrt(4) * 2) * C_1^{1.5}(-1) = (sqrt(2)/4) * (-3)
        CHECK(k0_standardized(SphereSample::checked(pair), 1) ==
              Approx(-3.0 * std::sqrt(2.0) / 4.0).epsilon(1e-12));
        CHECK(k0_standardized(SphereSample::checked(pair), 1) == Approx(-1.0607).margin(1e-4));
    }
    SECTION("ratio to the sigma-standardized Rayleigh is (d-1)/sqrt(d(d+1))") {
        for (int d : {3, 10, 100, 800}) {
            Rng rng(17, d);
            const auto sample = sampling::uniform_sphere(rng, 25, d);
            const double tilde = k0_standardized(sample, 1);
            const double sigma_form =
                statistic(sample, WeightScheme::rayleigh()).standardized;
            const double expected_ratio = (d - 1.0) / std::sqrt(d * (d + 1.0));
            CHECK(tilde / sigma_form == Approx(expected_ratio).epsilon(1e-10));
        }
        // and the ratio approaches one with d
        CHECK(799.0 / std::sqrt(800.0 * 801.0) == Approx(1.0).margin(3e-3));
    }
    SECTION("needs at least two points") {
        Rng rng(1, 0);
        const auto single = sampling::uniform_sphere(rng, 1, 3);
        CHECK_THROWS_AS(k0_standardized(single, 1), std::domain_error);
    }
}

TEST_CASE("gamma constant") {
    SECTION("Rayleigh converges to 1/sqrt(2)") {
        CHECK(gamma_constant(WeightScheme::rayleigh(), 1000000) ==
              Approx(M_SQRT1_2).margin(1e-3));
        // O(1/d) approach, empirically monotone in d
        double prev_gap = 1.0;
        for (int d : {10, 100, 1000, 10000}) {
            const double gap =
                std::fabs(gamma_constant(WeightScheme::rayleigh(), d) - M_SQRT1_2);
            CHECK(gap < prev_gap);
            CHECK(gap < 1.0 / d);
            prev_gap = gap;
        }
    }
    SECTION("Bingham and k0 > 1 are blind") {
        CHECK(gamma_constant(WeightScheme::bingham(), 100) == 0.0);
        CHECK(gamma_constant(WeightScheme::k_sobolev(3), 100000) == 0.0);
    }
    SECTION("finite schemes decay to zero") {
        CHECK(gamma_constant(WeightScheme::finite(2), 1000000) <= 1e-2);
        CHECK(gamma_constant(WeightScheme::finite(2), 100) >
              gamma_constant(WeightScheme::finite(2), 10000));
    }
    SECTION("decay-adjusted recovers 1/sqrt(2)") {
        CHECK(gamma_constant(WeightScheme::decay_adjusted(3), 1000000) ==
              Approx(M_SQRT1_2).margin(1e-3));
    }
    CHECK_THROWS_AS(gamma_constant(WeightScheme::custom({{3, 0.0}}), 10),
                    std::domain_error);
}

TEST_CASE("kernel moment identities under the uniform pair law") {
    // centered kernel: E psi_n(X1' X2) = 0; second moment of psi/sigma is 1/2
    for (int d : {3, 10, 50}) {
        const double weight_mass = std::exp(specfun::log_surface_area(d - 1) -
                                            specfun::log_surface_area(d));
        for (const auto& scheme : kAllSchemes) {
            const double mean = weight_mass *
                                quadrature::integrate_cosine_weight(
                                    [&](double x) { return psi_kernel(scheme, d, x); }, d,
                                    256);
            CHECK(std::fabs(mean) <= 1e-8);

            const double sigma = sigma_n(scheme, d);
            const double second =
                weight_mass * quadrature::integrate_cosine_weight(
                                  [&](double x) {
                                      const double v = psi_kernel(scheme, d, x) / sigma;
                                      return v * v;
                                  },
                                  d, 256);
            CHECK(second == Approx(0.5).margin(1e-6));
        }
    }
}

TEST_CASE("dot-product moment oracle for uniform pairs") {
    // E[(X1' X2)^(2m)] = prod_{r<m} (1+2r)/(d+1+2r), within 4 standard errors
    for (int d : {2, 10, 100}) {
        Rng rng(99, d);
        const long pairs = 40000;
        double sum2 = 0.0, sum4 = 0.0, sum6 = 0.0;
        double sq2 = 0.0, sq4 = 0.0, sq6 = 0.0;
        for (long i = 0; i < pairs; ++i) {
            const auto pair = sampling::uniform_sphere(rng, 2, d);
            const double t = pair.data().row(0).dot(pair.data().row(1));
            const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2;
            sum2 += t2;
            sum4 += t4;
            sum6 += t6;
            sq2 += t2 * t2;
            sq4 += t4 * t4;
            sq6 += t6 * t6;
        }
        auto check_moment = [&](int m, double sum, double sumsq) {
            double expected = 1.0;
            for (int r = 0; r < m; ++r) expected *= (1.0 + 2.0 * r) / (d + 1.0 + 2.0 * r);
            const double mean = sum / pairs;
            const double var = std::max(sumsq / pairs - mean * mean, 0.0);
            const double se = std::sqrt(var / pairs);
            CHECK(std::fabs(mean - expected) <= 4.0 * se + 1e-12);
        };
        check_moment(1, sum2, sq2);
        check_moment(2, sum4, sq4);
        check_moment(3, sum6, sq6);
    }
}
