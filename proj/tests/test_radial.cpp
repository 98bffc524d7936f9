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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "sphstat/radial.hpp"
#include "sphstat/rng.hpp"
#include "sphstat/sampling.hpp"
#include "sphstat/specfun.hpp"

using namespace sphstat;
using namespace sphstat::radial;
using Catch::Approx;

namespace {

// Textbook Anderson-Darling sum, written independently of the library path.
double ad_oracle(std::vector<double> u) {
    std::sort(u.begin(), u.end());
    const int n = static_cast<int>(u.size());
    double s = 0.0;
    for (int i = 1; i <= n; ++i)
        s += (2.0 * i - 1.0) / n * (std::log(u[i - 1]) + std::log(1.0 - u[n - i]));
    return -n - s;
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::max((i + 1.0) / n - f, f - i / n));
    }
    return d;
}

}  // namespace

TEST_CASE("anderson-darling statistic") {
    SECTION("single observation at the median") {
        CHECK(ad_statistic_from_uniforms({0.5}) ==
              Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-14));
    }
    SECTION("matches the independent oracle on random uniforms") {
        Rng rng(1, 0);
        for (int n : {2, 7, 100}) {
            std::vector<double> u(n);
            for (auto& v : u) v = rng.uniform_pos();
            CHECK(ad_statistic_from_uniforms(u) == Approx(ad_oracle(u)).epsilon(1e-12));
        }
    }
    SECTION("ties are legal") {
        CHECK(std::isfinite(ad_statistic_from_uniforms({0.3, 0.3, 0.3, 0.8})));
    }
    SECTION("invariant under increasing transforms applied jointly") {
        Rng rng(2, 0);
        const int n = 50;
        Eigen::VectorXd values(n);
        for (int i = 0; i < n; ++i) values(i) = rng.gamma(2.0, 1.0);
        const auto cdf1 = [](double x) { return specfun::gamma_cdf(x, 2.0, 1.0); };
        const double base = ad_statistic(values, cdf1);
        // transform data by log, null by composition with exp
        Eigen::VectorXd logged = values.array().log();
        const auto cdf2 = [&](double y) {
            return specfun::gamma_cdf(std::exp(y), 2.0, 1.0);
        };
        CHECK(ad_statistic(logged, cdf2) == Approx(base).epsilon(1e-12));
    }
    SECTION("null mean is near one") {
        Rng rng(3, 0);
        const int reps = 500, n = 1000;
        double mean = 0.0;
        std::vector<double> u(n);
        for (int r = 0; r < reps; ++r) {
            for (auto& v : u) v = rng.uniform_pos();
            mean += ad_statistic_from_uniforms(u);
        }
        mean /= reps;
        CHECK(mean > 0.8);
        CHECK(mean < 1.2);
    }
    SECTION("misfit grows roughly linearly in n") {
        // uniforms tested against a tilted null
        Rng rng(4, 0);
        auto stat_at = [&](int n) {
            std::vector<double> u(n);
            for (auto& v : u) v = std::pow(rng.uniform_pos(), 1.3);
            return ad_statistic_from_uniforms(u);
        };
        const double small = stat_at(200);
        const double large = stat_at(3200);
        CHECK(large > 4.0 * small);
    }
    SECTION("empty input") {
        CHECK_THROWS_AS(ad_statistic_from_uniforms({}), std::domain_error);
    }
}

TEST_CASE("ad limit cdf table") {
    SECTION("classic critical values") {
        CHECK(ad_limit_cdf(2.492) == Approx(0.95).margin(2e-3));
        CHECK(ad_limit_cdf(3.878) == Approx(0.99).margin(2e-3));
        CHECK(ad_limit_cdf(0.0) == 0.0);
    }
    SECTION("nondecreasing and approaching one") {
        double prev = 0.0;
        for (double z = 0.0; z <= 30.0; z += 0.01) {
            const double f = ad_limit_cdf(z);
            CHECK(f >= prev - 1e-15);
            CHECK(f <= 1.0);
            prev = f;
        }
        CHECK(ad_limit_cdf(30.0) > 1.0 - 1e-4);
        CHECK(ad_limit_upper_tail(30.0) > 0.0);  // tail extension stays positive
    }
    SECTION("upper tail complements the cdf") {
        for (double z : {0.2, 1.0, 2.5, 6.0})
            CHECK(ad_limit_cdf(z) + ad_limit_upper_tail(z) == Approx(1.0).margin(1e-14));
    }
    SECTION("shipped file matches the embedded table") {
        const char* dir = std::getenv("SPHSTAT_DATA_DIR");
        const std::string path =
            (dir ? std::string(dir) : std::string("../data")) + "/ad_limit_cdf.tsv";
        AdLimitTable from_file = AdLimitTable::from_file(path);
        CHECK(from_file.knots() == AdLimitTable::builtin().knots());
        for (double z : {0.1, 0.7, 2.492, 3.878, 7.5, 11.9})
            CHECK(from_file.cdf(z) == Approx(AdLimitTable::builtin().cdf(z)).margin(1e-9));
    }
}

TEST_CASE("radial null cdfs") {
    SECTION("normal radius, D = 2, closed form") {
        const auto null = RadialNull::normal(2);
        for (double r : {0.1, 0.9, 2.0, 3.5})
            CHECK(null.cdf(r) == Approx(1.0 - std::exp(-0.5 * r * r)).epsilon(1e-12));
    }
    SECTION("student radius median at F(2,2) median = 1") {
        const auto null = RadialNull::student(2, 2.0);
        // r^2 / D = 1  ->  r = sqrt(2)
        CHECK(null.cdf(std::sqrt(2.0)) == Approx(0.5).margin(1e-8));
    }
    SECTION("gamma radius") {
        const auto null = RadialNull::gamma(2.0, 5.0);
        for (double r : {0.5, 2.0, 6.0})
            CHECK(null.cdf(r) == Approx(specfun::gamma_cdf(r * r, 2.0, 5.0)).epsilon(1e-12));
    }
    SECTION("stable radius, beta = 1, against the F(1,D) closed form") {
        // For A ~ Levy(c): P(A <= a) = erfc(sqrt(c/2a)) = P(Z^2 >= c/a), so
        // P(AT <= y) = E_T P(Z^2 >= cT/y) = P(F_{1,D} >= cD/y), giving the
        // independent oracle 1 - F_{F(1,D)}(c D / y) for the quadrature.
        for (int dim : {2, 10, 100}) {
            for (double gamma0 : {1.0, 1.4}) {
                const auto null = RadialNull::stable(dim, 1.0, gamma0);
                const double c = gamma0 * gamma0;
                for (double r : {0.3, 1.0, 3.0, 10.0, 40.0}) {
                    const double y = r * r;
                    const double closed = 1.0 - specfun::f_cdf(c * dim / y, 1.0, dim);
                    CHECK(null.cdf(r) == Approx(closed).margin(2e-7));
                }
            }
        }
    }
    SECTION("stable radius sampler agrees with the quadrature CDF, beta = 1") {
        const int dim = 20;
        const auto null = RadialNull::stable(dim, 1.0, 1.0);
        Rng rng(31, 0);
        std::vector<double> radii(20000);
        for (auto& r : radii) r = null.sample_radius(rng);
        CHECK(ks_distance(radii, [&](double r) { return null.cdf(r); }) < 0.015);
    }
    SECTION("stable radius with beta != 1 goes through the series density") {
        const int dim = 10;
        const auto null = RadialNull::stable(dim, 0.8, 1.0);
        Rng rng(32, 0);
        std::vector<double> radii(4000);
        for (auto& r : radii) r = null.sample_radius(rng);
        CHECK(ks_distance(radii, [&](double r) { return null.cdf(r); }) < 0.03);
    }
    SECTION("domain checks") {
        CHECK_THROWS_AS(RadialNull::normal(0), std::domain_error);
        CHECK_THROWS_AS(RadialNull::student(3, -1.0), std::domain_error);
        CHECK_THROWS_AS(RadialNull::stable(3, 2.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(RadialNull::normal(3).cdf(-1.0), std::domain_error);
    }
}

TEST_CASE("probability integral transform per family") {
    const long n = 10000;
    auto pit = [&](const RadialNull& null, std::uint64_t seed) {
        Rng rng(seed, 0);
        std::vector<double> u(n);
        for (auto& v : u) v = null.cdf(null.sample_radius(rng));
        std::sort(u.begin(), u.end());
        double d = 0.0;
        for (long i = 0; i < n; ++i)
            d = std::max(d, std::max((i + 1.0) / n - u[i], u[i] - static_cast<double>(i) / n));
        return d;
    };
    CHECK(pit(RadialNull::normal(100), 41) < 0.02);
    CHECK(pit(RadialNull::student(100, 5.0), 42) < 0.02);
    CHECK(pit(RadialNull::gamma(2.0, 5.0), 43) < 0.02);
    CHECK(pit(RadialNull::stable(100, 1.0, 1.0), 44) < 0.02);
}

TEST_CASE("gamma MLE") {
    SECTION("consistency on Gamma(2,5) draws") {
        Rng rng(50, 0);
        Eigen::VectorXd data(10000);
        for (Eigen::Index i = 0; i < data.size(); ++i) data(i) = rng.gamma(2.0, 5.0);
        const auto params = mle_gamma(data);
        CHECK(params.shape == Approx(2.0).margin(0.1));
        CHECK(params.scale == Approx(5.0).margin(0.3));
    }
    SECTION("first-order condition holds at the estimate") {
        Rng rng(51, 0);
        Eigen::VectorXd data(500);
        double mean = 0.0, mean_log = 0.0;
        for (Eigen::Index i = 0; i < data.size(); ++i) {
            data(i) = rng.gamma(0.7, 2.0);
            mean += data(i);
            mean_log += std::log(data(i));
        }
        mean /= data.size();
        mean_log /= data.size();
        const auto params = mle_gamma(data);
        CHECK(std::log(params.shape) - specfun::digamma(params.shape) ==
              Approx(std::log(mean) - mean_log).margin(1e-10));
        CHECK(params.scale == Approx(mean / params.shape).epsilon(1e-12));
    }
    SECTION("degenerate input rejected") {
        Eigen::VectorXd constant = Eigen::VectorXd::Constant(20, 3.0);
        CHECK_THROWS_AS(mle_gamma(constant), estimation_error);
        Eigen::VectorXd with_zero(3);
        with_zero << 1.0, 0.0, 2.0;
        CHECK_THROWS_AS(mle_gamma(with_zero), estimation_error);
        Eigen::VectorXd single(1);
        single << 1.0;
        CHECK_THROWS_AS(mle_gamma(single), estimation_error);
    }
}

TEST_CASE("student nu MLE") {
    SECTION("consistency on t radii, nu = 5, D = 100") {
        const int dim = 100;
        Rng rng(55, 0);
        Eigen::VectorXd radii(10000);
        for (Eigen::Index i = 0; i < radii.size(); ++i)
            radii(i) = std::sqrt(rng.chi_squared(dim) * 5.0 / rng.chi_squared(5.0));
        CHECK(mle_student_nu(radii, dim) == Approx(5.0).margin(0.5));
    }
    SECTION("estimated family fits through RadialNull") {
        const int dim = 50;
        Rng rng(56, 0);
        Eigen::VectorXd radii(5000);
        for (Eigen::Index i = 0; i < radii.size(); ++i)
            radii(i) = std::sqrt(rng.chi_squared(dim) * 7.0 / rng.chi_squared(7.0));
        const auto family = RadialNull::student_estimated(dim);
        CHECK(family.has_estimator());
        CHECK_THROWS_AS(family.cdf(1.0), std::logic_error);  // not fitted yet
        const auto fitted = family.fitted(radii);
        CHECK(fitted.student_nu() == Approx(7.0).margin(1.0));
        CHECK_NOTHROW(fitted.cdf(1.0));
    }
}

TEST_CASE("parametric bootstrap p-value") {
    SECTION("B = 1 gives p in {0, 1}") {
        Rng rng(60, 0);
        Eigen::VectorXd radii(50);
        for (Eigen::Index i = 0; i < radii.size(); ++i)
            radii(i) = std::sqrt(rng.gamma(2.0, 5.0));
        BootstrapConfig cfg;
        cfg.replicates = 1;
        cfg.rng = RngStream{61, 0};
        const auto result = bootstrap_pvalue(radii, RadialNull::gamma_estimated(), cfg);
        CHECK((result.p_value == 0.0 || result.p_value == 1.0));
    }
    SECTION("invariant to the order of the radii") {
        Rng rng(62, 0);
        Eigen::VectorXd radii(80);
        for (Eigen::Index i = 0; i < radii.size(); ++i)
            radii(i) = std::sqrt(rng.gamma(3.0, 2.0));
        BootstrapConfig cfg;
        cfg.replicates = 37;
        cfg.rng = RngStream{63, 5};
        const auto base = bootstrap_pvalue(radii, RadialNull::gamma_estimated(), cfg);
        Eigen::VectorXd reversed = radii.reverse();
        const auto flipped = bootstrap_pvalue(reversed, RadialNull::gamma_estimated(), cfg);
        CHECK(base.p_value == flipped.p_value);
        CHECK(base.observed_statistic == Approx(flipped.observed_statistic).epsilon(1e-12));
    }
    SECTION("well-specified family keeps the level") {
        // Rejection rate at 5% over pipeline replicates, loose binomial band.
        const int pipelines = 200, n = 60, b = 99;
        int rejections = 0;
        for (int p = 0; p < pipelines; ++p) {
            Rng rng(64, static_cast<std::uint64_t>(p));
            Eigen::VectorXd radii(n);
            for (int i = 0; i < n; ++i) radii(i) = std::sqrt(rng.gamma(2.0, 5.0));
            BootstrapConfig cfg;
            cfg.replicates = b;
            cfg.rng = RngStream{65, static_cast<std::uint64_t>(p)};
            cfg.stream_stride = pipelines;
            if (bootstrap_pvalue(radii, RadialNull::gamma_estimated(), cfg).p_value < 0.05)
                ++rejections;
        }
        const double rate = static_cast<double>(rejections) / pipelines;
        CHECK(rate > 0.005);
        CHECK(rate < 0.12);
    }
    SECTION("gross misfit rejects") {
        // squared radii from |Cauchy(2,5)| against the gamma family
        int rejections = 0;
        for (int p = 0; p < 10; ++p) {
            Rng rng(66, static_cast<std::uint64_t>(p));
            Eigen::VectorXd radii(100);
            for (int i = 0; i < 100; ++i)
                radii(i) = std::sqrt(std::fabs(rng.cauchy(2.0, 5.0)));
            BootstrapConfig cfg;
            cfg.replicates = 99;
            cfg.rng = RngStream{67, static_cast<std::uint64_t>(p)};
            if (bootstrap_pvalue(radii, RadialNull::gamma_estimated(), cfg).p_value < 0.05)
                ++rejections;
        }
        CHECK(rejections >= 9);
    }
}
