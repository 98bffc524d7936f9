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

#include "sphstat/montecarlo.hpp"
#include "sphstat/scenario.hpp"
#include "sphstat/specfun.hpp"

using namespace sphstat;
using namespace sphstat::mc;
using Catch::Approx;

TEST_CASE("kolmogorov distribution") {
    SECTION("classic 5% point") {
        CHECK(kolmogorov_sf(1.36) == Approx(0.049).margin(5e-4));
        CHECK(kolmogorov_sf(1.3581) == Approx(0.05).margin(5e-4));
    }
    SECTION("series agree at the switchover") {
        // both theta series should produce the same value near lambda = 1
        const double lambda = 1.0;
        double direct = 0.0, sign = 1.0;
        for (int j = 1; j <= 50; ++j) {
            direct += sign * std::exp(-2.0 * j * j * lambda * lambda);
            sign = -sign;
        }
        CHECK(kolmogorov_sf(lambda) == Approx(2.0 * direct).margin(1e-8));
    }
    SECTION("limits") {
        CHECK(kolmogorov_sf(0.0) == 1.0);
        CHECK(kolmogorov_sf(0.05) == Approx(1.0).margin(1e-10));
        CHECK(kolmogorov_sf(4.0) < 1e-12);
    }
}

TEST_CASE("one-sample KS") {
    SECTION("values exactly at the quantiles (i - 0.5)/n give distance 0.5/n") {
        for (int n : {4, 25, 100}) {
            std::vector<double> values(n);
            for (int i = 0; i < n; ++i) values[i] = (i + 0.5) / n;
            const auto [distance, p] = ks_one_sample(values, [](double x) { return x; });
            CHECK(distance == Approx(0.5 / n).margin(1e-14));
            CHECK(p > 0.999);
        }
    }
    SECTION("distance 1.36/sqrt(n) has p near 0.05") {
        // engineered sample: shift all quantiles by the target distance
        const int n = 400;
        const double shift = 1.36 / std::sqrt(static_cast<double>(n)) - 0.5 / n;
        std::vector<double> values(n);
        for (int i = 0; i < n; ++i)
            values[i] = std::min(1.0, std::max(0.0, (i + 0.5) / n + shift));
        const auto [distance, p] = ks_one_sample(values, [](double x) { return x; });
        CHECK(distance == Approx(1.36 / std::sqrt(static_cast<double>(n))).margin(1e-6));
        CHECK(p == Approx(0.049).margin(3e-3));
    }
    SECTION("single value at the median") {
        const auto [distance, p] = ks_one_sample({0.5}, [](double x) { return x; });
        CHECK(distance == Approx(0.5));
        CHECK(p > 0.5);
    }
    SECTION("empty input") {
        CHECK_THROWS_AS(ks_one_sample({}, [](double x) { return x; }), std::domain_error);
    }
}

TEST_CASE("scenario runner") {
    Scenario scenario;
    scenario.id = "unit_rayleigh";
    scenario.model = sampling::UniformSphereModel{20};
    scenario.n = 40;
    scenario.dim = 20;
    scenario.replicates = 300;
    scenario.level = 0.05;
    scenario.base_seed = 2026;
    scenario.test = UniformityTest{sobolev::WeightScheme::rayleigh()};

    SECTION("level calibration, worker independence, and stderr formula") {
        const auto serial = run_scenario(scenario, 1);
        const auto parallel = run_scenario(scenario, 2);
        CHECK(serial.rejections == parallel.rejections);
        CHECK(serial.rate == parallel.rate);
        CHECK(serial.rate > 0.005);
        CHECK(serial.rate < 0.12);
        CHECK(serial.mc_stderr ==
              Approx(std::sqrt(serial.rate * (1.0 - serial.rate) / scenario.replicates))
                  .epsilon(1e-12));
        CHECK(rejection_csv_row(serial) == rejection_csv_row(parallel));
    }
    SECTION("different seeds scatter within a few stderr") {
        scenario.replicates = 400;
        const auto a = run_scenario(scenario, 2);
        scenario.base_seed = 2027;
        const auto b = run_scenario(scenario, 2);
        CHECK(std::fabs(a.rate - b.rate) <= 4.0 * (a.mc_stderr + b.mc_stderr) + 1e-9);
    }
    SECTION("replicate failures carry the replicate index") {
        // a custom scheme pinned to the wrong dimension fails inside replicates
        scenario.test =
            UniformityTest{sobolev::WeightScheme::custom({{1, 1.0}}, 9)};
        CHECK_THROWS_WITH(run_scenario(scenario, 2),
                          Catch::Matchers::ContainsSubstring("replicate 0"));
    }
}

TEST_CASE("power is monotone in the vMF concentration") {
    // gamma-composite pipeline at desk scale; rates must be nondecreasing
    // in kappa up to twice the binomial noise
    double previous = -1.0;
    for (double kappa : {0.0, 5.0, 10.0}) {
        sampling::ProductModel model;
        model.base = sampling::ProductModel::Base::Vmf;
        model.dim = 40;
        model.kappa = kappa;
        model.radial2 =
            sampling::SquaredRadiusLaw{sampling::SquaredRadiusLaw::Kind::Gamma, 2.0, 5.0};
        Scenario scenario;
        scenario.id = "power_pattern";
        scenario.model = model;
        scenario.n = 60;
        scenario.dim = 40;
        scenario.replicates = 120;
        scenario.base_seed = 555;
        scenario.test = GofCompositeTest{
            NullFamilySpec{NullFamilySpec::Kind::GammaEstimated, 0, 0, 0},
            sobolev::WeightScheme::rayleigh(), 60};
        const auto row = run_scenario(scenario, 2);
        CHECK(row.rate >= previous - 2.0 * row.mc_stderr);
        previous = row.rate;
    }
    CHECK(previous > 0.9);  // kappa = 10 at (60, 40) is a strong alternative
}

TEST_CASE("convergence experiment") {
    ConvergenceConfig config;
    config.id = "k0_1_small";
    config.model = sampling::UniformSphereModel{60};
    config.n = 60;
    config.dim = 60;
    config.replicates = 500;
    config.statistic = K0Statistic{1};
    config.target_mean = 0.0;
    config.base_seed = 99;

    const auto report = convergence_experiment(config, 2);
    CHECK(report.values.size() == 500);
    CHECK(std::fabs(report.mean) < 0.2);
    CHECK(report.variance == Approx(1.0).margin(0.35));
    CHECK(report.ks_pvalue > 0.001);

    SECTION("histogram counts sum to the replicate count") {
        const long total =
            std::accumulate(report.bin_counts.begin(), report.bin_counts.end(), 0L);
        CHECK(total == 500);
        CHECK(report.bin_edges.size() == report.bin_counts.size() + 1);
        CHECK(std::is_sorted(report.bin_edges.begin(), report.bin_edges.end()));
    }
    SECTION("sigma-standardized variant agrees in distribution") {
        config.statistic = StandardizedStatistic{sobolev::WeightScheme::rayleigh()};
        const auto sigma_report = convergence_experiment(config, 2);
        CHECK(std::fabs(sigma_report.mean) < 0.2);
        CHECK(sigma_report.ks_pvalue > 0.001);
    }
}

TEST_CASE("scenario file parsing") {
    const std::string text = R"(
# gamma-composite null row
id = gamma_null
test = gof_composite
m = 50
level = 0.05
seed = 7
n = 30, 60
d = 20
model.type = product
model.direction.type = vmf
model.direction.kappa = 0
model.radial2.type = gamma
model.radial2.shape = 2
model.radial2.scale = 5
gof.family = gamma-est
gof.bootstrap = 40
scheme = rayleigh
)";
    SECTION("expansion over the n list") {
        const auto file = scenario::parse_scenario_text(text, "gm");
        REQUIRE(file.scenarios.size() == 2);
        CHECK(file.scenarios[0].id == "gamma_null_n30_d20");
        CHECK(file.scenarios[0].n == 30);
        CHECK(file.scenarios[1].n == 60);
        CHECK(file.scenarios[0].replicates == 50);
        CHECK(std::holds_alternative<GofCompositeTest>(file.scenarios[0].test));
        const auto& test = std::get<GofCompositeTest>(file.scenarios[0].test);
        CHECK(test.bootstrap == 40);
        CHECK(std::holds_alternative<sampling::ProductModel>(file.scenarios[0].model));
    }
    SECTION("overrides") {
        scenario::Overrides overrides;
        overrides.replicates = 9;
        overrides.bootstrap = 11;
        overrides.n = 25;
        const auto file = scenario::parse_scenario_text(text, "gm", overrides);
        REQUIRE(file.scenarios.size() == 1);
        CHECK(file.scenarios[0].replicates == 9);
        CHECK(std::get<GofCompositeTest>(file.scenarios[0].test).bootstrap == 11);
    }
    SECTION("unknown keys are rejected") {
        CHECK_THROWS_WITH(scenario::parse_scenario_text(text + "\nbogus = 1\n", "x"),
                          Catch::Matchers::ContainsSubstring("bogus"));
    }
    SECTION("missing required keys are rejected") {
        CHECK_THROWS_WITH(scenario::parse_scenario_text("test = uniformity\nn = 5\n", "x"),
                          Catch::Matchers::ContainsSubstring("d"));
    }
    SECTION("model/test compatibility is checked") {
        const std::string bad = R"(
test = uniformity
n = 10
d = 5
model.type = mvt
model.nu = 5
)";
        CHECK_THROWS_WITH(scenario::parse_scenario_text(bad, "x"),
                          Catch::Matchers::ContainsSubstring("sphere-valued"));
    }
    SECTION("dimension token d resolves per expanded scenario") {
        const std::string chi_d = R"(
test = gof_simple
m = 5
n = 10
d = 15, 25
model.type = product
model.direction.type = vmf
model.direction.kappa = 4
model.radial2.type = chi2
model.radial2.df = d
gof.family = normal
)";
        const auto file = scenario::parse_scenario_text(chi_d, "x");
        REQUIRE(file.scenarios.size() == 2);
        const auto& first = std::get<sampling::ProductModel>(file.scenarios[0].model);
        const auto& second = std::get<sampling::ProductModel>(file.scenarios[1].model);
        CHECK(first.radial2.a == 15.0);
        CHECK(second.radial2.a == 25.0);
    }
    SECTION("local-alternative kappa token") {
        const std::string local = R"(
test = uniformity
m = 5
n = 100
d = 50
model.type = ivmf
model.kappa = tau2:1.4142135624
scheme = rayleigh
)";
        const auto file = scenario::parse_scenario_text(local, "x");
        const auto& model = std::get<sampling::IntegratedVmfModel>(file.scenarios[0].model);
        const double expected = std::sqrt(std::sqrt(2.0)) * std::pow(50.0, 0.75) /
                                std::sqrt(100.0);
        CHECK(model.kappa == Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("compact model grammar for the CLI") {
    CHECK(std::holds_alternative<sampling::UniformSphereModel>(
        scenario::parse_model_text("uniform", 10, 5)));
    const auto vmf = scenario::parse_model_text("vmf:4", 10, 5);
    CHECK(std::get<sampling::VmfModel>(vmf).kappa == 4.0);
    CHECK(std::get<sampling::VmfModel>(vmf).mu.size() == 6);
    const auto mvt = scenario::parse_model_text("mvt:10,0.8", 10, 7);
    CHECK(std::get<sampling::MvtModel>(mvt).nu == 10.0);
    CHECK(std::get<sampling::MvtModel>(mvt).scale == 0.8);
    const auto product = scenario::parse_model_text("product:vmf(10):gamma(2,5)", 10, 7);
    const auto& pm = std::get<sampling::ProductModel>(product);
    CHECK(pm.kappa == 10.0);
    CHECK(pm.radial2.kind == sampling::SquaredRadiusLaw::Kind::Gamma);
    const auto stable = scenario::parse_model_text("product:normal:stable(1)", 10, 7);
    CHECK(std::get<sampling::ProductModel>(stable).base ==
          sampling::ProductModel::Base::Gaussian);
    const auto chi_d = scenario::parse_model_text("product:vmf(4):chi2(d)", 10, 7);
    CHECK(std::get<sampling::ProductModel>(chi_d).radial2.a == 7.0);
    CHECK_THROWS_AS(scenario::parse_model_text("martian:3", 10, 5), std::invalid_argument);
}
