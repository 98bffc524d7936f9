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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "sphstat/radial.hpp"
#include "sphstat/sampling.hpp"
#include "sphstat/sobolev.hpp"

namespace sphstat::mc {

/// Radial null family with the dimension left open; resolved against the
/// ambient dimension of each expanded scenario.
struct NullFamilySpec {
    enum class Kind { Normal, Student, StudentEstimated, Stable, GammaEstimated };
    Kind kind = Kind::Normal;
    double nu = 5.0;
    double beta = 1.0;
    double gamma0 = 1.0;

    radial::RadialNull make(int dim) const;
    /// Parses "normal", "student:NU", "student-est", "stable:BETA[,G0]",
    /// "gamma-est".
    static NullFamilySpec parse(const std::string& text);
    std::string describe() const;
};

struct UniformityTest {
    sobolev::WeightScheme scheme;
};

/// Uniformity of the multivariate signs about theta = e_1.
struct RotsymTest {
    sobolev::WeightScheme scheme;
};

struct GofSimpleTest {
    NullFamilySpec null;
    sobolev::WeightScheme scheme;
};

struct GofCompositeTest {
    NullFamilySpec family;
    sobolev::WeightScheme scheme;
    int bootstrap = 500;
};

using TestSpec = std::variant<UniformityTest, RotsymTest, GofSimpleTest, GofCompositeTest>;

/// One Monte Carlo experiment: M replicates of (draw from model, apply test
/// at the level). Replicate r draws from stream r of base_seed; bootstrap
/// replicate j inside it uses stream (j+1)*M + r, so results are invariant
/// to the worker count.
struct Scenario {
    std::string id;
    sampling::ModelSpec model;
    long n = 100;
    int dim = 100;  // sphere dimension for sphere-valued models, ambient otherwise
    int replicates = 1000;
    double level = 0.05;
    std::uint64_t base_seed = 1;
    TestSpec test = UniformityTest{sobolev::WeightScheme::rayleigh()};
};

struct RejectionRow {
    std::string scenario_id;
    long n = 0;
    int dim = 0;
    int replicates = 0;
    double level = 0.05;
    long rejections = 0;
    double rate = 0.0;
    double mc_stderr = 0.0;
    double wall_seconds = 0.0;  // informational; not part of the result CSV
};

/// Runs the scenario on a worker pool (workers = 0 means hardware
/// concurrency). A replicate-level failure aborts the run and is rethrown
/// with the replicate index.
RejectionRow run_scenario(const Scenario& scenario, int workers = 0);

/// Deterministic header + row formatting for result CSVs. Wall time is
/// deliberately excluded so identical seeds give byte-identical files.
std::string rejection_csv_header();
std::string rejection_csv_row(const RejectionRow& row);

/// Which statistic a convergence experiment tracks.
struct K0Statistic {
    int k0 = 1;
};
struct StandardizedStatistic {
    sobolev::WeightScheme scheme;
};
using StatisticSpec = std::variant<K0Statistic, StandardizedStatistic>;

struct ConvergenceConfig {
    std::string id;
    sampling::ModelSpec model;
    long n = 500;
    int dim = 500;
    int replicates = 1000;
    StatisticSpec statistic = K0Statistic{1};
    double target_mean = 0.0;
    std::uint64_t base_seed = 1;
};

struct ConvergenceReport {
    std::string id;
    std::vector<double> values;   // one statistic per replicate
    double mean = 0.0;
    double variance = 0.0;
    double ks_distance = 0.0;
    double ks_pvalue = 0.0;
    double target_mean = 0.0;
    std::vector<double> bin_edges;   // Freedman--Diaconis histogram
    std::vector<long> bin_counts;
};

ConvergenceReport convergence_experiment(const ConvergenceConfig& config, int workers = 0);

/// One-sample Kolmogorov--Smirnov: sup distance between the empirical CDF
/// and cdf, with the asymptotic p-value.
std::pair<double, double> ks_one_sample(std::vector<double> values,
                                        const std::function<double(double)>& cdf);

/// P(sup |B(t)| > lambda) for the Kolmogorov distribution, via whichever of
/// the two theta-series converges fastest; absolute accuracy ~1e-10.
double kolmogorov_sf(double lambda);

}  // namespace sphstat::mc
