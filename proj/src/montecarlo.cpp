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

#include "sphstat/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "sphstat/specfun.hpp"
#include "sphstat/symmetry.hpp"

namespace sphstat::mc {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(replicate) over [0, count) on a pool; the first failure wins and
// is rethrown with its replicate index.
void parallel_replicates(int count, int workers,
                         const std::function<void(int)>& fn) {
    workers = std::min(resolve_workers(workers), count);
    if (workers <= 1) {
        for (int r = 0; r < count; ++r) fn(r);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error;
    int error_replicate = count;

    auto body = [&] {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= count || failed.load()) return;
            try {
                fn(r);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (r < error_replicate) {
                    error_replicate = r;
                    error = e.what();
                }
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failed.load())
        throw std::runtime_error("replicate " + std::to_string(error_replicate) +
                                 " failed: " + error);
}

Eigen::VectorXd unit_e1(int dim) {
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(dim);
    e1(0) = 1.0;
    return e1;
}

bool run_one_replicate(const Scenario& scenario, int replicate) {
    Rng rng(scenario.base_seed, static_cast<std::uint64_t>(replicate));
    const Eigen::MatrixXd data = sampling::draw_matrix(rng, scenario.model, scenario.n);

    return std::visit(
        [&](const auto& test) -> bool {
            using T = std::decay_t<decltype(test)>;
            if constexpr (std::is_same_v<T, UniformityTest>) {
                const auto sample = SphereSample::checked(data);
                return sobolev::statistic(sample, test.scheme).p_value < scenario.level;
            } else if constexpr (std::is_same_v<T, RotsymTest>) {
                const auto sample = SphereSample::checked(data);
                const auto report = symmetry::rotsym_test(
                    sample, unit_e1(sample.ambient_dim()), test.scheme);
                return report.p_value < scenario.level;
            } else if constexpr (std::is_same_v<T, GofSimpleTest>) {
                const auto null = test.null.make(static_cast<int>(data.cols()));
                return symmetry::gof_simple(data, null, test.scheme).p_value <
                       scenario.level;
            } else {
                const auto family = test.family.make(static_cast<int>(data.cols()));
                radial::BootstrapConfig cfg;
                cfg.replicates = test.bootstrap;
                cfg.rng = RngStream{scenario.base_seed,
                                    static_cast<std::uint64_t>(replicate)};
                cfg.stream_stride = static_cast<std::uint64_t>(scenario.replicates);
                return symmetry::gof_composite(data, family, test.scheme, cfg).p_value <
                       scenario.level;
            }
        },
        scenario.test);
}

}  // namespace

radial::RadialNull NullFamilySpec::make(int dim) const {
    switch (kind) {
        case Kind::Normal:
            return radial::RadialNull::normal(dim);
        case Kind::Student:
            return radial::RadialNull::student(dim, nu);
        case Kind::StudentEstimated:
            return radial::RadialNull::student_estimated(dim);
        case Kind::Stable:
            return radial::RadialNull::stable(dim, beta, gamma0);
        case Kind::GammaEstimated:
            return radial::RadialNull::gamma_estimated();
    }
    throw std::logic_error("NullFamilySpec: unknown kind");
}

NullFamilySpec NullFamilySpec::parse(const std::string& text) {
    NullFamilySpec spec;
    if (text == "normal") {
        spec.kind = Kind::Normal;
        return spec;
    }
    if (text == "student-est") {
        spec.kind = Kind::StudentEstimated;
        return spec;
    }
    if (text == "gamma-est") {
        spec.kind = Kind::GammaEstimated;
        return spec;
    }
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string args = text.substr(colon + 1);
        try {
            if (head == "student") {
                spec.kind = Kind::Student;
                spec.nu = std::stod(args);
                return spec;
            }
            if (head == "stable") {
                spec.kind = Kind::Stable;
                const auto comma = args.find(',');
                spec.beta = std::stod(args.substr(0, comma));
                if (comma != std::string::npos)
                    spec.gamma0 = std::stod(args.substr(comma + 1));
                return spec;
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("NullFamilySpec: bad parameter in '" + text + "'");
        }
    }
    throw std::invalid_argument("NullFamilySpec: unknown family '" + text + "'");
}

std::string NullFamilySpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Normal: os << "normal"; break;
        case Kind::Student: os << "student:" << nu; break;
        case Kind::StudentEstimated: os << "student-est"; break;
        case Kind::Stable: os << "stable:" << beta << "," << gamma0; break;
        case Kind::GammaEstimated: os << "gamma-est"; break;
    }
    return os.str();
}

RejectionRow run_scenario(const Scenario& scenario, int workers) {
    if (scenario.replicates < 1)
        throw std::domain_error("run_scenario: replicate count must be >= 1");
    if (!(scenario.level > 0.0 && scenario.level < 1.0))
        throw std::domain_error("run_scenario: level must be in (0,1)");

    const auto start = std::chrono::steady_clock::now();
    std::vector<char> rejected(scenario.replicates, 0);
    parallel_replicates(scenario.replicates, workers, [&](int r) {
        rejected[r] = run_one_replicate(scenario, r) ? 1 : 0;
    });

    RejectionRow row;
    row.scenario_id = scenario.id;
    row.n = scenario.n;
    row.dim = scenario.dim;
    row.replicates = scenario.replicates;
    row.level = scenario.level;
    row.rejections = std::count(rejected.begin(), rejected.end(), 1);
    row.rate = static_cast<double>(row.rejections) / scenario.replicates;
    row.mc_stderr = std::sqrt(row.rate * (1.0 - row.rate) / scenario.replicates);
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string rejection_csv_header() {
    return "scenario_id,n,d,replicates,level,rejections,rate,mc_stderr";
}

std::string rejection_csv_row(const RejectionRow& row) {
    std::ostringstream os;
    os << row.scenario_id << ',' << row.n << ',' << row.dim << ',' << row.replicates
       << ',' << row.level << ',' << row.rejections << ',';
    os.precision(10);
    os << row.rate << ',' << row.mc_stderr;
    return os.str();
}

ConvergenceReport convergence_experiment(const ConvergenceConfig& config, int workers) {
    if (config.replicates < 1)
        throw std::domain_error("convergence_experiment: replicate count must be >= 1");

    std::vector<double> values(config.replicates, 0.0);
    parallel_replicates(config.replicates, workers, [&](int r) {
        Rng rng(config.base_seed, static_cast<std::uint64_t>(r));
        const Eigen::MatrixXd data =
            sampling::draw_matrix(rng, config.model, config.n);
        const auto sample = SphereSample::checked(data);
        const Eigen::MatrixXd gram = sample.gram();
        values[r] = std::visit(
            [&](const auto& stat) -> double {
                using T = std::decay_t<decltype(stat)>;
                if constexpr (std::is_same_v<T, K0Statistic>)
                    return sobolev::k0_standardized_from_gram(gram, sample.sphere_dim(),
                                                              stat.k0);
                else
                    return sobolev::statistic_from_gram(gram, sample.sphere_dim(),
                                                        stat.scheme)
                        .standardized;
            },
            config.statistic);
    });

    ConvergenceReport report;
    report.id = config.id;
    report.target_mean = config.target_mean;
    report.values = values;

    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= values.size();
    double var = 0.0;
    for (const double v : values) var += (v - mean) * (v - mean);
    var /= std::max<std::size_t>(values.size() - 1, 1);
    report.mean = mean;
    report.variance = var;

    const double target = config.target_mean;
    auto [distance, pvalue] = ks_one_sample(
        values, [target](double x) { return specfun::normal_cdf(x - target); });
    report.ks_distance = distance;
    report.ks_pvalue = pvalue;

    // Freedman--Diaconis bins over the observed range.
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double q1 = sorted[static_cast<std::size_t>(0.25 * (m - 1))];
    const double q3 = sorted[static_cast<std::size_t>(0.75 * (m - 1))];
    double width = 2.0 * (q3 - q1) / std::cbrt(static_cast<double>(m));
    const double lo = sorted.front();
    const double hi = sorted.back();
    if (!(width > 0.0)) width = std::max(1.0, hi - lo);
    const int bins = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    report.bin_edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b)
        report.bin_edges[b] = lo + (hi - lo) * b / static_cast<double>(bins);
    report.bin_counts.assign(bins, 0);
    for (const double v : values) {
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        b = std::min(std::max(b, 0), bins - 1);
        ++report.bin_counts[b];
    }
    return report;
}

std::pair<double, double> ks_one_sample(std::vector<double> values,
                                        const std::function<double(double)>& cdf) {
    const std::size_t n = values.size();
    if (n == 0) throw std::domain_error("ks_one_sample: empty input");
    std::sort(values.begin(), values.end());
    double distance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(values[i]);
        const double upper = (i + 1.0) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        distance = std::max(distance, std::max(upper, lower));
    }
    const double lambda = std::sqrt(static_cast<double>(n)) * distance;
    return {distance, kolmogorov_sf(lambda)};
}

double kolmogorov_sf(double lambda) {
    if (!(lambda >= 0.0)) throw std::domain_error("kolmogorov_sf: lambda must be >= 0");
    if (lambda < 1e-8) return 1.0;
    if (lambda < 1.0) {
        // Jacobi-transformed series, fast for small lambda.
        const double factor = std::sqrt(2.0 * M_PI) / lambda;
        double sum = 0.0;
        for (int j = 1; j <= 20; ++j) {
            const double term =
                std::exp(-(2.0 * j - 1.0) * (2.0 * j - 1.0) * M_PI * M_PI /
                         (8.0 * lambda * lambda));
            sum += term;
            if (term < 1e-12 * sum) break;
        }
        return 1.0 - factor * sum;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

}  // namespace sphstat::mc
