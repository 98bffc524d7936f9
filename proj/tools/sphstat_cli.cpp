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

// Command-line surface: uniformity / rotsym / gof tests on CSV data,
// scenario-driven Monte Carlo runs, distribution sampling, and a fast
// self-check of the numerical kit. Exit codes: 0 success, 1 computation
// error, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sphstat/csv.hpp"
#include "sphstat/montecarlo.hpp"
#include "sphstat/quadrature.hpp"
#include "sphstat/radial.hpp"
#include "sphstat/sampling.hpp"
#include "sphstat/scenario.hpp"
#include "sphstat/sobolev.hpp"
#include "sphstat/specfun.hpp"
#include "sphstat/symmetry.hpp"

namespace {

using nlohmann::json;
using namespace sphstat;

struct CommonIo {
    std::string input;
    char delimiter = ',';
    bool header = false;
    bool normalize = false;
    bool as_json = false;
    double level = 0.05;
};

void add_io_flags(CLI::App* cmd, CommonIo& io, bool with_normalize = true) {
    cmd->add_option("--input", io.input, "input CSV, rows = observations")->required();
    cmd->add_option("--delim", io.delimiter, "CSV delimiter (default ',')");
    cmd->add_flag("--header", io.header, "skip the first line");
    if (with_normalize)
        cmd->add_flag("--normalize", io.normalize, "normalize rows to unit length");
    cmd->add_flag("--json", io.as_json, "emit a machine-readable report");
    cmd->add_option("--level", io.level, "significance level (default 0.05)")
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
}

Eigen::MatrixXd load_matrix(const CommonIo& io) {
    std::ifstream in(io.input);
    if (!in) {
        // Missing input is a usage problem, not a computation failure.
        std::cerr << "error: cannot open input " << io.input << "\n";
        std::exit(2);
    }
    csv::Options options;
    options.delimiter = io.delimiter;
    options.skip_header = io.header;
    return csv::read_matrix(in, io.input, options);
}

SphereSample load_sphere(const CommonIo& io) {
    Eigen::MatrixXd data = load_matrix(io);
    return io.normalize ? SphereSample::normalized(std::move(data))
                        : SphereSample::checked(std::move(data));
}

json report_to_json(const sobolev::TestReport& report) {
    return json{{"n", report.n},
                {"d", report.d},
                {"raw_statistic", report.raw_statistic},
                {"sigma", report.sigma},
                {"standardized", report.standardized},
                {"p_value", report.p_value},
                {"truncation", report.truncation},
                {"kernel_evaluations", report.kernel_evaluations}};
}

void print_test_report(const sobolev::TestReport& report,
                       const sobolev::WeightScheme& scheme, const CommonIo& io) {
    if (io.as_json) {
        json doc = report_to_json(report);
        doc["scheme"] = scheme.name();
        doc["level"] = io.level;
        doc["reject"] = report.p_value < io.level;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "scheme        " << scheme.name() << "\n"
              << "n             " << report.n << "\n"
              << "sphere dim    " << report.d << "\n"
              << "T_n           " << report.raw_statistic << "\n"
              << "sigma_n       " << report.sigma << "\n"
              << "standardized  " << report.standardized << "\n"
              << "p-value       " << report.p_value << "\n"
              << "decision      "
              << (report.p_value < io.level ? "reject uniformity" : "do not reject")
              << " at level " << io.level << "\n";
}

json gof_to_json(const symmetry::GofReport& report, double level) {
    return json{{"n", report.n},
                {"ambient_dim", report.ambient_dim},
                {"null", report.null_description},
                {"scheme", report.scheme_name},
                {"ad_statistic", report.ad_statistic},
                {"radial_p", report.radial_p},
                {"directional_standardized", report.directional_standardized},
                {"directional_p", report.directional_p},
                {"g_statistic", report.g_statistic},
                {"p_value", report.p_value},
                {"composite", report.composite},
                {"bootstrap_replicates", report.bootstrap_replicates},
                {"bootstrap_failures", report.bootstrap_failures},
                {"radius_kernel_correlation", report.radius_kernel_correlation},
                {"level", level},
                {"reject", report.p_value < level}};
}

void print_gof_report(const symmetry::GofReport& report, const CommonIo& io) {
    if (io.as_json) {
        std::cout << gof_to_json(report, io.level).dump(2) << "\n";
        return;
    }
    std::cout << "null          " << report.null_description << "\n"
              << "scheme        " << report.scheme_name << "\n"
              << "n             " << report.n << "\n"
              << "ambient dim   " << report.ambient_dim << "\n"
              << "A_n           " << report.ad_statistic << "\n"
              << "radial p      " << report.radial_p
              << (report.composite ? " (bootstrap)" : "") << "\n"
              << "T_n/sigma_n   " << report.directional_standardized << "\n"
              << "directional p " << report.directional_p << "\n"
              << "G_n           " << report.g_statistic << "\n"
              << "p-value       " << report.p_value << "\n"
              << "radius-kernel corr (diagnostic) " << report.radius_kernel_correlation
              << "\n"
              << "decision      "
              << (report.p_value < io.level ? "reject the fit" : "do not reject")
              << " at level " << io.level << "\n";
    if (report.bootstrap_failures > 0)
        std::cerr << "warning: " << report.bootstrap_failures
                  << " bootstrap replicates failed estimation twice and were "
                     "counted as exceeding\n";
}

int run_uniformity(const CommonIo& io, const std::string& scheme_text) {
    const auto scheme = sobolev::WeightScheme::parse(scheme_text);
    const auto sample = load_sphere(io);
    print_test_report(sobolev::statistic(sample, scheme), scheme, io);
    return 0;
}

int run_rotsym(const CommonIo& io, const std::string& scheme_text,
               const std::string& theta_path) {
    const auto scheme = sobolev::WeightScheme::parse(scheme_text);
    const auto sample = load_sphere(io);
    std::ifstream theta_in(theta_path);
    if (!theta_in) {
        std::cerr << "error: cannot open theta file " << theta_path << "\n";
        std::exit(2);
    }
    csv::Options options;
    options.delimiter = io.delimiter;
    Eigen::MatrixXd theta_matrix = csv::read_matrix(theta_in, theta_path, options);
    Eigen::VectorXd theta;
    if (theta_matrix.rows() == 1)
        theta = theta_matrix.row(0).transpose();
    else if (theta_matrix.cols() == 1)
        theta = theta_matrix.col(0);
    else
        throw std::runtime_error("rotsym: theta file must hold a single vector");
    theta /= theta.norm();
    print_test_report(symmetry::rotsym_test(sample, theta, scheme), scheme, io);
    return 0;
}

int run_gof(const CommonIo& io, const std::string& family_text,
            const std::string& scheme_text, std::optional<int> bootstrap,
            std::uint64_t seed) {
    const auto scheme = sobolev::WeightScheme::parse(scheme_text);
    const auto family_spec = mc::NullFamilySpec::parse(family_text);
    const Eigen::MatrixXd data = load_matrix(io);
    const auto family = family_spec.make(static_cast<int>(data.cols()));

    symmetry::GofReport report;
    if (family.has_estimator()) {
        radial::BootstrapConfig cfg;
        cfg.replicates = bootstrap.value_or(500);
        cfg.rng = RngStream{seed, 0};
        report = symmetry::gof_composite(data, family, scheme, cfg);
    } else {
        if (bootstrap)
            throw CLI::ValidationError(
                "--bootstrap applies only to estimated families (student-est, gamma-est)");
        report = symmetry::gof_simple(data, family, scheme);
    }
    print_gof_report(report, io);
    return 0;
}

int run_dist(const std::string& model_text, long n, int dim, std::uint64_t seed,
             const std::string& out_path) {
    const auto model = scenario::parse_model_text(model_text, n, dim);
    Rng rng(seed, 0);
    const Eigen::MatrixXd data = sampling::draw_matrix(rng, model, n);
    if (out_path.empty())
        csv::write_matrix(std::cout, data);
    else
        csv::write_matrix(out_path, data);
    return 0;
}

int run_simulate(const std::string& path, const scenario::Overrides& overrides,
                 int workers, const std::string& out_path,
                 const std::string& json_path, const std::string& hist_path) {
    const auto file = scenario::parse_scenario_file(path, overrides);
    const int pool = workers > 0 ? workers : file.workers;

    json doc;
    doc["scenario_file"] = path;
    doc["id"] = file.id;

    if (file.is_convergence()) {
        json rows = json::array();
        std::ostringstream csv_out;
        std::ostringstream hist_out;
        csv_out << "id,n,d,replicates,mean,variance,ks_distance,ks_pvalue,target_mean\n";
        hist_out << "id,bin_lo,bin_hi,count\n";
        hist_out.precision(10);
        for (const auto& config : file.convergence) {
            const auto report = mc::convergence_experiment(config, pool);
            csv_out.precision(10);
            csv_out << report.id << ',' << config.n << ',' << config.dim << ','
                    << config.replicates << ',' << report.mean << ',' << report.variance
                    << ',' << report.ks_distance << ',' << report.ks_pvalue << ','
                    << report.target_mean << "\n";
            for (std::size_t b = 0; b < report.bin_counts.size(); ++b)
                hist_out << report.id << ',' << report.bin_edges[b] << ','
                         << report.bin_edges[b + 1] << ',' << report.bin_counts[b]
                         << "\n";
            json row{{"id", report.id},
                     {"n", config.n},
                     {"d", config.dim},
                     {"replicates", config.replicates},
                     {"mean", report.mean},
                     {"variance", report.variance},
                     {"ks_distance", report.ks_distance},
                     {"ks_pvalue", report.ks_pvalue},
                     {"target_mean", report.target_mean},
                     {"bin_edges", report.bin_edges},
                     {"bin_counts", report.bin_counts}};
            rows.push_back(std::move(row));
        }
        doc["convergence"] = std::move(rows);
        if (out_path.empty())
            std::cout << csv_out.str();
        else {
            std::ofstream out(out_path);
            out << csv_out.str();
        }
        if (!hist_path.empty()) {
            std::ofstream out(hist_path);
            out << hist_out.str();
        }
    } else {
        if (!hist_path.empty())
            throw CLI::ValidationError("--hist applies only to convergence scenarios");
        json rows = json::array();
        std::ostringstream csv_out;
        csv_out << mc::rejection_csv_header() << "\n";
        for (const auto& s : file.scenarios) {
            const auto row = mc::run_scenario(s, pool);
            csv_out << mc::rejection_csv_row(row) << "\n";
            std::cerr << row.scenario_id << ": rate " << row.rate << " +- "
                      << row.mc_stderr << " (" << row.wall_seconds << " s)\n";
            json jrow{{"scenario_id", row.scenario_id}, {"n", row.n},
                      {"d", row.dim},                   {"replicates", row.replicates},
                      {"level", row.level},             {"rejections", row.rejections},
                      {"rate", row.rate},               {"mc_stderr", row.mc_stderr},
                      {"wall_seconds", row.wall_seconds}};
            rows.push_back(std::move(jrow));
        }
        doc["rows"] = std::move(rows);
        if (out_path.empty())
            std::cout << csv_out.str();
        else {
            std::ofstream out(out_path);
            out << csv_out.str();
        }
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

// Fast deterministic oracle checks over the numerical kit.
int run_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    auto near = [](double a, double b, double tol) { return std::fabs(a - b) <= tol; };

    using namespace specfun;
    check("log_gamma(1) = 0", near(log_gamma(1.0), 0.0, 1e-14));
    check("log_gamma(0.5) = log sqrt(pi)",
          near(log_gamma(0.5), 0.5 * std::log(M_PI), 1e-13));
    check("log_gamma(10) = log 9!", near(log_gamma(10.0), std::log(362880.0), 1e-10));
    check("digamma(1) = -euler",
          near(digamma(1.0), -0.57721566490153286, 1e-11));
    check("P(1,1) = 1 - 1/e", near(reg_incomplete_gamma(1.0, 1.0),
                                   1.0 - std::exp(-1.0), 1e-12));
    check("P inverse round trip",
          near(reg_incomplete_gamma(1.0, inverse_reg_incomplete_gamma(1.0, 0.5)), 0.5,
               1e-10));
    check("I_x(1,1) = x", near(reg_incomplete_beta(1.0, 1.0, 0.37), 0.37, 1e-13));
    check("I_0.5(2,2) = 0.5", near(reg_incomplete_beta(2.0, 2.0, 0.5), 0.5, 1e-12));
    check("normal quantile(0.975)",
          near(normal_quantile(0.975), 1.959963984540054, 1e-8));
    {
        bool ok = true;
        for (int k = 0; k <= 20 && ok; ++k) {
            const double theta = 0.7;
            const auto idx = GegenbauerIndex::for_sphere(k, 1);
            ok = near(gegenbauer_eval(idx, std::cos(theta)), 2.0 * std::cos(k * theta),
                      1e-12);
        }
        check("Chebyshev branch 2cos(k theta)", ok);
    }
    check("C_3^{49.5}(1) = 166650",
          near(gegenbauer_eval(GegenbauerIndex::for_sphere(3, 100), 1.0), 166650.0,
               1e-6));
    check("d_{2,3} = 9", near(harmonic_dim(2, 3), 9.0, 1e-10));
    check("c_{1,2} = 2/3", near(gegenbauer_norm(1, 2), 2.0 / 3.0, 1e-12));
    check("omega_3 = 2 pi^2", near(surface_area(3), 2.0 * M_PI * M_PI, 1e-10));

    check("sigma_n rayleigh d=100", near(sobolev::sigma_n(
                                             sobolev::WeightScheme::rayleigh(), 100),
                                         std::sqrt(202.0), 1e-9));
    check("AD single point", near(radial::ad_statistic_from_uniforms({0.5}),
                                  2.0 * std::log(2.0) - 1.0, 1e-12));
    check("F_A(2.492) ~ 0.95", near(radial::ad_limit_cdf(2.492), 0.95, 2e-3));
    check("F_A(3.878) ~ 0.99", near(radial::ad_limit_cdf(3.878), 0.99, 2e-3));
    check("fisher tail at 0", near(symmetry::fisher_chi2_pvalue(0.0), 1.0, 1e-15));
    check("kolmogorov_sf(1.36) ~ 0.049",
          near(mc::kolmogorov_sf(1.36), 0.049, 2e-3));
    {
        Rng a(7, 3), b(7, 3);
        bool same = true;
        for (int i = 0; i < 1000; ++i) same = same && a.next_u64() == b.next_u64();
        check("rng reproducibility", same);
    }
    {
        Rng rng(11, 0);
        const auto sample = sampling::uniform_sphere(rng, 200, 50);
        bool unit = true;
        for (long i = 0; i < 200; ++i)
            unit = unit && std::fabs(sample.data().row(i).norm() - 1.0) < 1e-12;
        check("uniform sphere rows unit", unit);
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-dimensional Sobolev tests of uniformity, rotational and "
                 "spherical symmetry"};
    app.require_subcommand(1);

    CommonIo unif_io;
    std::string unif_scheme = "rayleigh";
    auto* uniformity = app.add_subcommand("uniformity", "Sobolev uniformity test");
    add_io_flags(uniformity, unif_io);
    uniformity->add_option("--scheme", unif_scheme,
                           "rayleigh|bingham|k:K|finite:K|hybrid|decay:K");

    CommonIo rotsym_io;
    std::string rotsym_scheme = "rayleigh";
    std::string theta_path;
    auto* rotsym = app.add_subcommand("rotsym", "rotational symmetry about theta");
    add_io_flags(rotsym, rotsym_io);
    rotsym->add_option("--theta", theta_path, "CSV with the symmetry axis")->required();
    rotsym->add_option("--scheme", rotsym_scheme, "directional weight scheme");

    CommonIo gof_io;
    std::string gof_family;
    std::string gof_scheme = "rayleigh";
    std::optional<int> gof_bootstrap;
    std::uint64_t gof_seed = 1;
    auto* gof = app.add_subcommand("gof", "spherical-symmetry goodness of fit");
    add_io_flags(gof, gof_io, /*with_normalize=*/false);
    gof->add_option("--family", gof_family,
                    "normal|student:NU|student-est|stable:BETA[,G0]|gamma-est")
        ->required();
    gof->add_option("--scheme", gof_scheme, "directional weight scheme");
    gof->add_option("--bootstrap", gof_bootstrap,
                    "bootstrap replicates (estimated families)");
    gof->add_option("--seed", gof_seed, "bootstrap seed");

    std::string scen_path, scen_out, scen_json, scen_hist;
    int scen_workers = 0;
    scenario::Overrides overrides;
    auto* simulate = app.add_subcommand("simulate", "run a scenario file");
    simulate->add_option("--scenario", scen_path, "scenario file")->required();
    simulate->add_option("--workers", scen_workers, "worker threads (0 = hardware)");
    simulate->add_option("--out", scen_out, "result CSV path (default stdout)");
    simulate->add_option("--json", scen_json, "full JSON report path");
    simulate->add_option("--hist", scen_hist,
                         "histogram CSV path (convergence scenarios)");
    simulate->add_option("--m", overrides.replicates, "override replicate count");
    simulate->add_option("--b", overrides.bootstrap, "override bootstrap replicates");
    simulate->add_option("--n", overrides.n, "override sample size");
    simulate->add_option("--d", overrides.dim, "override dimension");
    simulate->add_option("--seed", overrides.seed, "override base seed");

    std::string dist_model, dist_out;
    long dist_n = 100;
    int dist_d = 10;
    std::uint64_t dist_seed = 1;
    auto* dist = app.add_subcommand("dist", "sample from a model, emit CSV");
    dist->add_option("--model", dist_model, "model spec, e.g. vmf:4 or product:vmf(10):gamma(2,5)")
        ->required();
    dist->add_option("--n", dist_n, "sample size")->required();
    dist->add_option("--d", dist_d,
                     "dimension (sphere dim for sphere models, ambient otherwise)")
        ->required();
    dist->add_option("--seed", dist_seed, "seed");
    dist->add_option("--out", dist_out, "output CSV (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "fast oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (uniformity->parsed()) return run_uniformity(unif_io, unif_scheme);
        if (rotsym->parsed()) return run_rotsym(rotsym_io, rotsym_scheme, theta_path);
        if (gof->parsed())
            return run_gof(gof_io, gof_family, gof_scheme, gof_bootstrap, gof_seed);
        if (simulate->parsed())
            return run_simulate(scen_path, overrides, scen_workers, scen_out, scen_json,
                                scen_hist);
        if (dist->parsed()) return run_dist(dist_model, dist_n, dist_d, dist_seed, dist_out);
        if (selftest->parsed()) return run_selftest();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
