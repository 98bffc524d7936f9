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

// Generates the interpolation table for the limit null distribution of the
// Anderson-Darling statistic by plain Monte Carlo: `samples` realizations of
// A^2 on uniform samples of size `n`, with the empirical CDF read off at
// `knots` equally spaced z values on (0, z_max]. Uniform order statistics
// are produced directly from exponential spacings, so each realization costs
// O(n) instead of a sort.
//
// Standalone on purpose: the library embeds this tool's output, so the tool
// must not depend on the library. Usage:
//
//   fa_table_gen --out data/ad_limit_cdf.tsv --emit-cpp src/fa_table_data.cpp
//
// Defaults reproduce the shipped table bit for bit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "sphstat/rng.hpp"

namespace {

struct Config {
    long samples = 4000000;
    int n = 4096;
    std::uint64_t seed = 20260515;
    int knots = 2400;
    double z_max = 12.0;
    int threads = 0;
    std::string out;
    std::string emit_cpp;
};

double ad_squared_uniform(sphstat::Rng& rng, int n, std::vector<double>& spacings) {
    // u_(i) = S_i / S_(n+1) with S the partial sums of n+1 iid Exp(1).
    double total = 0.0;
    for (int i = 0; i <= n; ++i) {
        total += rng.exponential();
        spacings[i] = total;
    }
    const double inv_total = 1.0 / total;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = spacings[i] * inv_total;
        const double hi = spacings[n - 1 - i] * inv_total;
        acc += (2.0 * (i + 1.0) - 1.0) * (std::log(lo) + std::log1p(-hi));
    }
    return -static_cast<double>(n) - acc / static_cast<double>(n);
}

int run(const Config& cfg) {
    if (cfg.out.empty()) {
        std::cerr << "fa_table_gen: --out is required\n";
        return 2;
    }
    const int threads = cfg.threads > 0
                            ? cfg.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    std::vector<double> values(cfg.samples);
    std::vector<std::thread> pool;
    const long per_thread = (cfg.samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::vector<double> spacings(cfg.n + 1);
            const long begin = t * per_thread;
            const long end = std::min<long>(cfg.samples, begin + per_thread);
            for (long i = begin; i < end; ++i) {
                sphstat::Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
                values[i] = ad_squared_uniform(rng, cfg.n, spacings);
            }
        });
    }
    for (auto& t : pool) t.join();
    std::sort(values.begin(), values.end());

    std::vector<double> z(cfg.knots + 1), cdf(cfg.knots + 1);
    z[0] = 0.0;
    cdf[0] = 0.0;
    for (int k = 1; k <= cfg.knots; ++k) {
        z[k] = cfg.z_max * k / cfg.knots;
        const auto it = std::upper_bound(values.begin(), values.end(), z[k]);
        cdf[k] = static_cast<double>(it - values.begin()) / cfg.samples;
    }

    std::ofstream out(cfg.out);
    if (!out) {
        std::cerr << "fa_table_gen: cannot open " << cfg.out << "\n";
        return 1;
    }
    out << "# Limit null CDF of the Anderson-Darling statistic, Monte Carlo table\n";
    out << "# samples=" << cfg.samples << " n=" << cfg.n << " seed=" << cfg.seed
        << " knots=" << cfg.knots + 1 << " z_max=" << cfg.z_max << "\n";
    out << "# columns: z F(z)\n";
    out.precision(10);
    for (int k = 0; k <= cfg.knots; ++k) out << z[k] << '\t' << cdf[k] << '\n';
    out.close();

    if (!cfg.emit_cpp.empty()) {
        std::ofstream cpp(cfg.emit_cpp);
        if (!cpp) {
            std::cerr << "fa_table_gen: cannot open " << cfg.emit_cpp << "\n";
            return 1;
        }
        cpp << "// Generated by tools/fa_table_gen; do not edit by hand.\n";
        cpp << "// samples=" << cfg.samples << " n=" << cfg.n << " seed=" << cfg.seed
            << " z_max=" << cfg.z_max << "\n\n";
        cpp << "namespace sphstat::radial::fa_data {\n\n";
        cpp << "extern const double kKnots[][2];\n";
        cpp << "extern const unsigned kKnotCount;\n\n";
        cpp << "const double kKnots[][2] = {\n";
        cpp.precision(10);
        for (int k = 0; k <= cfg.knots; ++k)
            cpp << "    {" << z[k] << ", " << cdf[k] << "},\n";
        cpp << "};\n\n";
        cpp << "const unsigned kKnotCount = " << cfg.knots + 1 << ";\n\n";
        cpp << "}  // namespace sphstat::radial::fa_data\n";
    }

    std::cout << "wrote " << cfg.knots + 1 << " knots from " << cfg.samples
              << " samples (n=" << cfg.n << ")\n";
    std::cout << "F(2.492) = " << cdf[static_cast<int>(2.492 / cfg.z_max * cfg.knots)]
              << "  F(3.878) = " << cdf[static_cast<int>(3.878 / cfg.z_max * cfg.knots)]
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "fa_table_gen: " << arg << " needs a value\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--samples")
            cfg.samples = std::stol(next());
        else if (arg == "--n")
            cfg.n = std::stoi(next());
        else if (arg == "--seed")
            cfg.seed = std::stoull(next());
        else if (arg == "--knots")
            cfg.knots = std::stoi(next());
        else if (arg == "--z-max")
            cfg.z_max = std::stod(next());
        else if (arg == "--threads")
            cfg.threads = std::stoi(next());
        else if (arg == "--out")
            cfg.out = next();
        else if (arg == "--emit-cpp")
            cfg.emit_cpp = next();
        else {
            std::cerr << "fa_table_gen: unknown argument " << arg << "\n";
            return 2;
        }
    }
    return run(cfg);
}
