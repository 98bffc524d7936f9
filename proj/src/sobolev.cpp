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

#include "sphstat/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphstat/specfun.hpp"

namespace sphstat::sobolev {

namespace {

constexpr double kClampSlack = 1e-12;

// Degree-indexed coefficients (1 + 2k/(d-1)) v^2 (2 v^2 for d = 1), dense up
// to the scheme's max degree so the pair loop can run one plain recurrence.
struct KernelCoefficients {
    int d = 0;
    int max_degree = 0;
    std::vector<double> coeff;  // coeff[k], k = 0..max_degree; coeff[0] = 0

    KernelCoefficients(const WeightScheme& scheme, int dim) : d(dim) {
        if (dim < 1) throw std::domain_error("sobolev: sphere dimension must be >= 1");
        if (scheme.pinned_dim() && *scheme.pinned_dim() != dim)
            throw std::invalid_argument(
                "sobolev: custom scheme is pinned to dimension " +
                std::to_string(*scheme.pinned_dim()) + " but the sample lives on S^" +
                std::to_string(dim));
        max_degree = scheme.max_degree();
        coeff.assign(max_degree + 1, 0.0);
        for (const auto& [k, v] : scheme.support(dim)) {
            const double factor =
                (dim == 1) ? 2.0 : 1.0 + 2.0 * k / (static_cast<double>(dim) - 1.0);
            coeff[k] = factor * v * v;
        }
    }

    // Kernel at one dot product; Chebyshev branch for d = 1.
    double eval(double x) const {
        if (std::fabs(x) > 1.0) {
            if (std::fabs(x) > 1.0 + kClampSlack)
                throw std::domain_error("sobolev: dot product outside [-1,1]");
            x = std::copysign(1.0, x);
        }
        if (d == 1) {
            const double theta = std::acos(x);
            double acc = 0.0;
            for (int k = 1; k <= max_degree; ++k)
                if (coeff[k] != 0.0) acc += coeff[k] * std::cos(k * theta);
            return acc;
        }
        const double lambda = 0.5 * (d - 1);
        double prev = 1.0;
        double curr = 2.0 * lambda * x;
        double acc = (max_degree >= 1) ? coeff[1] * curr : 0.0;
        for (int k = 2; k <= max_degree; ++k) {
            const double next =
                (2.0 * x * (k + lambda - 1.0) * curr - (k + 2.0 * lambda - 2.0) * prev) / k;
            if (std::fabs(next) > 1e300)
                throw specfun::truncation_error(
                    "sobolev: Gegenbauer recurrence exceeded representable range");
            prev = curr;
            curr = next;
            acc += coeff[k] * curr;
        }
        return acc;
    }
};

double pair_sum(const Eigen::MatrixXd& gram, const KernelCoefficients& kernel) {
    const Eigen::Index n = gram.rows();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) sum += kernel.eval(gram(i, j));
    return sum;
}

TestReport finish_report(double raw, long n, int d, const WeightScheme& scheme) {
    TestReport report;
    report.raw_statistic = raw;
    report.sigma = sigma_n(scheme, d);
    report.standardized = raw / report.sigma;
    report.p_value = specfun::normal_sf(report.standardized);
    report.truncation = scheme.max_degree();
    report.kernel_evaluations = n * (n - 1) / 2;
    report.n = n;
    report.d = d;
    return report;
}

}  // namespace

WeightScheme WeightScheme::k_sobolev(int k0) {
    if (k0 < 1) throw std::domain_error("WeightScheme: k0 must be >= 1");
    std::string name = k0 == 1 ? "rayleigh" : (k0 == 2 ? "bingham" : "k:" + std::to_string(k0));
    WeightScheme s(Kind::KSobolev, std::move(name));
    s.k0_ = k0;
    s.max_degree_ = k0;
    return s;
}

WeightScheme WeightScheme::finite(int k0) {
    if (k0 <= 1) throw std::domain_error("WeightScheme: finite scheme needs k0 > 1");
    WeightScheme s(Kind::Finite, "finite:" + std::to_string(k0));
    s.k0_ = k0;
    s.max_degree_ = k0;
    return s;
}

WeightScheme WeightScheme::hybrid(std::vector<int> degrees) {
    if (degrees.empty()) throw std::domain_error("WeightScheme: hybrid needs degrees");
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    if (degrees.front() < 1) throw std::domain_error("WeightScheme: degrees must be >= 1");
    WeightScheme s(Kind::Hybrid, "hybrid");
    s.max_degree_ = degrees.back();
    s.degrees_ = std::move(degrees);
    return s;
}

WeightScheme WeightScheme::decay_adjusted(int k0) {
    if (k0 <= 1) throw std::domain_error("WeightScheme: decay-adjusted scheme needs k0 > 1");
    WeightScheme s(Kind::DecayAdjusted, "decay:" + std::to_string(k0));
    s.k0_ = k0;
    s.max_degree_ = k0;
    return s;
}

WeightScheme WeightScheme::custom(std::vector<std::pair<int, double>> rules,
                                  std::optional<int> pinned_dim) {
    if (rules.empty()) throw std::domain_error("WeightScheme: custom needs rules");
    std::sort(rules.begin(), rules.end());
    int max_k = 0;
    for (const auto& [k, v] : rules) {
        if (k < 1) throw std::domain_error("WeightScheme: degrees must be >= 1");
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::domain_error("WeightScheme: weights must be finite and >= 0");
        max_k = std::max(max_k, k);
    }
    WeightScheme s(Kind::Custom, "custom");
    s.rules_ = std::move(rules);
    s.pinned_dim_ = pinned_dim;
    s.max_degree_ = max_k;
    return s;
}

WeightScheme WeightScheme::parse(const std::string& text) {
    if (text == "rayleigh") return rayleigh();
    if (text == "bingham") return bingham();
    if (text == "hybrid") return hybrid({1, 2});
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        int k0 = 0;
        try {
            k0 = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("WeightScheme: bad degree in '" + text + "'");
        }
        if (head == "k") return k_sobolev(k0);
        if (head == "finite") return finite(k0);
        if (head == "decay") return decay_adjusted(k0);
    }
    throw std::invalid_argument("WeightScheme: unknown scheme '" + text + "'");
}

double WeightScheme::weight(int k, int d) const {
    if (k < 1) throw std::domain_error("WeightScheme::weight: k must be >= 1");
    if (d < 1) throw std::domain_error("WeightScheme::weight: d must be >= 1");
    switch (kind_) {
        case Kind::KSobolev:
            return k == k0_ ? 1.0 : 0.0;
        case Kind::Finite:
            return k <= k0_ ? 1.0 : 0.0;
        case Kind::Hybrid:
            return std::binary_search(degrees_.begin(), degrees_.end(), k) ? 1.0 : 0.0;
        case Kind::DecayAdjusted:
            if (k == 1) return 1.0;
            if (k <= k0_)
                return std::exp(0.25 * (specfun::log_gamma(k + 1.0) -
                                        k * std::log(static_cast<double>(d))));
            return 0.0;
        case Kind::Custom:
            for (const auto& [deg, v] : rules_)
                if (deg == k) return v;
            return 0.0;
    }
    return 0.0;
}

std::vector<std::pair<int, double>> WeightScheme::support(int d) const {
    std::vector<std::pair<int, double>> out;
    for (int k = 1; k <= max_degree_; ++k) {
        const double v = weight(k, d);
        if (v != 0.0) out.emplace_back(k, v);
    }
    return out;
}

double psi_kernel(const WeightScheme& scheme, int d, double x) {
    return KernelCoefficients(scheme, d).eval(x);
}

double sigma_n(const WeightScheme& scheme, int d) {
    if (d < 1) throw std::domain_error("sigma_n: d must be >= 1");
    const auto supp = scheme.support(d);
    if (supp.empty())
        throw std::domain_error("sigma_n: scheme is degenerate (all weights zero)");
    // log-sum-exp over 4 log v + log d_{k,d}, with the largest term factored out
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> log_terms;
    log_terms.reserve(supp.size());
    for (const auto& [k, v] : supp) {
        const double lt = 4.0 * std::log(v) + specfun::log_harmonic_dim(k, d);
        log_terms.push_back(lt);
        max_term = std::max(max_term, lt);
    }
    double acc = 0.0;
    for (const double lt : log_terms) acc += std::exp(lt - max_term);
    return std::exp(0.5 * (std::log(2.0) + max_term + std::log(acc)));
}

TestReport statistic(const SphereSample& sample, const WeightScheme& scheme) {
    return statistic_from_gram(sample.gram(), sample.sphere_dim(), scheme);
}

TestReport statistic_from_gram(const Eigen::MatrixXd& gram, int sphere_dim,
                               const WeightScheme& scheme) {
    if (gram.rows() != gram.cols())
        throw std::invalid_argument("statistic_from_gram: Gram matrix must be square");
    const long n = static_cast<long>(gram.rows());
    const KernelCoefficients kernel(scheme, sphere_dim);
    // Sums over empty index sets are zero, so n = 1 yields the trivial report.
    const double raw = (n >= 2) ? (2.0 / n) * pair_sum(gram, kernel) : 0.0;
    return finish_report(raw, n, sphere_dim, scheme);
}

double k0_standardized(const SphereSample& sample, int k0) {
    return k0_standardized_from_gram(sample.gram(), sample.sphere_dim(), k0);
}

double k0_standardized_from_gram(const Eigen::MatrixXd& gram, int sphere_dim, int k0) {
    if (k0 < 1) throw std::domain_error("k0_standardized: k0 must be >= 1");
    if (gram.rows() < 2) throw std::domain_error("k0_standardized: need n >= 2");
    const long n = static_cast<long>(gram.rows());
    const auto idx = specfun::GegenbauerIndex::for_sphere(k0, sphere_dim);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
        for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
            sum += specfun::gegenbauer_eval(idx, gram(i, j));
    const double log_const = 0.5 * (std::log(2.0) + specfun::log_gamma(k0 + 1.0)) -
                             0.5 * k0 * std::log(static_cast<double>(sphere_dim)) -
                             std::log(static_cast<double>(n));
    return std::exp(log_const) * sum;
}

double gamma_constant(const WeightScheme& scheme, int d) {
    const double v1 = scheme.weight(1, d);
    const double sig = sigma_n(scheme, d);  // throws on degenerate schemes
    // sigma_n = sqrt(2 sum v^4 d_{k,d}), so sqrt(2) * (sum)^(1/2) = sigma_n.
    return std::sqrt(static_cast<double>(d)) * v1 * v1 / sig;
}

}  // namespace sphstat::sobolev
