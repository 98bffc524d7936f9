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

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphstat/rng.hpp"

namespace sphstat::radial {

class estimation_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Anderson--Darling A^2 against a fully specified CDF. Transformed values
/// are clamped to [1e-300, 1 - 1e-16] before taking logs; ties are legal.
double ad_statistic(const Eigen::VectorXd& values,
                    const std::function<double(double)>& cdf);

/// A^2 of probability-integral-transformed values already in [0, 1].
double ad_statistic_from_uniforms(std::vector<double> uniforms);

/// Asymptotic null CDF of A^2, interpolated from a Monte Carlo table
/// (see tools/fa_table_gen). The upper tail beyond the last knot is extended
/// exponentially with the rate fitted from the table's own tail.
double ad_limit_cdf(double z);
/// 1 - ad_limit_cdf(z), with the same tail extension.
double ad_limit_upper_tail(double z);

/// Monotone interpolation table for the limit law of A^2.
class AdLimitTable {
   public:
    static const AdLimitTable& builtin();
    static AdLimitTable from_file(const std::string& path);
    AdLimitTable(std::vector<double> z, std::vector<double> cdf);

    double cdf(double z) const;
    double upper_tail(double z) const;
    std::size_t knots() const { return z_.size(); }

   private:
    std::vector<double> z_;
    std::vector<double> cdf_;
    double tail_rate_ = -0.5;  // d/dz log(1 - F) past the last knot
};

struct GammaParams {
    double shape = 1.0;
    double scale = 1.0;
};

/// Gamma MLE: solves log(shape) - digamma(shape) = log(mean) - mean(log) by
/// safeguarded Newton; scale = mean / shape. Rejects degenerate input.
GammaParams mle_gamma(const Eigen::VectorXd& squared_values);

/// Student degrees of freedom via the radial likelihood: maximizes the
/// F_{dim,nu} log-likelihood of r^2/dim over nu in [0.1, 1000]
/// (golden-section on log nu).
double mle_student_nu(const Eigen::VectorXd& radii, int dim);

namespace detail {
struct StableMixingCache;
}

/// A radial null family: CDF of the radius, a sampler, and optionally a
/// maximum-likelihood estimator for its free parameters.
///
/// Families (dim = ambient Euclidean dimension):
///   normal(dim):            r^2 ~ chi^2_dim
///   student(dim, nu):       r^2 / dim ~ F_{dim, nu}
///   stable(dim, beta, g0):  r^2 ~ A * T, A positive stable, T ~ chi^2_dim
///   gamma(shape, scale):    r^2 ~ Gamma(shape, scale)
/// student_estimated / gamma_estimated leave the parameters free, to be
/// fitted from data (the composite case).
class RadialNull {
   public:
    static RadialNull normal(int dim);
    static RadialNull student(int dim, double nu);
    static RadialNull student_estimated(int dim);
    static RadialNull stable(int dim, double beta, double gamma0 = 1.0);
    static RadialNull gamma(double shape, double scale);
    static RadialNull gamma_estimated();

    /// P(R <= r) under the null. Stable uses adaptive quadrature of the
    /// conditional chi-square CDF against the mixing density (relative
    /// error ~1e-7); the others are closed forms over specfun.
    double cdf(double r) const;

    /// One radius draw from the null.
    double sample_radius(Rng& rng) const;

    bool has_estimator() const { return estimable_; }

    /// Family with parameters estimated from the radii (identity for fixed
    /// families). Throws estimation_error when the fit fails.
    RadialNull fitted(const Eigen::VectorXd& radii) const;

    std::string describe() const;

    int dim() const { return dim_; }
    double student_nu() const { return nu_; }
    GammaParams gamma_params() const { return {shape_, scale_}; }

   private:
    enum class Family { Normal, Student, Stable, Gamma };

    RadialNull(Family family) : family_(family) {}

    void require_concrete() const;

    Family family_;
    int dim_ = 0;
    double nu_ = 0.0;
    double beta_ = 1.0;
    double gamma0_ = 1.0;
    double shape_ = 0.0;
    double scale_ = 0.0;
    bool estimable_ = false;
    bool concrete_ = true;  // false until estimated families are fitted

    std::shared_ptr<const detail::StableMixingCache> stable_cache_;
};

/// Anderson--Darling statistic of the radii against a radial null family.
double ad_statistic(const Eigen::VectorXd& radii, const RadialNull& null);

struct BootstrapConfig {
    int replicates = 500;
    RngStream rng;
    /// Bootstrap replicate j draws from stream rng.stream_index +
    /// (j+1) * stream_stride; the Monte Carlo harness sets the stride to its
    /// replicate count so inner and outer streams never collide.
    std::uint64_t stream_stride = 1;
};

struct BootstrapResult {
    double p_value = 1.0;
    double observed_statistic = 0.0;
    /// Replicates whose re-estimation failed twice; each is counted as
    /// exceeding the observed statistic (conservative) and logged here.
    int estimation_failures = 0;
};

/// Parametric bootstrap p-value for a composite radial null: estimate the
/// parameters, compute A_n under the estimate, redraw B samples from the
/// fitted null, re-estimate and recompute on each, and report the
/// proportion of bootstrap statistics exceeding A_n. Replicates draw from
/// per-index streams, so the result does not depend on evaluation order.
BootstrapResult bootstrap_pvalue(const Eigen::VectorXd& radii, const RadialNull& family,
                                 const BootstrapConfig& cfg);

}  // namespace sphstat::radial
