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
#include <string>
#include <utility>

#include "sphstat/radial.hpp"
#include "sphstat/sobolev.hpp"
#include "sphstat/sphere_sample.hpp"

namespace sphstat::symmetry {

/// Orthonormal complement of a unit vector theta in R^D, realized as a
/// Householder reflection rather than a stored D x (D-1) matrix. Any valid
/// complement differs from this one by a rotation of S^(D-2), under which
/// the Sobolev statistic of the signs is invariant.
class TangentFrame {
   public:
    explicit TangentFrame(Eigen::VectorXd theta);

    int ambient_dim() const { return static_cast<int>(theta_.size()); }
    const Eigen::VectorXd& theta() const { return theta_; }

    /// Gamma_theta^T x: the D-1 tangent coordinates of x.
    Eigen::VectorXd project(const Eigen::VectorXd& x) const;

    /// Gamma_theta u: lifts tangent coordinates back to R^D.
    Eigen::VectorXd lift(const Eigen::VectorXd& u) const;

   private:
    Eigen::VectorXd theta_;
    Eigen::VectorXd w_;  // Householder vector mapping theta to -sign(theta_0) e_1
    double two_over_wsq_ = 0.0;
};

/// Row-wise polar split of Euclidean data: unit directions and radii.
/// Reconstruction radii_i * direction_i reproduces the input to 1e-12.
std::pair<SphereSample, Eigen::VectorXd> project_radius(const Eigen::MatrixXd& points);

/// Tangent-normal split of sphere points about theta: multivariate signs
/// u_theta(x) on S^(D-2) and cosines v_theta(x) = x' theta. Rows within
/// 1e-12 of +-theta have no defined sign and raise a domain error naming
/// the row.
std::pair<SphereSample, Eigen::VectorXd> tangent_signs(const SphereSample& sample,
                                                       const Eigen::VectorXd& theta);

/// Sobolev uniformity test of the multivariate signs about theta: the
/// necessary condition of rotational symmetry.
sobolev::TestReport rotsym_test(const SphereSample& sample, const Eigen::VectorXd& theta,
                                const sobolev::WeightScheme& scheme);

/// Outcome of the spherical-symmetry goodness-of-fit pipeline.
struct GofReport {
    double ad_statistic = 0.0;       // A_n on the radii
    double radial_p = 1.0;           // 1 - F_A(A_n), or the bootstrap p-value
    double directional_standardized = 0.0;
    double directional_p = 1.0;      // 1 - Phi(T_n / sigma_n)
    double g_statistic = 0.0;        // -2 [log radial_p + log directional_p]
    double p_value = 1.0;            // chi^2_2 upper tail of g_statistic
    bool composite = false;
    int bootstrap_replicates = 0;
    int bootstrap_failures = 0;
    /// Correlation between radii and directional kernel row sums; a
    /// diagnostic for the independence condition, not part of the decision.
    double radius_kernel_correlation = 0.0;
    long n = 0;
    int ambient_dim = 0;
    std::string null_description;
    std::string scheme_name;
};

/// Fisher combination of the two stage p-values; chi^2_2 upper tail.
double fisher_chi2_pvalue(double g);

/// Simple-null test of a spherically symmetric fit: Anderson--Darling on
/// the radii against the fully specified radial null, Sobolev uniformity on
/// the projected directions, combined through Fisher's statistic.
GofReport gof_simple(const Eigen::MatrixXd& points, const radial::RadialNull& null,
                     const sobolev::WeightScheme& scheme);

/// Composite variant: the radial p-value comes from the parametric
/// bootstrap; the directional stage is unchanged.
GofReport gof_composite(const Eigen::MatrixXd& points, const radial::RadialNull& family,
                        const sobolev::WeightScheme& scheme,
                        const radial::BootstrapConfig& cfg);

}  // namespace sphstat::symmetry
