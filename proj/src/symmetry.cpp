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

#include "sphstat/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "sphstat/specfun.hpp"

namespace sphstat::symmetry {

namespace {

constexpr double kLogFloor = 1e-300;

double safe_log(double p) { return std::log(std::max(p, kLogFloor)); }

// Pearson correlation between radii and the row sums of the directional
// kernel matrix. Emitted as an independence diagnostic only.
double radius_kernel_corr(const Eigen::VectorXd& radii, const Eigen::MatrixXd& gram,
                          const sobolev::WeightScheme& scheme, int sphere_dim) {
    const Eigen::Index n = gram.rows();
    if (n < 3) return 0.0;
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            row_sums(i) += sobolev::psi_kernel(scheme, sphere_dim, gram(i, j));
        }
    const double mr = radii.mean();
    const double ms = row_sums.mean();
    const Eigen::VectorXd cr = radii.array() - mr;
    const Eigen::VectorXd cs = row_sums.array() - ms;
    const double denom = std::sqrt(cr.squaredNorm() * cs.squaredNorm());
    if (!(denom > 0.0)) return 0.0;
    return cr.dot(cs) / denom;
}

GofReport assemble_report(const Eigen::MatrixXd& points,
                          const sobolev::WeightScheme& scheme, double ad_stat,
                          double radial_p) {
    const auto [directions, radii] = project_radius(points);
    const Eigen::MatrixXd gram = directions.gram();
    const sobolev::TestReport directional =
        sobolev::statistic_from_gram(gram, directions.sphere_dim(), scheme);

    GofReport report;
    report.ad_statistic = ad_stat;
    report.radial_p = radial_p;
    report.directional_standardized = directional.standardized;
    report.directional_p = directional.p_value;
    report.g_statistic = -2.0 * (safe_log(radial_p) + safe_log(directional.p_value));
    report.p_value = fisher_chi2_pvalue(report.g_statistic);
    report.radius_kernel_correlation =
        radius_kernel_corr(radii, gram, scheme, directions.sphere_dim());
    report.n = static_cast<long>(points.rows());
    report.ambient_dim = static_cast<int>(points.cols());
    report.scheme_name = scheme.name();
    return report;
}

}  // namespace

TangentFrame::TangentFrame(Eigen::VectorXd theta) : theta_(std::move(theta)) {
    if (theta_.size() < 2)
        throw std::domain_error("TangentFrame: ambient dimension must be >= 2");
    if (std::fabs(theta_.norm() - 1.0) > 1e-9)
        throw std::domain_error("TangentFrame: theta must be a unit vector");
    const double s = theta_(0) >= 0.0 ? 1.0 : -1.0;
    w_ = theta_;
    w_(0) += s;
    two_over_wsq_ = 2.0 / w_.squaredNorm();
}

Eigen::VectorXd TangentFrame::project(const Eigen::VectorXd& x) const {
    if (x.size() != theta_.size())
        throw std::invalid_argument("TangentFrame::project: dimension mismatch");
    const Eigen::VectorXd reflected = x - (two_over_wsq_ * w_.dot(x)) * w_;
    return reflected.tail(theta_.size() - 1);
}

Eigen::VectorXd TangentFrame::lift(const Eigen::VectorXd& u) const {
    if (u.size() != theta_.size() - 1)
        throw std::invalid_argument("TangentFrame::lift: dimension mismatch");
    Eigen::VectorXd padded(theta_.size());
    padded(0) = 0.0;
    padded.tail(theta_.size() - 1) = u;
    return padded - (two_over_wsq_ * w_.dot(padded)) * w_;
}

std::pair<SphereSample, Eigen::VectorXd> project_radius(const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    if (n < 1 || points.cols() < 2)
        throw std::domain_error("project_radius: need n >= 1 points in R^D, D >= 2");
    Eigen::MatrixXd directions(n, points.cols());
    Eigen::VectorXd radii(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double norm = points.row(i).norm();
        if (!(norm > 0.0))
            throw std::domain_error("project_radius: row " + std::to_string(i) +
                                    " has zero norm");
        radii(i) = norm;
        directions.row(i) = points.row(i) / norm;
    }
    return {SphereSample::unchecked(std::move(directions)), std::move(radii)};
}

std::pair<SphereSample, Eigen::VectorXd> tangent_signs(const SphereSample& sample,
                                                       const Eigen::VectorXd& theta) {
    const int big_d = sample.ambient_dim();
    if (theta.size() != big_d)
        throw std::invalid_argument("tangent_signs: theta dimension mismatch");
    if (big_d < 3)
        throw std::domain_error("tangent_signs: signs need ambient dimension >= 3");
    const TangentFrame frame(theta);

    const Eigen::Index n = sample.n();
    Eigen::MatrixXd signs(n, big_d - 1);
    Eigen::VectorXd cosines(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd x = sample.data().row(i);
        cosines(i) = x.dot(theta);
        const Eigen::VectorXd tangent = frame.project(x);
        const double norm = tangent.norm();
        if (norm < 1e-12)
            throw std::domain_error("tangent_signs: row " + std::to_string(i) +
                                    " coincides with +-theta; sign undefined");
        signs.row(i) = tangent / norm;
    }
    return {SphereSample::unchecked(std::move(signs)), std::move(cosines)};
}

sobolev::TestReport rotsym_test(const SphereSample& sample, const Eigen::VectorXd& theta,
                                const sobolev::WeightScheme& scheme) {
    const auto [signs, cosines] = tangent_signs(sample, theta);
    (void)cosines;
    return sobolev::statistic(signs, scheme);
}

double fisher_chi2_pvalue(double g) {
    if (!(g >= 0.0)) throw std::domain_error("fisher_chi2_pvalue: g must be >= 0");
    // Upper tail of the Fisher combination of two p-values, in closed form.
    return std::exp(-0.5 * g) * (1.0 + 0.5 * g);
}

GofReport gof_simple(const Eigen::MatrixXd& points, const radial::RadialNull& null,
                     const sobolev::WeightScheme& scheme) {
    const auto [directions, radii] = project_radius(points);
    (void)directions;
    const double ad_stat =
        radial::ad_statistic(radii, [&](double r) { return null.cdf(r); });
    const double radial_p = radial::ad_limit_upper_tail(ad_stat);
    GofReport report = assemble_report(points, scheme, ad_stat, radial_p);
    report.null_description = null.describe();
    return report;
}

GofReport gof_composite(const Eigen::MatrixXd& points, const radial::RadialNull& family,
                        const sobolev::WeightScheme& scheme,
                        const radial::BootstrapConfig& cfg) {
    const auto [directions, radii] = project_radius(points);
    (void)directions;
    const radial::BootstrapResult boot = radial::bootstrap_pvalue(radii, family, cfg);
    GofReport report =
        assemble_report(points, scheme, boot.observed_statistic, boot.p_value);
    report.composite = true;
    report.bootstrap_replicates = cfg.replicates;
    report.bootstrap_failures = boot.estimation_failures;
    report.null_description = family.describe();
    return report;
}

}  // namespace sphstat::symmetry
