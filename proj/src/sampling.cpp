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

#include "sphstat/sampling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sphstat/specfun.hpp"

namespace sphstat::sampling {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

void require_unit(const Eigen::VectorXd& v, const char* what) {
    if (std::fabs(v.norm() - 1.0) > 1e-9)
        throw std::domain_error(std::string(what) + " must be a unit vector");
}

// Householder reflection mapping theta to -sign(theta_0) e_1; applying it to
// (0, u) realizes an orthonormal complement of theta acting on u.
struct HouseholderFrame {
    Eigen::VectorXd w;
    double two_over_wsq;

    explicit HouseholderFrame(const Eigen::VectorXd& theta) {
        const double s = theta(0) >= 0.0 ? 1.0 : -1.0;
        w = theta;
        w(0) += s;
        two_over_wsq = 2.0 / w.squaredNorm();
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        return x - (two_over_wsq * w.dot(x)) * w;
    }
};

thread_local VmfAcceptanceStats vmf_stats;

// Cosine component of a vMF draw on S^(m-1) in R^m (Wood's envelope
// rejection with a symmetric beta proposal).
double vmf_cosine(Rng& rng, int m, double kappa) {
    const double dim = m - 1.0;
    const double b = (-2.0 * kappa + std::sqrt(4.0 * kappa * kappa + dim * dim)) / dim;
    const double x0 = (1.0 - b) / (1.0 + b);
    const double c = kappa * x0 + dim * std::log(1.0 - x0 * x0);
    for (;;) {
        ++vmf_stats.proposals;
        const double z = rng.beta(0.5 * dim, 0.5 * dim);
        const double w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
        const double u = rng.uniform_pos();
        if (kappa * w + dim * std::log(1.0 - x0 * w) - c >= std::log(u)) {
            ++vmf_stats.accepted;
            return w;
        }
    }
}

Eigen::MatrixXd gaussian_matrix(Rng& rng, long n, int cols) {
    Eigen::MatrixXd m(n, cols);
    for (long i = 0; i < n; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

}  // namespace

VmfAcceptanceStats vmf_acceptance_stats() { return vmf_stats; }

void reset_vmf_acceptance_stats() { vmf_stats = VmfAcceptanceStats{}; }

Eigen::VectorXd random_unit_vector(Rng& rng, int ambient_dim) {
    require(ambient_dim >= 1, "random_unit_vector: ambient dimension must be >= 1");
    Eigen::VectorXd v(ambient_dim);
    double norm;
    do {
        for (int j = 0; j < ambient_dim; ++j) v(j) = rng.normal();
        norm = v.norm();
    } while (!(norm > 0.0));
    return v / norm;
}

SphereSample uniform_sphere(Rng& rng, long n, int d) {
    require(n >= 1, "uniform_sphere: n must be >= 1");
    require(d >= 1, "uniform_sphere: d must be >= 1");
    Eigen::MatrixXd data(n, d + 1);
    for (long i = 0; i < n; ++i) data.row(i) = random_unit_vector(rng, d + 1);
    return SphereSample::unchecked(std::move(data));
}

SphereSample sample_vmf(Rng& rng, long n, const Eigen::VectorXd& mu, double kappa) {
    require(n >= 1, "sample_vmf: n must be >= 1");
    require(kappa >= 0.0, "sample_vmf: kappa must be >= 0");
    const int m = static_cast<int>(mu.size());
    require(m >= 2, "sample_vmf: ambient dimension must be >= 2");
    require_unit(mu, "sample_vmf: mu");
    if (kappa == 0.0) return uniform_sphere(rng, n, m - 1);

    const HouseholderFrame frame(mu);
    Eigen::MatrixXd data(n, m);
    Eigen::VectorXd tangent(m);
    for (long i = 0; i < n; ++i) {
        const double w = vmf_cosine(rng, m, kappa);
        // uniform tangent direction orthogonal to mu, via the complement frame
        tangent(0) = 0.0;
        if (m == 2) {
            tangent(1) = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        } else {
            tangent.tail(m - 1) = random_unit_vector(rng, m - 1);
        }
        data.row(i) = w * mu + std::sqrt(std::max(0.0, 1.0 - w * w)) * frame.apply(tangent);
        data.row(i) /= data.row(i).norm();
    }
    return SphereSample::unchecked(std::move(data));
}

SphereSample sample_integrated_vmf(Rng& rng, long n, int d, double kappa) {
    require(d >= 1, "sample_integrated_vmf: d must be >= 1");
    require(kappa >= 0.0, "sample_integrated_vmf: kappa must be >= 0");
    if (kappa == 0.0) return uniform_sphere(rng, n, d);
    const Eigen::VectorXd location = random_unit_vector(rng, d + 1);
    return sample_vmf(rng, n, location, kappa);
}

CosineSampler projected_uniform_cosine(int sphere_dim) {
    require(sphere_dim >= 1, "projected_uniform_cosine: d must be >= 1");
    const double half = 0.5 * sphere_dim;
    return [half](Rng& rng) { return 2.0 * rng.beta(half, half) - 1.0; };
}

SphereSample sample_tangent_vmf(Rng& rng, long n, const Eigen::VectorXd& theta,
                                const CosineSampler& g, const Eigen::VectorXd& mu,
                                double kappa) {
    require(n >= 1, "sample_tangent_vmf: n must be >= 1");
    const int big_d = static_cast<int>(theta.size());
    require(big_d >= 3, "sample_tangent_vmf: ambient dimension must be >= 3");
    require_unit(theta, "sample_tangent_vmf: theta");
    require(mu.size() == big_d - 1, "sample_tangent_vmf: mu must live in R^(D-1)");
    require_unit(mu, "sample_tangent_vmf: mu");
    require(kappa >= 0.0, "sample_tangent_vmf: kappa must be >= 0");

    const HouseholderFrame frame(theta);
    const SphereSample signs = sample_vmf(rng, n, mu, kappa);
    Eigen::MatrixXd data(n, big_d);
    Eigen::VectorXd lifted(big_d);
    for (long i = 0; i < n; ++i) {
        double v = g(rng);
        require(v >= -1.0 && v <= 1.0, "sample_tangent_vmf: g drew outside [-1,1]");
        lifted(0) = 0.0;
        lifted.tail(big_d - 1) = signs.data().row(i);
        data.row(i) = v * theta + std::sqrt(std::max(0.0, 1.0 - v * v)) * frame.apply(lifted);
        data.row(i) /= data.row(i).norm();
    }
    return SphereSample::unchecked(std::move(data));
}

SphereSample sample_integrated_tangent_vmf(Rng& rng, long n,
                                           const Eigen::VectorXd& theta,
                                           const CosineSampler& g, double kappa) {
    const int big_d = static_cast<int>(theta.size());
    require(big_d >= 3, "sample_integrated_tangent_vmf: ambient dimension must be >= 3");
    const Eigen::VectorXd mu = random_unit_vector(rng, big_d - 1);
    return sample_tangent_vmf(rng, n, theta, g, mu, kappa);
}

double positive_stable_draw(Rng& rng, double beta, double gamma0) {
    require(beta > 0.0 && beta < 2.0, "positive_stable: beta must be in (0,2)");
    require(gamma0 > 0.0, "positive_stable: gamma0 must be > 0");
    const double alpha = 0.5 * beta;
    const double scale =
        2.0 * gamma0 * gamma0 * std::pow(std::cos(0.25 * M_PI * beta), 2.0 / beta);
    // Chambers--Mallows--Stuck for the standardized S(alpha, 1, 1, 0) law,
    // totally skewed, alpha < 1.
    const double shift = M_PI_2;  // arctan(tan(pi alpha / 2)) / alpha at skewness 1
    const double factor = std::pow(std::cos(M_PI_2 * alpha), -1.0 / alpha);
    const double v = M_PI * (rng.uniform_pos() - 0.5);
    const double w = rng.exponential();
    const double x = factor * std::sin(alpha * (v + shift)) /
                     std::pow(std::cos(v), 1.0 / alpha) *
                     std::pow(std::cos(v - alpha * (v + shift)) / w, (1.0 - alpha) / alpha);
    return scale * x;
}

Eigen::VectorXd positive_stable(Rng& rng, long n, double beta, double gamma0) {
    require(n >= 1, "positive_stable: n must be >= 1");
    Eigen::VectorXd out(n);
    for (long i = 0; i < n; ++i) out(i) = positive_stable_draw(rng, beta, gamma0);
    return out;
}

double SquaredRadiusLaw::draw(Rng& rng) const {
    switch (kind) {
        case Kind::Chi2:
            return rng.chi_squared(a);
        case Kind::Gamma:
            return rng.gamma(a, b);
        case Kind::ScaledF: {
            // a * F_{a, b}
            const double num = rng.chi_squared(a) / a;
            const double den = rng.chi_squared(b) / b;
            return a * num / den;
        }
        case Kind::Stable:
            return positive_stable_draw(rng, a, b);
        case Kind::AbsCauchy:
            return std::fabs(rng.cauchy(a, b));
        case Kind::AbsStudent:
            return std::fabs(rng.student_t(a));
    }
    throw std::logic_error("SquaredRadiusLaw: unknown kind");
}

std::string SquaredRadiusLaw::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Chi2: os << "chi2(" << a << ")"; break;
        case Kind::Gamma: os << "gamma(" << a << "," << b << ")"; break;
        case Kind::ScaledF: os << a << "*F(" << a << "," << b << ")"; break;
        case Kind::Stable: os << "stable(" << a << "," << b << ")"; break;
        case Kind::AbsCauchy: os << "|cauchy(" << a << "," << b << ")|"; break;
        case Kind::AbsStudent: os << "|t(" << a << ")|"; break;
    }
    return os.str();
}

namespace {

Eigen::MatrixXd draw_mvnormal(Rng& rng, const MvNormalModel& m, long n) {
    const int d = static_cast<int>(m.variances.size());
    require(d >= 1 && (m.variances.array() > 0.0).all(),
            "mvnormal: variances must be positive");
    Eigen::MatrixXd out = gaussian_matrix(rng, n, d);
    const Eigen::VectorXd sd = m.variances.array().sqrt();
    out.array().rowwise() *= sd.transpose().array();
    return out;
}

Eigen::MatrixXd draw_mvt(Rng& rng, const MvtModel& m, long n) {
    require(m.nu > 0.0, "mvt: nu must be > 0");
    require(m.scale > 0.0, "mvt: scale must be > 0");
    Eigen::MatrixXd out = gaussian_matrix(rng, n, m.dim);
    const double sd = std::sqrt(m.scale);
    for (long i = 0; i < n; ++i) {
        const double w = rng.chi_squared(m.nu);
        out.row(i) *= sd * std::sqrt(m.nu / w);
    }
    return out;
}

Eigen::MatrixXd draw_skew_t(Rng& rng, const SkewTModel& m, long n) {
    const int d = static_cast<int>(m.omega.rows());
    require(m.nu > 0.0, "skew_t: nu must be > 0");
    require(m.omega.cols() == d && m.xi.size() == d,
            "skew_t: omega must be d x d and xi of length d");
    const Eigen::VectorXd delta =
        (m.omega * m.xi) / std::sqrt(1.0 + m.xi.dot(m.omega * m.xi));
    Eigen::MatrixXd augmented(d + 1, d + 1);
    augmented(0, 0) = 1.0;
    augmented.block(0, 1, 1, d) = delta.transpose();
    augmented.block(1, 0, d, 1) = delta;
    augmented.block(1, 1, d, d) = m.omega;
    const Eigen::LLT<Eigen::MatrixXd> llt(augmented);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("skew_t: augmented scale matrix is not positive definite");
    const Eigen::MatrixXd chol = llt.matrixL();

    Eigen::MatrixXd out(n, d);
    Eigen::VectorXd z(d + 1);
    for (long i = 0; i < n; ++i) {
        for (int j = 0; j <= d; ++j) z(j) = rng.normal();
        const Eigen::VectorXd joint = chol * z;
        const double sign = joint(0) > 0.0 ? 1.0 : -1.0;
        const double w = rng.chi_squared(m.nu);
        out.row(i) = sign * std::sqrt(m.nu / w) * joint.tail(d).transpose();
    }
    return out;
}

Eigen::MatrixXd draw_dmn(Rng& rng, const DmnModel& m, long n) {
    require(m.dim >= 1, "dmn: dimension must be >= 1");
    require(m.rho >= 0.0 && m.rho <= 1.0, "dmn: rho must be in [0,1]");
    Eigen::VectorXd rho_vec(m.dim);
    double p = 1.0;
    for (int j = 0; j < m.dim; ++j) {
        p *= m.rho;
        rho_vec(j) = p;
    }
    const double residual = 1.0 - rho_vec.squaredNorm();
    if (!(residual > 0.0))
        throw std::domain_error("dmn: latent covariance is not positive definite");
    const double residual_sd = std::sqrt(residual);

    Eigen::MatrixXd out(n, m.dim);
    Eigen::VectorXd y(m.dim);
    for (long i = 0; i < n; ++i) {
        for (int j = 0; j < m.dim; ++j) y(j) = rng.normal();
        const double z = rho_vec.dot(y) + residual_sd * rng.normal();
        double u = specfun::normal_cdf(z);
        u = std::min(std::max(u, 1e-300), 1.0 - 1e-16);
        const double radius = std::sqrt(specfun::chi_squared_quantile(u, m.dim));
        out.row(i) = (radius / y.norm()) * y.transpose();
    }
    return out;
}

Eigen::MatrixXd draw_product(Rng& rng, const ProductModel& m, long n) {
    require(m.dim >= 2, "product: dimension must be >= 2");
    Eigen::MatrixXd directions;
    switch (m.base) {
        case ProductModel::Base::Vmf: {
            Eigen::VectorXd e1 = Eigen::VectorXd::Zero(m.dim);
            e1(0) = 1.0;
            directions = sample_vmf(rng, n, e1, m.kappa).data();
            break;
        }
        case ProductModel::Base::Gaussian:
            directions = gaussian_matrix(rng, n, m.dim);
            break;
        case ProductModel::Base::Dmn:
            directions = draw_dmn(rng, DmnModel{m.dim, m.rho}, n);
            break;
    }
    for (long i = 0; i < n; ++i)
        directions.row(i) *= std::sqrt(m.radial2.draw(rng));
    return directions;
}

}  // namespace

Eigen::MatrixXd draw_matrix(Rng& rng, const ModelSpec& spec, long n) {
    require(n >= 1, "draw_matrix: n must be >= 1");
    return std::visit(
        [&](const auto& m) -> Eigen::MatrixXd {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformSphereModel>)
                return uniform_sphere(rng, n, m.sphere_dim).data();
            else if constexpr (std::is_same_v<T, VmfModel>)
                return sample_vmf(rng, n, m.mu, m.kappa).data();
            else if constexpr (std::is_same_v<T, IntegratedVmfModel>)
                return sample_integrated_vmf(rng, n, m.sphere_dim, m.kappa).data();
            else if constexpr (std::is_same_v<T, TangentVmfModel>)
                return sample_tangent_vmf(rng, n, m.theta,
                                          projected_uniform_cosine(
                                              static_cast<int>(m.theta.size()) - 1),
                                          m.mu, m.kappa)
                    .data();
            else if constexpr (std::is_same_v<T, IntegratedTangentVmfModel>)
                return sample_integrated_tangent_vmf(
                           rng, n, m.theta,
                           projected_uniform_cosine(static_cast<int>(m.theta.size()) - 1),
                           m.kappa)
                    .data();
            else if constexpr (std::is_same_v<T, MvNormalModel>)
                return draw_mvnormal(rng, m, n);
            else if constexpr (std::is_same_v<T, MvtModel>)
                return draw_mvt(rng, m, n);
            else if constexpr (std::is_same_v<T, SkewTModel>)
                return draw_skew_t(rng, m, n);
            else if constexpr (std::is_same_v<T, DmnModel>)
                return draw_dmn(rng, m, n);
            else
                return draw_product(rng, m, n);
        },
        spec);
}

int ambient_dim(const ModelSpec& spec) {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformSphereModel>)
                return m.sphere_dim + 1;
            else if constexpr (std::is_same_v<T, VmfModel>)
                return static_cast<int>(m.mu.size());
            else if constexpr (std::is_same_v<T, IntegratedVmfModel>)
                return m.sphere_dim + 1;
            else if constexpr (std::is_same_v<T, TangentVmfModel>)
                return static_cast<int>(m.theta.size());
            else if constexpr (std::is_same_v<T, IntegratedTangentVmfModel>)
                return static_cast<int>(m.theta.size());
            else if constexpr (std::is_same_v<T, MvNormalModel>)
                return static_cast<int>(m.variances.size());
            else if constexpr (std::is_same_v<T, MvtModel>)
                return m.dim;
            else if constexpr (std::is_same_v<T, SkewTModel>)
                return static_cast<int>(m.omega.rows());
            else if constexpr (std::is_same_v<T, DmnModel>)
                return m.dim;
            else
                return m.dim;
        },
        spec);
}

bool is_sphere_valued(const ModelSpec& spec) {
    return std::holds_alternative<UniformSphereModel>(spec) ||
           std::holds_alternative<VmfModel>(spec) ||
           std::holds_alternative<IntegratedVmfModel>(spec) ||
           std::holds_alternative<TangentVmfModel>(spec) ||
           std::holds_alternative<IntegratedTangentVmfModel>(spec);
}

std::string describe(const ModelSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformSphereModel>)
                os << "uniform(S^" << m.sphere_dim << ")";
            else if constexpr (std::is_same_v<T, VmfModel>)
                os << "vmf(kappa=" << m.kappa << ", R^" << m.mu.size() << ")";
            else if constexpr (std::is_same_v<T, IntegratedVmfModel>)
                os << "ivmf(kappa=" << m.kappa << ", S^" << m.sphere_dim << ")";
            else if constexpr (std::is_same_v<T, TangentVmfModel>)
                os << "tvmf(kappa=" << m.kappa << ")";
            else if constexpr (std::is_same_v<T, IntegratedTangentVmfModel>)
                os << "itvmf(kappa=" << m.kappa << ")";
            else if constexpr (std::is_same_v<T, MvNormalModel>)
                os << "mvnormal(d=" << m.variances.size() << ")";
            else if constexpr (std::is_same_v<T, MvtModel>)
                os << "mvt(nu=" << m.nu << ", scale=" << m.scale << ", d=" << m.dim << ")";
            else if constexpr (std::is_same_v<T, SkewTModel>)
                os << "skew_t(nu=" << m.nu << ", d=" << m.omega.rows() << ")";
            else if constexpr (std::is_same_v<T, DmnModel>)
                os << "dmn(rho=" << m.rho << ", d=" << m.dim << ")";
            else {
                const char* base = m.base == ProductModel::Base::Vmf
                                       ? "vmf"
                                       : (m.base == ProductModel::Base::Gaussian ? "normal"
                                                                                 : "dmn");
                os << "product(" << base << ", r2=" << m.radial2.describe()
                   << ", d=" << m.dim << ")";
            }
        },
        spec);
    return os.str();
}

}  // namespace sphstat::sampling
