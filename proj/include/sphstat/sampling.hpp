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
#include <string>
#include <variant>

#include "sphstat/rng.hpp"
#include "sphstat/sphere_sample.hpp"

namespace sphstat::sampling {

/// Draws a cosine in [-1, 1]; the v-component of the tangent-normal split.
using CosineSampler = std::function<double(Rng&)>;

/// One uniform point on S^(ambient_dim - 1).
Eigen::VectorXd random_unit_vector(Rng& rng, int ambient_dim);

/// n iid uniform points on S^d (Gaussian rows, normalized).
SphereSample uniform_sphere(Rng& rng, long n, int d);

/// n iid von Mises--Fisher points with location mu (unit, in R^D) and
/// concentration kappa >= 0, by envelope rejection of the cosine component
/// composed with a uniform tangent direction. kappa = 0 falls through to the
/// uniform path bit-for-bit.
SphereSample sample_vmf(Rng& rng, long n, const Eigen::VectorXd& mu, double kappa);

/// Envelope-rejection bookkeeping for the vMF cosine sampler, accumulated
/// per thread: proposals made and draws accepted since the last reset.
struct VmfAcceptanceStats {
    long long proposals = 0;
    long long accepted = 0;

    double rate() const {
        return proposals > 0 ? static_cast<double>(accepted) / proposals : 0.0;
    }
};
VmfAcceptanceStats vmf_acceptance_stats();
void reset_vmf_acceptance_stats();

/// Integrated vMF on S^d: one uniform latent location per call, then n iid
/// vMF draws around it. Mixing the location uniformly is equivalent to the
/// Haar mixture over rotations of a fixed location, because a uniform
/// location composed with any rotation stays uniform; this avoids building
/// (d+1)x(d+1) rotation matrices.
SphereSample sample_integrated_vmf(Rng& rng, long n, int d, double kappa);

/// Cosine density proportional to (1 - v^2)^(d/2 - 1): the law of a single
/// coordinate of a uniform point on S^d. Default g for the tangent models.
CosineSampler projected_uniform_cosine(int sphere_dim);

/// Tangent vMF on S^(D-1) about theta (unit, in R^D): X = v theta +
/// sqrt(1 - v^2) G_theta U with v ~ g and U ~ vMF(mu, kappa) on S^(D-2),
/// drawn independently. mu lives in R^(D-1), the sign space.
SphereSample sample_tangent_vmf(Rng& rng, long n, const Eigen::VectorXd& theta,
                                const CosineSampler& g, const Eigen::VectorXd& mu,
                                double kappa);

/// Integrated variant: the sign location mu is redrawn uniformly per call.
SphereSample sample_integrated_tangent_vmf(Rng& rng, long n,
                                           const Eigen::VectorXd& theta,
                                           const CosineSampler& g, double kappa);

/// One draw from the totally skewed positive stable law
/// S(beta/2, 1, 2 gamma0^2 cos(pi beta / 4)^(2/beta), 0), 0 < beta < 2,
/// via the Chambers--Mallows--Stuck transform.
double positive_stable_draw(Rng& rng, double beta, double gamma0);
Eigen::VectorXd positive_stable(Rng& rng, long n, double beta, double gamma0);

// --- experiment model roster -------------------------------------------------

/// Law of the squared radius multiplying a direction in product models.
/// Radii are emitted as square roots of these draws, so e.g. Chi2{d} is the
/// radial part of a standard d-normal.
struct SquaredRadiusLaw {
    enum class Kind { Chi2, Gamma, ScaledF, Stable, AbsCauchy, AbsStudent };
    Kind kind = Kind::Chi2;
    double a = 1.0;  // Chi2: df; Gamma: shape; ScaledF: multiplier m; Stable: beta;
                     // AbsCauchy: location; AbsStudent: df
    double b = 1.0;  // Gamma: scale; ScaledF: nu; Stable: gamma0; AbsCauchy: scale

    double draw(Rng& rng) const;
    std::string describe() const;
};

struct UniformSphereModel {
    int sphere_dim;  // points on S^sphere_dim in R^(sphere_dim+1)
};

struct VmfModel {
    Eigen::VectorXd mu;
    double kappa;
};

struct IntegratedVmfModel {
    int sphere_dim;
    double kappa;
};

struct TangentVmfModel {
    Eigen::VectorXd theta;
    Eigen::VectorXd mu;  // in R^(D-1)
    double kappa;
};

struct IntegratedTangentVmfModel {
    Eigen::VectorXd theta;
    double kappa;
};

/// Centered normal with diagonal covariance.
struct MvNormalModel {
    Eigen::VectorXd variances;
};

/// Centered multivariate t with scale * identity.
struct MvtModel {
    int dim;
    double nu;
    double scale = 1.0;
};

/// Skew-t by hidden truncation: (U0, U) joint normal with cross-covariance
/// delta = Omega xi / sqrt(1 + xi' Omega xi), reflected by the sign of U0,
/// then divided by sqrt(W / nu), W ~ chi^2_nu. xi = 0 reduces exactly to
/// t_nu(Omega).
struct SkewTModel {
    double nu;
    Eigen::MatrixXd omega;
    Eigen::VectorXd xi;
};

/// Dependent multivariate normal: (Z, Y) joint normal with cov(Z, Y_i) =
/// rho^i, output (Y/||Y||) * sqrt(F_chi2_d^{-1}(Phi(Z))). Marginals match a
/// standard d-normal's radius and direction; rho > 0 couples them.
struct DmnModel {
    int dim;
    double rho;
};

/// Direction drawn from a base model, scaled by the square root of an
/// independent squared-radius draw.
struct ProductModel {
    enum class Base { Vmf, Gaussian, Dmn };
    Base base = Base::Vmf;
    int dim = 2;          // ambient dimension of the output vectors
    double kappa = 0.0;   // Vmf base: concentration about e_1
    double rho = 0.0;     // Dmn base
    SquaredRadiusLaw radial2;
};

using ModelSpec =
    std::variant<UniformSphereModel, VmfModel, IntegratedVmfModel, TangentVmfModel,
                 IntegratedTangentVmfModel, MvNormalModel, MvtModel, SkewTModel,
                 DmnModel, ProductModel>;

/// n rows from the model, in its ambient dimension.
Eigen::MatrixXd draw_matrix(Rng& rng, const ModelSpec& spec, long n);

/// Ambient dimension of the model's output vectors.
int ambient_dim(const ModelSpec& spec);

/// True for models whose rows are unit vectors.
bool is_sphere_valued(const ModelSpec& spec);

std::string describe(const ModelSpec& spec);

}  // namespace sphstat::sampling
