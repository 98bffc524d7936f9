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

#include <stdexcept>

namespace sphstat::specfun {

/// Raised by gegenbauer_eval when the recurrence leaves the representable
/// range (|C| > 1e300) before the requested degree is reached.
class truncation_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Degree k and index lambda = (d-1)/2 of a Gegenbauer polynomial.
/// The circle (d = 1) is carried as an explicit Chebyshev flag rather than
/// as lambda = 0, which lies outside the recurrence's validity.
struct GegenbauerIndex {
    int degree = 0;
    double lambda = 0.0;
    bool chebyshev = false;

    /// Index for the sphere S^d (lambda = (d-1)/2; Chebyshev branch at d=1).
    static GegenbauerIndex for_sphere(int degree, int sphere_dim);
};

double log_gamma(double x);
double digamma(double x);
double trigamma(double x);
double log_binomial(double n, double k);

/// Regularized lower incomplete gamma P(a, x).
double reg_incomplete_gamma(double a, double x);
/// x such that P(a, x) = u.
double inverse_reg_incomplete_gamma(double a, double u);

/// Regularized incomplete beta I_x(a, b).
double reg_incomplete_beta(double a, double b, double x);

double normal_cdf(double z);
/// Upper tail 1 - Phi(z), computed without cancellation.
double normal_sf(double z);
double normal_quantile(double u);
double normal_pdf(double z);

double chi_squared_cdf(double x, double dof);
double chi_squared_quantile(double u, double dof);
/// CDF of Snedecor's F with (d1, d2) degrees of freedom.
double f_cdf(double x, double d1, double d2);
/// Log density of the F distribution, used by the Student radius MLE.
double f_log_pdf(double x, double d1, double d2);
/// CDF of Gamma(shape, scale).
double gamma_cdf(double x, double shape, double scale);
double gamma_quantile(double u, double shape, double scale);

/// C_k^lambda(x) by the three-term recurrence; 2*cos(k*acos(x)) on the
/// Chebyshev branch. Inputs with |x| in (1, 1+1e-12] are clamped to +-1.
double gegenbauer_eval(const GegenbauerIndex& idx, double x);

/// Dimension d_{k,d} of the space of degree-k spherical harmonics on S^d.
double harmonic_dim(int k, int d);
double log_harmonic_dim(int k, int d);

/// Squared L2 norm c_{k,d} of C_k^{(d-1)/2} under the weight (1-x^2)^{d/2-1}.
double gegenbauer_norm(int k, int d);
double log_gegenbauer_norm(int k, int d);

/// Surface area of S^d.
double surface_area(int d);
double log_surface_area(int d);

}  // namespace sphstat::specfun
