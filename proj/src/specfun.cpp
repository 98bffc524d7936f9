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

#include "sphstat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sphstat::specfun {

namespace {

constexpr double kOverflowGuard = 1e300;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

bool finite(double x) { return std::isfinite(x); }

// Series expansion of P(a, x), valid and fast for x < a + 1.
double incomplete_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    throw std::runtime_error("incomplete gamma series failed to converge");
}

// Modified Lentz continued fraction for Q(a, x), x >= a + 1.
double incomplete_gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    throw std::runtime_error("incomplete gamma continued fraction failed to converge");
}

// Continued fraction core of the incomplete beta (Numerical Recipes form).
double incomplete_beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction failed to converge");
}

}  // namespace

GegenbauerIndex GegenbauerIndex::for_sphere(int degree, int sphere_dim) {
    require(degree >= 0, "GegenbauerIndex: degree must be >= 0");
    require(sphere_dim >= 1, "GegenbauerIndex: sphere dimension must be >= 1");
    GegenbauerIndex idx;
    idx.degree = degree;
    if (sphere_dim == 1) {
        idx.chebyshev = true;
        idx.lambda = 0.0;
    } else {
        idx.lambda = 0.5 * (sphere_dim - 1);
    }
    return idx;
}

double log_gamma(double x) {
    require(finite(x) && x > 0.0, "log_gamma: x must be finite and > 0");
    return std::lgamma(x);
}

double digamma(double x) {
    require(finite(x) && x > 0.0, "digamma: x must be finite and > 0");
    double result = 0.0;
    // Push the argument above 10 where the asymptotic series is accurate.
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2n} / (2n x^{2n})
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 -
                      inv2 * (1.0 / 120.0 -
                              inv2 * (1.0 / 252.0 -
                                      inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return result;
}

double trigamma(double x) {
    require(finite(x) && x > 0.0, "trigamma: x must be finite and > 0");
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += inv * (1.0 +
                     inv * (0.5 +
                            inv * (1.0 / 6.0 -
                                   inv2 * (1.0 / 30.0 -
                                           inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0))))));
    return result;
}

double log_binomial(double n, double k) {
    require(n >= 0.0 && k >= 0.0 && k <= n, "log_binomial: need 0 <= k <= n");
    if (k == 0.0 || k == n) return 0.0;
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double reg_incomplete_gamma(double a, double x) {
    require(finite(a) && a > 0.0, "reg_incomplete_gamma: a must be > 0");
    require(finite(x) && x >= 0.0, "reg_incomplete_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return incomplete_gamma_series(a, x);
    return 1.0 - incomplete_gamma_cf(a, x);
}

double inverse_reg_incomplete_gamma(double a, double u) {
    require(finite(a) && a > 0.0, "inverse_reg_incomplete_gamma: a must be > 0");
    require(finite(u) && u >= 0.0 && u <= 1.0,
            "inverse_reg_incomplete_gamma: u must be in [0,1]");
    if (u == 0.0) return 0.0;
    if (u == 1.0) return std::numeric_limits<double>::infinity();

    // Starting point: Wilson--Hilferty in the bulk, the small-x expansion
    // P(a,x) ~ x^a / (a Gamma(a)) deep in the left tail (where the solution
    // can be orders of magnitude below 1).
    const double log_norm = -log_gamma(a);
    double x;
    const double small_tail_log_x =
        (std::log(u) + std::log(a) - log_norm) / a;  // log of the tail guess
    if (u < 0.5 && small_tail_log_x < std::log(0.1 * (a + 1.0))) {
        x = std::exp(small_tail_log_x);
    } else {
        const double z = normal_quantile(u);
        const double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
        x = a * t * t * t;
        if (!(x > 0.0) || !finite(x)) x = a;
    }

    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 300; ++iter) {
        const double f = reg_incomplete_gamma(a, x) - u;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        if (std::fabs(f) <= 1e-13 * u + 1e-300) break;
        const double log_pdf = log_norm + (a - 1.0) * std::log(x) - x;
        double next = x - f / std::exp(log_pdf);
        if (!(next > lo && next < hi)) {
            // geometric bisection keeps progress even when the bracket spans
            // many orders of magnitude
            if (std::isinf(hi))
                next = 2.0 * x;
            else if (lo == 0.0)
                next = 0.5 * hi;
            else
                next = std::sqrt(lo * hi);
        }
        if (std::fabs(next - x) <= 1e-14 * x) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

double reg_incomplete_beta(double a, double b, double x) {
    require(finite(a) && a > 0.0 && finite(b) && b > 0.0,
            "reg_incomplete_beta: a and b must be > 0");
    require(finite(x) && x >= 0.0 && x <= 1.0,
            "reg_incomplete_beta: x must be in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    if (x < (a + 1.0) / (a + b + 2.0))
        return std::exp(log_front) * incomplete_beta_cf(a, b, x) / a;
    return 1.0 - std::exp(log_front) * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double normal_sf(double z) { return 0.5 * std::erfc(z * M_SQRT1_2); }

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double normal_quantile(double u) {
    require(finite(u) && u > 0.0 && u < 1.0, "normal_quantile: u must be in (0,1)");

    // Acklam's rational approximation, then one Newton polish through erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double z;
    if (u < p_low) {
        const double q = std::sqrt(-2.0 * std::log(u));
        z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - p_low) {
        const double q = u - 0.5;
        const double r = q * q;
        z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-u));
        z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double err = normal_cdf(z) - u;
    z -= err / normal_pdf(z);
    return z;
}

double chi_squared_cdf(double x, double dof) {
    require(dof > 0.0, "chi_squared_cdf: dof must be > 0");
    require(x >= 0.0, "chi_squared_cdf: x must be >= 0");
    return reg_incomplete_gamma(0.5 * dof, 0.5 * x);
}

double chi_squared_quantile(double u, double dof) {
    require(dof > 0.0, "chi_squared_quantile: dof must be > 0");
    return 2.0 * inverse_reg_incomplete_gamma(0.5 * dof, u);
}

double f_cdf(double x, double d1, double d2) {
    require(d1 > 0.0 && d2 > 0.0, "f_cdf: degrees of freedom must be > 0");
    if (x <= 0.0) return 0.0;
    return reg_incomplete_beta(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

double f_log_pdf(double x, double d1, double d2) {
    require(d1 > 0.0 && d2 > 0.0, "f_log_pdf: degrees of freedom must be > 0");
    require(x > 0.0, "f_log_pdf: x must be > 0");
    const double h1 = 0.5 * d1;
    const double h2 = 0.5 * d2;
    return log_gamma(h1 + h2) - log_gamma(h1) - log_gamma(h2) +
           h1 * std::log(d1 / d2) + (h1 - 1.0) * std::log(x) -
           (h1 + h2) * std::log1p(d1 * x / d2);
}

double gamma_cdf(double x, double shape, double scale) {
    require(shape > 0.0 && scale > 0.0, "gamma_cdf: shape and scale must be > 0");
    if (x <= 0.0) return 0.0;
    return reg_incomplete_gamma(shape, x / scale);
}

double gamma_quantile(double u, double shape, double scale) {
    return scale * inverse_reg_incomplete_gamma(shape, u);
}

double gegenbauer_eval(const GegenbauerIndex& idx, double x) {
    require(idx.degree >= 0, "gegenbauer_eval: degree must be >= 0");
    require(finite(x), "gegenbauer_eval: x must be finite");
    if (std::fabs(x) > 1.0) {
        require(std::fabs(x) <= 1.0 + 1e-12,
                "gegenbauer_eval: x must lie in [-1, 1]");
        x = std::copysign(1.0, x);
    }
    const int k = idx.degree;
    if (idx.chebyshev) return 2.0 * std::cos(k * std::acos(x));

    const double lambda = idx.lambda;
    require(lambda > 0.0, "gegenbauer_eval: lambda must be > 0 (use the Chebyshev flag for d=1)");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double curr = 2.0 * lambda * x;
    for (int j = 2; j <= k; ++j) {
        const double next =
            (2.0 * x * (j + lambda - 1.0) * curr - (j + 2.0 * lambda - 2.0) * prev) / j;
        if (std::fabs(next) > kOverflowGuard)
            throw truncation_error(
                "gegenbauer_eval: recurrence exceeded representable range at degree " +
                std::to_string(j));
        prev = curr;
        curr = next;
    }
    return curr;
}

double log_harmonic_dim(int k, int d) {
    require(k >= 1, "harmonic_dim: k must be >= 1");
    require(d >= 1, "harmonic_dim: d must be >= 1");
    if (d == 1) return std::log(2.0);  // span of cos(k t), sin(k t)
    // binom(d+k-2, d-1) + binom(d+k-1, d-1), accumulated in log scale.
    const double la = log_binomial(d + k - 2, d - 1);
    const double lb = log_binomial(d + k - 1, d - 1);
    const double m = std::max(la, lb);
    return m + std::log(std::exp(la - m) + std::exp(lb - m));
}

double harmonic_dim(int k, int d) { return std::exp(log_harmonic_dim(k, d)); }

double log_gegenbauer_norm(int k, int d) {
    require(k >= 1, "gegenbauer_norm: k must be >= 1");
    require(d >= 2, "gegenbauer_norm: d must be >= 2");
    return (3.0 - d) * std::log(2.0) + std::log(M_PI) + log_gamma(d + k - 1.0) -
           std::log(d + 2.0 * k - 1.0) - log_gamma(k + 1.0) -
           2.0 * log_gamma(0.5 * (d - 1.0));
}

double gegenbauer_norm(int k, int d) { return std::exp(log_gegenbauer_norm(k, d)); }

double log_surface_area(int d) {
    require(d >= 1, "surface_area: d must be >= 1");
    return std::log(2.0) + 0.5 * (d + 1.0) * std::log(M_PI) -
           log_gamma(0.5 * (d + 1.0));
}

double surface_area(int d) { return std::exp(log_surface_area(d)); }

}  // namespace sphstat::specfun
