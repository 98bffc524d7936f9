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

#include "sphstat/radial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "sphstat/quadrature.hpp"
#include "sphstat/sampling.hpp"
#include "sphstat/specfun.hpp"

namespace sphstat::radial {

namespace {

constexpr double kUniformFloor = 1e-300;
constexpr double kUniformCeil = 1.0 - 1e-16;

double clamp_uniform(double u) {
    return std::min(std::max(u, kUniformFloor), kUniformCeil);
}

}  // namespace

double ad_statistic_from_uniforms(std::vector<double> uniforms) {
    const std::size_t n = uniforms.size();
    if (n == 0) throw std::domain_error("ad_statistic: empty input");
    std::sort(uniforms.begin(), uniforms.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = clamp_uniform(uniforms[i]);
        const double hi = clamp_uniform(uniforms[n - 1 - i]);
        acc += (2.0 * (i + 1.0) - 1.0) * (std::log(lo) + std::log1p(-hi));
    }
    return -static_cast<double>(n) - acc / static_cast<double>(n);
}

double ad_statistic(const Eigen::VectorXd& values,
                    const std::function<double(double)>& cdf) {
    if (values.size() == 0) throw std::domain_error("ad_statistic: empty input");
    std::vector<double> uniforms(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) uniforms[i] = cdf(values(i));
    return ad_statistic_from_uniforms(std::move(uniforms));
}

// --- F_A interpolation table -------------------------------------------------

// Generated by tools/fa_table_gen; defined in src/fa_table_data.cpp.
namespace fa_data {
extern const double kKnots[][2];
extern const unsigned kKnotCount;
}  // namespace fa_data

AdLimitTable::AdLimitTable(std::vector<double> z, std::vector<double> cdf)
    : z_(std::move(z)), cdf_(std::move(cdf)) {
    if (z_.size() != cdf_.size() || z_.size() < 2)
        throw std::invalid_argument("AdLimitTable: need matched z/F columns, >= 2 knots");
    for (std::size_t i = 1; i < z_.size(); ++i)
        if (!(z_[i] > z_[i - 1]) || cdf_[i] < cdf_[i - 1])
            throw std::invalid_argument("AdLimitTable: knots must be strictly increasing in z and monotone in F");
    if (!(z_.front() >= 0.0) || !(cdf_.back() <= 1.0))
        throw std::invalid_argument("AdLimitTable: values outside the CDF range");

    // Fit the upper-tail rate of log(1 - F) on the last stretch of knots so
    // the table extends smoothly past its grid.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    const double z_from = z_.back() - 4.0;
    for (std::size_t i = 0; i < z_.size(); ++i) {
        const double tail = 1.0 - cdf_[i];
        if (z_[i] < z_from || tail <= 0.0) continue;
        const double y = std::log(tail);
        sx += z_[i];
        sy += y;
        sxx += z_[i] * z_[i];
        sxy += z_[i] * y;
        ++count;
    }
    if (count >= 2) {
        const double denom = count * sxx - sx * sx;
        if (denom > 0.0) tail_rate_ = std::min(-1e-3, (count * sxy - sx * sy) / denom);
    }
}

double AdLimitTable::cdf(double z) const { return 1.0 - upper_tail(z); }

double AdLimitTable::upper_tail(double z) const {
    if (!(z >= 0.0)) throw std::domain_error("ad_limit_cdf: z must be >= 0");
    if (z <= z_.front()) return 1.0 - cdf_.front() * (z / std::max(z_.front(), 1e-12));
    if (z >= z_.back()) {
        const double tail_at_end = std::max(1.0 - cdf_.back(), 1e-14);
        return tail_at_end * std::exp(tail_rate_ * (z - z_.back()));
    }
    const auto it = std::upper_bound(z_.begin(), z_.end(), z);
    const std::size_t hi = static_cast<std::size_t>(it - z_.begin());
    const std::size_t lo = hi - 1;
    const double t = (z - z_[lo]) / (z_[hi] - z_[lo]);
    return 1.0 - (cdf_[lo] + t * (cdf_[hi] - cdf_[lo]));
}

const AdLimitTable& AdLimitTable::builtin() {
    static const AdLimitTable table = [] {
        std::vector<double> z(fa_data::kKnotCount);
        std::vector<double> f(fa_data::kKnotCount);
        for (unsigned i = 0; i < fa_data::kKnotCount; ++i) {
            z[i] = fa_data::kKnots[i][0];
            f[i] = fa_data::kKnots[i][1];
        }
        return AdLimitTable(std::move(z), std::move(f));
    }();
    return table;
}

AdLimitTable AdLimitTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("AdLimitTable: cannot open " + path);
    std::vector<double> z, f;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double zi, fi;
        if (!(row >> zi >> fi))
            throw std::runtime_error("AdLimitTable: malformed line in " + path + ": " + line);
        z.push_back(zi);
        f.push_back(fi);
    }
    return AdLimitTable(std::move(z), std::move(f));
}

double ad_limit_cdf(double z) { return AdLimitTable::builtin().cdf(z); }
double ad_limit_upper_tail(double z) { return AdLimitTable::builtin().upper_tail(z); }

// --- maximum-likelihood estimators --------------------------------------------

GammaParams mle_gamma(const Eigen::VectorXd& squared_values) {
    const Eigen::Index n = squared_values.size();
    if (n < 2) throw estimation_error("mle_gamma: need at least two observations");
    double mean = 0.0, mean_log = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = squared_values(i);
        if (!(x > 0.0)) throw estimation_error("mle_gamma: inputs must be positive");
        mean += x;
        mean_log += std::log(x);
    }
    mean /= n;
    mean_log /= n;
    const double s = std::log(mean) - mean_log;
    if (!(s > 1e-12)) throw estimation_error("mle_gamma: degenerate input (zero log variance)");

    // Minka's starting point, then safeguarded Newton on the monotone
    // objective f(shape) = log(shape) - digamma(shape) - s.
    double shape = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
    double lo = 1e-8, hi = 1e8;
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        const double f = std::log(shape) - specfun::digamma(shape) - s;
        if (f > 0.0)
            lo = shape;  // f decreasing in shape
        else
            hi = shape;
        const double df = 1.0 / shape - specfun::trigamma(shape);
        double next = shape - f / df;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - shape) <= 1e-12 * shape ||
            std::fabs(f) <= 1e-13) {
            shape = next;
            converged = true;
            break;
        }
        shape = next;
    }
    if (!converged) throw estimation_error("mle_gamma: Newton failed to converge");
    return {shape, mean / shape};
}

double mle_student_nu(const Eigen::VectorXd& radii, int dim) {
    const Eigen::Index n = radii.size();
    if (n < 2) throw estimation_error("mle_student_nu: need at least two observations");
    if (dim < 1) throw estimation_error("mle_student_nu: dim must be >= 1");
    std::vector<double> q(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(radii(i) > 0.0))
            throw estimation_error("mle_student_nu: radii must be positive");
        q[i] = radii(i) * radii(i) / dim;
    }
    const auto neg_loglik = [&](double log_nu) {
        const double nu = std::exp(log_nu);
        double acc = 0.0;
        for (const double qi : q) acc += specfun::f_log_pdf(qi, dim, nu);
        return -acc;
    };

    // Golden-section on log nu over [0.1, 1000].
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = std::log(0.1), b = std::log(1000.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = neg_loglik(c), fd = neg_loglik(d);
    for (int iter = 0; iter < 200; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = neg_loglik(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = neg_loglik(d);
        }
        if (std::fabs(fc - fd) < 1e-8 && std::fabs(b - a) < 1e-8) break;
    }
    return std::exp(0.5 * (a + b));
}

// --- radial null families -----------------------------------------------------

// Quadrature support for the stable mixing law, resolved once per family.
struct detail::StableMixingCache {
    double alpha = 0.5;           // beta / 2
    double scale = 1.0;           // multiplier mapping the standard law to A
    double levy_c = 1.0;          // Levy scale when beta == 1
    bool levy = true;
    double log_a_lo = 0.0;        // left quantile of A at mass 1e-15
    double chi2_t_lo = 0.0;       // chi^2_dim quantile at 1e-15
    std::vector<double> zol_a;    // Zolotarev A(u) at Gauss--Legendre nodes
    std::vector<double> zol_w;
};

namespace {

// Zolotarev's kernel for the standard positive stable law with Laplace
// transform exp(-s^alpha).
double zolotarev_a(double u, double alpha) {
    return std::sin((1.0 - alpha) * u) *
           std::pow(std::sin(alpha * u), alpha / (1.0 - alpha)) /
           std::pow(std::sin(u), 1.0 / (1.0 - alpha));
}

double stable_std_cdf(const detail::StableMixingCache& cache, double x) {
    if (!(x > 0.0)) return 0.0;
    const double pow_x = std::pow(x, -cache.alpha / (1.0 - cache.alpha));
    double acc = 0.0;
    for (std::size_t i = 0; i < cache.zol_a.size(); ++i)
        acc += cache.zol_w[i] * std::exp(-cache.zol_a[i] * pow_x);
    return acc / M_PI;
}

// Density of the mixing variable A at a > 0.
double stable_mixing_density(const detail::StableMixingCache& cache, double a) {
    if (!(a > 0.0)) return 0.0;
    if (cache.levy) {
        const double c = cache.levy_c;
        return std::sqrt(c / (2.0 * M_PI)) * std::pow(a, -1.5) *
               std::exp(-0.5 * c / a);
    }
    const double x = a / cache.scale;
    const double alpha = cache.alpha;
    const double pow_x = std::pow(x, -alpha / (1.0 - alpha));
    double acc = 0.0;
    for (std::size_t i = 0; i < cache.zol_a.size(); ++i)
        acc += cache.zol_w[i] * cache.zol_a[i] * std::exp(-cache.zol_a[i] * pow_x);
    return alpha / ((1.0 - alpha) * M_PI) * std::pow(x, -1.0 / (1.0 - alpha)) * acc /
           cache.scale;
}

std::shared_ptr<const detail::StableMixingCache> build_stable_cache(int dim, double beta,
                                                                  double gamma0) {
    auto cache = std::make_shared<detail::StableMixingCache>();
    cache->alpha = 0.5 * beta;
    cache->scale = 2.0 * gamma0 * gamma0;
    cache->levy = std::fabs(beta - 1.0) < 1e-13;
    cache->levy_c = gamma0 * gamma0;
    cache->chi2_t_lo = specfun::chi_squared_quantile(1e-15, dim);

    const auto& rule = quadrature::gauss_legendre(256);
    cache->zol_a.resize(rule.nodes.size());
    cache->zol_w.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = 0.5 * M_PI * (rule.nodes[i] + 1.0);
        // clamp: near u = pi the kernel blows up for alpha close to 1, but
        // its contribution is already a clean exp(-huge) = 0
        cache->zol_a[i] = std::min(zolotarev_a(u, cache->alpha), 1e300);
        cache->zol_w[i] = 0.5 * M_PI * rule.weights[i];
    }

    // Left quantile of A at mass 1e-15, to bound the quadrature window.
    if (cache->levy) {
        // F(a) = erfc(sqrt(c / 2a)); erfc(x) = 1e-15 at x ~ 5.6739.
        const double x = 5.67391;
        cache->log_a_lo = std::log(0.5 * cache->levy_c / (x * x));
    } else {
        double lo = 1e-12, hi = cache->scale;
        while (stable_std_cdf(*cache, hi / cache->scale) < 1e-15) hi *= 2.0;
        while (stable_std_cdf(*cache, lo / cache->scale) > 1e-15) lo *= 0.5;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = std::sqrt(lo * hi);
            if (stable_std_cdf(*cache, mid / cache->scale) < 1e-15)
                lo = mid;
            else
                hi = mid;
            if (hi / lo < 1.0 + 1e-6) break;
        }
        cache->log_a_lo = std::log(lo);
    }
    return cache;
}

double stable_radius_cdf(const detail::StableMixingCache& cache, int dim, double r) {
    if (!(r > 0.0)) return 0.0;
    const double y = r * r;
    // P(A T <= y) = int F_chi2(y / a) f_A(a) da on a log axis. The window is
    // chosen so both truncated tails carry mass <= 1e-15: below a_lo the
    // mixing law has no mass, above y / t_lo the chi-square factor vanishes.
    const double u_lo = cache.log_a_lo;
    const double u_hi = std::log(y) - std::log(cache.chi2_t_lo);
    if (!(u_hi > u_lo)) return 0.0;
    const double half_dim = 0.5 * dim;
    const auto integrand = [&](double u) {
        const double a = std::exp(u);
        return specfun::reg_incomplete_gamma(half_dim, 0.5 * y / a) *
               stable_mixing_density(cache, a) * a;
    };
    const double rough = quadrature::integrate_gl(integrand, u_lo, u_hi, 64);
    const double tol = std::max(1e-13, 1e-7 * std::fabs(rough));
    double p = quadrature::integrate_adaptive(integrand, u_lo, u_hi, tol, 45);
    if (p < -1e-6 || p > 1.0 + 1e-6) {
        std::ostringstream os;
        os << "stable radial CDF quadrature failed: r=" << r << " dim=" << dim
           << " estimate=" << p;
        throw std::runtime_error(os.str());
    }
    return std::min(std::max(p, 0.0), 1.0);
}

}  // namespace

RadialNull RadialNull::normal(int dim) {
    if (dim < 1) throw std::domain_error("RadialNull::normal: dim must be >= 1");
    RadialNull null(Family::Normal);
    null.dim_ = dim;
    return null;
}

RadialNull RadialNull::student(int dim, double nu) {
    if (dim < 1) throw std::domain_error("RadialNull::student: dim must be >= 1");
    if (!(nu > 0.0)) throw std::domain_error("RadialNull::student: nu must be > 0");
    RadialNull null(Family::Student);
    null.dim_ = dim;
    null.nu_ = nu;
    return null;
}

RadialNull RadialNull::student_estimated(int dim) {
    RadialNull null = student(dim, 1.0);
    null.estimable_ = true;
    null.concrete_ = false;
    return null;
}

RadialNull RadialNull::stable(int dim, double beta, double gamma0) {
    if (dim < 1) throw std::domain_error("RadialNull::stable: dim must be >= 1");
    if (!(beta > 0.0 && beta < 2.0))
        throw std::domain_error("RadialNull::stable: beta must be in (0,2)");
    if (!(gamma0 > 0.0)) throw std::domain_error("RadialNull::stable: gamma0 must be > 0");
    RadialNull null(Family::Stable);
    null.dim_ = dim;
    null.beta_ = beta;
    null.gamma0_ = gamma0;
    null.stable_cache_ = build_stable_cache(dim, beta, gamma0);
    return null;
}

RadialNull RadialNull::gamma(double shape, double scale) {
    if (!(shape > 0.0 && scale > 0.0))
        throw std::domain_error("RadialNull::gamma: shape and scale must be > 0");
    RadialNull null(Family::Gamma);
    null.shape_ = shape;
    null.scale_ = scale;
    return null;
}

RadialNull RadialNull::gamma_estimated() {
    RadialNull null(Family::Gamma);
    null.shape_ = 1.0;
    null.scale_ = 1.0;
    null.estimable_ = true;
    null.concrete_ = false;
    return null;
}

void RadialNull::require_concrete() const {
    if (!concrete_)
        throw std::logic_error(
            "RadialNull: family has free parameters; call fitted() before use");
}

double RadialNull::cdf(double r) const {
    require_concrete();
    if (!(r >= 0.0)) throw std::domain_error("RadialNull::cdf: r must be >= 0");
    switch (family_) {
        case Family::Normal:
            return specfun::chi_squared_cdf(r * r, dim_);
        case Family::Student:
            return specfun::f_cdf(r * r / dim_, dim_, nu_);
        case Family::Stable:
            return stable_radius_cdf(*stable_cache_, dim_, r);
        case Family::Gamma:
            return specfun::gamma_cdf(r * r, shape_, scale_);
    }
    throw std::logic_error("RadialNull: unknown family");
}

double RadialNull::sample_radius(Rng& rng) const {
    require_concrete();
    switch (family_) {
        case Family::Normal:
            return std::sqrt(rng.chi_squared(dim_));
        case Family::Student:
            return std::sqrt(rng.chi_squared(dim_) * nu_ / rng.chi_squared(nu_));
        case Family::Stable:
            return std::sqrt(sampling::positive_stable_draw(rng, beta_, gamma0_) *
                             rng.chi_squared(dim_));
        case Family::Gamma:
            return std::sqrt(rng.gamma(shape_, scale_));
    }
    throw std::logic_error("RadialNull: unknown family");
}

RadialNull RadialNull::fitted(const Eigen::VectorXd& radii) const {
    if (!estimable_) {
        require_concrete();
        return *this;
    }
    RadialNull out = *this;
    out.concrete_ = true;
    switch (family_) {
        case Family::Student:
            out.nu_ = mle_student_nu(radii, dim_);
            return out;
        case Family::Gamma: {
            const GammaParams params = mle_gamma(radii.array().square().matrix());
            out.shape_ = params.shape;
            out.scale_ = params.scale;
            return out;
        }
        default:
            throw std::logic_error("RadialNull: no estimator for this family");
    }
}

std::string RadialNull::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Normal:
            os << "normal(dim=" << dim_ << ")";
            break;
        case Family::Student:
            os << "student(dim=" << dim_ << ", nu=";
            if (concrete_)
                os << nu_;
            else
                os << "est";
            os << ")";
            break;
        case Family::Stable:
            os << "stable(dim=" << dim_ << ", beta=" << beta_ << ", gamma0=" << gamma0_
               << ")";
            break;
        case Family::Gamma:
            os << "gamma(";
            if (concrete_)
                os << "shape=" << shape_ << ", scale=" << scale_;
            else
                os << "est";
            os << ")";
            break;
    }
    return os.str();
}

double ad_statistic(const Eigen::VectorXd& radii, const RadialNull& null) {
    return ad_statistic(radii, [&](double r) { return null.cdf(r); });
}

BootstrapResult bootstrap_pvalue(const Eigen::VectorXd& radii, const RadialNull& family,
                                 const BootstrapConfig& cfg) {
    if (cfg.replicates < 1)
        throw std::domain_error("bootstrap_pvalue: need at least one replicate");
    const Eigen::Index n = radii.size();
    if (n < 2) throw std::domain_error("bootstrap_pvalue: need at least two radii");

    const RadialNull fitted = family.fitted(radii);
    const double observed =
        ad_statistic(radii, [&](double r) { return fitted.cdf(r); });

    BootstrapResult result;
    result.observed_statistic = observed;
    int exceed = 0;
    Eigen::VectorXd replica(n);
    for (int j = 0; j < cfg.replicates; ++j) {
        bool counted = false;
        // One retry on estimation failure, then count as exceeding
        // (conservative for the level).
        for (int attempt = 0; attempt < 2 && !counted; ++attempt) {
            Rng rng(cfg.rng.base_seed, cfg.rng.stream_index +
                                           (static_cast<std::uint64_t>(j) + 1 +
                                            attempt * static_cast<std::uint64_t>(
                                                          cfg.replicates)) *
                                               cfg.stream_stride);
            for (Eigen::Index i = 0; i < n; ++i) replica(i) = fitted.sample_radius(rng);
            try {
                const RadialNull refit = family.fitted(replica);
                const double stat =
                    ad_statistic(replica, [&](double r) { return refit.cdf(r); });
                if (stat > observed) ++exceed;
                counted = true;
            } catch (const estimation_error&) {
                if (attempt == 1) {
                    ++exceed;
                    ++result.estimation_failures;
                    counted = true;
                }
            }
        }
    }
    result.p_value = static_cast<double>(exceed) / cfg.replicates;
    return result;
}

}  // namespace sphstat::radial
