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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphstat/sphere_sample.hpp"

namespace sphstat::sobolev {

/// A rule (k, d) -> v_{k,d} selecting a Sobolev test of uniformity.
///
/// Built-in variants:
///   k_sobolev(k0):      v = 1 at k = k0, else 0 (k0 = 1 Rayleigh, 2 Bingham).
///   finite(k0):         v = 1 for k <= k0 (k0 > 1).
///   hybrid({ks}):       v = 1 on the listed degrees (Rayleigh--Bingham = {1,2}).
///   decay_adjusted(k0): v = 1 at k = 1 and (k! d^-k)^(1/4) for 1 < k <= k0.
///                       Keeps first-degree drift while spending tail weight
///                       slowly enough that the limit drift constant survives.
///   custom(rules):      explicit (k, v) pairs, optionally pinned to one d.
///
/// Every built-in scheme keeps the standardized statistic asymptotically
/// normal in the joint large-(n, d) regime: with d_{k,d} of order d^k / k!,
/// sum_k v^8 d_{k,d} / (sum_k v^4 d_{k,d})^2 decays like d^{-K} for the
/// largest supported degree K (k_sobolev, finite, hybrid), and for
/// decay_adjusted the degree-one terms dominate both sums, giving d^{-1}.
/// Custom schemes carry no such guarantee; the caller owns that check.
class WeightScheme {
   public:
    static WeightScheme k_sobolev(int k0);
    static WeightScheme rayleigh() { return k_sobolev(1); }
    static WeightScheme bingham() { return k_sobolev(2); }
    static WeightScheme finite(int k0);
    static WeightScheme hybrid(std::vector<int> degrees);
    static WeightScheme decay_adjusted(int k0);
    static WeightScheme custom(std::vector<std::pair<int, double>> rules,
                               std::optional<int> pinned_dim = std::nullopt);

    /// Parses "rayleigh", "bingham", "k:K", "finite:K", "hybrid", "decay:K".
    static WeightScheme parse(const std::string& text);

    /// v_{k,d} for this scheme.
    double weight(int k, int d) const;

    /// Largest degree carrying nonzero weight.
    int max_degree() const { return max_degree_; }

    /// Degrees with nonzero weight together with their weights at dimension d.
    std::vector<std::pair<int, double>> support(int d) const;

    const std::string& name() const { return name_; }
    std::optional<int> pinned_dim() const { return pinned_dim_; }

   private:
    enum class Kind { KSobolev, Finite, Hybrid, DecayAdjusted, Custom };

    WeightScheme(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    int k0_ = 0;
    std::vector<int> degrees_;
    std::vector<std::pair<int, double>> rules_;
    std::optional<int> pinned_dim_;
    int max_degree_ = 0;
};

/// Result of one Sobolev uniformity test.
struct TestReport {
    double raw_statistic = 0.0;   // T_n
    double sigma = 0.0;           // sigma_n
    double standardized = 0.0;    // T_n / sigma_n
    double p_value = 1.0;         // upper tail, reject for large T_n
    int truncation = 0;           // largest kernel degree evaluated
    long kernel_evaluations = 0;  // pair kernel evaluations, n(n-1)/2
    long n = 0;
    int d = 0;
};

/// Kernel value psi_n(x) = sum_k (1 + 2k/(d-1)) v_{k,d}^2 C_k^{(d-1)/2}(x)
/// over the scheme's support (Chebyshev form for d = 1).
double psi_kernel(const WeightScheme& scheme, int d, double x);

/// Null standard deviation sigma_n = sqrt(2 sum_k v^4 d_{k,d}), accumulated
/// in log scale so that large d does not overflow.
double sigma_n(const WeightScheme& scheme, int d);

/// Sobolev statistic with standardization and upper-tail p-value. The pair
/// sum is evaluated in deterministic row order.
TestReport statistic(const SphereSample& sample, const WeightScheme& scheme);

/// Same, reusing a precomputed Gram matrix of pairwise dot products.
TestReport statistic_from_gram(const Eigen::MatrixXd& gram, int sphere_dim,
                               const WeightScheme& scheme);

/// k0-standardized statistic sqrt(2 k0!) / (d^(k0/2) n) * sum_{i<j} C_k0,
/// the asymptotic-constant normalization (as opposed to sigma_n).
double k0_standardized(const SphereSample& sample, int k0);
double k0_standardized_from_gram(const Eigen::MatrixXd& gram, int sphere_dim, int k0);

/// Finite-d value of the local-power drift constant:
/// sqrt(d) v_{1,d}^2 / (sqrt(2) (sum_k v^4 d_{k,d})^(1/2)).
double gamma_constant(const WeightScheme& scheme, int d);

}  // namespace sphstat::sobolev
