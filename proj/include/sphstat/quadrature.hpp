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

#include <functional>
#include <vector>

namespace sphstat::quadrature {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss--Legendre rule on [-1, 1]
/// (Newton iteration on the Legendre recurrence).
const GaussLegendreRule& gauss_legendre(int n);

/// Integral of f over [a, b] with the n-point Gauss--Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

/// Adaptive Simpson with absolute tolerance. max_depth bounds recursion;
/// min_depth forces that many subdivision levels before the error estimate
/// may accept, guarding against false convergence on flat-looking shapes.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 40, int min_depth = 7);

/// Integral over [-1,1] of f(x) * (1 - x^2)^(d/2 - 1) dx via the x = cos(t)
/// substitution, which removes the endpoint singularity for odd d. Exact up
/// to rounding for polynomial f of moderate degree at n = 256.
double integrate_cosine_weight(const std::function<double(double)>& f, int d, int n = 256);

}  // namespace sphstat::quadrature
