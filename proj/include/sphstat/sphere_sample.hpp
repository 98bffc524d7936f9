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
#include <stdexcept>
#include <string>
#include <utility>

namespace sphstat {

/// n unit vectors in R^(d+1), one per row, regarded as points on S^d.
class SphereSample {
   public:
    static constexpr double kNormTolerance = 1e-9;

    /// Validates that every row is unit up to kNormTolerance.
    static SphereSample checked(Eigen::MatrixXd data) {
        validate(data);
        return SphereSample(std::move(data));
    }

    /// Normalizes rows first; rejects zero rows.
    static SphereSample normalized(Eigen::MatrixXd data) {
        for (Eigen::Index i = 0; i < data.rows(); ++i) {
            const double norm = data.row(i).norm();
            if (!(norm > 0.0))
                throw std::domain_error("SphereSample: row " + std::to_string(i) +
                                        " has zero norm");
            data.row(i) /= norm;
        }
        return SphereSample(std::move(data));
    }

    /// Trusted constructor for samplers that emit unit rows by construction.
    static SphereSample unchecked(Eigen::MatrixXd data) {
        return SphereSample(std::move(data));
    }

    Eigen::Index n() const { return data_.rows(); }
    /// Sphere dimension d (ambient dimension minus one).
    int sphere_dim() const { return static_cast<int>(data_.cols()) - 1; }
    int ambient_dim() const { return static_cast<int>(data_.cols()); }

    const Eigen::MatrixXd& data() const { return data_; }

    /// Pairwise dot products, X X^T.
    Eigen::MatrixXd gram() const { return data_ * data_.transpose(); }

   private:
    explicit SphereSample(Eigen::MatrixXd data) : data_(std::move(data)) {
        if (data_.rows() < 1 || data_.cols() < 2)
            throw std::domain_error("SphereSample: need n >= 1 points in R^(d+1), d >= 1");
    }

    static void validate(const Eigen::MatrixXd& data) {
        for (Eigen::Index i = 0; i < data.rows(); ++i) {
            const double norm = data.row(i).norm();
            if (std::abs(norm - 1.0) > kNormTolerance)
                throw std::domain_error("SphereSample: row " + std::to_string(i) +
                                        " has norm " + std::to_string(norm) +
                                        ", not unit within 1e-9");
        }
    }

    Eigen::MatrixXd data_;
};

}  // namespace sphstat
