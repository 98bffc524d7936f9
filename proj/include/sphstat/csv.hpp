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
#include <iosfwd>
#include <string>

namespace sphstat::csv {

struct Options {
    char delimiter = ',';
    bool skip_header = false;
};

/// Reads a numeric matrix; rows are observations. Malformed cells raise a
/// runtime error naming the (1-based) row and column.
Eigen::MatrixXd read_matrix(const std::string& path, const Options& options = {});
Eigen::MatrixXd read_matrix(std::istream& in, const std::string& source,
                            const Options& options = {});

/// Writes with enough digits to round-trip doubles exactly.
void write_matrix(const std::string& path, const Eigen::MatrixXd& matrix,
                  char delimiter = ',');
void write_matrix(std::ostream& out, const Eigen::MatrixXd& matrix, char delimiter = ',');

}  // namespace sphstat::csv
