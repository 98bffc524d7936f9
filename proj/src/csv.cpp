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

#include "sphstat/csv.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sphstat::csv {

Eigen::MatrixXd read_matrix(const std::string& path, const Options& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open " + path);
    return read_matrix(in, path, options);
}

Eigen::MatrixXd read_matrix(std::istream& in, const std::string& source,
                            const Options& options) {
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && options.skip_header) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        long col = 0;
        while (std::getline(ss, cell, options.delimiter)) {
            ++col;
            try {
                std::size_t pos = 0;
                const double value = std::stod(cell, &pos);
                while (pos < cell.size() &&
                       (cell[pos] == ' ' || cell[pos] == '\t'))
                    ++pos;
                if (pos != cell.size()) throw std::invalid_argument(cell);
                row.push_back(value);
            } catch (const std::exception&) {
                throw std::runtime_error(source + ": row " + std::to_string(line_no) +
                                         ", column " + std::to_string(col) +
                                         ": cannot parse '" + cell + "' as a number");
            }
        }
        if (row.empty())
            throw std::runtime_error(source + ": row " + std::to_string(line_no) +
                                     " is empty");
        if (width == 0) width = row.size();
        if (row.size() != width)
            throw std::runtime_error(source + ": row " + std::to_string(line_no) +
                                     " has " + std::to_string(row.size()) +
                                     " columns, expected " + std::to_string(width));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(source + ": no data rows");
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return out;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& matrix, char delimiter) {
    out.precision(17);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            if (j) out << delimiter;
            out << matrix(i, j);
        }
        out << '\n';
    }
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& matrix,
                  char delimiter) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
    write_matrix(out, matrix, delimiter);
}

}  // namespace sphstat::csv
