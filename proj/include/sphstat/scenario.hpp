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

#include <optional>
#include <string>
#include <vector>

#include "sphstat/montecarlo.hpp"

namespace sphstat::scenario {

/// Fields a scenario file may override from the command line.
struct Overrides {
    std::optional<long> n;
    std::optional<int> dim;
    std::optional<int> replicates;
    std::optional<int> bootstrap;
    std::optional<std::uint64_t> seed;
};

/// A parsed scenario file: either a grid of rejection-rate scenarios (one
/// per n x d combination) or a grid of convergence experiments.
struct ScenarioFile {
    std::string id;
    std::vector<mc::Scenario> scenarios;
    std::vector<mc::ConvergenceConfig> convergence;
    int workers = 0;

    bool is_convergence() const { return !convergence.empty(); }
};

/// Parses and schema-checks a scenario file (dotted key = value lines, '#'
/// comments; see the README for the documented schema). Unknown keys,
/// missing required keys, and inconsistent combinations are errors.
ScenarioFile parse_scenario_file(const std::string& path, const Overrides& overrides = {});

/// Same, from already-loaded text; `name` is used for the default id.
ScenarioFile parse_scenario_text(const std::string& text, const std::string& name,
                                 const Overrides& overrides = {});

/// Compact one-line model grammar for the CLI, e.g. "uniform", "vmf:4",
/// "ivmf:tau2:1.41", "normal", "normal:0.8", "normal:sigma_p=0.25",
/// "mvt:10,0.75", "skewt:5,0.25,e1", "dmn:0.5",
/// "product:vmf(10):gamma(2,5)", "product:normal:stable(1)". Dimension
/// tokens "d" resolve against dim.
sampling::ModelSpec parse_model_text(const std::string& text, long n, int dim);

}  // namespace sphstat::scenario
