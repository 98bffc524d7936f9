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

#include "sphstat/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sphstat::scenario {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scenario: " + msg);
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Ordered key -> raw value map with consumption tracking, so unknown keys
// can be reported after parsing.
class KeyTree {
   public:
    void insert(const std::string& key, const std::string& value, int line) {
        if (values_.count(key)) fail("duplicate key '" + key + "' (line " +
                                     std::to_string(line) + ")");
        values_[key] = value;
    }

    std::optional<std::string> take(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        consumed_.insert(key);
        return it->second;
    }

    std::string require(const std::string& key) {
        auto v = take(key);
        if (!v) fail("missing required key '" + key + "'");
        return *v;
    }

    void check_all_consumed() const {
        for (const auto& [key, value] : values_)
            if (!consumed_.count(key)) fail("unknown key '" + key + "'");
    }

   private:
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

double to_number(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail("key '" + key + "' expects a number, got '" + text + "'");
    }
}

long to_long(const std::string& key, const std::string& text) {
    const double v = to_number(key, text);
    if (v != std::floor(v)) fail("key '" + key + "' expects an integer");
    return static_cast<long>(v);
}

std::vector<long> to_long_list(const std::string& key, const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_long(key, item));
    }
    if (out.empty()) fail("key '" + key + "' expects a list of integers");
    return out;
}

// Dimension-dependent parameter: a plain number or the token "d".
struct DimValue {
    bool is_dim = false;
    double value = 0.0;

    double resolve(int dim) const { return is_dim ? static_cast<double>(dim) : value; }
};

DimValue to_dim_value(const std::string& key, const std::string& text) {
    DimValue v;
    if (text == "d") {
        v.is_dim = true;
        return v;
    }
    v.value = to_number(key, text);
    return v;
}

// Concentration: fixed, or the local-alternative rate tau * d^(3/4) / sqrt(n)
// written "tau2:VALUE" (VALUE = tau^2).
struct KappaSpec {
    bool local = false;
    double kappa = 0.0;
    double tau2 = 0.0;

    double resolve(long n, int dim) const {
        if (!local) return kappa;
        return std::sqrt(tau2) * std::pow(static_cast<double>(dim), 0.75) /
               std::sqrt(static_cast<double>(n));
    }
};

KappaSpec parse_kappa(const std::string& key, const std::string& text) {
    KappaSpec spec;
    if (text.rfind("tau2:", 0) == 0) {
        spec.local = true;
        spec.tau2 = to_number(key, text.substr(5));
        return spec;
    }
    spec.kappa = to_number(key, text);
    if (spec.kappa < 0.0) fail("key '" + key + "' expects kappa >= 0");
    return spec;
}

struct RadialLawSpec {
    sampling::SquaredRadiusLaw::Kind kind;
    DimValue a;
    DimValue b;

    sampling::SquaredRadiusLaw resolve(int dim) const {
        sampling::SquaredRadiusLaw law;
        law.kind = kind;
        law.a = a.resolve(dim);
        law.b = b.resolve(dim);
        return law;
    }
};

RadialLawSpec parse_radial_law(KeyTree& keys) {
    using Kind = sampling::SquaredRadiusLaw::Kind;
    const std::string type = keys.require("model.radial2.type");
    RadialLawSpec spec;
    spec.a.value = 1.0;
    spec.b.value = 1.0;
    if (type == "chi2") {
        spec.kind = Kind::Chi2;
        spec.a = to_dim_value("model.radial2.df", keys.require("model.radial2.df"));
    } else if (type == "gamma") {
        spec.kind = Kind::Gamma;
        spec.a = to_dim_value("model.radial2.shape", keys.require("model.radial2.shape"));
        spec.b = to_dim_value("model.radial2.scale", keys.require("model.radial2.scale"));
    } else if (type == "scaled_f") {
        spec.kind = Kind::ScaledF;
        spec.a = to_dim_value("model.radial2.m", keys.require("model.radial2.m"));
        spec.b = to_dim_value("model.radial2.nu", keys.require("model.radial2.nu"));
    } else if (type == "stable") {
        spec.kind = Kind::Stable;
        spec.a = to_dim_value("model.radial2.beta", keys.require("model.radial2.beta"));
        if (auto g0 = keys.take("model.radial2.gamma0"))
            spec.b = to_dim_value("model.radial2.gamma0", *g0);
    } else if (type == "abs_cauchy") {
        spec.kind = Kind::AbsCauchy;
        spec.a = to_dim_value("model.radial2.location",
                              keys.require("model.radial2.location"));
        spec.b = to_dim_value("model.radial2.scale", keys.require("model.radial2.scale"));
    } else if (type == "abs_t") {
        spec.kind = Kind::AbsStudent;
        spec.a = to_dim_value("model.radial2.nu", keys.require("model.radial2.nu"));
    } else {
        fail("unknown model.radial2.type '" + type + "'");
    }
    return spec;
}

// Model description with dimension-dependent parts left symbolic.
struct ModelTemplate {
    std::string type;
    KappaSpec kappa;
    double nu = 5.0;
    double scale = 1.0;
    double rho = 0.0;
    double sigma_p = -1.0;       // fraction of 0.5-variance coordinates, or -1
    double omega_offdiag = 0.0;  // skew_t scale matrix off-diagonal
    bool xi_e1 = false;          // skew_t skewing vector e_1 (else zero)
    std::string product_base;    // vmf | normal | dmn
    double product_kappa = 0.0;
    double product_rho = 0.0;
    RadialLawSpec radial2;

    bool sphere_valued() const {
        return type == "uniform" || type == "vmf" || type == "ivmf" || type == "itvmf";
    }

    sampling::ModelSpec resolve(long n, int dim) const {
        using namespace sampling;
        if (type == "uniform") return UniformSphereModel{dim};
        if (type == "vmf") {
            Eigen::VectorXd e1 = Eigen::VectorXd::Zero(dim + 1);
            e1(0) = 1.0;
            return VmfModel{e1, kappa.resolve(n, dim)};
        }
        if (type == "ivmf") return IntegratedVmfModel{dim, kappa.resolve(n, dim)};
        if (type == "itvmf") {
            Eigen::VectorXd e1 = Eigen::VectorXd::Zero(dim + 1);
            e1(0) = 1.0;
            return IntegratedTangentVmfModel{e1, kappa.resolve(n, dim)};
        }
        if (type == "normal") {
            Eigen::VectorXd variances = Eigen::VectorXd::Constant(dim, scale);
            if (sigma_p >= 0.0) {
                const int low = static_cast<int>(std::floor(sigma_p * dim));
                for (int j = 0; j < dim; ++j) variances(j) = j < low ? 0.5 : 1.5;
            }
            return MvNormalModel{variances};
        }
        if (type == "mvt") return MvtModel{dim, nu, scale};
        if (type == "skew_t") {
            Eigen::MatrixXd omega =
                Eigen::MatrixXd::Constant(dim, dim, omega_offdiag);
            omega.diagonal().setOnes();
            Eigen::VectorXd xi = Eigen::VectorXd::Zero(dim);
            if (xi_e1) xi(0) = 1.0;
            return SkewTModel{nu, std::move(omega), std::move(xi)};
        }
        if (type == "dmn") return DmnModel{dim, rho};
        if (type == "product") {
            ProductModel m;
            m.dim = dim;
            if (product_base == "vmf") {
                m.base = ProductModel::Base::Vmf;
                m.kappa = product_kappa;
            } else if (product_base == "normal") {
                m.base = ProductModel::Base::Gaussian;
            } else if (product_base == "dmn") {
                m.base = ProductModel::Base::Dmn;
                m.rho = product_rho;
            } else {
                fail("unknown model.direction.type '" + product_base + "'");
            }
            m.radial2 = radial2.resolve(dim);
            return m;
        }
        fail("unknown model.type '" + type + "'");
    }
};

ModelTemplate parse_model(KeyTree& keys) {
    ModelTemplate model;
    model.type = keys.require("model.type");
    if (model.type == "vmf" || model.type == "ivmf" || model.type == "itvmf")
        model.kappa = parse_kappa("model.kappa", keys.require("model.kappa"));
    if (model.type == "normal") {
        if (auto v = keys.take("model.scale")) model.scale = to_number("model.scale", *v);
        if (auto v = keys.take("model.sigma_p")) {
            model.sigma_p = to_number("model.sigma_p", *v);
            if (model.sigma_p < 0.0 || model.sigma_p > 1.0)
                fail("model.sigma_p must be in [0,1]");
        }
    }
    if (model.type == "mvt") {
        model.nu = to_number("model.nu", keys.require("model.nu"));
        if (auto v = keys.take("model.scale")) model.scale = to_number("model.scale", *v);
    }
    if (model.type == "skew_t") {
        model.nu = to_number("model.nu", keys.require("model.nu"));
        if (auto v = keys.take("model.omega_offdiag"))
            model.omega_offdiag = to_number("model.omega_offdiag", *v);
        if (auto v = keys.take("model.xi")) {
            if (*v == "e1")
                model.xi_e1 = true;
            else if (*v != "zero")
                fail("model.xi must be 'zero' or 'e1'");
        }
    }
    if (model.type == "dmn")
        model.rho = to_number("model.rho", keys.require("model.rho"));
    if (model.type == "product") {
        model.product_base = keys.require("model.direction.type");
        if (model.product_base == "vmf")
            model.product_kappa =
                to_number("model.direction.kappa", keys.require("model.direction.kappa"));
        if (model.product_base == "dmn")
            model.product_rho =
                to_number("model.direction.rho", keys.require("model.direction.rho"));
        model.radial2 = parse_radial_law(keys);
    }
    return model;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text, const std::string& name,
                                 const Overrides& overrides) {
    KeyTree keys;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("line " + std::to_string(line_no) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            fail("line " + std::to_string(line_no) + " has an empty key or value");
        keys.insert(key, value, line_no);
    }

    ScenarioFile file;
    file.id = keys.take("id").value_or(name);
    const std::string test = keys.require("test");

    const std::string n_text = keys.require("n");
    const std::string d_text = keys.require("d");
    const std::string m_text = keys.take("m").value_or("1000");
    const std::string seed_text = keys.take("seed").value_or("1");
    const std::vector<long> n_list =
        overrides.n ? std::vector<long>{*overrides.n} : to_long_list("n", n_text);
    const std::vector<long> d_list =
        overrides.dim ? std::vector<long>{*overrides.dim} : to_long_list("d", d_text);
    const int replicates = overrides.replicates
                               ? *overrides.replicates
                               : static_cast<int>(to_long("m", m_text));
    const double level = to_number("level", keys.take("level").value_or("0.05"));
    const std::uint64_t seed =
        overrides.seed
            ? *overrides.seed
            : static_cast<std::uint64_t>(to_long("seed", seed_text));
    if (auto w = keys.take("workers"))
        file.workers = static_cast<int>(to_long("workers", *w));
    if (replicates < 1) fail("m must be >= 1");
    if (!(level > 0.0 && level < 1.0)) fail("level must be in (0,1)");

    ModelTemplate model = parse_model(keys);

    const std::string scheme_text = keys.take("scheme").value_or("rayleigh");
    const sobolev::WeightScheme scheme = sobolev::WeightScheme::parse(scheme_text);

    if (test == "convergence") {
        const std::string stat = keys.require("convergence.statistic");
        const double target =
            to_number("convergence.target_mean",
                      keys.take("convergence.target_mean").value_or("0"));
        mc::StatisticSpec statistic = mc::StandardizedStatistic{scheme};
        if (stat.rfind("k0:", 0) == 0)
            statistic =
                mc::K0Statistic{static_cast<int>(to_long("convergence.statistic",
                                                         stat.substr(3)))};
        else
            statistic = mc::StandardizedStatistic{sobolev::WeightScheme::parse(stat)};
        if (!model.sphere_valued())
            fail("convergence experiments need a sphere-valued model");
        for (const long n : n_list)
            for (const long d : d_list) {
                mc::ConvergenceConfig config;
                config.id = file.id + "_n" + std::to_string(n) + "_d" + std::to_string(d);
                config.n = n;
                config.dim = static_cast<int>(d);
                config.model = model.resolve(n, config.dim);
                config.replicates = replicates;
                config.statistic = statistic;
                config.target_mean = target;
                config.base_seed = seed;
                file.convergence.push_back(std::move(config));
            }
        keys.check_all_consumed();
        return file;
    }

    mc::TestSpec test_spec = mc::UniformityTest{scheme};
    if (test == "uniformity") {
        if (!model.sphere_valued()) fail("uniformity tests need a sphere-valued model");
        test_spec = mc::UniformityTest{scheme};
    } else if (test == "rotsym") {
        if (!model.sphere_valued()) fail("rotsym tests need a sphere-valued model");
        test_spec = mc::RotsymTest{scheme};
    } else if (test == "gof_simple") {
        if (model.sphere_valued()) fail("gof tests need Euclidean data");
        test_spec =
            mc::GofSimpleTest{mc::NullFamilySpec::parse(keys.require("gof.family")),
                              scheme};
    } else if (test == "gof_composite") {
        const auto family = mc::NullFamilySpec::parse(keys.require("gof.family"));
        if (family.kind != mc::NullFamilySpec::Kind::StudentEstimated &&
            family.kind != mc::NullFamilySpec::Kind::GammaEstimated)
            fail("gof_composite needs an estimated family (student-est or gamma-est)");
        if (model.sphere_valued()) fail("gof tests need Euclidean data");
        const std::string boot_text = keys.take("gof.bootstrap").value_or("500");
        const int bootstrap = overrides.bootstrap
                                  ? *overrides.bootstrap
                                  : static_cast<int>(to_long("gof.bootstrap", boot_text));
        if (bootstrap < 1) fail("gof.bootstrap must be >= 1");
        test_spec = mc::GofCompositeTest{family, scheme, bootstrap};
    } else {
        fail("unknown test '" + test + "'");
    }

    for (const long n : n_list)
        for (const long d : d_list) {
            mc::Scenario s;
            s.id = file.id + "_n" + std::to_string(n) + "_d" + std::to_string(d);
            s.n = n;
            s.dim = static_cast<int>(d);
            s.model = model.resolve(n, s.dim);
            s.replicates = replicates;
            s.level = level;
            s.base_seed = seed;
            s.test = test_spec;
            file.scenarios.push_back(std::move(s));
        }
    keys.check_all_consumed();
    return file;
}

namespace {

// "name(a,b)" -> name, {a, b}; "name" -> name, {}.
std::pair<std::string, std::vector<std::string>> split_call(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos) return {text, {}};
    if (text.back() != ')') fail("expected ')' in '" + text + "'");
    std::vector<std::string> args;
    std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(trim(item));
    return {text.substr(0, open), args};
}

RadialLawSpec parse_radial_call(const std::string& text) {
    using Kind = sampling::SquaredRadiusLaw::Kind;
    const auto [name, args] = split_call(text);
    RadialLawSpec spec;
    spec.a.value = 1.0;
    spec.b.value = 1.0;
    auto arg = [&](std::size_t i) -> std::string {
        if (i >= args.size()) fail("radial law '" + text + "' is missing arguments");
        return args[i];
    };
    if (name == "chi2") {
        spec.kind = Kind::Chi2;
        spec.a = to_dim_value(text, arg(0));
    } else if (name == "gamma") {
        spec.kind = Kind::Gamma;
        spec.a = to_dim_value(text, arg(0));
        spec.b = to_dim_value(text, arg(1));
    } else if (name == "scaledf") {
        spec.kind = Kind::ScaledF;
        spec.a = to_dim_value(text, arg(0));
        spec.b = to_dim_value(text, arg(1));
    } else if (name == "stable") {
        spec.kind = Kind::Stable;
        spec.a = to_dim_value(text, arg(0));
        if (args.size() > 1) spec.b = to_dim_value(text, arg(1));
    } else if (name == "abscauchy") {
        spec.kind = Kind::AbsCauchy;
        spec.a = to_dim_value(text, arg(0));
        spec.b = to_dim_value(text, arg(1));
    } else if (name == "abst") {
        spec.kind = Kind::AbsStudent;
        spec.a = to_dim_value(text, arg(0));
    } else {
        fail("unknown radial law '" + name + "'");
    }
    return spec;
}

}  // namespace

sampling::ModelSpec parse_model_text(const std::string& text, long n, int dim) {
    ModelTemplate model;
    std::string head = text;
    std::string rest;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        head = text.substr(0, colon);
        rest = text.substr(colon + 1);
    }
    model.type = head;
    if (head == "uniform") {
        // no parameters
    } else if (head == "vmf" || head == "ivmf" || head == "itvmf") {
        if (rest.empty()) fail("model '" + head + "' needs a concentration");
        model.kappa = parse_kappa(text, rest);
    } else if (head == "normal") {
        if (rest.rfind("sigma_p=", 0) == 0) {
            model.sigma_p = to_number(text, rest.substr(8));
        } else if (!rest.empty()) {
            model.scale = to_number(text, rest);
        }
    } else if (head == "mvt" || head == "skewt") {
        if (head == "skewt") model.type = "skew_t";
        std::vector<std::string> args;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) args.push_back(trim(item));
        if (args.empty()) fail("model '" + head + "' needs degrees of freedom");
        model.nu = to_number(text, args[0]);
        if (head == "mvt") {
            if (args.size() > 1) model.scale = to_number(text, args[1]);
        } else {
            if (args.size() > 1) model.omega_offdiag = to_number(text, args[1]);
            if (args.size() > 2) {
                if (args[2] == "e1")
                    model.xi_e1 = true;
                else if (args[2] != "zero")
                    fail("skewt xi must be 'zero' or 'e1'");
            }
        }
    } else if (head == "dmn") {
        if (rest.empty()) fail("model 'dmn' needs rho");
        model.rho = to_number(text, rest);
    } else if (head == "product") {
        const auto second = rest.find(':');
        if (second == std::string::npos)
            fail("product model needs 'product:DIRECTION:RADIAL'");
        const auto [dir_name, dir_args] = split_call(rest.substr(0, second));
        model.product_base = dir_name;
        if (dir_name == "vmf") {
            if (dir_args.empty()) fail("product vmf direction needs a concentration");
            model.product_kappa = to_number(text, dir_args[0]);
        } else if (dir_name == "dmn") {
            if (dir_args.empty()) fail("product dmn direction needs rho");
            model.product_rho = to_number(text, dir_args[0]);
        } else if (dir_name != "normal") {
            fail("unknown product direction '" + dir_name + "'");
        }
        model.radial2 = parse_radial_call(rest.substr(second + 1));
    } else {
        fail("unknown model '" + head + "'");
    }
    return model.resolve(n, dim);
}

ScenarioFile parse_scenario_file(const std::string& path, const Overrides& overrides) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scenario: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string name = path;
    const auto slash = name.find_last_of("/\\");
    if (slash != std::string::npos) name = name.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return parse_scenario_text(buffer.str(), name, overrides);
}

}  // namespace sphstat::scenario
