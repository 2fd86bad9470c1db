// Copyright 2026 The gaplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>

#include "gaplab/randomness.hpp"

namespace gaplab::harness {

namespace {

constexpr std::string_view kExperimentNames[] = {
    "theorem1",  "theorem2",   "theorem3", "theorem4",    "canonical_typicality",
    "submatrix", "continuity", "thermal",  "gap_selftest"};

constexpr std::string_view kFunctionKinds[] = {"overlap_sq", "real_part", "cap_indicator",
                                               "polynomial", "constant"};

std::string join(const std::string &prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

[[noreturn]] void fail(const std::string &key, const std::string &message) {
    throw ConfigError(key, message);
}

void check_keys(const Json &object, const std::string &path,
                std::initializer_list<std::string_view> allowed) {
    if (!object.is_object()) {
        fail(path.empty() ? "<root>" : path, "expected an object");
    }
    for (const auto &item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            fail(join(path, item.key()), "unknown key");
        }
    }
}

double as_double(const Json &value, const std::string &key) {
    if (!value.is_number()) {
        fail(key, "expected a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        fail(key, "expected a finite number");
    }
    return x;
}

std::uint64_t as_u64(const Json &value, const std::string &key) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        fail(key, "expected a non-negative integer");
    }
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
}

std::size_t as_count(const Json &value, const std::string &key) {
    const std::uint64_t n = as_u64(value, key);
    if (n == 0) {
        fail(key, "must be positive");
    }
    return static_cast<std::size_t>(n);
}

Index as_dim(const Json &value, const std::string &key) {
    return static_cast<Index>(as_count(value, key));
}

std::string as_string(const Json &value, const std::string &key) {
    if (!value.is_string()) {
        fail(key, "expected a string");
    }
    return value.get<std::string>();
}

const Json &as_array(const Json &value, const std::string &key) {
    if (!value.is_array() || value.empty()) {
        fail(key, "expected a non-empty array");
    }
    return value;
}

std::vector<double> as_doubles(const Json &value, const std::string &key) {
    std::vector<double> out;
    for (const auto &x : as_array(value, key)) {
        out.push_back(as_double(x, key));
    }
    return out;
}

std::vector<Index> as_dims(const Json &value, const std::string &key) {
    std::vector<Index> out;
    for (const auto &x : as_array(value, key)) {
        out.push_back(as_dim(x, key));
    }
    return out;
}

/// A real number or a [re, im] pair.
Complex as_complex(const Json &value, const std::string &key) {
    if (value.is_array()) {
        if (value.size() != 2) {
            fail(key, "complex amplitudes are [re, im] pairs");
        }
        return {as_double(value[0], key), as_double(value[1], key)};
    }
    return {as_double(value, key), 0.0};
}

double open_unit(const Json &value, const std::string &key) {
    const double x = as_double(value, key);
    if (!(x > 0.0 && x < 1.0)) {
        fail(key, "must lie in (0, 1)");
    }
    return x;
}

RhoSpec parse_rho(const Json &object, const std::string &path) {
    check_keys(object, path, {"spectrum", "basis_seed"});
    if (!object.contains("spectrum")) {
        fail(join(path, "spectrum"), "is required");
    }
    RhoSpec spec;
    const std::string key = join(path, "spectrum");
    spec.spectrum = as_doubles(object["spectrum"], key);
    double total = 0.0;
    for (double p : spec.spectrum) {
        if (p < 0.0) {
            fail(key, "eigenvalues must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        fail(key, "eigenvalues must sum to 1");
    }
    if (object.contains("basis_seed") && !object["basis_seed"].is_null()) {
        spec.basis_seed = as_u64(object["basis_seed"], join(path, "basis_seed"));
    }
    return spec;
}

FunctionSpec parse_function(const Json &object) {
    check_keys(object, "f", {"kind", "phi_index", "phi", "threshold", "coefficients", "value"});
    FunctionSpec spec;
    if (object.contains("kind")) {
        spec.kind = as_string(object["kind"], "f.kind");
        if (std::find(std::begin(kFunctionKinds), std::end(kFunctionKinds), spec.kind) ==
            std::end(kFunctionKinds)) {
            fail("f.kind", "unknown function kind '" + spec.kind + "'");
        }
    }
    if (object.contains("phi_index")) {
        spec.phi_index = static_cast<Index>(as_u64(object["phi_index"], "f.phi_index"));
    }
    if (object.contains("phi") && !(object["phi"].is_array() && object["phi"].empty())) {
        for (const auto &x : as_array(object["phi"], "f.phi")) {
            spec.phi.push_back(as_complex(x, "f.phi"));
        }
        double norm_sq = 0.0;
        for (const auto &z : spec.phi) {
            norm_sq += std::norm(z);
        }
        if (norm_sq == 0.0) {
            fail("f.phi", "direction must be nonzero");
        }
    }
    if (object.contains("threshold")) {
        spec.threshold = as_double(object["threshold"], "f.threshold");
    }
    if (object.contains("coefficients")) {
        spec.coefficients = as_doubles(object["coefficients"], "f.coefficients");
    }
    if (object.contains("value")) {
        spec.value = as_double(object["value"], "f.value");
    }
    return spec;
}

bool sweep_allowed(ExperimentKind kind, const std::string &parameter) {
    switch (kind) {
    case ExperimentKind::theorem1:
    case ExperimentKind::theorem2:
        return parameter == "d2";
    case ExperimentKind::theorem3:
    case ExperimentKind::theorem4:
    case ExperimentKind::canonical_typicality:
        return parameter == "d2" || parameter == "dR" || parameter == "d2_dR";
    default:
        return false;
    }
}

std::vector<double> uniform_spectrum(Index d) {
    return std::vector<double>(static_cast<std::size_t>(d), 1.0 / static_cast<double>(d));
}

Json rho_json(const RhoSpec &spec) {
    Json out = Json::object();
    out["spectrum"] = spec.spectrum;
    out["basis_seed"] = spec.basis_seed ? Json(*spec.basis_seed) : Json(nullptr);
    return out;
}

} // namespace

ConfigError::ConfigError(std::string key, const std::string &message)
    : Error("config key '" + key + "': " + message), key_(std::move(key)) {}

const char *to_string(ExperimentKind kind) {
    return kExperimentNames[static_cast<std::size_t>(kind)].data();
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kExperimentNames); ++i) {
        if (kExperimentNames[i] == name) {
            return static_cast<ExperimentKind>(i);
        }
    }
    return std::nullopt;
}

DensityMatrix RhoSpec::build() const {
    if (!basis_seed) {
        return DensityMatrix::diagonal(spectrum);
    }
    RngStream rng(*basis_seed, 0);
    const auto u = haar_unitary(rng, static_cast<Index>(spectrum.size()));
    return DensityMatrix::from_spectrum(spectrum, u.matrix());
}

TestFunction FunctionSpec::build(Index dim) const {
    if (kind == "constant") {
        return TestFunction::constant(dim, value);
    }
    CVector direction;
    if (phi.empty()) {
        if (phi_index >= dim) {
            throw DimensionError("phi_index out of range for dimension " + std::to_string(dim));
        }
        direction = CVector::Unit(dim, phi_index);
    } else {
        if (static_cast<Index>(phi.size()) != dim) {
            throw DimensionError("phi has the wrong length for dimension " + std::to_string(dim));
        }
        direction = Eigen::Map<const CVector>(phi.data(), dim).normalized();
    }
    if (kind == "overlap_sq") {
        return TestFunction::overlap_sq(direction);
    }
    if (kind == "real_part") {
        return TestFunction::real_part(direction);
    }
    if (kind == "cap_indicator") {
        return TestFunction::cap_indicator(direction, threshold);
    }
    return TestFunction::polynomial(direction, coefficients);
}

ExperimentConfig parse_config(const Json &document, const ConfigOverrides &overrides) {
    check_keys(document, "",
               {"experiment", "d1", "d2", "dR", "rho", "omega", "f", "epsilon", "delta",
                "n_trials", "n_samples", "seed", "sweep", "shell", "system_levels", "bath",
                "energy", "energy_width", "k", "n_values", "gamma", "eta_grid",
                "reference_samples"});
    ExperimentConfig c;
    if (!document.contains("experiment")) {
        fail("experiment", "is required");
    }
    {
        const std::string name = as_string(document["experiment"], "experiment");
        const auto kind = parse_experiment_kind(name);
        if (!kind) {
            fail("experiment", "unknown experiment '" + name + "'");
        }
        c.experiment = *kind;
    }
    const bool has_d1 = document.contains("d1");
    if (has_d1) {
        c.d1 = as_dim(document["d1"], "d1");
    }
    if (document.contains("d2")) {
        c.d2 = as_dim(document["d2"], "d2");
    }
    if (document.contains("dR")) {
        c.dR = as_dim(document["dR"], "dR");
    }
    if (document.contains("system_levels")) {
        c.system_levels = as_doubles(document["system_levels"], "system_levels");
    }
    if (c.experiment == ExperimentKind::thermal) {
        const auto levels = static_cast<Index>(c.system_levels.size());
        if (has_d1 && c.d1 != levels) {
            fail("d1", "must equal the number of system_levels");
        }
        c.d1 = levels;
    }
    if (document.contains("rho")) {
        c.rho = parse_rho(document["rho"], "rho");
        const auto size = static_cast<Index>(c.rho.spectrum.size());
        if (has_d1 && size != c.d1) {
            fail("rho.spectrum", "length must equal d1");
        }
        c.d1 = size;
    } else {
        c.rho.spectrum = uniform_spectrum(c.d1);
    }
    if (document.contains("omega") && !document["omega"].is_null()) {
        c.omega = parse_rho(document["omega"], "omega");
        if (static_cast<Index>(c.omega->spectrum.size()) != c.d1) {
            fail("omega.spectrum", "length must equal d1");
        }
    }
    if (document.contains("f")) {
        c.f = parse_function(document["f"]);
    }
    if (c.f.phi.empty() ? c.f.phi_index >= c.d1 : static_cast<Index>(c.f.phi.size()) != c.d1) {
        fail(c.f.phi.empty() ? "f.phi_index" : "f.phi", "does not fit dimension d1");
    }
    if (document.contains("epsilon")) {
        c.epsilon = open_unit(document["epsilon"], "epsilon");
    }
    if (document.contains("delta")) {
        c.delta = open_unit(document["delta"], "delta");
    }
    if (document.contains("n_trials")) {
        c.n_trials = as_count(document["n_trials"], "n_trials");
    }
    if (document.contains("n_samples")) {
        c.n_samples = as_count(document["n_samples"], "n_samples");
    }
    if (document.contains("seed")) {
        c.seed = as_u64(document["seed"], "seed");
    }
    if (document.contains("sweep") && !document["sweep"].is_null()) {
        const Json &sweep = document["sweep"];
        check_keys(sweep, "sweep", {"parameter", "values"});
        if (!sweep.contains("parameter") || !sweep.contains("values")) {
            fail("sweep", "needs parameter and values");
        }
        SweepSpec spec;
        spec.parameter = as_string(sweep["parameter"], "sweep.parameter");
        if (!sweep_allowed(c.experiment, spec.parameter)) {
            fail("sweep.parameter", "'" + spec.parameter + "' cannot be swept for experiment " +
                                        to_string(c.experiment));
        }
        spec.values = as_dims(sweep["values"], "sweep.values");
        c.sweep = std::move(spec);
    }
    if (document.contains("shell")) {
        c.shell = as_string(document["shell"], "shell");
        if (c.shell != "random" && c.shell != "full") {
            fail("shell", "expected 'random' or 'full'");
        }
    }
    if (c.sweep && c.shell == "full" && c.sweep->parameter != "d2") {
        fail("sweep.parameter", "a full shell is fixed by d1 and d2");
    }
    if (document.contains("bath")) {
        const Json &bath = document["bath"];
        check_keys(bath, "bath", {"count", "min", "max"});
        if (bath.contains("count")) {
            c.bath.count = as_count(bath["count"], "bath.count");
        }
        if (bath.contains("min")) {
            c.bath.min = as_double(bath["min"], "bath.min");
        }
        if (bath.contains("max")) {
            c.bath.max = as_double(bath["max"], "bath.max");
        }
        if (!(c.bath.max > c.bath.min)) {
            fail("bath.max", "must exceed bath.min");
        }
    }
    if (document.contains("energy")) {
        c.energy = as_double(document["energy"], "energy");
    }
    if (document.contains("energy_width")) {
        c.energy_width = as_double(document["energy_width"], "energy_width");
        if (!(c.energy_width > 0.0)) {
            fail("energy_width", "must be positive");
        }
    }
    if (document.contains("k")) {
        c.k = as_dim(document["k"], "k");
    }
    if (document.contains("n_values")) {
        c.n_values = as_dims(document["n_values"], "n_values");
    }
    for (Index n : c.n_values) {
        if (n < 2 * c.k) {
            fail("n_values", "every n must be at least 2k");
        }
    }
    if (document.contains("gamma")) {
        c.gamma = as_double(document["gamma"], "gamma");
    }
    if (c.experiment == ExperimentKind::continuity &&
        !(c.gamma > 0.0 && c.gamma < 1.0 / static_cast<double>(c.d1))) {
        fail("gamma", "must lie in (0, 1/d1)");
    }
    if (document.contains("eta_grid") &&
        !(document["eta_grid"].is_array() && document["eta_grid"].empty())) {
        c.eta_grid = as_doubles(document["eta_grid"], "eta_grid");
        for (double eta : c.eta_grid) {
            if (!(eta > 0.0)) {
                fail("eta_grid", "entries must be positive");
            }
        }
    }
    if (document.contains("reference_samples")) {
        c.reference_samples =
            static_cast<std::size_t>(as_u64(document["reference_samples"], "reference_samples"));
    }
    if (overrides.seed) {
        c.seed = *overrides.seed;
    }
    if (overrides.n_trials) {
        if (*overrides.n_trials == 0) {
            fail("n_trials", "must be positive");
        }
        c.n_trials = *overrides.n_trials;
    }
    return c;
}

ExperimentConfig parse_config_text(std::string_view text, const ConfigOverrides &overrides) {
    Json document;
    try {
        document = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail("<root>", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(document, overrides);
}

ExperimentConfig load_config(const std::filesystem::path &path, const ConfigOverrides &overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), overrides);
}

Json to_json(const ExperimentConfig &c) {
    Json out = Json::object();
    out["experiment"] = to_string(c.experiment);
    out["d1"] = c.d1;
    out["d2"] = c.d2;
    out["dR"] = c.dR;
    out["rho"] = rho_json(c.rho);
    out["omega"] = c.omega ? rho_json(*c.omega) : Json(nullptr);
    Json f = Json::object();
    f["kind"] = c.f.kind;
    f["phi_index"] = c.f.phi_index;
    Json phi = Json::array();
    for (const auto &z : c.f.phi) {
        phi.push_back(Json::array({z.real(), z.imag()}));
    }
    f["phi"] = phi;
    f["threshold"] = c.f.threshold;
    f["coefficients"] = c.f.coefficients;
    f["value"] = c.f.value;
    out["f"] = f;
    out["epsilon"] = c.epsilon;
    out["delta"] = c.delta;
    out["n_trials"] = c.n_trials;
    out["n_samples"] = c.n_samples;
    out["seed"] = c.seed;
    if (c.sweep) {
        out["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
    } else {
        out["sweep"] = nullptr;
    }
    out["shell"] = c.shell;
    out["system_levels"] = c.system_levels;
    out["bath"] = {{"count", c.bath.count}, {"min", c.bath.min}, {"max", c.bath.max}};
    out["energy"] = c.energy;
    out["energy_width"] = c.energy_width;
    out["k"] = c.k;
    out["n_values"] = c.n_values;
    out["gamma"] = c.gamma;
    out["eta_grid"] = c.eta_grid;
    out["reference_samples"] = c.reference_samples;
    return out;
}

} // namespace gaplab::harness
