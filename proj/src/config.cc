// Copyright 2026 The mfqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mfqec/config.h"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mfqec/errors.h"

namespace mfqec {

namespace {

template <typename T>
T scalar(const YAML::Node &node, const std::string &key) {
    if (!node.IsScalar()) {
        throw ConfigError("config key '" + key + "' must be a scalar");
    }
    try {
        return node.as<T>();
    } catch (const YAML::Exception &) {
        throw ConfigError("config key '" + key + "' has an invalid value '" + node.Scalar() + "'");
    }
}

template <typename T>
std::vector<T> list(const YAML::Node &node, const std::string &key) {
    if (!node.IsSequence()) {
        throw ConfigError("config key '" + key + "' must be a list");
    }
    std::vector<T> out;
    for (const auto &item : node) {
        out.push_back(scalar<T>(item, key));
    }
    return out;
}

double finite_positive(double v, const std::string &key) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw ConfigError("config key '" + key + "' must be a positive number");
    }
    return v;
}

}  // namespace

const char *sweep_kind_name(SweepKind k) {
    switch (k) {
        case SweepKind::R_DECOH:
            return "rdecoh";
        case SweepKind::NOISE_SCALE:
            return "noise-scale";
        case SweepKind::DISTANCE:
            return "distance";
    }
    return "?";
}

SweepKind parse_sweep_kind(const std::string &text) {
    if (text == "rdecoh" || text == "r_decoh") {
        return SweepKind::R_DECOH;
    }
    if (text == "noise-scale" || text == "noise_scale" || text == "scale") {
        return SweepKind::NOISE_SCALE;
    }
    if (text == "distance") {
        return SweepKind::DISTANCE;
    }
    throw ConfigError("config key 'sweep_kind' has an invalid value '" + text + "'");
}

std::vector<double> linspace(double lo, double hi, size_t n) {
    std::vector<double> out;
    if (n == 1) {
        return {lo};
    }
    for (size_t i = 0; i < n; i++) {
        out.push_back(lo + (hi - lo) * double(i) / double(n - 1));
    }
    return out;
}

void SweepConfig::validate() const {
    if (distances.empty()) {
        throw ConfigError("config key 'distances' must be a nonempty list");
    }
    for (uint32_t d : distances) {
        if (d < 3 || d % 2 == 0) {
            throw ConfigError("config key 'distances' must hold odd values >= 3");
        }
    }
    if (r_values.empty()) {
        throw ConfigError("config key 'r_values' must be a nonempty list");
    }
    for (double r : r_values) {
        if (!(r >= 1) || !std::isfinite(r)) {
            throw ConfigError("config key 'r_values' entries must be >= 1");
        }
    }
    if (s_values.empty()) {
        throw ConfigError("config key 's_values' must be a nonempty list");
    }
    for (double s : s_values) {
        finite_positive(s, "s_values");
    }
    if (!(fixed_r >= 1) || !std::isfinite(fixed_r)) {
        throw ConfigError("config key 'fixed_r' must be >= 1");
    }
    finite_positive(fixed_s, "fixed_s");
    if (n_shots == 0) {
        throw ConfigError("config key 'n_shots' must be positive");
    }
    if (!(alpha >= 0) || !std::isfinite(alpha)) {
        throw ConfigError("config key 'alpha' must be a non-negative number");
    }
    if (alpha_sensitivity.empty()) {
        throw ConfigError("config key 'alpha_sensitivity' must be a nonempty list");
    }
    if (!(escalation_factor >= 1)) {
        throw ConfigError("config key 'escalation_factor' must be >= 1");
    }
    if (workers == 0) {
        throw ConfigError("config key 'workers' must be positive");
    }
    finite_positive(noise_scale, "noise_scale");
    try {
        hardware.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("hardware configuration: ") + e.what());
    }
}

SweepConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception &e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    SweepConfig cfg;
    if (root.IsNull()) {
        cfg.validate();
        return cfg;
    }
    if (!root.IsMap()) {
        throw ConfigError("config must be a flat key/value mapping");
    }
    bool has_tm = false;
    bool has_ratio = false;
    using Setter = std::function<void(const YAML::Node &, const std::string &)>;
    const std::map<std::string, Setter> setters = {
        {"sweep_kind", [&](auto &n, auto &k) { cfg.sweep_kind = parse_sweep_kind(scalar<std::string>(n, k)); }},
        {"distances", [&](auto &n, auto &k) { cfg.distances = list<uint32_t>(n, k); }},
        {"r_values", [&](auto &n, auto &k) { cfg.r_values = list<double>(n, k); }},
        {"s_values", [&](auto &n, auto &k) { cfg.s_values = list<double>(n, k); }},
        {"fixed_r", [&](auto &n, auto &k) { cfg.fixed_r = scalar<double>(n, k); }},
        {"fixed_s", [&](auto &n, auto &k) { cfg.fixed_s = scalar<double>(n, k); }},
        {"n_shots", [&](auto &n, auto &k) { cfg.n_shots = scalar<uint64_t>(n, k); }},
        {"seed", [&](auto &n, auto &k) { cfg.seed = scalar<uint64_t>(n, k); }},
        {"alpha", [&](auto &n, auto &k) { cfg.alpha = scalar<double>(n, k); }},
        {"alpha_sensitivity", [&](auto &n, auto &k) { cfg.alpha_sensitivity = list<double>(n, k); }},
        {"escalation_factor", [&](auto &n, auto &k) { cfg.escalation_factor = scalar<double>(n, k); }},
        {"refine_steps", [&](auto &n, auto &k) { cfg.refine_steps = scalar<uint32_t>(n, k); }},
        {"workers", [&](auto &n, auto &k) { cfg.workers = scalar<unsigned>(n, k); }},
        {"double_meas_flip", [&](auto &n, auto &k) { cfg.double_meas_flip = scalar<bool>(n, k); }},
        {"t1_us", [&](auto &n, auto &k) { cfg.hardware.t1 = finite_positive(scalar<double>(n, k), k) * 1e-6; }},
        {"t2_us", [&](auto &n, auto &k) { cfg.hardware.t2 = finite_positive(scalar<double>(n, k), k) * 1e-6; }},
        {"t_1q_ns", [&](auto &n, auto &k) { cfg.hardware.t_1q = finite_positive(scalar<double>(n, k), k) * 1e-9; }},
        {"t_2q_ns", [&](auto &n, auto &k) { cfg.hardware.t_2q = finite_positive(scalar<double>(n, k), k) * 1e-9; }},
        {"t_idle_op_ns",
         [&](auto &n, auto &k) { cfg.hardware.t_idle_op = finite_positive(scalar<double>(n, k), k) * 1e-9; }},
        {"t_m_ns",
         [&](auto &n, auto &k) {
             cfg.hardware.t_m = finite_positive(scalar<double>(n, k), k) * 1e-9;
             has_tm = true;
         }},
        {"r_decoh_target",
         [&](auto &n, auto &k) {
             double r = scalar<double>(n, k);
             if (!(r >= 1) || !std::isfinite(r)) {
                 throw ConfigError("config key 'r_decoh_target' must be >= 1");
             }
             cfg.hardware.r_decoh_target = r;
             has_ratio = true;
         }},
        {"p_1q_impl", [&](auto &n, auto &k) { cfg.hardware.p_1q_impl = scalar<double>(n, k); }},
        {"p_2q_impl", [&](auto &n, auto &k) { cfg.hardware.p_2q_impl = scalar<double>(n, k); }},
        {"p_meas_impl", [&](auto &n, auto &k) { cfg.hardware.p_meas_impl = scalar<double>(n, k); }},
        {"noise_scale", [&](auto &n, auto &k) { cfg.noise_scale = scalar<double>(n, k); }},
    };
    for (const auto &kv : root) {
        std::string key = kv.first.as<std::string>();
        auto it = setters.find(key);
        if (it == setters.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        it->second(kv.second, key);
    }
    if (has_tm && has_ratio) {
        throw ConfigError("config keys 't_m_ns' and 'r_decoh_target' are mutually exclusive");
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

HardwareParams effective_hardware(const SweepConfig &cfg) {
    return resolve_measurement_time(apply_noise_scale(cfg.hardware, cfg.noise_scale));
}

}  // namespace mfqec
