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

#ifndef MFQEC_CONFIG_H
#define MFQEC_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfqec/noise_model.h"

namespace mfqec {

enum class SweepKind : uint8_t { R_DECOH, NOISE_SCALE, DISTANCE };

const char *sweep_kind_name(SweepKind k);
/// "rdecoh", "noise-scale" or "distance".
SweepKind parse_sweep_kind(const std::string &text);

/// `n` evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, size_t n);

struct SweepConfig {
    SweepKind sweep_kind = SweepKind::R_DECOH;
    std::vector<uint32_t> distances{3, 5, 7, 9, 11};
    std::vector<double> r_values{20, 50, 100, 200, 400, 800};
    std::vector<double> s_values = linspace(0.5, 2.0, 8);
    double fixed_r = 200;
    double fixed_s = 1;
    uint64_t n_shots = 2000;
    uint64_t seed = 20240601;
    double alpha = 3.5;
    std::vector<double> alpha_sensitivity{3.0, 3.5, 4.0};
    double escalation_factor = 10;
    uint32_t refine_steps = 6;
    unsigned workers = 1;
    bool double_meas_flip = false;
    HardwareParams hardware;
    /// Scale applied by single-point commands; sweeps use s_values/fixed_s.
    double noise_scale = 1;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Parses flat YAML "key: value" text. Unknown keys, wrong types and
/// conflicting keys (t_m_ns with r_decoh_target) raise ConfigError naming
/// the key. Hardware keys: t1_us, t2_us, t_1q_ns, t_2q_ns, t_idle_op_ns,
/// t_m_ns, r_decoh_target, p_1q_impl, p_2q_impl, p_meas_impl, noise_scale.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string &path);

/// Hardware with the config's noise_scale applied and t_m resolved.
HardwareParams effective_hardware(const SweepConfig &cfg);

}  // namespace mfqec

#endif
