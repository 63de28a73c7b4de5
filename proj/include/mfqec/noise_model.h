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

#ifndef MFQEC_NOISE_MODEL_H
#define MFQEC_NOISE_MODEL_H

#include <optional>
#include <string>

namespace mfqec {

/// Device timing and implementation error figures. Times are in seconds.
///
/// Exactly one of `t_m` or `r_decoh_target` drives the measurement window:
/// when `r_decoh_target` is set, `t_m` is re-solved from it whenever the
/// coherence times change (see resolve_measurement_time).
struct HardwareParams {
    double t1 = 200e-6;
    double t2 = 150e-6;
    double t_1q = 20e-9;
    double t_2q = 40e-9;
    double t_idle_op = 40e-9;
    double t_m = 40e-9;
    double p_1q_impl = 0.0;
    double p_2q_impl = 2e-4;
    double p_meas_impl = 5e-3;
    std::optional<double> r_decoh_target;

    /// Representative superconducting values with t_m = t_idle_op.
    static HardwareParams base();

    /// Throws std::invalid_argument for non-positive times or probabilities
    /// outside [0, 1]. Returns a warning string (empty if none) when
    /// t2 > 2 t1, which is unphysical but accepted.
    std::string validate() const;
};

/// Effective per-location error probabilities.
struct DerivedRates {
    double p_1q = 0;
    double p_2q = 0;
    double p_idle_op = 0;
    double p_meas = 0;
    /// p_decoh(t_m) / p_decoh(t_idle_op); implementation offsets excluded.
    double r_decoh = 0;

    bool operator==(const DerivedRates &) const = default;
};

/// Probability of a decoherence event in time t:
/// 1 - (1 - p_relax)(1 - p_deph) with p_relax = 1 - exp(-t/T1) and
/// p_deph = 1 - exp(-t/T2). Evaluated as -expm1(-t (1/T1 + 1/T2)) so small t
/// keeps full relative precision.
double p_decoh(double t, double t1, double t2);

/// Applies the gate/idle/measurement assignments and clips each to [0, 1].
DerivedRates derive_rates(const HardwareParams &h);

/// Measurement time at which p_decoh(t_m) / p_decoh(t_idle_op) equals
/// `target_ratio`. Throws std::out_of_range when the required p_decoh
/// reaches 1 and std::invalid_argument for ratios below 1.
double t_m_for_ratio(const HardwareParams &h, double target_ratio);

/// Divides T1 and T2 by `s`; everything else is unchanged.
HardwareParams apply_noise_scale(const HardwareParams &h, double s);

/// If `r_decoh_target` is set, returns a copy with `t_m` solved for it.
HardwareParams resolve_measurement_time(const HardwareParams &h);

}  // namespace mfqec

#endif
