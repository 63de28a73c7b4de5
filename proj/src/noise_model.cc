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

#include "mfqec/noise_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfqec {

namespace {

double clip01(double p) {
    return std::clamp(p, 0.0, 1.0);
}

void require_positive(double v, const char *name) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be a positive finite time");
    }
}

void require_probability(double v, const char *name) {
    if (!(v >= 0 && v <= 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

HardwareParams HardwareParams::base() {
    return HardwareParams{};
}

std::string HardwareParams::validate() const {
    require_positive(t1, "t1");
    require_positive(t2, "t2");
    require_positive(t_1q, "t_1q");
    require_positive(t_2q, "t_2q");
    require_positive(t_idle_op, "t_idle_op");
    if (!r_decoh_target) {
        require_positive(t_m, "t_m");
    } else if (!(*r_decoh_target >= 1)) {
        throw std::invalid_argument("r_decoh_target must be >= 1");
    }
    require_probability(p_1q_impl, "p_1q_impl");
    require_probability(p_2q_impl, "p_2q_impl");
    require_probability(p_meas_impl, "p_meas_impl");
    if (t2 > 2 * t1) {
        return "t2 exceeds 2*t1 (unphysical coherence times)";
    }
    return {};
}

double p_decoh(double t, double t1, double t2) {
    if (!(t >= 0)) {
        throw std::invalid_argument("p_decoh: time must be non-negative");
    }
    if (!(t1 > 0) || !(t2 > 0)) {
        throw std::invalid_argument("p_decoh: T1 and T2 must be positive");
    }
    if (std::isinf(t)) {
        return 1.0;
    }
    return -std::expm1(-t * (1.0 / t1 + 1.0 / t2));
}

DerivedRates derive_rates(const HardwareParams &h) {
    HardwareParams r = resolve_measurement_time(h);
    r.validate();
    DerivedRates out;
    double idle = p_decoh(r.t_idle_op, r.t1, r.t2);
    double meas = p_decoh(r.t_m, r.t1, r.t2);
    out.p_1q = clip01(p_decoh(r.t_1q, r.t1, r.t2) + r.p_1q_impl);
    out.p_2q = clip01(p_decoh(r.t_2q, r.t1, r.t2) + r.p_2q_impl);
    out.p_idle_op = clip01(idle);
    out.p_meas = clip01(meas + r.p_meas_impl);
    out.r_decoh = meas / idle;
    return out;
}

double t_m_for_ratio(const HardwareParams &h, double target_ratio) {
    if (!(target_ratio >= 1) || !std::isfinite(target_ratio)) {
        throw std::invalid_argument("t_m_for_ratio: target ratio must be a finite value >= 1");
    }
    double idle = p_decoh(h.t_idle_op, h.t1, h.t2);
    double want = target_ratio * idle;
    if (!(want < 1)) {
        throw std::out_of_range("t_m_for_ratio: ratio " + std::to_string(target_ratio) +
                                " needs p_decoh(t_m) >= 1 at these coherence times");
    }
    // p_decoh(t) = 1 - exp(-lambda t) is strictly increasing, so the root is
    // the closed-form inverse.
    double lambda = 1.0 / h.t1 + 1.0 / h.t2;
    return -std::log1p(-want) / lambda;
}

HardwareParams apply_noise_scale(const HardwareParams &h, double s) {
    if (!(s > 0) || !std::isfinite(s)) {
        throw std::invalid_argument("noise scale must be positive");
    }
    HardwareParams out = h;
    out.t1 = h.t1 / s;
    out.t2 = h.t2 / s;
    return out;
}

HardwareParams resolve_measurement_time(const HardwareParams &h) {
    if (!h.r_decoh_target) {
        return h;
    }
    HardwareParams out = h;
    out.t_m = t_m_for_ratio(h, *h.r_decoh_target);
    return out;
}

}  // namespace mfqec
