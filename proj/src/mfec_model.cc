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

#include "mfqec/mfec_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mfqec/rng.h"

namespace mfqec {

namespace {

void require_code_distance(uint32_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("distance must be odd and >= 3, got " + std::to_string(d));
    }
}

void require_mfec(const ResourceProfile &p) {
    if (p.architecture == Architecture::SM_SC) {
        throw std::invalid_argument("the location model applies to MFEC profiles only; SM-SC uses frame simulation");
    }
}

/// CDF of Bin(n, p) at k = 0 .. cap - 1 via the pmf recurrence in log space.
std::vector<double> binomial_cdf_prefix(int64_t n, double p, int64_t cap) {
    std::vector<double> cdf;
    int64_t kmax = std::min(cap, n + 1);
    cdf.reserve(std::max<int64_t>(0, kmax));
    if (p <= 0) {
        cdf.assign(kmax, 1.0);
        return cdf;
    }
    if (p >= 1) {
        for (int64_t k = 0; k < kmax; k++) {
            cdf.push_back(k == n ? 1.0 : 0.0);
        }
        return cdf;
    }
    double log_pmf = double(n) * std::log1p(-p);
    double log_odds = std::log(p) - std::log1p(-p);
    double acc = 0;
    for (int64_t k = 0; k < kmax; k++) {
        if (k > 0) {
            log_pmf += std::log(double(n - k + 1)) - std::log(double(k)) + log_odds;
        }
        acc += std::exp(log_pmf);
        cdf.push_back(std::min(acc, 1.0));
    }
    return cdf;
}

int64_t invert(const std::vector<double> &cdf, double u, int64_t cap) {
    for (size_t k = 0; k < cdf.size(); k++) {
        if (u < cdf[k]) {
            return int64_t(k);
        }
    }
    return cap;
}

/// log C(n, k) + k log p + (n - k) log(1 - p), via lgamma.
double log_binomial_pmf(int64_t n, int64_t k, double p) {
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1) +
           double(k) * std::log(p) + double(n - k) * std::log1p(-p);
}

double pmf(int64_t n, int64_t k, double p) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (p <= 0) {
        return k == 0 ? 1 : 0;
    }
    if (p >= 1) {
        return k == n ? 1 : 0;
    }
    return std::exp(log_binomial_pmf(n, k, p));
}

/// P(Bin(n, p) >= m).
double upper_tail(int64_t n, double p, int64_t m) {
    if (m <= 0) {
        return 1;
    }
    if (m > n) {
        return 0;
    }
    double sum = 0;
    for (int64_t k = m; k <= n; k++) {
        double term = pmf(n, k, p);
        sum += term;
        if (k > n * p + 1 && term < sum * 1e-18) {
            break;
        }
    }
    return std::min(sum, 1.0);
}

}  // namespace

const char *architecture_name(Architecture a) {
    switch (a) {
        case Architecture::SM_SC:
            return "smsc";
        case Architecture::MFEC_2D:
            return "mfec2d";
        case Architecture::MFEC_3D:
            return "mfec3d";
    }
    return "?";
}

Architecture parse_architecture(const std::string &text) {
    if (text == "smsc" || text == "sm-sc") {
        return Architecture::SM_SC;
    }
    if (text == "2d" || text == "mfec2d") {
        return Architecture::MFEC_2D;
    }
    if (text == "3d" || text == "mfec3d") {
        return Architecture::MFEC_3D;
    }
    throw std::invalid_argument("unknown architecture '" + text + "' (expected smsc, 2d or 3d)");
}

int toffoli_cnot_count() {
    return kToffoliCnotCount;
}
int c3not_cnot_count() {
    return kC3NotCnotCount;
}
int cccz_cnot_count() {
    return kCccZCnotCount;
}

int64_t cnot_depth_3d(uint32_t d) {
    require_code_distance(d);
    if (d == 3) {
        return 59;
    }
    if (d == 5) {
        return 158;
    }
    return 7 * int64_t(d) * d;
}

int64_t cnot_depth_2d(uint32_t d) {
    require_code_distance(d);
    if (d == 3) {
        return 203;
    }
    if (d == 5) {
        return 558;
    }
    return 23 * int64_t(d) * d;
}

double depth_ratio_2d_3d(uint32_t d) {
    return double(cnot_depth_2d(d)) / double(cnot_depth_3d(d));
}

XRoundBudget x_round_cnot_budget(uint32_t d) {
    require_code_distance(d);
    XRoundBudget b{};
    b.distance = d;
    if (d == 3) {
        b.transversal = 9;
        b.extraction = 12;
        b.remap = 3;
        b.correction = 3 * kC3NotCnotCount + 4 * kToffoliCnotCount;
        return b;
    }
    int64_t total = std::llround(69.0 * double(cnot_depth_3d(d)) / 59.0);
    b.transversal = int64_t(d) * d;
    b.extraction = 2 * int64_t(d) * (d - 1);
    int64_t rest = total - b.transversal - b.extraction;
    b.remap = std::llround(double(rest) * 3.0 / 48.0);
    b.correction = rest - b.remap;
    return b;
}

ResourceProfile build_profile(Architecture arch, uint32_t d, double alpha) {
    require_code_distance(d);
    if (!(alpha >= 0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite and non-negative");
    }
    ResourceProfile p{};
    p.architecture = arch;
    p.distance = d;
    int64_t dd = int64_t(d) * d;
    if (arch == Architecture::SM_SC) {
        p.n_qubits = 2 * dd - 1;
        p.n_cnot_per_cycle = 4 * int64_t(d) * (d - 1);
        p.cnot_depth_per_cycle = 4;
        p.round_depth = 8;
        p.n_gate_locations = p.n_cnot_per_cycle;
        p.n_idle_locations = dd;
        p.alpha = 0;
        return p;
    }
    int64_t cnots_3d = 2 * x_round_cnot_budget(d).total();
    int64_t idles_3d = std::llround(alpha * double(cnots_3d));
    p.n_qubits = 4 * dd - 1;
    p.alpha = alpha;
    p.round_depth = 0;
    if (arch == Architecture::MFEC_3D) {
        p.n_cnot_per_cycle = cnots_3d;
        p.cnot_depth_per_cycle = cnot_depth_3d(d);
        p.n_gate_locations = cnots_3d;
        p.n_idle_locations = idles_3d;
    } else {
        double ratio = depth_ratio_2d_3d(d);
        p.n_cnot_per_cycle = std::llround(double(cnots_3d) * ratio);
        p.cnot_depth_per_cycle = cnot_depth_2d(d);
        p.n_gate_locations = p.n_cnot_per_cycle;
        p.n_idle_locations = std::llround(double(idles_3d) * ratio);
    }
    return p;
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    double n = double(trials);
    double phat = double(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
    // Keep the point estimate inside the interval under rounding.
    w.low = std::min(w.low, phat);
    w.high = std::max(w.high, phat);
    return w;
}

int64_t binomial_inverse_cdf(int64_t n, double p, double u, int64_t cap) {
    return invert(binomial_cdf_prefix(n, p, cap), u, cap);
}

McLogicalEstimate mc_logical_error(const ResourceProfile &profile, const DerivedRates &rates, uint64_t n_shots,
                                   uint64_t seed) {
    require_mfec(profile);
    if (n_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    const int64_t t = (int64_t(profile.distance) - 1) / 2;
    const int64_t cap = t + 1;
    auto cdf_gate = binomial_cdf_prefix(profile.n_gate_locations, rates.p_2q, cap);
    auto cdf_idle = binomial_cdf_prefix(profile.n_idle_locations, rates.p_idle_op, cap);
    uint64_t failures = 0;
    for (uint64_t shot = 0; shot < n_shots; shot++) {
        int64_t kg = invert(cdf_gate, to_unit(counter_hash(seed, shot, 0)), cap);
        int64_t ki = invert(cdf_idle, to_unit(counter_hash(seed, shot, 1)), cap);
        failures += (kg + ki > t);
    }
    McLogicalEstimate e;
    e.n_shots = n_shots;
    e.n_failures = failures;
    e.p_l = double(failures) / double(n_shots);
    auto w = wilson_interval(failures, n_shots);
    e.ci_low = w.low;
    e.ci_high = w.high;
    return e;
}

double analytic_logical_error(const ResourceProfile &profile, const DerivedRates &rates) {
    require_mfec(profile);
    const int64_t t = (int64_t(profile.distance) - 1) / 2;
    const int64_t ng = profile.n_gate_locations;
    const int64_t ni = profile.n_idle_locations;
    const double pg = rates.p_2q;
    const double pi = rates.p_idle_op;
    // P(Kg + Ki >= t+1) = P(Kg >= t+1) + sum_{a <= t} P(Kg = a) P(Ki >= t+1-a).
    double total = upper_tail(ng, pg, t + 1);
    for (int64_t a = 0; a <= t; a++) {
        total += pmf(ng, a, pg) * upper_tail(ni, pi, t + 1 - a);
    }
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace mfqec
