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

#ifndef MFQEC_MFEC_MODEL_H
#define MFQEC_MFEC_MODEL_H

#include <cstdint>
#include <string>
#include <vector>

#include "mfqec/noise_model.h"

namespace mfqec {

enum class Architecture : uint8_t { SM_SC, MFEC_2D, MFEC_3D };

/// "smsc", "mfec2d", "mfec3d".
const char *architecture_name(Architecture a);
/// Accepts the names above plus the short forms "2d", "3d".
Architecture parse_architecture(const std::string &text);

/// Optimal CNOT count of a Toffoli over Clifford+T.
inline constexpr int kToffoliCnotCount = 6;
/// CNOT count of a doubly-controlled CZ and of the equivalent C^3NOT.
inline constexpr int kCccZCnotCount = 7;
inline constexpr int kC3NotCnotCount = 7;

int toffoli_cnot_count();
int c3not_cnot_count();
int cccz_cnot_count();

/// CNOT count of one X-type (or Z-type) correction round of the three-block
/// gadget, by stage.
struct XRoundBudget {
    uint32_t distance;
    int64_t transversal;
    int64_t extraction;
    int64_t remap;
    int64_t correction;

    int64_t total() const {
        return transversal + extraction + remap + correction;
    }
};

/// d = 3 is itemized exactly: transversal 9, extraction 12, remap 3,
/// correction 3 * 7 + 4 * 6 = 45. For larger d the round total scales with
/// the 3D cycle depth, round(69 * depth(d) / 59); transversal is d^2,
/// extraction is 2 d (d - 1) (one CNOT per stabilizer support element), and
/// the remainder splits 3 : 45 between remap and correction.
XRoundBudget x_round_cnot_budget(uint32_t d);

/// 3D pipelined CNOT depth per cycle: 59 at d = 3, 158 at d = 5, 7 d^2
/// otherwise.
int64_t cnot_depth_3d(uint32_t d);
/// 2D (SWAP-routed) CNOT depth per cycle: 203 at d = 3, 558 at d = 5,
/// 23 d^2 otherwise.
int64_t cnot_depth_2d(uint32_t d);
/// depth_2d / depth_3d: the anchor ratio at d = 3, 5 and 23/7 otherwise.
double depth_ratio_2d_3d(uint32_t d);

struct ResourceProfile {
    Architecture architecture;
    uint32_t distance;
    int64_t n_qubits;
    int64_t n_cnot_per_cycle;
    int64_t cnot_depth_per_cycle;
    /// Total layer depth of one round; only meaningful for SM-SC (8).
    int64_t round_depth;
    int64_t n_gate_locations;
    int64_t n_idle_locations;
    double alpha;
};

inline constexpr double kDefaultAlpha = 3.5;

/// 3D: qubits 4 d^2 - 1, CNOTs 2 * x_round total, gate locations = CNOTs,
/// idles round(alpha * gates). 2D: same qubits, counts scaled by the depth
/// ratio and rounded. SM-SC: qubits 2 d^2 - 1, 4 d (d - 1) CNOTs in four
/// layers, one idle per data qubit.
ResourceProfile build_profile(Architecture arch, uint32_t d, double alpha = kDefaultAlpha);

struct WilsonInterval {
    double low;
    double high;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z = kWilsonZ95);

struct McLogicalEstimate {
    double p_l = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t n_shots = 0;
    uint64_t n_failures = 0;
};

/// Pooled location model: per shot K_gate ~ Bin(n_gate, p_2q) and
/// K_idle ~ Bin(n_idle, p_idle_op); the cycle fails iff
/// K_gate + K_idle > (d - 1) / 2. Each binomial is drawn by inverse CDF from
/// one uniform per (shot, stream), so estimates are monotone in every rate
/// and count under a fixed seed. p_meas is never read.
McLogicalEstimate mc_logical_error(const ResourceProfile &profile, const DerivedRates &rates, uint64_t n_shots,
                                   uint64_t seed);

/// Exact P(K_gate + K_idle >= t + 1) for the same model, summed from the
/// upper tails so small probabilities keep relative precision.
double analytic_logical_error(const ResourceProfile &profile, const DerivedRates &rates);

/// Smallest k with P(Bin(n, p) <= k) > u, capped at `cap`.
int64_t binomial_inverse_cdf(int64_t n, double p, double u, int64_t cap);

}  // namespace mfqec

#endif
