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

#ifndef MFQEC_EXPERIMENTS_H
#define MFQEC_EXPERIMENTS_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mfqec/config.h"
#include "mfqec/frame_sim.h"
#include "mfqec/mfec_model.h"
#include "mfqec/noise_model.h"

namespace mfqec {

inline constexpr const char *kSweepCsvHeader = "arch,d,r_decoh,s,p_l,ci_low,ci_high,n_shots,seed";
inline constexpr const char *kBreakevenCsvHeader = "d,alpha,r_star,r_low,r_high,status";

/// Rates at decoherence ratio r and noise scale s: T1 and T2 are divided by
/// s, then t_m is solved so that the measurement/idle decoherence ratio is r.
DerivedRates rates_for_point(const HardwareParams &base, double r, double s);

/// One-round Z-memory logical error: frame-simulated shots decoded by
/// matching; a shot fails when the prediction differs from the actual flip.
McLogicalEstimate estimate_smsc(uint32_t d, const DerivedRates &rates, uint64_t n_shots, uint64_t seed,
                                const NoiseOptions &options = {}, unsigned workers = 1);

/// Seed of the (architecture, distance) job family. The same seed is used at
/// every point of a sweep, so neighbouring points share random numbers.
uint64_t job_seed(uint64_t seed, Architecture arch, uint32_t d);

struct SweepRow {
    Architecture arch;
    uint32_t d;
    double r_decoh;
    double s;
    McLogicalEstimate estimate;
    uint64_t seed;
    DerivedRates rates;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    /// Header line plus one line per row, in config order.
    std::string csv() const;
    /// Per-row rates consumed by every architecture at each point.
    std::string audit() const;
};

/// Rows are ordered by distance, then sweep point, then SM-SC, MFEC-3D,
/// MFEC-2D. Output does not depend on cfg.workers.
SweepResult run_sweep(const SweepConfig &cfg);

struct BreakevenResult {
    uint32_t d = 0;
    double alpha = 0;
    double r_star = 0;
    double r_low = 0;
    double r_high = 0;
    /// "resolved": CIs separate on both sides of r_star.
    /// "interval": crossing found, CIs overlap on at least one side.
    /// "below_range" / "above_range": SM-SC is worse / better on the
    /// whole grid. "no_crossing": no consistent bracket after refinement.
    std::string status;
};

using Evaluator = std::function<McLogicalEstimate(double r, uint64_t n_shots)>;

/// Crossing of log p_smsc(r) and log p_mfec in log r. Brackets the first
/// sign change on the grid, re-runs the bracket at escalation x shots,
/// bisects `refine_steps` times in log r, then interpolates linearly in
/// log r - log p. `mfec` is evaluated at the first grid value only.
BreakevenResult locate_breakeven(const std::vector<double> &r_grid, const Evaluator &smsc, const Evaluator &mfec,
                                 uint64_t n_shots, double escalation, uint32_t refine_steps);

/// Break-even between SM-SC and MFEC-3D at distance d with the config's
/// grid, seeds and noise scale fixed_s.
BreakevenResult find_breakeven(uint32_t d, const SweepConfig &cfg, double alpha);

/// All (distance, alpha) pairs of the config, distance-major.
std::vector<BreakevenResult> run_breakeven(const SweepConfig &cfg);

std::string breakeven_csv(const std::vector<BreakevenResult> &rows);

/// Shortest round-trip decimal form ("nan" for NaN).
std::string format_number(double v);

}  // namespace mfqec

#endif
