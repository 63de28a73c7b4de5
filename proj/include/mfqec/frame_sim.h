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

#ifndef MFQEC_FRAME_SIM_H
#define MFQEC_FRAME_SIM_H

#include <cstdint>
#include <utility>
#include <vector>

#include "mfqec/circuit.h"
#include "mfqec/noise_model.h"
#include "mfqec/surface_code.h"

namespace mfqec {

struct NoiseOptions {
    /// Two FLIP sites per reset and per measurement instead of one.
    bool double_meas_flip = false;
};

/// Annotates a schedule with noise sites: DEPOLARIZE2(p_2q) after every
/// CNOT, FLIP(p_meas) after every reset and before every measurement, and
/// IDLE1(p_idle_op) on each of `idle_qubits` at `idle_slice`. Sites are
/// ordered by slice, then by gate order.
NoisyCircuit make_noisy_circuit(const CircuitSchedule &schedule, const DerivedRates &rates,
                                const std::vector<uint32_t> &idle_qubits, uint32_t idle_slice,
                                const NoiseOptions &options = {});

/// Memory circuit with idle noise on every data qubit once, between the
/// last coupling layer and readout.
NoisyCircuit make_memory_noisy_circuit(const SurfaceCodeLayout &layout, Basis basis, const DerivedRates &rates,
                                       const NoiseOptions &options = {});

struct ShotResult {
    std::vector<uint8_t> detectors;
    uint8_t logical_flip = 0;

    bool operator==(const ShotResult &) const = default;
};

/// Detector and observable bits for a block of shots, stored shot-major.
struct SampleBatch {
    uint32_t num_detectors = 0;
    uint64_t num_shots = 0;
    std::vector<uint8_t> detectors;
    std::vector<uint8_t> logical;

    const uint8_t *shot(uint64_t k) const {
        return detectors.data() + k * num_detectors;
    }
};

/// Pauli-frame simulator. Each shot starts from an empty frame, draws every
/// noise site from counter_hash(seed, shot, site), and pushes the frame
/// through the Clifford layers. A shot's result depends only on
/// (circuit, seed, shot index).
class FrameSimulator {
  public:
    explicit FrameSimulator(const NoisyCircuit &circuit);

    uint32_t num_detectors() const {
        return n_det_;
    }
    size_t num_sites() const {
        return sites_.size();
    }

    ShotResult run_shot(uint64_t seed, uint64_t shot) const;

    /// Noiseless run with the listed (site, outcome) faults applied. Outcome
    /// 0 is the identity. Throws std::invalid_argument on bad indices.
    ShotResult run_with_faults(const std::vector<std::pair<uint32_t, uint32_t>> &faults) const;

    /// Shots [first, first + count) written into `out` at offset 0.
    void sample_range(uint64_t seed, uint64_t first, uint64_t count, SampleBatch &out) const;

  private:
    struct Op {
        enum Kind : uint8_t { CNOT, H, SWAP, RESET, MEASURE, NOISE } kind;
        uint32_t q0;
        uint32_t q1;
        uint32_t site;
    };

    template <typename Draw>
    void run(Draw &&draw, std::vector<uint8_t> &xs, std::vector<uint8_t> &zs, std::vector<uint8_t> &rec,
             uint8_t *det_out, uint8_t *obs_out) const;

    uint32_t n_qubits_;
    uint32_t n_det_;
    std::vector<Op> ops_;
    std::vector<NoiseSite> sites_;
    std::vector<std::vector<uint32_t>> detectors_;
    std::vector<uint32_t> observable_;
    size_t n_meas_;
};

/// Samples `n_shots` shots, fanning out over `workers` threads. The result
/// is identical for any worker count.
SampleBatch sample(const NoisyCircuit &circuit, uint64_t n_shots, uint64_t seed, unsigned workers = 1);

ShotResult inject_single_fault(const NoisyCircuit &circuit, uint32_t site_index, uint32_t pauli_outcome);

}  // namespace mfqec

#endif
