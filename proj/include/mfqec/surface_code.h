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

#ifndef MFQEC_SURFACE_CODE_H
#define MFQEC_SURFACE_CODE_H

#include <array>
#include <cstdint>
#include <vector>

#include "mfqec/circuit.h"
#include "mfqec/pauli.h"

namespace mfqec {

struct DataQubit {
    uint32_t row;
    uint32_t col;
    /// 1-based label; the qubit index is label - 1.
    uint32_t label;
};

/// A stabilizer check and the data qubits at its four corners, in the order
/// NW, NE, SW, SE. Missing corners (weight-2 checks) hold kNoQubit.
struct Plaquette {
    static constexpr uint32_t kNoQubit = UINT32_MAX;
    bool is_z;
    uint32_t corner_row;
    uint32_t corner_col;
    std::array<uint32_t, 4> corners;
};

/// Rotated distance-d surface code.
///
/// Data qubits sit on a d x d grid and are labelled column by column in a
/// snake: column c runs downwards for even c and upwards for odd c. For d = 3
///
///     1 6 7
///     2 5 8
///     3 4 9
///
/// A plaquette with corner (i, j), 0 <= i, j <= d, covers rows i-1..i and
/// columns j-1..j; it is Z-type when i + j is even. Weight-2 Z checks sit on
/// the top and bottom edges and weight-2 X checks on the left and right
/// edges, so logical Z runs down the left column and logical X along the top
/// row.
struct SurfaceCodeLayout {
    uint32_t distance = 0;
    std::vector<DataQubit> data_qubits;
    /// Stabilizers act on the d^2 data qubits. Bulk checks come first, then
    /// weight-2 checks, each group ordered by sorted support.
    std::vector<PauliString> z_stabilizers;
    std::vector<PauliString> x_stabilizers;
    std::vector<Plaquette> z_plaquettes;
    std::vector<Plaquette> x_plaquettes;
    PauliString logical_z;
    PauliString logical_x;
    /// Circuit qubit index of each ancilla: Z checks first, then X checks.
    std::vector<uint32_t> ancilla_qubits;

    uint32_t num_data() const {
        return distance * distance;
    }
    uint32_t num_qubits() const {
        return 2 * distance * distance - 1;
    }
    /// Qubit index of the data qubit at (row, col).
    uint32_t data_index(uint32_t row, uint32_t col) const;
};

/// Throws std::invalid_argument unless d is odd and at least 3.
SurfaceCodeLayout build_layout(uint32_t d);

enum class Basis : uint8_t { Z, X };

/// One round of measurement-based syndrome extraction followed by
/// transversal data readout.
///
/// Layers: reset; H on X ancillas (and data for the X basis); four CNOT
/// layers; H on X ancillas; ancilla measurement (with H on data for the X
/// basis); data measurement. Z checks couple NW, NE, SW, SE and X checks
/// couple NW, SW, NE, SE, so X-check hooks run vertically, across logical X.
///
/// For each check of the memory basis there are two detectors: the round
/// outcome alone, and the round outcome XOR the parity of the final data
/// readout on its support. All "round outcome" detectors come first.
CircuitSchedule build_memory_circuit(const SurfaceCodeLayout &layout, Basis basis);

/// Indices of the CNOT, ancilla-H and measurement layers of a memory circuit.
struct MemoryLayers {
    static constexpr uint32_t kReset = 0;
    static constexpr uint32_t kPrepH = 1;
    static constexpr uint32_t kFirstCnot = 2;
    static constexpr uint32_t kReadoutH = 6;
    static constexpr uint32_t kAncillaMeasure = 7;
    static constexpr uint32_t kDataMeasure = 8;
};

/// For each detector, then the observable (last entry): true when its value
/// is fixed on the noiseless circuit. Computed by propagating the measured
/// Z operators backwards and requiring that nothing with an X component
/// reaches a reset.
std::vector<bool> detector_determinism(const CircuitSchedule &schedule);

/// Effect of every non-identity outcome of every noise site, found by
/// propagating each detector and the observable backwards through the
/// circuit and testing anticommutation at the fault's time slice.
std::vector<ElementaryFault> list_elementary_faults(const NoisyCircuit &circuit);

/// Elementary faults merged by identical (detectors, logical flip).
/// Identity-signature faults with no logical effect are dropped.
DetectorErrorModel merge_faults(uint32_t num_detectors, const std::vector<ElementaryFault> &faults);

DetectorErrorModel enumerate_fault_effects(const NoisyCircuit &circuit);

}  // namespace mfqec

#endif
