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

#ifndef MFQEC_CIRCUIT_H
#define MFQEC_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "mfqec/pauli.h"

namespace mfqec {

/// One time step. Gates within a layer act on disjoint qubits.
struct Layer {
    std::vector<GateRef> gates;
};

/// Layered Clifford circuit with Z-basis resets and measurements.
///
/// Measurements are numbered in the order they appear (layer by layer, then
/// gate order inside a layer); detectors and the observable refer to those
/// record indices.
struct CircuitSchedule {
    uint32_t n_qubits = 0;
    std::vector<Layer> layers;
    std::vector<std::vector<uint32_t>> detectors;
    std::vector<uint32_t> logical_observable;

    size_t num_measurements() const;
    size_t count(GateKind kind) const;
    /// Number of layers containing at least one CNOT.
    size_t cnot_depth() const;
    /// Throws std::invalid_argument when a layer touches a qubit twice, a
    /// qubit index is out of range, or a detector references a missing
    /// measurement.
    void validate() const;
    /// Human-readable listing, one layer per line.
    std::string str() const;
};

enum class Channel : uint8_t {
    /// Uniform over the 15 non-identity two-qubit Paulis.
    DEPOLARIZE2,
    /// Uniform over X, Y, Z on one qubit.
    IDLE1,
    /// X error; flips a following Z measurement or a preceding Z reset.
    FLIP,
};

/// Number of non-identity outcomes of a channel (15, 3 or 1).
uint32_t num_outcomes(Channel c);

/// Pauli on (first, second) qubit for a 1-based outcome index.
std::pair<Pauli, Pauli> outcome_paulis(Channel c, uint32_t outcome);

/// A noise location. `slice` k means "between layer k-1 and layer k", so a
/// site after layer L has slice L+1 and a site before layer L has slice L.
struct NoiseSite {
    Channel channel;
    double probability;
    uint32_t qubits[2] = {0, 0};
    uint32_t slice = 0;
};

struct NoisyCircuit {
    CircuitSchedule schedule;
    std::vector<NoiseSite> sites;
};

/// Elementary fault: one outcome of one noise site.
struct ElementaryFault {
    uint32_t site;
    uint32_t outcome;
    double probability;
    std::vector<uint32_t> detectors;
    bool logical_flip;
};

struct FaultEffect {
    std::vector<uint32_t> detectors;
    bool logical_flip = false;
    double probability = 0;
};

/// Faults with identical (detector set, logical flip) merged as independent
/// events: p = p1 (1 - p2) + p2 (1 - p1).
struct DetectorErrorModel {
    uint32_t num_detectors = 0;
    std::vector<FaultEffect> faults;

    std::string str() const;
};

double xor_probability(double p1, double p2);

}  // namespace mfqec

#endif
