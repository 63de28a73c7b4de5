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

#include "mfqec/circuit.h"

#include <sstream>
#include <stdexcept>

namespace mfqec {

size_t CircuitSchedule::num_measurements() const {
    return count(GateKind::MEASURE);
}

size_t CircuitSchedule::count(GateKind kind) const {
    size_t n = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer.gates) {
            n += g.kind == kind;
        }
    }
    return n;
}

size_t CircuitSchedule::cnot_depth() const {
    size_t n = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer.gates) {
            if (g.kind == GateKind::CNOT) {
                n++;
                break;
            }
        }
    }
    return n;
}

void CircuitSchedule::validate() const {
    std::vector<size_t> last_use(n_qubits, SIZE_MAX);
    for (size_t k = 0; k < layers.size(); k++) {
        for (const auto &g : layers[k].gates) {
            for (uint8_t j = 0; j < g.arity; j++) {
                uint32_t q = g.targets[j];
                if (q >= n_qubits) {
                    throw std::invalid_argument("layer " + std::to_string(k) + " uses qubit " + std::to_string(q) +
                                                " outside the register");
                }
                if (last_use[q] == k) {
                    throw std::invalid_argument("layer " + std::to_string(k) + " uses qubit " + std::to_string(q) +
                                                " twice");
                }
                last_use[q] = k;
            }
        }
    }
    size_t m = num_measurements();
    for (const auto &det : detectors) {
        for (uint32_t r : det) {
            if (r >= m) {
                throw std::invalid_argument("detector references missing measurement " + std::to_string(r));
            }
        }
    }
    for (uint32_t r : logical_observable) {
        if (r >= m) {
            throw std::invalid_argument("observable references missing measurement " + std::to_string(r));
        }
    }
}

std::string CircuitSchedule::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < layers.size(); k++) {
        out << "layer " << k << ":";
        for (const auto &g : layers[k].gates) {
            out << ' ' << gate_name(g.kind) << '(';
            for (uint8_t j = 0; j < g.arity; j++) {
                out << (j ? "," : "") << g.targets[j];
            }
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

uint32_t num_outcomes(Channel c) {
    switch (c) {
        case Channel::DEPOLARIZE2:
            return 15;
        case Channel::IDLE1:
            return 3;
        case Channel::FLIP:
            return 1;
    }
    return 0;
}

std::pair<Pauli, Pauli> outcome_paulis(Channel c, uint32_t outcome) {
    if (outcome == 0 || outcome > num_outcomes(c)) {
        return {Pauli::I, Pauli::I};
    }
    switch (c) {
        case Channel::DEPOLARIZE2:
            return {static_cast<Pauli>(outcome & 3), static_cast<Pauli>(outcome >> 2)};
        case Channel::IDLE1:
            return {static_cast<Pauli>(outcome), Pauli::I};
        case Channel::FLIP:
            return {Pauli::X, Pauli::I};
    }
    return {Pauli::I, Pauli::I};
}

std::string DetectorErrorModel::str() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto &f : faults) {
        out << "error(" << f.probability << ")";
        for (uint32_t d : f.detectors) {
            out << " D" << d;
        }
        if (f.logical_flip) {
            out << " L0";
        }
        out << '\n';
    }
    return out.str();
}

double xor_probability(double p1, double p2) {
    return p1 * (1 - p2) + p2 * (1 - p1);
}

}  // namespace mfqec
