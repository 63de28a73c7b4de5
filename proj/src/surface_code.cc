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

#include "mfqec/surface_code.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "mfqec/errors.h"

namespace mfqec {

namespace {

uint32_t snake_label(uint32_t d, uint32_t row, uint32_t col) {
    return col * d + ((col % 2 == 0) ? row : d - 1 - row) + 1;
}

struct Check {
    Plaquette plaquette;
    std::vector<uint32_t> support;
    bool boundary;
};

bool check_before(const Check &a, const Check &b) {
    if (a.boundary != b.boundary) {
        return !a.boundary;
    }
    return a.support < b.support;
}

}  // namespace

uint32_t SurfaceCodeLayout::data_index(uint32_t row, uint32_t col) const {
    if (row >= distance || col >= distance) {
        throw std::invalid_argument("data_index: coordinate outside the lattice");
    }
    return snake_label(distance, row, col) - 1;
}

SurfaceCodeLayout build_layout(uint32_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("surface code distance must be odd and >= 3, got " + std::to_string(d));
    }
    SurfaceCodeLayout out;
    out.distance = d;
    size_t n = size_t(d) * d;
    for (uint32_t c = 0; c < d; c++) {
        for (uint32_t r = 0; r < d; r++) {
            out.data_qubits.push_back({r, c, snake_label(d, r, c)});
        }
    }
    std::sort(out.data_qubits.begin(), out.data_qubits.end(),
              [](const DataQubit &a, const DataQubit &b) { return a.label < b.label; });

    std::vector<Check> z_checks;
    std::vector<Check> x_checks;
    for (uint32_t i = 0; i <= d; i++) {
        for (uint32_t j = 0; j <= d; j++) {
            bool is_z = (i + j) % 2 == 0;
            bool bulk = i >= 1 && i <= d - 1 && j >= 1 && j <= d - 1;
            bool z_edge = is_z && (i == 0 || i == d) && j >= 1 && j <= d - 1;
            bool x_edge = !is_z && (j == 0 || j == d) && i >= 1 && i <= d - 1;
            if (!bulk && !z_edge && !x_edge) {
                continue;
            }
            Check c{};
            c.plaquette.is_z = is_z;
            c.plaquette.corner_row = i;
            c.plaquette.corner_col = j;
            c.boundary = !bulk;
            // Corners NW, NE, SW, SE.
            const int dr[4] = {-1, -1, 0, 0};
            const int dc[4] = {-1, 0, -1, 0};
            for (int k = 0; k < 4; k++) {
                int r = int(i) + dr[k];
                int col = int(j) + dc[k];
                if (r < 0 || col < 0 || r >= int(d) || col >= int(d)) {
                    c.plaquette.corners[k] = Plaquette::kNoQubit;
                } else {
                    uint32_t q = snake_label(d, r, col) - 1;
                    c.plaquette.corners[k] = q;
                    c.support.push_back(q);
                }
            }
            std::sort(c.support.begin(), c.support.end());
            (is_z ? z_checks : x_checks).push_back(std::move(c));
        }
    }
    std::sort(z_checks.begin(), z_checks.end(), check_before);
    std::sort(x_checks.begin(), x_checks.end(), check_before);
    for (const auto &c : z_checks) {
        out.z_stabilizers.push_back(PauliString::z_on(n, c.support));
        out.z_plaquettes.push_back(c.plaquette);
    }
    for (const auto &c : x_checks) {
        out.x_stabilizers.push_back(PauliString::x_on(n, c.support));
        out.x_plaquettes.push_back(c.plaquette);
    }

    std::vector<uint32_t> left_column;
    std::vector<uint32_t> top_row;
    for (uint32_t k = 0; k < d; k++) {
        left_column.push_back(snake_label(d, k, 0) - 1);
        top_row.push_back(snake_label(d, 0, k) - 1);
    }
    out.logical_z = PauliString::z_on(n, left_column);
    out.logical_x = PauliString::x_on(n, top_row);

    uint32_t n_checks = uint32_t(z_checks.size() + x_checks.size());
    for (uint32_t k = 0; k < n_checks; k++) {
        out.ancilla_qubits.push_back(uint32_t(n) + k);
    }
    return out;
}

CircuitSchedule build_memory_circuit(const SurfaceCodeLayout &layout, Basis basis) {
    const uint32_t n_data = layout.num_data();
    const uint32_t n_z = uint32_t(layout.z_plaquettes.size());
    const uint32_t n_x = uint32_t(layout.x_plaquettes.size());
    CircuitSchedule s;
    s.n_qubits = layout.num_qubits();
    s.layers.resize(9);

    for (uint32_t q = 0; q < s.n_qubits; q++) {
        s.layers[MemoryLayers::kReset].gates.push_back(GateRef::single(GateKind::RESET, q));
    }
    for (uint32_t k = 0; k < n_x; k++) {
        s.layers[MemoryLayers::kPrepH].gates.push_back(GateRef::h(layout.ancilla_qubits[n_z + k]));
    }
    if (basis == Basis::X) {
        for (uint32_t q = 0; q < n_data; q++) {
            s.layers[MemoryLayers::kPrepH].gates.push_back(GateRef::h(q));
        }
    }

    // Corner visiting order per step. Z: NW NE SW SE. X: NW SW NE SE.
    const int z_order[4] = {0, 1, 2, 3};
    const int x_order[4] = {0, 2, 1, 3};
    for (int step = 0; step < 4; step++) {
        auto &gates = s.layers[MemoryLayers::kFirstCnot + step].gates;
        for (uint32_t k = 0; k < n_z; k++) {
            uint32_t q = layout.z_plaquettes[k].corners[z_order[step]];
            if (q != Plaquette::kNoQubit) {
                gates.push_back(GateRef::cnot(q, layout.ancilla_qubits[k]));
            }
        }
        for (uint32_t k = 0; k < n_x; k++) {
            uint32_t q = layout.x_plaquettes[k].corners[x_order[step]];
            if (q != Plaquette::kNoQubit) {
                gates.push_back(GateRef::cnot(layout.ancilla_qubits[n_z + k], q));
            }
        }
    }

    for (uint32_t k = 0; k < n_x; k++) {
        s.layers[MemoryLayers::kReadoutH].gates.push_back(GateRef::h(layout.ancilla_qubits[n_z + k]));
    }
    for (uint32_t k = 0; k < n_z + n_x; k++) {
        s.layers[MemoryLayers::kAncillaMeasure].gates.push_back(
            GateRef::single(GateKind::MEASURE, layout.ancilla_qubits[k]));
    }
    if (basis == Basis::X) {
        for (uint32_t q = 0; q < n_data; q++) {
            s.layers[MemoryLayers::kAncillaMeasure].gates.push_back(GateRef::h(q));
        }
    }
    for (uint32_t q = 0; q < n_data; q++) {
        s.layers[MemoryLayers::kDataMeasure].gates.push_back(GateRef::single(GateKind::MEASURE, q));
    }

    // Record layout: ancilla outcomes 0 .. n_z+n_x-1, then data in index order.
    const uint32_t data_base = n_z + n_x;
    const auto &stabs = basis == Basis::Z ? layout.z_stabilizers : layout.x_stabilizers;
    const uint32_t offset = basis == Basis::Z ? 0 : n_z;
    for (uint32_t k = 0; k < stabs.size(); k++) {
        s.detectors.push_back({offset + k});
    }
    for (uint32_t k = 0; k < stabs.size(); k++) {
        std::vector<uint32_t> det{offset + k};
        for (uint32_t q : stabs[k].support()) {
            det.push_back(data_base + q);
        }
        s.detectors.push_back(std::move(det));
    }
    const auto &logical = basis == Basis::Z ? layout.logical_z : layout.logical_x;
    for (uint32_t q : logical.support()) {
        s.logical_observable.push_back(data_base + q);
    }
    s.validate();
    return s;
}

namespace {

/// Backward sweep shared by the determinism check and fault enumeration.
/// `visit(slice, sensitivities)` is called for every slice from the end of
/// the circuit down to 0.
template <typename Visit>
std::vector<bool> propagate_backwards(const CircuitSchedule &s, Visit &&visit) {
    std::vector<std::vector<uint32_t>> targets = s.detectors;
    targets.push_back(s.logical_observable);
    size_t n_targets = targets.size();

    // Which targets include each measurement record.
    size_t n_meas = s.num_measurements();
    std::vector<std::vector<uint32_t>> users(n_meas);
    for (size_t t = 0; t < n_targets; t++) {
        for (uint32_t m : targets[t]) {
            users[m].push_back(uint32_t(t));
        }
    }
    // Record index of each MEASURE, in layer order.
    std::vector<std::vector<uint32_t>> layer_records(s.layers.size());
    uint32_t rec = 0;
    for (size_t k = 0; k < s.layers.size(); k++) {
        for (const auto &g : s.layers[k].gates) {
            if (g.kind == GateKind::MEASURE) {
                layer_records[k].push_back(rec++);
            }
        }
    }

    std::vector<PauliString> sens(n_targets, PauliString(s.n_qubits));
    std::vector<bool> deterministic(n_targets, true);
    uint32_t n_layers = uint32_t(s.layers.size());
    visit(n_layers, sens);
    for (uint32_t k = n_layers; k-- > 0;) {
        const auto &gates = s.layers[k].gates;
        size_t m_idx = layer_records[k].size();
        for (size_t gi = gates.size(); gi-- > 0;) {
            const GateRef &g = gates[gi];
            switch (g.kind) {
                case GateKind::MEASURE: {
                    uint32_t m = layer_records[k][--m_idx];
                    uint32_t q = g.targets[0];
                    for (uint32_t t : users[m]) {
                        Pauli p = sens[t].get(q);
                        sens[t].set(q, static_cast<Pauli>(uint8_t(p) ^ uint8_t(Pauli::Z)));
                    }
                    break;
                }
                case GateKind::RESET: {
                    uint32_t q = g.targets[0];
                    for (size_t t = 0; t < n_targets; t++) {
                        if (sens[t].x(q)) {
                            deterministic[t] = false;
                        }
                        sens[t].set(q, Pauli::I);
                    }
                    break;
                }
                case GateKind::IDLE:
                    break;
                default:
                    for (size_t t = 0; t < n_targets; t++) {
                        sens[t] = conjugate_through_gate(sens[t], g);
                    }
                    break;
            }
        }
        visit(k, sens);
    }
    for (size_t t = 0; t < n_targets; t++) {
        if (sens[t].x_support().size()) {
            deterministic[t] = false;
        }
    }
    return deterministic;
}

}  // namespace

std::vector<bool> detector_determinism(const CircuitSchedule &schedule) {
    return propagate_backwards(schedule, [](uint32_t, const std::vector<PauliString> &) {});
}

std::vector<ElementaryFault> list_elementary_faults(const NoisyCircuit &circuit) {
    const auto &sites = circuit.sites;
    std::vector<std::vector<uint32_t>> by_slice(circuit.schedule.layers.size() + 1);
    for (uint32_t i = 0; i < sites.size(); i++) {
        if (sites[i].slice >= by_slice.size()) {
            throw std::invalid_argument("noise site " + std::to_string(i) + " has a slice past the circuit end");
        }
        by_slice[sites[i].slice].push_back(i);
    }
    const uint32_t n_det = uint32_t(circuit.schedule.detectors.size());

    // faults[site][outcome - 1]
    std::vector<std::vector<ElementaryFault>> per_site(sites.size());
    for (uint32_t i = 0; i < sites.size(); i++) {
        uint32_t n_out = num_outcomes(sites[i].channel);
        for (uint32_t o = 1; o <= n_out; o++) {
            per_site[i].push_back({i, o, sites[i].probability / n_out, {}, false});
        }
    }

    propagate_backwards(circuit.schedule, [&](uint32_t slice, const std::vector<PauliString> &sens) {
        for (uint32_t i : by_slice[slice]) {
            const NoiseSite &site = sites[i];
            for (uint32_t t = 0; t < sens.size(); t++) {
                bool sx0 = sens[t].x(site.qubits[0]);
                bool sz0 = sens[t].z(site.qubits[0]);
                bool sx1 = sens[t].x(site.qubits[1]);
                bool sz1 = sens[t].z(site.qubits[1]);
                for (auto &f : per_site[i]) {
                    auto [a, b] = outcome_paulis(site.channel, f.outcome);
                    bool ax = uint8_t(a) & 1, az = uint8_t(a) >> 1;
                    bool bx = uint8_t(b) & 1, bz = uint8_t(b) >> 1;
                    bool anti = (ax && sz0) ^ (az && sx0);
                    if (site.channel == Channel::DEPOLARIZE2) {
                        anti ^= (bx && sz1) ^ (bz && sx1);
                    }
                    if (!anti) {
                        continue;
                    }
                    if (t < n_det) {
                        f.detectors.push_back(t);
                    } else {
                        f.logical_flip = true;
                    }
                }
            }
        }
    });

    std::vector<ElementaryFault> out;
    for (auto &v : per_site) {
        for (auto &f : v) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

DetectorErrorModel merge_faults(uint32_t num_detectors, const std::vector<ElementaryFault> &faults) {
    std::map<std::pair<std::vector<uint32_t>, bool>, double> merged;
    for (const auto &f : faults) {
        if (f.detectors.empty() && !f.logical_flip) {
            continue;
        }
        if (f.probability <= 0) {
            continue;
        }
        auto key = std::make_pair(f.detectors, f.logical_flip);
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(std::move(key), f.probability);
        } else {
            it->second = xor_probability(it->second, f.probability);
        }
    }
    DetectorErrorModel dem;
    dem.num_detectors = num_detectors;
    for (auto &[key, p] : merged) {
        dem.faults.push_back({key.first, key.second, p});
    }
    return dem;
}

DetectorErrorModel enumerate_fault_effects(const NoisyCircuit &circuit) {
    return merge_faults(uint32_t(circuit.schedule.detectors.size()), list_elementary_faults(circuit));
}

}  // namespace mfqec
