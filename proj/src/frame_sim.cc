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

#include "mfqec/frame_sim.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "mfqec/errors.h"
#include "mfqec/rng.h"

namespace mfqec {

NoisyCircuit make_noisy_circuit(const CircuitSchedule &schedule, const DerivedRates &rates,
                                const std::vector<uint32_t> &idle_qubits, uint32_t idle_slice,
                                const NoiseOptions &options) {
    schedule.validate();
    uint32_t n_layers = uint32_t(schedule.layers.size());
    if (idle_slice > n_layers) {
        throw std::invalid_argument("idle slice past the end of the circuit");
    }
    int flips = options.double_meas_flip ? 2 : 1;
    std::vector<std::vector<NoiseSite>> by_slice(n_layers + 1);
    for (uint32_t k = 0; k < n_layers; k++) {
        for (const auto &g : schedule.layers[k].gates) {
            switch (g.kind) {
                case GateKind::CNOT:
                    by_slice[k + 1].push_back({Channel::DEPOLARIZE2, rates.p_2q, {g.targets[0], g.targets[1]}, k + 1});
                    break;
                case GateKind::RESET:
                    for (int f = 0; f < flips; f++) {
                        by_slice[k + 1].push_back({Channel::FLIP, rates.p_meas, {g.targets[0], 0}, k + 1});
                    }
                    break;
                case GateKind::MEASURE:
                    for (int f = 0; f < flips; f++) {
                        by_slice[k].push_back({Channel::FLIP, rates.p_meas, {g.targets[0], 0}, k});
                    }
                    break;
                default:
                    break;
            }
        }
    }
    for (uint32_t q : idle_qubits) {
        if (q >= schedule.n_qubits) {
            throw std::invalid_argument("idle qubit outside the register");
        }
        by_slice[idle_slice].push_back({Channel::IDLE1, rates.p_idle_op, {q, 0}, idle_slice});
    }
    NoisyCircuit out;
    out.schedule = schedule;
    for (auto &v : by_slice) {
        for (auto &site : v) {
            out.sites.push_back(site);
        }
    }
    return out;
}

NoisyCircuit make_memory_noisy_circuit(const SurfaceCodeLayout &layout, Basis basis, const DerivedRates &rates,
                                       const NoiseOptions &options) {
    std::vector<uint32_t> data(layout.num_data());
    for (uint32_t q = 0; q < data.size(); q++) {
        data[q] = q;
    }
    return make_noisy_circuit(build_memory_circuit(layout, basis), rates, data, MemoryLayers::kReadoutH, options);
}

FrameSimulator::FrameSimulator(const NoisyCircuit &circuit)
    : n_qubits_(circuit.schedule.n_qubits),
      n_det_(uint32_t(circuit.schedule.detectors.size())),
      sites_(circuit.sites),
      detectors_(circuit.schedule.detectors),
      observable_(circuit.schedule.logical_observable),
      n_meas_(circuit.schedule.num_measurements()) {
    const auto &layers = circuit.schedule.layers;
    std::vector<std::vector<uint32_t>> by_slice(layers.size() + 1);
    for (uint32_t i = 0; i < sites_.size(); i++) {
        if (sites_[i].slice > layers.size()) {
            throw std::invalid_argument("noise site " + std::to_string(i) + " has a slice past the circuit end");
        }
        by_slice[sites_[i].slice].push_back(i);
    }
    for (size_t k = 0; k <= layers.size(); k++) {
        for (uint32_t i : by_slice[k]) {
            ops_.push_back({Op::NOISE, sites_[i].qubits[0], sites_[i].qubits[1], i});
        }
        if (k == layers.size()) {
            break;
        }
        for (const auto &g : layers[k].gates) {
            switch (g.kind) {
                case GateKind::CNOT:
                    ops_.push_back({Op::CNOT, g.targets[0], g.targets[1], 0});
                    break;
                case GateKind::H:
                    ops_.push_back({Op::H, g.targets[0], 0, 0});
                    break;
                case GateKind::SWAP:
                    ops_.push_back({Op::SWAP, g.targets[0], g.targets[1], 0});
                    break;
                case GateKind::RESET:
                    ops_.push_back({Op::RESET, g.targets[0], 0, 0});
                    break;
                case GateKind::MEASURE:
                    ops_.push_back({Op::MEASURE, g.targets[0], 0, 0});
                    break;
                case GateKind::IDLE:
                    break;
                default:
                    throw UnsupportedGate(std::string("frame simulation does not support ") + gate_name(g.kind));
            }
        }
    }
}

template <typename Draw>
void FrameSimulator::run(Draw &&draw, std::vector<uint8_t> &xs, std::vector<uint8_t> &zs,
                         std::vector<uint8_t> &rec, uint8_t *det_out, uint8_t *obs_out) const {
    std::fill(xs.begin(), xs.end(), 0);
    std::fill(zs.begin(), zs.end(), 0);
    rec.clear();
    for (const Op &op : ops_) {
        switch (op.kind) {
            case Op::CNOT:
                xs[op.q1] ^= xs[op.q0];
                zs[op.q0] ^= zs[op.q1];
                break;
            case Op::H:
                std::swap(xs[op.q0], zs[op.q0]);
                break;
            case Op::SWAP:
                std::swap(xs[op.q0], xs[op.q1]);
                std::swap(zs[op.q0], zs[op.q1]);
                break;
            case Op::RESET:
                xs[op.q0] = 0;
                zs[op.q0] = 0;
                break;
            case Op::MEASURE:
                rec.push_back(xs[op.q0]);
                break;
            case Op::NOISE: {
                uint32_t outcome = draw(op.site);
                if (outcome == 0) {
                    break;
                }
                auto [a, b] = outcome_paulis(sites_[op.site].channel, outcome);
                xs[op.q0] ^= uint8_t(a) & 1;
                zs[op.q0] ^= uint8_t(a) >> 1;
                if (sites_[op.site].channel == Channel::DEPOLARIZE2) {
                    xs[op.q1] ^= uint8_t(b) & 1;
                    zs[op.q1] ^= uint8_t(b) >> 1;
                }
                break;
            }
        }
    }
    for (uint32_t d = 0; d < n_det_; d++) {
        uint8_t v = 0;
        for (uint32_t m : detectors_[d]) {
            v ^= rec[m];
        }
        det_out[d] = v;
    }
    uint8_t v = 0;
    for (uint32_t m : observable_) {
        v ^= rec[m];
    }
    *obs_out = v;
}

ShotResult FrameSimulator::run_shot(uint64_t seed, uint64_t shot) const {
    SampleBatch batch;
    sample_range(seed, shot, 1, batch);
    return {batch.detectors, batch.logical[0]};
}

ShotResult FrameSimulator::run_with_faults(const std::vector<std::pair<uint32_t, uint32_t>> &faults) const {
    std::vector<uint32_t> forced(sites_.size(), 0);
    for (auto [site, outcome] : faults) {
        if (site >= sites_.size()) {
            throw std::invalid_argument("site index " + std::to_string(site) + " out of range");
        }
        if (outcome > num_outcomes(sites_[site].channel)) {
            throw std::invalid_argument("outcome " + std::to_string(outcome) + " out of range for site " +
                                        std::to_string(site));
        }
        forced[site] = outcome;
    }
    std::vector<uint8_t> xs(n_qubits_), zs(n_qubits_), rec;
    rec.reserve(n_meas_);
    ShotResult r;
    r.detectors.resize(n_det_);
    run([&](uint32_t site) { return forced[site]; }, xs, zs, rec, r.detectors.data(), &r.logical_flip);
    return r;
}

void FrameSimulator::sample_range(uint64_t seed, uint64_t first, uint64_t count, SampleBatch &out) const {
    out.num_detectors = n_det_;
    out.num_shots = count;
    out.detectors.assign(count * n_det_, 0);
    out.logical.assign(count, 0);
    std::vector<uint8_t> xs(n_qubits_), zs(n_qubits_), rec;
    rec.reserve(n_meas_);
    for (uint64_t k = 0; k < count; k++) {
        uint64_t shot = first + k;
        auto draw = [&](uint32_t site) -> uint32_t {
            const NoiseSite &s = sites_[site];
            if (s.probability <= 0) {
                return 0;
            }
            double u = to_unit(counter_hash(seed, shot, site));
            if (!(u < s.probability)) {
                return 0;
            }
            // Conditional on a hit, u / p is uniform on [0, 1).
            uint32_t n = num_outcomes(s.channel);
            uint32_t pick = uint32_t(u / s.probability * n);
            return 1 + std::min(pick, n - 1);
        };
        run(draw, xs, zs, rec, out.detectors.data() + k * n_det_, out.logical.data() + k);
    }
}

SampleBatch sample(const NoisyCircuit &circuit, uint64_t n_shots, uint64_t seed, unsigned workers) {
    FrameSimulator sim(circuit);
    SampleBatch out;
    out.num_detectors = sim.num_detectors();
    out.num_shots = n_shots;
    out.detectors.assign(n_shots * out.num_detectors, 0);
    out.logical.assign(n_shots, 0);
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<uint64_t>(1, n_shots / 256))));
    auto work = [&](uint64_t begin, uint64_t end) {
        SampleBatch part;
        sim.sample_range(seed, begin, end - begin, part);
        std::copy(part.detectors.begin(), part.detectors.end(), out.detectors.begin() + begin * out.num_detectors);
        std::copy(part.logical.begin(), part.logical.end(), out.logical.begin() + begin);
    };
    if (workers == 1) {
        work(0, n_shots);
        return out;
    }
    std::vector<std::thread> threads;
    uint64_t chunk = (n_shots + workers - 1) / workers;
    for (unsigned w = 0; w < workers; w++) {
        uint64_t begin = std::min<uint64_t>(n_shots, w * chunk);
        uint64_t end = std::min<uint64_t>(n_shots, begin + chunk);
        if (begin < end) {
            threads.emplace_back(work, begin, end);
        }
    }
    for (auto &t : threads) {
        t.join();
    }
    return out;
}

ShotResult inject_single_fault(const NoisyCircuit &circuit, uint32_t site_index, uint32_t pauli_outcome) {
    FrameSimulator sim(circuit);
    return sim.run_with_faults({{site_index, pauli_outcome}});
}

}  // namespace mfqec
