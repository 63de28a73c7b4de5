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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "mfqec/experiments.h"
#include "mfqec/surface_code.h"

using namespace mfqec;

namespace {

NoisyCircuit memory(uint32_t d, Basis b, const DerivedRates &r) {
    return make_memory_noisy_circuit(build_layout(d), b, r);
}

DerivedRates uniform_rates(double p) {
    return {0, p, p, p, 1};
}

}  // namespace

TEST(frame_sim, zero_rates_give_zero_shots) {
    for (uint32_t d : {3u, 7u, 11u}) {
        for (Basis b : {Basis::Z, Basis::X}) {
            auto batch = sample(memory(d, b, uniform_rates(0)), 300, 1);
            for (uint8_t v : batch.detectors) {
                ASSERT_EQ(v, 0);
            }
            for (uint8_t v : batch.logical) {
                ASSERT_EQ(v, 0);
            }
        }
    }
}

TEST(frame_sim, forced_x_on_logical_data_qubit) {
    auto l = build_layout(3);
    auto nc = make_memory_noisy_circuit(l, Basis::Z, uniform_rates(0.01));
    const uint32_t n_z = uint32_t(l.z_stabilizers.size());
    for (uint32_t i = 0; i < nc.sites.size(); i++) {
        const auto &s = nc.sites[i];
        if (s.channel != Channel::FLIP || s.slice != MemoryLayers::kDataMeasure) {
            continue;
        }
        uint32_t q = s.qubits[0];
        auto shot = inject_single_fault(nc, i, 1);
        EXPECT_EQ(shot.logical_flip, l.logical_z.z(q) ? 1 : 0);
        for (uint32_t k = 0; k < n_z; k++) {
            EXPECT_EQ(shot.detectors[k], 0);
            EXPECT_EQ(shot.detectors[n_z + k], l.z_stabilizers[k].z(q) ? 1 : 0);
        }
    }
}

TEST(frame_sim, identity_outcome_and_bad_indices) {
    auto nc = memory(3, Basis::Z, uniform_rates(0.01));
    for (uint32_t i = 0; i < nc.sites.size(); i++) {
        auto shot = inject_single_fault(nc, i, 0);
        EXPECT_EQ(shot, (ShotResult{std::vector<uint8_t>(8, 0), 0}));
    }
    EXPECT_THROW(inject_single_fault(nc, uint32_t(nc.sites.size()), 1), std::invalid_argument);
    EXPECT_THROW(inject_single_fault(nc, 0, 99), std::invalid_argument);
}

TEST(frame_sim, ancilla_measurement_flip_hits_its_detector_pair) {
    auto l = build_layout(3);
    auto nc = make_memory_noisy_circuit(l, Basis::Z, uniform_rates(0.01));
    for (uint32_t i = 0; i < nc.sites.size(); i++) {
        const auto &s = nc.sites[i];
        if (s.channel != Channel::FLIP || s.slice != MemoryLayers::kAncillaMeasure) {
            continue;
        }
        uint32_t k = s.qubits[0] - l.num_data();
        auto shot = inject_single_fault(nc, i, 1);
        EXPECT_EQ(shot.logical_flip, 0);
        for (uint32_t j = 0; j < 8; j++) {
            bool expect = k < 4 && (j == k || j == k + 4);
            EXPECT_EQ(shot.detectors[j], expect ? 1 : 0) << "ancilla " << k << " detector " << j;
        }
    }
}

TEST(frame_sim, marginals_match_detector_error_model) {
    HardwareParams h;
    DerivedRates r = rates_for_point(h, 20, 1);
    auto nc = memory(3, Basis::Z, r);
    auto dem = enumerate_fault_effects(nc);
    std::vector<double> bias(dem.num_detectors, 1.0);
    double logical_bias = 1.0;
    for (const auto &f : dem.faults) {
        for (uint32_t k : f.detectors) {
            bias[k] *= 1 - 2 * f.probability;
        }
        if (f.logical_flip) {
            logical_bias *= 1 - 2 * f.probability;
        }
    }
    const uint64_t n = 100000;
    auto batch = sample(nc, n, 42);
    for (uint32_t k = 0; k < dem.num_detectors; k++) {
        double p = (1 - bias[k]) / 2;
        uint64_t count = 0;
        for (uint64_t s = 0; s < n; s++) {
            count += batch.shot(s)[k];
        }
        double sigma = std::sqrt(n * p * (1 - p));
        EXPECT_NEAR(double(count), n * p, 3 * sigma) << "detector " << k;
    }
    double pl = (1 - logical_bias) / 2;
    uint64_t lc = 0;
    for (uint8_t v : batch.logical) {
        lc += v;
    }
    EXPECT_NEAR(double(lc), n * pl, 3 * std::sqrt(n * pl * (1 - pl)));
}

TEST(frame_sim, channel_outcomes_are_uniform) {
    // One DEPOLARIZE2 site with p = 1: each of 15 outcomes has frequency 1/15.
    CircuitSchedule s;
    s.n_qubits = 2;
    s.layers.resize(2);
    s.layers[0].gates = {GateRef::cnot(0, 1)};
    s.layers[1].gates = {GateRef::single(GateKind::MEASURE, 0), GateRef::single(GateKind::MEASURE, 1)};
    s.detectors = {{0}, {1}};
    NoisyCircuit nc{s, {{Channel::DEPOLARIZE2, 1.0, {0, 1}, 1}}};
    const uint64_t n = 150000;
    auto batch = sample(nc, n, 3);
    // Z measurement sees the X part: outcomes with an X or Y on qubit a flip it.
    // Among 15 outcomes, 8 flip qubit 0 and 8 flip qubit 1; 4 flip both.
    uint64_t c0 = 0, c1 = 0, both = 0;
    for (uint64_t k = 0; k < n; k++) {
        c0 += batch.shot(k)[0];
        c1 += batch.shot(k)[1];
        both += batch.shot(k)[0] & batch.shot(k)[1];
    }
    double p8 = 8.0 / 15, p4 = 4.0 / 15;
    EXPECT_NEAR(double(c0) / n, p8, 4 * std::sqrt(p8 * (1 - p8) / n));
    EXPECT_NEAR(double(c1) / n, p8, 4 * std::sqrt(p8 * (1 - p8) / n));
    EXPECT_NEAR(double(both) / n, p4, 4 * std::sqrt(p4 * (1 - p4) / n));
}

TEST(frame_sim, reproducible_across_runs_and_workers) {
    auto nc = memory(5, Basis::Z, rates_for_point(HardwareParams{}, 100, 1));
    auto a = sample(nc, 3000, 9, 1);
    auto b = sample(nc, 3000, 9, 1);
    auto c = sample(nc, 3000, 9, 4);
    EXPECT_EQ(a.detectors, b.detectors);
    EXPECT_EQ(a.detectors, c.detectors);
    EXPECT_EQ(a.logical, c.logical);
    FrameSimulator sim(nc);
    SampleBatch part;
    sim.sample_range(9, 1000, 500, part);
    for (uint64_t k = 0; k < 500; k++) {
        auto single = sim.run_shot(9, 1000 + k);
        EXPECT_TRUE(std::equal(single.detectors.begin(), single.detectors.end(), part.shot(k)));
        EXPECT_EQ(single.logical_flip, a.logical[1000 + k]);
    }
    auto other = sample(nc, 3000, 10, 1);
    EXPECT_NE(a.detectors, other.detectors);
}

TEST(frame_sim, signatures_are_linear_in_faults) {
    auto nc = memory(5, Basis::Z, uniform_rates(0.01));
    FrameSimulator sim(nc);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 1000; trial++) {
        uint32_t s1 = uint32_t(rng() % nc.sites.size());
        uint32_t s2 = uint32_t(rng() % nc.sites.size());
        uint32_t o1 = 1 + uint32_t(rng() % num_outcomes(nc.sites[s1].channel));
        uint32_t o2 = 1 + uint32_t(rng() % num_outcomes(nc.sites[s2].channel));
        if (s1 == s2) {
            continue;
        }
        auto a = sim.run_with_faults({{s1, o1}});
        auto b = sim.run_with_faults({{s2, o2}});
        auto ab = sim.run_with_faults({{s1, o1}, {s2, o2}});
        for (size_t k = 0; k < ab.detectors.size(); k++) {
            ASSERT_EQ(ab.detectors[k], a.detectors[k] ^ b.detectors[k]);
        }
        ASSERT_EQ(ab.logical_flip, a.logical_flip ^ b.logical_flip);
    }
}

TEST(frame_sim, throughput_report) {
    auto nc = memory(3, Basis::Z, rates_for_point(HardwareParams{}, 200, 1));
    const uint64_t n = 200000;
    auto t0 = std::chrono::steady_clock::now();
    auto batch = sample(nc, n, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    RecordProperty("shots_per_second", std::to_string(n / secs));
    std::printf("d=3 frame sampling: %.3g shots/s\n", n / secs);
    EXPECT_EQ(batch.num_shots, n);
}
