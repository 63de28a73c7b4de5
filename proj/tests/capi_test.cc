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

#include "mfqec/mfqec_c.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace {

std::string take(mfqec_text *t) {
    std::string s(mfqec_text_data(t), mfqec_text_size(t));
    mfqec_text_free(t);
    return s;
}

mfqec_rates rates_at(double r) {
    mfqec_hardware hw;
    mfqec_hardware_default(&hw);
    mfqec_rates out{};
    EXPECT_EQ(mfqec_rates_for_point(&hw, r, 1.0, &out), MFQEC_OK);
    return out;
}

}  // namespace

TEST(capi, version_and_status_names) {
    EXPECT_STRNE(mfqec_version(), "");
    EXPECT_STREQ(mfqec_status_name(MFQEC_OK), "ok");
    EXPECT_STRNE(mfqec_status_name(MFQEC_ERR_CAPACITY), mfqec_status_name(MFQEC_ERR_CONFIG));
}

TEST(capi, noise_model) {
    double p = 0;
    ASSERT_EQ(mfqec_p_decoh(40e-9, 200e-6, 150e-6, &p), MFQEC_OK);
    EXPECT_NEAR(p, 4.666e-4, 1e-7);
    EXPECT_EQ(mfqec_p_decoh(-1, 1, 1, &p), MFQEC_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(mfqec_last_error()), "");
    EXPECT_EQ(mfqec_p_decoh(1e-9, 1, 1, nullptr), MFQEC_ERR_INVALID_ARGUMENT);

    mfqec_hardware hw;
    mfqec_hardware_default(&hw);
    double t_m = 0;
    ASSERT_EQ(mfqec_t_m_for_ratio(&hw, 200, &t_m), MFQEC_OK);
    EXPECT_GT(t_m, hw.t_idle_op);
    EXPECT_EQ(mfqec_t_m_for_ratio(&hw, 1e6, &t_m), MFQEC_ERR_OUT_OF_RANGE);
    auto r = rates_at(200);
    EXPECT_NEAR(r.r_decoh, 200, 1e-6);
    mfqec_rates base{};
    ASSERT_EQ(mfqec_derive_rates(&hw, &base), MFQEC_OK);
    EXPECT_NEAR(base.p_2q, 6.666e-4, 1e-7);
}

TEST(capi, config) {
    mfqec_config *cfg = nullptr;
    ASSERT_EQ(mfqec_config_parse("seed: 11\nn_shots: 50\n", &cfg), MFQEC_OK);
    EXPECT_EQ(mfqec_config_seed(cfg), 11u);
    EXPECT_EQ(mfqec_config_n_shots(cfg), 50u);
    EXPECT_EQ(mfqec_config_alpha(cfg), 3.5);
    EXPECT_EQ(mfqec_config_double_meas_flip(cfg), 0);
    EXPECT_EQ(mfqec_config_set_sweep_kind(cfg, "sideways"), MFQEC_ERR_CONFIG);
    uint32_t bad[] = {4};
    EXPECT_EQ(mfqec_config_set_distances(cfg, bad, 1), MFQEC_ERR_CONFIG);
    EXPECT_EQ(mfqec_config_set_workers(cfg, 0), MFQEC_ERR_CONFIG);
    mfqec_hardware hw;
    EXPECT_EQ(mfqec_config_hardware(cfg, &hw), MFQEC_OK);
    mfqec_config_free(cfg);

    mfqec_config *other = nullptr;
    EXPECT_EQ(mfqec_config_parse("nonsense_key: 1\n", &other), MFQEC_ERR_CONFIG);
    EXPECT_NE(std::string(mfqec_last_error()).find("nonsense_key"), std::string::npos);
    EXPECT_EQ(other, nullptr);
    EXPECT_EQ(mfqec_config_load("/nonexistent/x.yaml", &other), MFQEC_ERR_IO);
    mfqec_config_free(nullptr);
}

TEST(capi, layout) {
    mfqec_layout *l = nullptr;
    ASSERT_EQ(mfqec_layout_new(3, &l), MFQEC_OK);
    EXPECT_EQ(mfqec_layout_num_data(l), 9u);
    EXPECT_EQ(mfqec_layout_num_qubits(l), 17u);
    mfqec_text *t = nullptr;
    ASSERT_EQ(mfqec_layout_dump(l, &t), MFQEC_OK);
    auto dump = take(t);
    EXPECT_NE(dump.find("+Z1*Z2*Z5*Z6"), std::string::npos);
    EXPECT_NE(dump.find("+X1*X6*X7"), std::string::npos);
    mfqec_layout_free(l);
    EXPECT_EQ(mfqec_layout_new(4, &l), MFQEC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(mfqec_layout_num_data(nullptr), 0u);
}

TEST(capi, memory_sample_graph_decode) {
    auto r = rates_at(50);
    mfqec_memory *mem = nullptr;
    ASSERT_EQ(mfqec_memory_new(3, 'Z', &r, 0, &mem), MFQEC_OK);
    const uint32_t nd = mfqec_memory_num_detectors(mem);
    EXPECT_EQ(nd, 8u);
    EXPECT_EQ(mfqec_memory_new(3, 'Q', &r, 0, &mem), MFQEC_ERR_INVALID_ARGUMENT);

    const uint64_t n = 500;
    std::vector<uint8_t> det(n * nd), obs(n);
    ASSERT_EQ(mfqec_memory_sample(mem, n, 3, 2, det.data(), obs.data()), MFQEC_OK);

    mfqec_graph *g = nullptr;
    ASSERT_EQ(mfqec_memory_graph(mem, &g), MFQEC_OK);
    mfqec_text *t = nullptr;
    ASSERT_EQ(mfqec_graph_serialize(g, &t), MFQEC_OK);
    auto text = take(t);
    mfqec_graph *g2 = nullptr;
    ASSERT_EQ(mfqec_graph_parse(text.c_str(), &g2), MFQEC_OK);
    EXPECT_EQ(mfqec_graph_num_detectors(g2), nd);

    uint64_t failures = 0;
    for (uint64_t s = 0; s < n; s++) {
        int flip = -1, flip2 = -1;
        int64_t w = -1;
        ASSERT_EQ(mfqec_graph_decode(g, det.data() + s * nd, nd, &flip, &w), MFQEC_OK);
        ASSERT_EQ(mfqec_graph_decode(g2, det.data() + s * nd, nd, &flip2, nullptr), MFQEC_OK);
        EXPECT_EQ(flip, flip2);
        EXPECT_GE(w, 0);
        failures += uint64_t(flip != obs[s]);
    }
    mfqec_estimate est{};
    ASSERT_EQ(mfqec_memory_estimate(mem, n, 3, 1, &est), MFQEC_OK);
    EXPECT_EQ(est.n_failures, failures);
    int flip = 0;
    EXPECT_EQ(mfqec_graph_decode(g, det.data(), nd - 1, &flip, nullptr), MFQEC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(mfqec_graph_parse("garbage", &g2), MFQEC_ERR_INVALID_ARGUMENT);

    mfqec_text *c = nullptr;
    ASSERT_EQ(mfqec_memory_circuit_text(mem, &c), MFQEC_OK);
    EXPECT_GT(take(c).size(), 0u);
    ASSERT_EQ(mfqec_memory_dem_text(mem, &c), MFQEC_OK);
    EXPECT_GT(take(c).size(), 0u);
    mfqec_graph_free(g);
    mfqec_graph_free(g2);
    mfqec_memory_free(mem);
}

TEST(capi, mfec_model) {
    mfqec_profile p{};
    ASSERT_EQ(mfqec_profile_build(MFQEC_ARCH_MFEC3D, 3, 3.5, &p), MFQEC_OK);
    EXPECT_EQ(p.n_qubits, 35);
    EXPECT_EQ(p.cnot_depth_per_cycle, 59);
    EXPECT_EQ(p.n_gate_locations, 138);
    EXPECT_EQ(mfqec_profile_build(9, 3, 3.5, &p), MFQEC_ERR_INVALID_ARGUMENT);
    mfqec_x_round xr{};
    ASSERT_EQ(mfqec_x_round_budget(3, &xr), MFQEC_OK);
    EXPECT_EQ(xr.total, 69);
    int tof = 0, c3 = 0, ccz = 0;
    mfqec_gadget_cnot_counts(&tof, &c3, &ccz);
    EXPECT_EQ(tof, 6);
    EXPECT_EQ(c3, 7);
    EXPECT_EQ(ccz, 7);

    auto r = rates_at(200);
    mfqec_estimate e{};
    ASSERT_EQ(mfqec_profile_build(MFQEC_ARCH_MFEC3D, 3, 3.5, &p), MFQEC_OK);
    ASSERT_EQ(mfqec_mfec_estimate(&p, &r, 10000, 4, &e), MFQEC_OK);
    double a = 0;
    ASSERT_EQ(mfqec_mfec_analytic(&p, &r, &a), MFQEC_OK);
    EXPECT_NEAR(e.p_l, a, 5 * std::sqrt(a * (1 - a) / 10000));
    mfqec_profile sm{};
    ASSERT_EQ(mfqec_profile_build(MFQEC_ARCH_SMSC, 3, 3.5, &sm), MFQEC_OK);
    EXPECT_EQ(mfqec_mfec_analytic(&sm, &r, &a), MFQEC_ERR_INVALID_ARGUMENT);
}

TEST(capi, bitflip) {
    mfqec_ft_report rep{};
    mfqec_text *details = nullptr;
    ASSERT_EQ(mfqec_bitflip_ft_check(MFQEC_SCHEME_PROJECTOR_C3NOT, &rep, &details), MFQEC_OK);
    EXPECT_EQ(rep.n_violating_locations, 2u);
    EXPECT_GT(rep.n_violations, 0u);
    EXPECT_EQ(rep.cnot_equivalent, 27u);
    EXPECT_GT(take(details).size(), 0u);
    ASSERT_EQ(mfqec_bitflip_ft_check(MFQEC_SCHEME_MAJORITY_TOFFOLI, &rep, nullptr), MFQEC_OK);
    EXPECT_EQ(rep.n_violations, 0u);
    double p[] = {0.002, 0.004};
    mfqec_text *csv = nullptr;
    double slope = 0;
    ASSERT_EQ(mfqec_bitflip_scaling(MFQEC_SCHEME_MAJORITY_TOFFOLI, p, 2, 20000, 1, 1, &csv, &slope), MFQEC_OK);
    auto text = take(csv);
    EXPECT_EQ(text.rfind("p,p_l,ci_low,ci_high,n_shots,n_failures\n", 0), 0u);
    EXPECT_GT(slope, 1.0);
    EXPECT_EQ(mfqec_bitflip_ft_check(7, &rep, nullptr), MFQEC_ERR_INVALID_ARGUMENT);
}

TEST(capi, sweep) {
    mfqec_config *cfg = nullptr;
    ASSERT_EQ(mfqec_config_parse("distances: [3]\nr_values: [20, 200]\nn_shots: 100\n", &cfg), MFQEC_OK);
    mfqec_text *csv = nullptr, *audit = nullptr;
    ASSERT_EQ(mfqec_sweep_run(cfg, &csv, &audit), MFQEC_OK);
    auto text = take(csv);
    EXPECT_EQ(text.rfind("arch,d,r_decoh,s,p_l,ci_low,ci_high,n_shots,seed\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
    EXPECT_GT(take(audit).size(), 0u);
    EXPECT_EQ(mfqec_sweep_run(nullptr, &csv, nullptr), MFQEC_ERR_INVALID_ARGUMENT);
    mfqec_config_free(cfg);
}
