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

#include "mfqec/mfec_model.h"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "mfqec/experiments.h"

using namespace mfqec;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

Big binom_pmf(int64_t n, int64_t k, double p) {
    Big c = 1;
    for (int64_t j = 0; j < k; j++) {
        c = c * Big(n - j) / Big(j + 1);
    }
    return c * pow(Big(p), k) * pow(Big(1) - Big(p), n - k);
}

/// 1 - P(Kg + Ki <= t) at 50 digits.
double oracle_failure(const ResourceProfile &prof, const DerivedRates &r) {
    int64_t t = (prof.distance - 1) / 2;
    Big ok = 0;
    for (int64_t a = 0; a <= t; a++) {
        for (int64_t b = 0; a + b <= t; b++) {
            ok += binom_pmf(prof.n_gate_locations, a, r.p_2q) * binom_pmf(prof.n_idle_locations, b, r.p_idle_op);
        }
    }
    return Big(1 - ok).convert_to<double>();
}

DerivedRates rates(double p2, double pi, double pm = 0.01) {
    return {0, p2, pi, pm, pm / std::max(pi, 1e-300)};
}

}  // namespace

TEST(mfec_model, gadget_counts) {
    EXPECT_EQ(toffoli_cnot_count(), 6);
    EXPECT_EQ(c3not_cnot_count(), 7);
    EXPECT_EQ(cccz_cnot_count(), 7);
}

TEST(mfec_model, x_round_budget) {
    auto b = x_round_cnot_budget(3);
    EXPECT_EQ(b.transversal, 9);
    EXPECT_EQ(b.extraction, 12);
    EXPECT_EQ(b.remap, 3);
    EXPECT_EQ(b.correction, 45);
    EXPECT_EQ(b.total(), 69);
    for (uint32_t d : {5u, 7u, 9u, 11u}) {
        auto bd = x_round_cnot_budget(d);
        EXPECT_EQ(bd.transversal, int64_t(d) * d);
        EXPECT_GT(bd.total(), x_round_cnot_budget(d - 2).total());
        EXPECT_GE(bd.remap, 0);
        EXPECT_GE(bd.correction, 0);
    }
    EXPECT_THROW(x_round_cnot_budget(4), std::invalid_argument);
}

TEST(mfec_model, depths_and_qubits) {
    EXPECT_EQ(cnot_depth_3d(3), 59);
    EXPECT_EQ(cnot_depth_3d(5), 158);
    EXPECT_EQ(cnot_depth_2d(3), 203);
    EXPECT_EQ(cnot_depth_2d(5), 558);
    EXPECT_EQ(build_profile(Architecture::SM_SC, 3).n_qubits, 17);
    EXPECT_EQ(build_profile(Architecture::SM_SC, 5).n_qubits, 49);
    EXPECT_EQ(build_profile(Architecture::MFEC_3D, 3).n_qubits, 35);
    EXPECT_EQ(build_profile(Architecture::MFEC_2D, 5).n_qubits, 99);
    for (uint32_t d = 3; d <= 11; d += 2) {
        EXPECT_GT(cnot_depth_2d(d), cnot_depth_3d(d));
        EXPECT_GT(depth_ratio_2d_3d(d), 1.0);
    }
}

TEST(mfec_model, profiles) {
    auto p3 = build_profile(Architecture::MFEC_3D, 3, 3.5);
    EXPECT_EQ(p3.n_gate_locations, 138);
    EXPECT_EQ(p3.n_idle_locations, 483);
    EXPECT_EQ(p3.cnot_depth_per_cycle, 59);
    auto p2 = build_profile(Architecture::MFEC_2D, 3, 3.5);
    EXPECT_EQ(p2.n_gate_locations, 475);
    EXPECT_EQ(p2.n_idle_locations, 1662);
    auto sm = build_profile(Architecture::SM_SC, 3);
    EXPECT_EQ(sm.n_cnot_per_cycle, 24);
    EXPECT_EQ(sm.cnot_depth_per_cycle, 4);
    EXPECT_EQ(sm.round_depth, 8);
    EXPECT_EQ(build_profile(Architecture::MFEC_3D, 3, 0).n_idle_locations, 0);
    EXPECT_THROW(build_profile(Architecture::MFEC_3D, 3, -1), std::invalid_argument);
    EXPECT_THROW(build_profile(Architecture::MFEC_3D, 2), std::invalid_argument);
}

TEST(mfec_model, smsc_profile_is_rejected) {
    auto sm = build_profile(Architecture::SM_SC, 3);
    EXPECT_THROW(mc_logical_error(sm, rates(1e-3, 1e-3), 10, 1), std::invalid_argument);
    EXPECT_THROW(analytic_logical_error(sm, rates(1e-3, 1e-3)), std::invalid_argument);
    EXPECT_THROW(mc_logical_error(build_profile(Architecture::MFEC_3D, 3), rates(1e-3, 1e-3), 0, 1),
                 std::invalid_argument);
}

TEST(mfec_model, zero_rates_never_fail) {
    for (auto arch : {Architecture::MFEC_2D, Architecture::MFEC_3D}) {
        auto prof = build_profile(arch, 7);
        auto e = mc_logical_error(prof, rates(0, 0), 5000, 3);
        EXPECT_EQ(e.n_failures, 0u);
        EXPECT_EQ(analytic_logical_error(prof, rates(0, 0)), 0.0);
    }
}

TEST(mfec_model, two_location_toy_model) {
    ResourceProfile toy = build_profile(Architecture::MFEC_3D, 3);
    toy.n_gate_locations = 2;
    toy.n_idle_locations = 0;
    for (double p : {0.01, 0.1, 0.3}) {
        EXPECT_NEAR(analytic_logical_error(toy, rates(p, 0)), p * p, 1e-15);
        auto e = mc_logical_error(toy, rates(p, 0), 200000, 5);
        EXPECT_NEAR(e.p_l, p * p, 5 * std::sqrt(p * p * (1 - p * p) / 200000));
    }
}

TEST(mfec_model, independent_of_measurement_rate) {
    for (auto arch : {Architecture::MFEC_2D, Architecture::MFEC_3D}) {
        auto prof = build_profile(arch, 5);
        auto a = mc_logical_error(prof, rates(7e-4, 4.7e-4, 0.005), 20000, 11);
        auto b = mc_logical_error(prof, rates(7e-4, 4.7e-4, 0.37), 20000, 11);
        EXPECT_EQ(a.n_failures, b.n_failures);
        EXPECT_EQ(a.ci_low, b.ci_low);
        EXPECT_EQ(a.ci_high, b.ci_high);
        EXPECT_EQ(analytic_logical_error(prof, rates(7e-4, 4.7e-4, 0.005)),
                  analytic_logical_error(prof, rates(7e-4, 4.7e-4, 0.37)));
    }
}

TEST(mfec_model, analytic_matches_high_precision_oracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> lp(-5, -1.5);
    for (int i = 0; i < 200; i++) {
        uint32_t d = 3 + 2 * uint32_t(rng() % 5);
        auto arch = rng() & 1 ? Architecture::MFEC_2D : Architecture::MFEC_3D;
        auto prof = build_profile(arch, d, 3.0 + double(rng() % 3) * 0.5);
        auto r = rates(std::pow(10.0, lp(rng)), std::pow(10.0, lp(rng)));
        double want = oracle_failure(prof, r);
        double got = analytic_logical_error(prof, r);
        EXPECT_NEAR(got, want, 1e-12 + 1e-9 * want) << d;
    }
}

TEST(mfec_model, analytic_matches_monte_carlo) {
    HardwareParams h;
    for (uint32_t d : {3u, 5u, 7u}) {
        for (double s : {0.5, 1.0, 2.0}) {
            auto r = rates_for_point(h, 200, s);
            for (auto arch : {Architecture::MFEC_2D, Architecture::MFEC_3D}) {
                auto prof = build_profile(arch, d);
                auto e = mc_logical_error(prof, r, 40000, 1000 + d);
                double a = analytic_logical_error(prof, r);
                double sigma = std::sqrt(std::max(a * (1 - a), 1e-12) / 40000);
                EXPECT_NEAR(e.p_l, a, 5 * sigma) << architecture_name(arch) << " d=" << d << " s=" << s;
            }
        }
    }
}

TEST(mfec_model, monotone_in_rate_with_common_random_numbers) {
    auto prof = build_profile(Architecture::MFEC_3D, 5);
    uint64_t prev = 0;
    for (double p : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) {
        auto e = mc_logical_error(prof, rates(p, p), 5000, 77);
        EXPECT_GE(e.n_failures, prev);
        prev = e.n_failures;
    }
}

TEST(mfec_model, two_d_never_beats_three_d) {
    HardwareParams h;
    for (uint32_t d = 3; d <= 11; d += 2) {
        for (double s : linspace(0.5, 2.0, 8)) {
            auto r = rates_for_point(h, 100, s);
            EXPECT_GE(analytic_logical_error(build_profile(Architecture::MFEC_2D, d), r),
                      analytic_logical_error(build_profile(Architecture::MFEC_3D, d), r));
        }
    }
}

TEST(mfec_model, wilson_interval) {
    auto w0 = wilson_interval(0, 10);
    EXPECT_EQ(w0.low, 0.0);
    double z2 = kWilsonZ95 * kWilsonZ95;
    EXPECT_NEAR(w0.high, z2 / (10 + z2), 1e-12);
    auto w5 = wilson_interval(5, 10);
    EXPECT_NEAR(w5.low + w5.high, 1.0, 1e-12);
    EXPECT_LT(w5.low, 0.5);
    auto all = wilson_interval(10, 10);
    EXPECT_EQ(all.high, 1.0);
    EXPECT_NEAR(all.low, 10 / (10 + z2), 1e-12);
    EXPECT_EQ(wilson_interval(0, 0).high, 1.0);
}

TEST(mfec_model, binomial_inverse_cdf) {
    EXPECT_EQ(binomial_inverse_cdf(10, 0.0, 0.99, 5), 0);
    EXPECT_EQ(binomial_inverse_cdf(10, 0.5, 0.0, 5), 0);
    // P(K = 0) = 0.5^10; u just above it yields 1.
    EXPECT_EQ(binomial_inverse_cdf(10, 0.5, 0.5 * std::pow(0.5, 10), 5), 0);
    EXPECT_EQ(binomial_inverse_cdf(10, 0.5, 1.5 * std::pow(0.5, 10), 5), 1);
    EXPECT_EQ(binomial_inverse_cdf(10, 0.5, 0.9999, 3), 3);
    EXPECT_EQ(binomial_inverse_cdf(4, 1.0, 0.2, 10), 4);
}
