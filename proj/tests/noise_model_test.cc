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

#include "mfqec/noise_model.h"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <random>

using namespace mfqec;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

/// 50-digit evaluation of 1 - (1 - p_relax)(1 - p_deph).
double oracle_p_decoh(double t, double t1, double t2) {
    Big bt(t), b1(t1), b2(t2);
    Big relax = 1 - exp(-bt / b1);
    Big deph = 1 - exp(-bt / b2);
    Big r = 1 - (1 - relax) * (1 - deph);
    return r.convert_to<double>();
}

double rel(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

}  // namespace

TEST(noise_model, p_decoh_reference_point) {
    double p = p_decoh(40e-9, 200e-6, 150e-6);
    EXPECT_LT(rel(p, oracle_p_decoh(40e-9, 200e-6, 150e-6)), 1e-13);
    EXPECT_NEAR(p, 4.666e-4, 1e-7);
}

TEST(noise_model, p_decoh_limits_and_errors) {
    EXPECT_EQ(p_decoh(0, 1, 1), 0.0);
    EXPECT_EQ(p_decoh(std::numeric_limits<double>::infinity(), 1e-4, 1e-4), 1.0);
    EXPECT_NEAR(p_decoh(1.0, 1e-6, 1e-6), 1.0, 1e-15);
    EXPECT_THROW(p_decoh(-1e-9, 1, 1), std::invalid_argument);
    EXPECT_THROW(p_decoh(1e-9, 0, 1), std::invalid_argument);
}

TEST(noise_model, p_decoh_matches_high_precision_oracle) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_t(-10, -3);
    std::uniform_real_distribution<double> log_T(-5, -2);
    for (int i = 0; i < 1000; i++) {
        double t = std::pow(10.0, log_t(rng));
        double t1 = std::pow(10.0, log_T(rng));
        double t2 = std::pow(10.0, log_T(rng));
        EXPECT_LT(rel(p_decoh(t, t1, t2), oracle_p_decoh(t, t1, t2)), 1e-12) << t << " " << t1 << " " << t2;
    }
}

TEST(noise_model, p_decoh_is_monotone) {
    double prev = 0;
    for (int k = 1; k < 200; k++) {
        double p = p_decoh(k * 1e-7, 200e-6, 150e-6);
        EXPECT_GT(p, prev);
        prev = p;
    }
}

TEST(noise_model, base_rates) {
    auto r = derive_rates(HardwareParams::base());
    double idle = oracle_p_decoh(40e-9, 200e-6, 150e-6);
    EXPECT_DOUBLE_EQ(r.r_decoh, 1.0);
    EXPECT_LT(rel(r.p_2q, idle + 2e-4), 1e-12);
    EXPECT_NEAR(r.p_2q, 6.666e-4, 1e-7);
    EXPECT_LT(rel(r.p_idle_op, idle), 1e-12);
    EXPECT_LT(rel(r.p_meas, idle + 5e-3), 1e-12);
    EXPECT_EQ(r.p_1q, p_decoh(20e-9, 200e-6, 150e-6));
}

TEST(noise_model, tiny_measurement_time_leaves_implementation_error) {
    HardwareParams h;
    h.t_m = 1e-15;
    EXPECT_NEAR(derive_rates(h).p_meas, 5e-3, 1e-10);
}

TEST(noise_model, derived_rates_match_oracle_on_random_hardware) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 1000; i++) {
        HardwareParams h;
        h.t1 = 1e-5 + u(rng) * 1e-3;
        h.t2 = 1e-5 + u(rng) * 1e-3;
        h.t_2q = 1e-8 + u(rng) * 1e-6;
        h.t_idle_op = 1e-8 + u(rng) * 1e-6;
        h.t_m = 1e-8 + u(rng) * 1e-5;
        h.p_2q_impl = u(rng) * 1e-2;
        h.p_meas_impl = u(rng) * 1e-2;
        auto r = derive_rates(h);
        double idle = oracle_p_decoh(h.t_idle_op, h.t1, h.t2);
        double meas = oracle_p_decoh(h.t_m, h.t1, h.t2);
        EXPECT_LT(rel(r.p_2q, std::min(1.0, oracle_p_decoh(h.t_2q, h.t1, h.t2) + h.p_2q_impl)), 1e-12);
        EXPECT_LT(rel(r.p_idle_op, idle), 1e-12);
        EXPECT_LT(rel(r.p_meas, std::min(1.0, meas + h.p_meas_impl)), 1e-12);
        EXPECT_LT(rel(r.r_decoh, meas / idle), 1e-12);
    }
}

TEST(noise_model, rates_are_clipped_to_unit_interval) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 500; i++) {
        HardwareParams h;
        h.t1 = 1e-9 + u(rng) * 1e-4;
        h.t2 = 1e-9 + u(rng) * 1e-4;
        h.t_2q = u(rng) * 1e-3 + 1e-12;
        h.t_m = u(rng) * 1e-3 + 1e-12;
        h.p_2q_impl = u(rng);
        h.p_meas_impl = u(rng);
        auto r = derive_rates(h);
        for (double p : {r.p_1q, r.p_2q, r.p_idle_op, r.p_meas}) {
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0);
        }
        EXPECT_GE(r.r_decoh, 0.0);
    }
}

TEST(noise_model, t_m_for_ratio) {
    HardwareParams h;
    EXPECT_NEAR(t_m_for_ratio(h, 1.0), h.t_idle_op, 1e-20);
    double t200 = t_m_for_ratio(h, 200);
    double idle = p_decoh(h.t_idle_op, h.t1, h.t2);
    EXPECT_LT(rel(p_decoh(t200, h.t1, h.t2), 200 * idle), 1e-12);
    EXPECT_NEAR(p_decoh(t200, h.t1, h.t2), 9.33e-2, 5e-5);
    EXPECT_GT(t_m_for_ratio(h, 800), t_m_for_ratio(h, 400));
    EXPECT_THROW(t_m_for_ratio(h, 0.5), std::invalid_argument);
    EXPECT_THROW(t_m_for_ratio(h, 1e6), std::out_of_range);
}

TEST(noise_model, t_m_for_ratio_agrees_with_bisection) {
    HardwareParams h;
    for (double target : {20.0, 50.0, 100.0, 200.0, 400.0, 800.0}) {
        double idle = p_decoh(h.t_idle_op, h.t1, h.t2);
        double lo = 0, hi = 1;
        for (int it = 0; it < 200; it++) {
            double mid = 0.5 * (lo + hi);
            (p_decoh(mid, h.t1, h.t2) / idle < target ? lo : hi) = mid;
        }
        EXPECT_LT(rel(t_m_for_ratio(h, target), 0.5 * (lo + hi)), 1e-9);
    }
}

TEST(noise_model, noise_scale) {
    HardwareParams h;
    auto same = apply_noise_scale(h, 1);
    EXPECT_EQ(same.t1, h.t1);
    EXPECT_EQ(same.t2, h.t2);
    auto twice = apply_noise_scale(h, 2);
    EXPECT_DOUBLE_EQ(twice.t1, 100e-6);
    EXPECT_DOUBLE_EQ(twice.t2, 75e-6);
    EXPECT_EQ(twice.t_2q, h.t_2q);
    EXPECT_EQ(twice.p_meas_impl, h.p_meas_impl);
    EXPECT_DOUBLE_EQ(apply_noise_scale(h, 0.5).t1, 400e-6);
    EXPECT_THROW(apply_noise_scale(h, 0), std::invalid_argument);
    EXPECT_THROW(apply_noise_scale(h, -1), std::invalid_argument);
}

TEST(noise_model, ratio_is_invariant_under_rescaling_with_resolved_t_m) {
    for (double s : {0.5, 0.75, 1.0, 1.5, 2.0}) {
        HardwareParams h = apply_noise_scale(HardwareParams::base(), s);
        h.r_decoh_target = 200;
        EXPECT_NEAR(derive_rates(h).r_decoh, 200, 200 * 1e-9) << s;
    }
}

TEST(noise_model, validation) {
    HardwareParams h;
    EXPECT_EQ(h.validate(), "");
    h.t2 = 3 * h.t1;
    EXPECT_NE(h.validate(), "");
    h = HardwareParams{};
    h.t1 = -1;
    EXPECT_THROW(h.validate(), std::invalid_argument);
    h = HardwareParams{};
    h.p_meas_impl = 1.5;
    EXPECT_THROW(h.validate(), std::invalid_argument);
}
