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

#include "mfqec/experiments.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mfqec/decoder.h"
#include "mfqec/errors.h"
#include "mfqec/rng.h"
#include "mfqec/surface_code.h"

namespace mfqec {

namespace {

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void parallel_for(size_t n, unsigned workers, Fn &&fn) {
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<size_t>(1, n))));
    if (workers == 1) {
        for (size_t i = 0; i < n; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&] {
            while (!failed) {
                size_t i = next++;
                if (i >= n) {
                    break;
                }
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

double log_rate(const McLogicalEstimate &e) {
    return std::log(std::max(e.p_l, 0.5 / double(e.n_shots)));
}

const double kNaN = std::nan("");

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

DerivedRates rates_for_point(const HardwareParams &base, double r, double s) {
    HardwareParams h = apply_noise_scale(base, s);
    h.r_decoh_target = r;
    return derive_rates(h);
}

uint64_t job_seed(uint64_t seed, Architecture arch, uint32_t d) {
    return derive_seed(seed, uint64_t(arch) + 1, d);
}

McLogicalEstimate estimate_smsc(uint32_t d, const DerivedRates &rates, uint64_t n_shots, uint64_t seed,
                                const NoiseOptions &options, unsigned workers) {
    if (n_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    SurfaceCodeLayout layout = build_layout(d);
    NoisyCircuit circuit = make_memory_noisy_circuit(layout, Basis::Z, rates, options);
    DetectorGraph graph = DetectorGraph::build(enumerate_fault_effects(circuit));
    FrameSimulator sim(circuit);

    constexpr uint64_t kChunk = 512;
    size_t n_chunks = size_t((n_shots + kChunk - 1) / kChunk);
    std::vector<uint64_t> failures(n_chunks, 0);
    parallel_for(n_chunks, workers, [&](size_t c) {
        uint64_t first = c * kChunk;
        uint64_t count = std::min(kChunk, n_shots - first);
        SampleBatch batch;
        sim.sample_range(seed, first, count, batch);
        uint64_t f = 0;
        for (uint64_t k = 0; k < count; k++) {
            auto out = graph.decode({batch.shot(k), batch.num_detectors});
            f += uint8_t(out.predicted_logical_flip) != batch.logical[k];
        }
        failures[c] = f;
    });
    McLogicalEstimate e;
    e.n_shots = n_shots;
    for (uint64_t f : failures) {
        e.n_failures += f;
    }
    e.p_l = double(e.n_failures) / double(n_shots);
    auto ci = wilson_interval(e.n_failures, n_shots);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    return e;
}

std::string SweepResult::csv() const {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        out << architecture_name(r.arch) << ',' << r.d << ',' << format_number(r.r_decoh) << ','
            << format_number(r.s) << ',' << format_number(r.estimate.p_l) << ',' << format_number(r.estimate.ci_low)
            << ',' << format_number(r.estimate.ci_high) << ',' << r.estimate.n_shots << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string SweepResult::audit() const {
    std::ostringstream out;
    out << "arch,d,r_decoh,s,p_2q,p_idle_op,p_meas,rates_r_decoh\n";
    for (const auto &r : rows) {
        out << architecture_name(r.arch) << ',' << r.d << ',' << format_number(r.r_decoh) << ','
            << format_number(r.s) << ',' << format_number(r.rates.p_2q) << ',' << format_number(r.rates.p_idle_op)
            << ',' << format_number(r.rates.p_meas) << ',' << format_number(r.rates.r_decoh) << '\n';
    }
    return out.str();
}

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    std::vector<std::pair<double, double>> points;
    switch (cfg.sweep_kind) {
        case SweepKind::R_DECOH:
            for (double r : cfg.r_values) {
                points.push_back({r, cfg.fixed_s});
            }
            break;
        case SweepKind::NOISE_SCALE:
            for (double s : cfg.s_values) {
                points.push_back({cfg.fixed_r, s});
            }
            break;
        case SweepKind::DISTANCE:
            points.push_back({cfg.fixed_r, cfg.fixed_s});
            break;
    }
    const Architecture archs[3] = {Architecture::SM_SC, Architecture::MFEC_3D, Architecture::MFEC_2D};
    SweepResult result;
    for (uint32_t d : cfg.distances) {
        for (auto [r, s] : points) {
            DerivedRates rates = rates_for_point(cfg.hardware, r, s);
            for (Architecture a : archs) {
                result.rows.push_back({a, d, r, s, {}, job_seed(cfg.seed, a, d), rates});
            }
        }
    }
    NoiseOptions options{cfg.double_meas_flip};
    parallel_for(result.rows.size(), cfg.workers, [&](size_t i) {
        SweepRow &row = result.rows[i];
        if (row.arch == Architecture::SM_SC) {
            row.estimate = estimate_smsc(row.d, row.rates, cfg.n_shots, row.seed, options, 1);
        } else {
            row.estimate = mc_logical_error(build_profile(row.arch, row.d, cfg.alpha), row.rates, cfg.n_shots, row.seed);
        }
    });
    return result;
}

BreakevenResult locate_breakeven(const std::vector<double> &r_grid, const Evaluator &smsc, const Evaluator &mfec,
                                 uint64_t n_shots, double escalation, uint32_t refine_steps) {
    if (r_grid.size() < 2) {
        throw std::invalid_argument("break-even search needs at least two grid values");
    }
    std::vector<double> grid = r_grid;
    std::sort(grid.begin(), grid.end());
    BreakevenResult res;
    res.r_star = res.r_low = res.r_high = kNaN;

    McLogicalEstimate mf = mfec(grid[0], n_shots);
    auto diff = [&](const McLogicalEstimate &e) { return log_rate(e) - log_rate(mf); };
    std::vector<double> diffs;
    for (double r : grid) {
        diffs.push_back(diff(smsc(r, n_shots)));
    }
    int bracket = -1;
    for (size_t i = 0; i + 1 < grid.size(); i++) {
        if (diffs[i] < 0 && diffs[i + 1] >= 0) {
            bracket = int(i);
            break;
        }
    }
    auto all_of = [&](auto pred) { return std::all_of(diffs.begin(), diffs.end(), pred); };
    if (bracket < 0) {
        if (all_of([](double v) { return v >= 0; })) {
            res.status = "below_range";
            res.r_high = grid.front();
        } else if (all_of([](double v) { return v < 0; })) {
            res.status = "above_range";
            res.r_low = grid.back();
        } else {
            res.status = "no_crossing";
        }
        return res;
    }

    const uint64_t big = std::max<uint64_t>(n_shots, uint64_t(std::llround(double(n_shots) * escalation)));
    mf = mfec(grid[0], big);
    std::vector<std::pair<double, McLogicalEstimate>> evaluated;
    size_t lo_i = size_t(bracket);
    size_t hi_i = lo_i + 1;
    McLogicalEstimate sm_lo = smsc(grid[lo_i], big);
    McLogicalEstimate sm_hi = smsc(grid[hi_i], big);
    evaluated.push_back({grid[lo_i], sm_lo});
    evaluated.push_back({grid[hi_i], sm_hi});
    while (!(diff(sm_lo) < 0) && lo_i > 0) {
        lo_i--;
        sm_lo = smsc(grid[lo_i], big);
        evaluated.push_back({grid[lo_i], sm_lo});
    }
    while (diff(sm_hi) < 0 && hi_i + 1 < grid.size()) {
        hi_i++;
        sm_hi = smsc(grid[hi_i], big);
        evaluated.push_back({grid[hi_i], sm_hi});
    }
    if (!(diff(sm_lo) < 0)) {
        res.status = "below_range";
        res.r_high = grid[lo_i];
        return res;
    }
    if (diff(sm_hi) < 0) {
        res.status = "above_range";
        res.r_low = grid[hi_i];
        return res;
    }
    double lo = grid[lo_i];
    double hi = grid[hi_i];
    for (uint32_t step = 0; step < refine_steps; step++) {
        double mid = std::sqrt(lo * hi);
        McLogicalEstimate e = smsc(mid, big);
        evaluated.push_back({mid, e});
        if (diff(e) < 0) {
            lo = mid;
            sm_lo = e;
        } else {
            hi = mid;
            sm_hi = e;
        }
    }
    double dl = diff(sm_lo);
    double dh = diff(sm_hi);
    double frac = dh > dl ? -dl / (dh - dl) : 0.5;
    res.r_star = std::exp(std::log(lo) + frac * (std::log(hi) - std::log(lo)));

    for (const auto &[r, e] : evaluated) {
        if (e.ci_high < mf.ci_low && r <= res.r_star && (std::isnan(res.r_low) || r > res.r_low)) {
            res.r_low = r;
        }
        if (e.ci_low > mf.ci_high && r >= res.r_star && (std::isnan(res.r_high) || r < res.r_high)) {
            res.r_high = r;
        }
    }
    res.status = (!std::isnan(res.r_low) && !std::isnan(res.r_high)) ? "resolved" : "interval";
    return res;
}

namespace {

BreakevenResult breakeven_with_cache(uint32_t d, const SweepConfig &cfg, double alpha,
                                     std::map<std::pair<double, uint64_t>, McLogicalEstimate> &cache) {
    const NoiseOptions options{cfg.double_meas_flip};
    const uint64_t sm_seed = job_seed(cfg.seed, Architecture::SM_SC, d);
    const uint64_t mf_seed = job_seed(cfg.seed, Architecture::MFEC_3D, d);
    Evaluator smsc = [&](double r, uint64_t shots) {
        auto key = std::make_pair(r, shots);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
        auto e = estimate_smsc(d, rates_for_point(cfg.hardware, r, cfg.fixed_s), shots, sm_seed, options, 1);
        cache.emplace(key, e);
        return e;
    };
    ResourceProfile profile = build_profile(Architecture::MFEC_3D, d, alpha);
    Evaluator mfec = [&](double r, uint64_t shots) {
        return mc_logical_error(profile, rates_for_point(cfg.hardware, r, cfg.fixed_s), shots, mf_seed);
    };
    BreakevenResult res = locate_breakeven(cfg.r_values, smsc, mfec, cfg.n_shots, cfg.escalation_factor,
                                           cfg.refine_steps);
    res.d = d;
    res.alpha = alpha;
    return res;
}

}  // namespace

BreakevenResult find_breakeven(uint32_t d, const SweepConfig &cfg, double alpha) {
    cfg.validate();
    std::map<std::pair<double, uint64_t>, McLogicalEstimate> cache;
    return breakeven_with_cache(d, cfg, alpha, cache);
}

std::vector<BreakevenResult> run_breakeven(const SweepConfig &cfg) {
    cfg.validate();
    std::vector<std::vector<BreakevenResult>> per_d(cfg.distances.size());
    parallel_for(cfg.distances.size(), cfg.workers, [&](size_t i) {
        std::map<std::pair<double, uint64_t>, McLogicalEstimate> cache;
        for (double alpha : cfg.alpha_sensitivity) {
            per_d[i].push_back(breakeven_with_cache(cfg.distances[i], cfg, alpha, cache));
        }
    });
    std::vector<BreakevenResult> out;
    for (auto &v : per_d) {
        for (auto &r : v) {
            out.push_back(r);
        }
    }
    return out;
}

std::string breakeven_csv(const std::vector<BreakevenResult> &rows) {
    std::ostringstream out;
    out << kBreakevenCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.d << ',' << format_number(r.alpha) << ',' << format_number(r.r_star) << ','
            << format_number(r.r_low) << ',' << format_number(r.r_high) << ',' << r.status << '\n';
    }
    return out.str();
}

}  // namespace mfqec
