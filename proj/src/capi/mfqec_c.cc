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

#include <cstdio>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mfqec/bitflip_mfec.h"
#include "mfqec/config.h"
#include "mfqec/decoder.h"
#include "mfqec/errors.h"
#include "mfqec/experiments.h"
#include "mfqec/frame_sim.h"
#include "mfqec/mfec_model.h"
#include "mfqec/noise_model.h"
#include "mfqec/surface_code.h"

struct mfqec_text {
    std::string value;
};

struct mfqec_config {
    mfqec::SweepConfig cfg;
};

struct mfqec_layout {
    mfqec::SurfaceCodeLayout layout;
};

struct mfqec_memory {
    mfqec::NoisyCircuit circuit;
    mfqec::DetectorErrorModel dem;
    mfqec::DetectorGraph graph;
};

struct mfqec_graph {
    mfqec::DetectorGraph graph;
};

namespace {

thread_local std::string g_last_error;

mfqec_status fail(mfqec_status code, const char *what) {
    g_last_error = what;
    return code;
}

/// Runs fn, translating exceptions into status codes.
template <typename Fn>
mfqec_status guard(Fn &&fn) {
    try {
        fn();
        return MFQEC_OK;
    } catch (const mfqec::UnsupportedGate &e) {
        return fail(MFQEC_ERR_UNSUPPORTED, e.what());
    } catch (const mfqec::CapacityError &e) {
        return fail(MFQEC_ERR_CAPACITY, e.what());
    } catch (const mfqec::ConfigError &e) {
        return fail(MFQEC_ERR_CONFIG, e.what());
    } catch (const mfqec::IoError &e) {
        return fail(MFQEC_ERR_IO, e.what());
    } catch (const std::out_of_range &e) {
        return fail(MFQEC_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(MFQEC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(MFQEC_ERR_CAPACITY, "out of memory");
    } catch (const std::exception &e) {
        return fail(MFQEC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MFQEC_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *name) {
    if (p == nullptr) {
        throw std::invalid_argument(std::string(name) + " must not be NULL");
    }
}

mfqec_text *make_text(std::string s) {
    return new mfqec_text{std::move(s)};
}

mfqec::HardwareParams to_cpp(const mfqec_hardware &h) {
    mfqec::HardwareParams p;
    p.t1 = h.t1;
    p.t2 = h.t2;
    p.t_1q = h.t_1q;
    p.t_2q = h.t_2q;
    p.t_idle_op = h.t_idle_op;
    p.t_m = h.t_m;
    p.p_1q_impl = h.p_1q_impl;
    p.p_2q_impl = h.p_2q_impl;
    p.p_meas_impl = h.p_meas_impl;
    if (h.r_decoh_target > 0) {
        p.r_decoh_target = h.r_decoh_target;
    }
    return p;
}

mfqec_hardware to_c(const mfqec::HardwareParams &p) {
    return {p.t1,        p.t2,        p.t_1q,        p.t_2q, p.t_idle_op, p.t_m, p.p_1q_impl, p.p_2q_impl,
            p.p_meas_impl, p.r_decoh_target.value_or(0.0)};
}

mfqec::DerivedRates to_cpp(const mfqec_rates &r) {
    for (double p : {r.p_1q, r.p_2q, r.p_idle_op, r.p_meas}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("rates must lie in [0, 1]");
        }
    }
    return {r.p_1q, r.p_2q, r.p_idle_op, r.p_meas, r.r_decoh};
}

mfqec_rates to_c(const mfqec::DerivedRates &r) {
    return {r.p_1q, r.p_2q, r.p_idle_op, r.p_meas, r.r_decoh};
}

mfqec::Architecture to_arch(int a) {
    if (a < 0 || a > 2) {
        throw std::invalid_argument("unknown architecture " + std::to_string(a));
    }
    return static_cast<mfqec::Architecture>(a);
}

mfqec::CorrectionScheme to_scheme(int s) {
    if (s == MFQEC_SCHEME_MAJORITY_TOFFOLI) {
        return mfqec::CorrectionScheme::MAJORITY_TOFFOLI;
    }
    if (s == MFQEC_SCHEME_PROJECTOR_C3NOT) {
        return mfqec::CorrectionScheme::PROJECTOR_C3NOT;
    }
    throw std::invalid_argument("unknown correction scheme " + std::to_string(s));
}

mfqec::ResourceProfile to_cpp(const mfqec_profile &p) {
    return {to_arch(p.architecture), p.distance,       p.n_qubits,         p.n_cnot_per_cycle, p.cnot_depth_per_cycle,
            p.round_depth,           p.n_gate_locations, p.n_idle_locations, p.alpha};
}

mfqec_estimate to_c(const mfqec::McLogicalEstimate &e) {
    return {e.p_l, e.ci_low, e.ci_high, e.n_shots, e.n_failures};
}

}  // namespace

extern "C" {

const char *mfqec_version(void) {
    return "0.1.0";
}

const char *mfqec_status_name(mfqec_status status) {
    switch (status) {
        case MFQEC_OK:
            return "ok";
        case MFQEC_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case MFQEC_ERR_OUT_OF_RANGE:
            return "out of range";
        case MFQEC_ERR_UNSUPPORTED:
            return "unsupported";
        case MFQEC_ERR_CAPACITY:
            return "capacity exceeded";
        case MFQEC_ERR_CONFIG:
            return "configuration error";
        case MFQEC_ERR_IO:
            return "i/o error";
        case MFQEC_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *mfqec_last_error(void) {
    return g_last_error.c_str();
}

const char *mfqec_text_data(const mfqec_text *text) {
    return text ? text->value.c_str() : "";
}

size_t mfqec_text_size(const mfqec_text *text) {
    return text ? text->value.size() : 0;
}

void mfqec_text_free(mfqec_text *text) {
    delete text;
}

void mfqec_hardware_default(mfqec_hardware *out) {
    if (out) {
        *out = to_c(mfqec::HardwareParams::base());
    }
}

mfqec_status mfqec_p_decoh(double t, double t1, double t2, double *out) {
    return guard([&] {
        require(out, "out");
        *out = mfqec::p_decoh(t, t1, t2);
    });
}

mfqec_status mfqec_derive_rates(const mfqec_hardware *hw, mfqec_rates *out) {
    return guard([&] {
        require(hw, "hw");
        require(out, "out");
        *out = to_c(mfqec::derive_rates(to_cpp(*hw)));
    });
}

mfqec_status mfqec_t_m_for_ratio(const mfqec_hardware *hw, double ratio, double *out) {
    return guard([&] {
        require(hw, "hw");
        require(out, "out");
        *out = mfqec::t_m_for_ratio(to_cpp(*hw), ratio);
    });
}

mfqec_status mfqec_rates_for_point(const mfqec_hardware *hw, double r, double s, mfqec_rates *out) {
    return guard([&] {
        require(hw, "hw");
        require(out, "out");
        *out = to_c(mfqec::rates_for_point(to_cpp(*hw), r, s));
    });
}

mfqec_status mfqec_config_default(mfqec_config **out) {
    return guard([&] {
        require(out, "out");
        *out = new mfqec_config{};
    });
}

mfqec_status mfqec_config_parse(const char *yaml_text, mfqec_config **out) {
    return guard([&] {
        require(yaml_text, "yaml_text");
        require(out, "out");
        *out = new mfqec_config{mfqec::parse_config(yaml_text)};
    });
}

mfqec_status mfqec_config_load(const char *path, mfqec_config **out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        *out = new mfqec_config{mfqec::load_config(path)};
    });
}

void mfqec_config_free(mfqec_config *cfg) {
    delete cfg;
}

mfqec_status mfqec_config_set_sweep_kind(mfqec_config *cfg, const char *kind) {
    return guard([&] {
        require(cfg, "cfg");
        require(kind, "kind");
        cfg->cfg.sweep_kind = mfqec::parse_sweep_kind(kind);
    });
}

mfqec_status mfqec_config_set_workers(mfqec_config *cfg, unsigned workers) {
    return guard([&] {
        require(cfg, "cfg");
        if (workers == 0) {
            throw mfqec::ConfigError("config key 'workers' must be positive");
        }
        cfg->cfg.workers = workers;
    });
}

mfqec_status mfqec_config_set_n_shots(mfqec_config *cfg, uint64_t n_shots) {
    return guard([&] {
        require(cfg, "cfg");
        if (n_shots == 0) {
            throw mfqec::ConfigError("config key 'n_shots' must be positive");
        }
        cfg->cfg.n_shots = n_shots;
    });
}

mfqec_status mfqec_config_set_seed(mfqec_config *cfg, uint64_t seed) {
    return guard([&] {
        require(cfg, "cfg");
        cfg->cfg.seed = seed;
    });
}

mfqec_status mfqec_config_set_distances(mfqec_config *cfg, const uint32_t *d, size_t n) {
    return guard([&] {
        require(cfg, "cfg");
        require(d, "d");
        mfqec::SweepConfig next = cfg->cfg;
        next.distances.assign(d, d + n);
        next.validate();
        cfg->cfg = std::move(next);
    });
}

uint64_t mfqec_config_seed(const mfqec_config *cfg) {
    return cfg ? cfg->cfg.seed : 0;
}

uint64_t mfqec_config_n_shots(const mfqec_config *cfg) {
    return cfg ? cfg->cfg.n_shots : 0;
}

double mfqec_config_alpha(const mfqec_config *cfg) {
    return cfg ? cfg->cfg.alpha : 0;
}

int mfqec_config_double_meas_flip(const mfqec_config *cfg) {
    return cfg ? int(cfg->cfg.double_meas_flip) : 0;
}

mfqec_status mfqec_config_hardware(const mfqec_config *cfg, mfqec_hardware *out) {
    return guard([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = to_c(mfqec::effective_hardware(cfg->cfg));
    });
}

mfqec_status mfqec_layout_new(uint32_t distance, mfqec_layout **out) {
    return guard([&] {
        require(out, "out");
        *out = new mfqec_layout{mfqec::build_layout(distance)};
    });
}

void mfqec_layout_free(mfqec_layout *layout) {
    delete layout;
}

uint32_t mfqec_layout_num_data(const mfqec_layout *layout) {
    return layout ? layout->layout.num_data() : 0;
}

uint32_t mfqec_layout_num_qubits(const mfqec_layout *layout) {
    return layout ? layout->layout.num_qubits() : 0;
}

mfqec_status mfqec_layout_dump(const mfqec_layout *layout, mfqec_text **out) {
    return guard([&] {
        require(layout, "layout");
        require(out, "out");
        const auto &l = layout->layout;
        std::ostringstream s;
        s << "# distance " << l.distance << '\n';
        for (size_t k = 0; k < l.z_stabilizers.size(); k++) {
            s << "SZ" << k + 1 << ' ' << l.z_stabilizers[k].str() << '\n';
        }
        for (size_t k = 0; k < l.x_stabilizers.size(); k++) {
            s << "SX" << k + 1 << ' ' << l.x_stabilizers[k].str() << '\n';
        }
        s << "LZ " << l.logical_z.str() << '\n';
        s << "LX " << l.logical_x.str() << '\n';
        *out = make_text(s.str());
    });
}

mfqec_status mfqec_memory_new(uint32_t distance, char basis, const mfqec_rates *rates, int double_meas_flip,
                              mfqec_memory **out) {
    return guard([&] {
        require(rates, "rates");
        require(out, "out");
        mfqec::Basis b;
        if (basis == 'Z' || basis == 'z') {
            b = mfqec::Basis::Z;
        } else if (basis == 'X' || basis == 'x') {
            b = mfqec::Basis::X;
        } else {
            throw std::invalid_argument("basis must be 'Z' or 'X'");
        }
        auto layout = mfqec::build_layout(distance);
        auto mem = std::make_unique<mfqec_memory>();
        mem->circuit = mfqec::make_memory_noisy_circuit(layout, b, to_cpp(*rates),
                                                        mfqec::NoiseOptions{double_meas_flip != 0});
        mem->dem = mfqec::enumerate_fault_effects(mem->circuit);
        mem->graph = mfqec::DetectorGraph::build(mem->dem);
        *out = mem.release();
    });
}

void mfqec_memory_free(mfqec_memory *mem) {
    delete mem;
}

uint32_t mfqec_memory_num_detectors(const mfqec_memory *mem) {
    return mem ? mem->dem.num_detectors : 0;
}

mfqec_status mfqec_memory_circuit_text(const mfqec_memory *mem, mfqec_text **out) {
    return guard([&] {
        require(mem, "mem");
        require(out, "out");
        *out = make_text(mem->circuit.schedule.str());
    });
}

mfqec_status mfqec_memory_dem_text(const mfqec_memory *mem, mfqec_text **out) {
    return guard([&] {
        require(mem, "mem");
        require(out, "out");
        *out = make_text(mem->dem.str());
    });
}

mfqec_status mfqec_memory_graph(const mfqec_memory *mem, mfqec_graph **out) {
    return guard([&] {
        require(mem, "mem");
        require(out, "out");
        *out = new mfqec_graph{mem->graph};
    });
}

mfqec_status mfqec_memory_sample(const mfqec_memory *mem, uint64_t n_shots, uint64_t seed, unsigned workers,
                                 uint8_t *detectors, uint8_t *logical) {
    return guard([&] {
        require(mem, "mem");
        require(detectors, "detectors");
        require(logical, "logical");
        auto batch = mfqec::sample(mem->circuit, n_shots, seed, workers);
        std::copy(batch.detectors.begin(), batch.detectors.end(), detectors);
        std::copy(batch.logical.begin(), batch.logical.end(), logical);
    });
}

mfqec_status mfqec_memory_estimate(const mfqec_memory *mem, uint64_t n_shots, uint64_t seed, unsigned workers,
                                   mfqec_estimate *out) {
    return guard([&] {
        require(mem, "mem");
        require(out, "out");
        if (n_shots == 0) {
            throw std::invalid_argument("n_shots must be positive");
        }
        auto batch = mfqec::sample(mem->circuit, n_shots, seed, workers);
        uint64_t failures = 0;
        for (uint64_t k = 0; k < n_shots; k++) {
            auto res = mem->graph.decode({batch.shot(k), batch.num_detectors});
            failures += uint8_t(res.predicted_logical_flip) != batch.logical[k];
        }
        auto ci = mfqec::wilson_interval(failures, n_shots);
        *out = {double(failures) / double(n_shots), ci.low, ci.high, n_shots, failures};
    });
}

mfqec_status mfqec_graph_parse(const char *text, mfqec_graph **out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new mfqec_graph{mfqec::DetectorGraph::parse(text)};
    });
}

mfqec_status mfqec_graph_serialize(const mfqec_graph *graph, mfqec_text **out) {
    return guard([&] {
        require(graph, "graph");
        require(out, "out");
        *out = make_text(graph->graph.serialize());
    });
}

void mfqec_graph_free(mfqec_graph *graph) {
    delete graph;
}

uint32_t mfqec_graph_num_detectors(const mfqec_graph *graph) {
    return graph ? graph->graph.num_detectors() : 0;
}

mfqec_status mfqec_graph_decode(const mfqec_graph *graph, const uint8_t *detectors, size_t n, int *logical_flip,
                                int64_t *weight) {
    return guard([&] {
        require(graph, "graph");
        require(logical_flip, "logical_flip");
        if (n != 0) {
            require(detectors, "detectors");
        }
        if (n != graph->graph.num_detectors()) {
            throw std::invalid_argument("syndrome has " + std::to_string(n) + " entries, graph has " +
                                        std::to_string(graph->graph.num_detectors()) + " detectors");
        }
        auto res = graph->graph.decode({detectors, n});
        *logical_flip = res.predicted_logical_flip ? 1 : 0;
        if (weight) {
            *weight = res.total_weight;
        }
    });
}

mfqec_status mfqec_profile_build(int architecture, uint32_t distance, double alpha, mfqec_profile *out) {
    return guard([&] {
        require(out, "out");
        auto p = mfqec::build_profile(to_arch(architecture), distance, alpha);
        *out = {int(p.architecture),    p.distance,    p.n_qubits,         p.n_cnot_per_cycle,
                p.cnot_depth_per_cycle, p.round_depth, p.n_gate_locations, p.n_idle_locations,
                p.alpha};
    });
}

mfqec_status mfqec_x_round_budget(uint32_t distance, mfqec_x_round *out) {
    return guard([&] {
        require(out, "out");
        auto b = mfqec::x_round_cnot_budget(distance);
        *out = {b.transversal, b.extraction, b.remap, b.correction, b.total()};
    });
}

void mfqec_gadget_cnot_counts(int *toffoli, int *c3not, int *cccz) {
    if (toffoli) {
        *toffoli = mfqec::toffoli_cnot_count();
    }
    if (c3not) {
        *c3not = mfqec::c3not_cnot_count();
    }
    if (cccz) {
        *cccz = mfqec::cccz_cnot_count();
    }
}

mfqec_status mfqec_mfec_estimate(const mfqec_profile *profile, const mfqec_rates *rates, uint64_t n_shots,
                                 uint64_t seed, mfqec_estimate *out) {
    return guard([&] {
        require(profile, "profile");
        require(rates, "rates");
        require(out, "out");
        *out = to_c(mfqec::mc_logical_error(to_cpp(*profile), to_cpp(*rates), n_shots, seed));
    });
}

mfqec_status mfqec_mfec_analytic(const mfqec_profile *profile, const mfqec_rates *rates, double *out) {
    return guard([&] {
        require(profile, "profile");
        require(rates, "rates");
        require(out, "out");
        *out = mfqec::analytic_logical_error(to_cpp(*profile), to_cpp(*rates));
    });
}

mfqec_status mfqec_bitflip_ft_check(int scheme, mfqec_ft_report *out, mfqec_text **details) {
    return guard([&] {
        require(out, "out");
        auto gadget = mfqec::build_bitflip_gadget(to_scheme(scheme));
        auto r = mfqec::ft_check(gadget);
        *out = {scheme,
                r.n_locations,
                r.n_cases,
                r.violations.size(),
                r.violating_locations.size(),
                gadget.cnot_equivalent()};
        if (details) {
            std::ostringstream s;
            for (const auto &v : r.violations) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.6g", v.failure_probability);
                s << "location " << v.location << " (" << gadget.locations[v.location].description << ") pauli "
                  << v.pauli << " input |" << (v.input_bit ? "111" : "000") << "> failure " << buf << '\n';
            }
            *details = make_text(s.str());
        }
    });
}

mfqec_status mfqec_bitflip_scaling(int scheme, const double *p, size_t n_p, uint64_t n_shots, uint64_t seed,
                                   unsigned workers, mfqec_text **csv, double *slope) {
    return guard([&] {
        require(csv, "csv");
        if (n_p != 0) {
            require(p, "p");
        }
        auto gadget = mfqec::build_bitflip_gadget(to_scheme(scheme));
        auto curve = mfqec::scaling_curve(gadget, std::vector<double>(p, p + n_p), n_shots, seed, workers);
        std::ostringstream s;
        s << "p,p_l,ci_low,ci_high,n_shots,n_failures\n";
        for (const auto &pt : curve.points) {
            s << mfqec::format_number(pt.p) << ',' << mfqec::format_number(pt.p_l) << ','
              << mfqec::format_number(pt.ci_low) << ',' << mfqec::format_number(pt.ci_high) << ',' << pt.n_shots
              << ',' << pt.n_failures << '\n';
        }
        *csv = make_text(s.str());
        if (slope) {
            *slope = curve.slope;
        }
    });
}

mfqec_status mfqec_bitflip_malignant_weight(int scheme, double *out) {
    return guard([&] {
        require(out, "out");
        *out = mfqec::malignant_pair_weight(mfqec::build_bitflip_gadget(to_scheme(scheme)));
    });
}

mfqec_status mfqec_sweep_run(const mfqec_config *cfg, mfqec_text **csv, mfqec_text **audit) {
    return guard([&] {
        require(cfg, "cfg");
        require(csv, "csv");
        auto result = mfqec::run_sweep(cfg->cfg);
        std::unique_ptr<mfqec_text> a;
        if (audit) {
            a.reset(make_text(result.audit()));
        }
        *csv = make_text(result.csv());
        if (audit) {
            *audit = a.release();
        }
    });
}

mfqec_status mfqec_breakeven_run(const mfqec_config *cfg, mfqec_text **csv) {
    return guard([&] {
        require(cfg, "cfg");
        require(csv, "csv");
        *csv = make_text(mfqec::breakeven_csv(mfqec::run_breakeven(cfg->cfg)));
    });
}

}  // extern "C"
