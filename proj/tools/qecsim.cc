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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfqec/mfqec_c.h"

namespace {

struct CliFailure {
    mfqec_status status;
    std::string message;
};

void check(mfqec_status s) {
    if (s != MFQEC_OK) {
        throw CliFailure{s, mfqec_last_error()};
    }
}

template <typename T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const {
        Free(p);
    }
};
using Text = std::unique_ptr<mfqec_text, Deleter<mfqec_text, mfqec_text_free>>;
using Config = std::unique_ptr<mfqec_config, Deleter<mfqec_config, mfqec_config_free>>;
using Layout = std::unique_ptr<mfqec_layout, Deleter<mfqec_layout, mfqec_layout_free>>;
using Memory = std::unique_ptr<mfqec_memory, Deleter<mfqec_memory, mfqec_memory_free>>;
using Graph = std::unique_ptr<mfqec_graph, Deleter<mfqec_graph, mfqec_graph_free>>;

std::string take(mfqec_text *raw) {
    Text t(raw);
    return std::string(mfqec_text_data(t.get()), mfqec_text_size(t.get()));
}

void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw CliFailure{MFQEC_ERR_IO, "cannot write '" + path + "'"};
    }
}

Config open_config(const std::string &path) {
    mfqec_config *raw = nullptr;
    if (path.empty()) {
        check(mfqec_config_default(&raw));
    } else {
        check(mfqec_config_load(path.c_str(), &raw));
    }
    return Config(raw);
}

int arch_from_name(const std::string &name) {
    if (name == "smsc" || name == "sm-sc") {
        return MFQEC_ARCH_SMSC;
    }
    if (name == "mfec2d" || name == "2d") {
        return MFQEC_ARCH_MFEC2D;
    }
    if (name == "mfec3d" || name == "3d") {
        return MFQEC_ARCH_MFEC3D;
    }
    throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT, "unknown architecture '" + name + "'"};
}

const char *arch_name(int a) {
    static const char *names[] = {"smsc", "mfec2d", "mfec3d"};
    return a >= 0 && a < 3 ? names[a] : "?";
}

int scheme_from_name(const std::string &name) {
    if (name == "majority-toffoli") {
        return MFQEC_SCHEME_MAJORITY_TOFFOLI;
    }
    if (name == "projector-c3not") {
        return MFQEC_SCHEME_PROJECTOR_C3NOT;
    }
    throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT, "unknown scheme '" + name + "'"};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Point options shared by single-point commands.
struct PointOptions {
    std::string config;
    std::optional<double> r;
    double s = 1;
    uint64_t shots = 0;
    std::optional<uint64_t> seed;

    void attach(CLI::App *cmd) {
        cmd->add_option("--config", config, "YAML config file (defaults used when omitted)");
        cmd->add_option("--r", r, "measurement/idle decoherence ratio (re-solves t_m)");
        cmd->add_option("--s", s, "noise scale applied on top of the config")->check(CLI::PositiveNumber);
        cmd->add_option("--shots", shots, "number of shots (config n_shots when omitted)");
        cmd->add_option("--seed", seed, "64-bit seed (config seed when omitted)");
    }

    mfqec_rates rates(const mfqec_config *cfg) const {
        mfqec_hardware hw;
        check(mfqec_config_hardware(cfg, &hw));
        mfqec_rates out;
        if (r) {
            check(mfqec_rates_for_point(&hw, *r, s, &out));
        } else {
            if (s != 1) {
                hw.t1 /= s;
                hw.t2 /= s;
            }
            check(mfqec_derive_rates(&hw, &out));
        }
        return out;
    }

    uint64_t shot_count(const mfqec_config *cfg) const {
        return shots ? shots : mfqec_config_n_shots(cfg);
    }

    uint64_t seed_value(const mfqec_config *cfg) const {
        return seed ? *seed : mfqec_config_seed(cfg);
    }
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliFailure{MFQEC_ERR_IO, "cannot open '" + path + "'"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Memory open_memory(uint32_t d, const std::string &basis, const mfqec_rates &rates, const mfqec_config *cfg) {
    mfqec_memory *raw = nullptr;
    check(mfqec_memory_new(d, basis[0], &rates, mfqec_config_double_meas_flip(cfg), &raw));
    return Memory(raw);
}

/// Decodes "b0,b1,...,bN-1[,logical]" rows. A header line starting with a
/// letter is skipped. A trailing column beyond the detector count is read as
/// the observed logical bit and reported next to the prediction.
std::string decode_rows(const mfqec_graph *graph, const std::string &csv) {
    const uint32_t n_det = mfqec_graph_num_detectors(graph);
    std::istringstream in(csv);
    std::string line;
    std::string out = "shot,predicted_logical_flip,observed_logical_flip,weight\n";
    uint64_t shot = 0;
    size_t line_no = 0;
    std::vector<uint8_t> bits;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) {
            continue;
        }
        bits.clear();
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            if (cell != "0" && cell != "1") {
                throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT,
                                 "line " + std::to_string(line_no) + ": expected 0/1 cells, got '" + cell + "'"};
            }
            bits.push_back(uint8_t(cell[0] - '0'));
        }
        if (bits.size() != n_det && bits.size() != size_t(n_det) + 1) {
            throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT, "line " + std::to_string(line_no) + ": expected " +
                                                             std::to_string(n_det) + " detector bits, got " +
                                                             std::to_string(bits.size())};
        }
        int flip = 0;
        int64_t weight = 0;
        check(mfqec_graph_decode(graph, bits.data(), n_det, &flip, &weight));
        out += std::to_string(shot++) + "," + std::to_string(flip) + "," +
               (bits.size() > n_det ? std::to_string(int(bits[n_det])) : std::string()) + "," +
               std::to_string(weight) + "\n";
    }
    return out;
}

std::string estimate_line(const mfqec_estimate &e) {
    return "p_l=" + fmt(e.p_l) + " ci=[" + fmt(e.ci_low) + ", " + fmt(e.ci_high) +
           "] failures=" + std::to_string(e.n_failures) + "/" + std::to_string(e.n_shots);
}

std::string rates_line(const mfqec_rates &r) {
    return "rates: p_2q=" + fmt(r.p_2q) + " p_idle_op=" + fmt(r.p_idle_op) + " p_meas=" + fmt(r.p_meas) +
           " r_decoh=" + fmt(r.r_decoh);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Surface-code and measurement-free QEC simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mfqec_version()));

    // layout dump
    auto *layout_cmd = app.add_subcommand("layout", "Rotated surface-code layouts");
    layout_cmd->require_subcommand(1);
    auto *layout_dump = layout_cmd->add_subcommand("dump", "Print stabilizer generators and logicals");
    uint32_t layout_d = 3;
    std::string layout_out;
    layout_dump->add_option("--distance,-d", layout_d, "odd code distance >= 3")->required();
    layout_dump->add_option("--out", layout_out, "output file (stdout when omitted)");

    // smsc sample / decode / estimate
    auto *smsc_cmd = app.add_subcommand("smsc", "One-round measurement-based surface-code memory");
    smsc_cmd->require_subcommand(1);
    uint32_t smsc_d = 3;
    PointOptions smsc_point;
    std::string smsc_out;
    std::string smsc_basis = "Z";
    unsigned smsc_workers = 1;
    std::string decode_graph;
    std::string decode_in;
    auto *smsc_sample = smsc_cmd->add_subcommand("sample", "Sample detector and observable bits as CSV");
    auto *smsc_estimate = smsc_cmd->add_subcommand("estimate", "Sample and decode; report the logical error rate");
    auto *smsc_graph = smsc_cmd->add_subcommand("graph", "Print the matching graph");
    auto *smsc_circuit = smsc_cmd->add_subcommand("circuit", "Print the circuit and its detector error model");
    auto *smsc_decode = smsc_cmd->add_subcommand("decode", "Decode detector rows from a CSV file");
    for (auto *cmd : {smsc_sample, smsc_estimate, smsc_graph, smsc_circuit, smsc_decode}) {
        cmd->add_option("--distance,-d", smsc_d, "odd code distance >= 3");
        cmd->add_option("--basis", smsc_basis, "memory basis")->check(CLI::IsMember({"Z", "X"}));
        cmd->add_option("--out", smsc_out, "output file (stdout when omitted)");
        cmd->add_option("--workers", smsc_workers, "worker threads")->check(CLI::PositiveNumber);
        smsc_point.attach(cmd);
    }
    smsc_decode->add_option("--graph", decode_graph, "matching graph file ('smsc graph' output)");
    smsc_decode->add_option("--in", decode_in, "detector CSV ('smsc sample' output)")->required();

    // mfec resources / estimate
    auto *mfec_cmd = app.add_subcommand("mfec", "Measurement-free surface-code resource and error model");
    mfec_cmd->require_subcommand(1);
    auto *mfec_resources = mfec_cmd->add_subcommand("resources", "Resource table per architecture and distance");
    std::vector<uint32_t> res_distances{3, 5};
    double res_alpha = 3.5;
    std::string res_out;
    std::string res_arch;
    std::string res_format = "text";
    mfec_resources->add_option("--distance,--distances,-d", res_distances, "code distances")->delimiter(',');
    mfec_resources->add_option("--arch", res_arch, "smsc, 2d or 3d (all when omitted)");
    mfec_resources->add_option("--format", res_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    mfec_resources->add_option("--alpha", res_alpha, "idle locations per gate location");
    mfec_resources->add_option("--out", res_out, "output file (stdout when omitted)");
    auto *mfec_estimate = mfec_cmd->add_subcommand("estimate", "Monte Carlo logical error per cycle");
    std::string est_arch = "mfec3d";
    uint32_t est_d = 3;
    std::optional<double> est_alpha;
    bool est_analytic = false;
    PointOptions est_point;
    mfec_estimate->add_option("--arch", est_arch, "mfec3d or mfec2d");
    mfec_estimate->add_option("--distance,-d", est_d, "odd code distance >= 3")->required();
    mfec_estimate->add_option("--alpha", est_alpha, "idle locations per gate location (config alpha when omitted)");
    mfec_estimate->add_flag("--analytic", est_analytic, "also print the exact tail probability");
    est_point.attach(mfec_estimate);

    // bitflip ft-check / scaling
    auto *bf_cmd = app.add_subcommand("bitflip", "Three-qubit bit-flip measurement-free gadget");
    bf_cmd->require_subcommand(1);
    std::string bf_scheme = "majority-toffoli";
    auto *bf_check = bf_cmd->add_subcommand("ft-check", "Exhaustive single-fault check");
    bf_check->add_option("--scheme", bf_scheme, "majority-toffoli or projector-c3not");
    auto *bf_scaling = bf_cmd->add_subcommand("scaling", "Logical failure rate versus physical fault rate");
    double pmin = 1e-4, pmax = 1e-2;
    size_t points = 5;
    uint64_t bf_shots = 100000;
    uint64_t bf_seed = 20240601;
    unsigned bf_workers = 1;
    std::string bf_out;
    bf_scaling->add_option("--scheme", bf_scheme, "majority-toffoli or projector-c3not");
    bf_scaling->add_option("--pmin", pmin, "smallest fault probability");
    bf_scaling->add_option("--pmax", pmax, "largest fault probability");
    bf_scaling->add_option("--points", points, "log-spaced points")->check(CLI::PositiveNumber);
    bf_scaling->add_option("--shots", bf_shots, "shots per point")->check(CLI::PositiveNumber);
    bf_scaling->add_option("--seed", bf_seed, "64-bit seed");
    bf_scaling->add_option("--workers", bf_workers, "worker threads")->check(CLI::PositiveNumber);
    bf_scaling->add_option("--out", bf_out, "CSV output (stdout when omitted)");

    // sweep
    auto *sweep_cmd = app.add_subcommand("sweep", "Parameter sweep over all architectures");
    std::string sweep_kind;
    std::string sweep_config;
    std::string sweep_out;
    std::string sweep_audit;
    unsigned sweep_workers = 0;
    sweep_cmd->add_option("kind", sweep_kind, "rdecoh, noise-scale or distance")
        ->required()
        ->check(CLI::IsMember({"rdecoh", "noise-scale", "distance"}));
    sweep_cmd->add_option("--config", sweep_config, "YAML config file");
    sweep_cmd->add_option("--out", sweep_out, "CSV output (stdout when omitted)");
    sweep_cmd->add_option("--audit", sweep_audit, "per-row rate audit CSV");
    sweep_cmd->add_option("--workers", sweep_workers, "override config workers");

    // breakeven
    auto *be_cmd = app.add_subcommand("breakeven", "Break-even decoherence ratio per distance");
    std::string be_config;
    std::string be_out;
    unsigned be_workers = 0;
    be_cmd->add_option("--config", be_config, "YAML config file");
    be_cmd->add_option("--out", be_out, "CSV output (stdout when omitted)");
    be_cmd->add_option("--workers", be_workers, "override config workers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*layout_dump) {
            mfqec_layout *raw = nullptr;
            check(mfqec_layout_new(layout_d, &raw));
            Layout layout(raw);
            mfqec_text *text = nullptr;
            check(mfqec_layout_dump(layout.get(), &text));
            emit(layout_out, take(text));
        } else if (*smsc_decode) {
            Graph graph;
            if (!decode_graph.empty()) {
                mfqec_graph *g = nullptr;
                check(mfqec_graph_parse(read_file(decode_graph).c_str(), &g));
                graph.reset(g);
            } else {
                Config cfg = open_config(smsc_point.config);
                mfqec_rates rates = smsc_point.rates(cfg.get());
                Memory mem = open_memory(smsc_d, smsc_basis, rates, cfg.get());
                mfqec_graph *g = nullptr;
                check(mfqec_memory_graph(mem.get(), &g));
                graph.reset(g);
            }
            emit(smsc_out, decode_rows(graph.get(), read_file(decode_in)));
        } else if (*smsc_cmd) {
            Config cfg = open_config(smsc_point.config);
            mfqec_rates rates = smsc_point.rates(cfg.get());
            Memory mem = open_memory(smsc_d, smsc_basis, rates, cfg.get());
            uint64_t shots = smsc_point.shot_count(cfg.get());
            uint64_t seed = smsc_point.seed_value(cfg.get());
            if (*smsc_sample) {
                uint32_t n_det = mfqec_memory_num_detectors(mem.get());
                std::vector<uint8_t> det(shots * n_det);
                std::vector<uint8_t> obs(shots);
                check(mfqec_memory_sample(mem.get(), shots, seed, smsc_workers, det.data(), obs.data()));
                std::string out;
                for (uint32_t j = 0; j < n_det; j++) {
                    out += "d" + std::to_string(j) + ",";
                }
                out += "logical\n";
                out.reserve(out.size() + shots * 2 * (n_det + 1));
                for (uint64_t k = 0; k < shots; k++) {
                    for (uint32_t j = 0; j < n_det; j++) {
                        out += char('0' + det[k * n_det + j]);
                        out += ',';
                    }
                    out += char('0' + obs[k]);
                    out += '\n';
                }
                emit(smsc_out, out);
            } else if (*smsc_estimate) {
                mfqec_estimate e;
                check(mfqec_memory_estimate(mem.get(), shots, seed, smsc_workers, &e));
                emit(smsc_out, "d=" + std::to_string(smsc_d) + " basis=" + smsc_basis + " " + estimate_line(e) +
                                   "\n" + rates_line(rates) + "\n");
            } else if (*smsc_graph) {
                mfqec_graph *g = nullptr;
                check(mfqec_memory_graph(mem.get(), &g));
                Graph graph(g);
                mfqec_text *text = nullptr;
                check(mfqec_graph_serialize(graph.get(), &text));
                emit(smsc_out, take(text));
            } else {
                mfqec_text *circuit = nullptr;
                check(mfqec_memory_circuit_text(mem.get(), &circuit));
                std::string out = take(circuit);
                mfqec_text *dem = nullptr;
                check(mfqec_memory_dem_text(mem.get(), &dem));
                out += take(dem);
                emit(smsc_out, out);
            }
        } else if (*mfec_resources) {
            std::vector<int> archs{MFQEC_ARCH_SMSC, MFQEC_ARCH_MFEC3D, MFQEC_ARCH_MFEC2D};
            if (!res_arch.empty()) {
                archs = {arch_from_name(res_arch)};
            }
            std::vector<mfqec_profile> profiles;
            for (uint32_t d : res_distances) {
                for (int a : archs) {
                    mfqec_profile p;
                    check(mfqec_profile_build(a, d, res_alpha, &p));
                    profiles.push_back(p);
                }
            }
            std::ostringstream out;
            if (res_format == "csv") {
                out << "arch,d,n_qubits,n_cnot_per_cycle,cnot_depth_per_cycle,round_depth,n_gate_locations,"
                       "n_idle_locations,alpha\n";
                for (const auto &p : profiles) {
                    out << arch_name(p.architecture) << ',' << p.distance << ',' << p.n_qubits << ','
                        << p.n_cnot_per_cycle << ',' << p.cnot_depth_per_cycle << ',' << p.round_depth << ','
                        << p.n_gate_locations << ',' << p.n_idle_locations << ',' << fmt(p.alpha) << '\n';
                }
            } else {
                char line[160];
                std::snprintf(line, sizeof(line), "%-7s %3s %8s %10s %6s %6s %10s %10s\n", "arch", "d", "qubits",
                              "cnots", "depth", "round", "gates", "idles");
                out << line;
                for (const auto &p : profiles) {
                    std::snprintf(line, sizeof(line), "%-7s %3u %8lld %10lld %6lld %6lld %10lld %10lld\n",
                                  arch_name(p.architecture), p.distance, (long long)p.n_qubits,
                                  (long long)p.n_cnot_per_cycle, (long long)p.cnot_depth_per_cycle,
                                  (long long)p.round_depth, (long long)p.n_gate_locations,
                                  (long long)p.n_idle_locations);
                    out << line;
                }
                int toffoli = 0, c3not = 0, cccz = 0;
                mfqec_gadget_cnot_counts(&toffoli, &c3not, &cccz);
                out << "gadget cnots: toffoli=" << toffoli << " c3not=" << c3not << " cccz=" << cccz << '\n';
                for (uint32_t d : res_distances) {
                    mfqec_x_round x;
                    check(mfqec_x_round_budget(d, &x));
                    out << "x-round d=" << d << ": transversal=" << x.transversal << " extraction=" << x.extraction
                        << " remap=" << x.remap << " correction=" << x.correction << " total=" << x.total
                        << " cycle=" << 2 * x.total << '\n';
                }
            }
            emit(res_out, out.str());
        } else if (*mfec_estimate) {
            Config cfg = open_config(est_point.config);
            mfqec_rates rates = est_point.rates(cfg.get());
            int arch = arch_from_name(est_arch);
            if (arch == MFQEC_ARCH_SMSC) {
                throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT, "use 'smsc decode' for the measurement-based code"};
            }
            mfqec_profile p;
            check(mfqec_profile_build(arch, est_d, est_alpha ? *est_alpha : mfqec_config_alpha(cfg.get()), &p));
            mfqec_estimate e;
            check(mfqec_mfec_estimate(&p, &rates, est_point.shot_count(cfg.get()), est_point.seed_value(cfg.get()),
                                      &e));
            std::string out = "arch=" + est_arch + " d=" + std::to_string(est_d) + " " + estimate_line(e) + "\n";
            if (est_analytic) {
                double exact = 0;
                check(mfqec_mfec_analytic(&p, &rates, &exact));
                out += "analytic p_l=" + fmt(exact) + "\n";
            }
            emit("", out + rates_line(rates) + "\n");
        } else if (*bf_check) {
            mfqec_ft_report r;
            mfqec_text *details = nullptr;
            check(mfqec_bitflip_ft_check(scheme_from_name(bf_scheme), &r, &details));
            std::string listing = take(details);
            std::cout << "scheme=" << bf_scheme << " locations=" << r.n_locations << " cases=" << r.n_cases
                      << " violations=" << r.n_violations << " violating_locations=" << r.n_violating_locations
                      << " cnot_equivalent=" << r.cnot_equivalent << '\n'
                      << listing << "verdict: " << (r.n_violating_locations == 0 ? "PASS" : "FAIL") << '\n';
            return r.n_violating_locations == 0 ? 0 : 3;
        } else if (*bf_scaling) {
            if (!(pmin > 0) || !(pmax >= pmin)) {
                throw CliFailure{MFQEC_ERR_INVALID_ARGUMENT, "need 0 < pmin <= pmax"};
            }
            std::vector<double> ps;
            for (size_t i = 0; i < points; i++) {
                double f = points == 1 ? 0.0 : double(i) / double(points - 1);
                ps.push_back(std::exp(std::log(pmin) + f * (std::log(pmax) - std::log(pmin))));
            }
            mfqec_text *csv = nullptr;
            double slope = 0;
            check(mfqec_bitflip_scaling(scheme_from_name(bf_scheme), ps.data(), ps.size(), bf_shots, bf_seed,
                                        bf_workers, &csv, &slope));
            emit(bf_out, take(csv));
            std::cerr << "log-log slope: " << fmt(slope) << '\n';
        } else if (*sweep_cmd) {
            Config cfg = open_config(sweep_config);
            check(mfqec_config_set_sweep_kind(cfg.get(), sweep_kind.c_str()));
            if (sweep_workers) {
                check(mfqec_config_set_workers(cfg.get(), sweep_workers));
            }
            mfqec_text *csv = nullptr;
            mfqec_text *audit = nullptr;
            check(mfqec_sweep_run(cfg.get(), &csv, sweep_audit.empty() ? nullptr : &audit));
            emit(sweep_out, take(csv));
            if (!sweep_audit.empty()) {
                emit(sweep_audit, take(audit));
            }
        } else if (*be_cmd) {
            Config cfg = open_config(be_config);
            if (be_workers) {
                check(mfqec_config_set_workers(cfg.get(), be_workers));
            }
            mfqec_text *csv = nullptr;
            check(mfqec_breakeven_run(cfg.get(), &csv));
            emit(be_out, take(csv));
        }
    } catch (const CliFailure &f) {
        std::cerr << "error (" << mfqec_status_name(f.status) << "): " << f.message << '\n';
        return 1;
    }
    return 0;
}
