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

#include "mfqec/bitflip_mfec.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mfqec/mfec_model.h"
#include "mfqec/rng.h"

namespace mfqec {

namespace {

constexpr uint32_t D1 = 0, D2 = 1, D3 = 2, A1 = 3, A2 = 4, A3 = 5;
constexpr double kViolationThreshold = 1e-10;

const char *qubit_name(uint32_t q) {
    static const char *names[] = {"d1", "d2", "d3", "a1", "a2", "a3"};
    return q < 6 ? names[q] : "?";
}

const char *op_name(GadgetOpKind k) {
    switch (k) {
        case GadgetOpKind::PREP:
            return "PREP";
        case GadgetOpKind::CNOT:
            return "CNOT";
        case GadgetOpKind::H:
            return "H";
        case GadgetOpKind::T:
            return "T";
        case GadgetOpKind::TDG:
            return "TDG";
        case GadgetOpKind::X:
            return "X";
        case GadgetOpKind::TOFFOLI:
            return "TOFFOLI";
        case GadgetOpKind::C3NOT:
            return "C3NOT";
    }
    return "?";
}

std::string describe(const GadgetOp &op) {
    std::string s = op_name(op.kind);
    s += '(';
    for (size_t j = 0; j < op.qubits.size(); j++) {
        s += (j ? "," : "");
        s += qubit_name(op.qubits[j]);
    }
    return s + ')';
}

void append_toffoli(std::vector<GadgetOp> &ops, uint32_t c1, uint32_t c2, uint32_t t) {
    using K = GadgetOpKind;
    ops.push_back({K::H, {t}});
    ops.push_back({K::CNOT, {c2, t}});
    ops.push_back({K::TDG, {t}});
    ops.push_back({K::CNOT, {c1, t}});
    ops.push_back({K::T, {t}});
    ops.push_back({K::CNOT, {c2, t}});
    ops.push_back({K::TDG, {t}});
    ops.push_back({K::CNOT, {c1, t}});
    ops.push_back({K::T, {c2}});
    ops.push_back({K::T, {t}});
    ops.push_back({K::H, {t}});
    ops.push_back({K::CNOT, {c1, c2}});
    ops.push_back({K::T, {c1}});
    ops.push_back({K::TDG, {c2}});
    ops.push_back({K::CNOT, {c1, c2}});
}

void apply_op(StateVector &s, const GadgetOp &op) {
    switch (op.kind) {
        case GadgetOpKind::PREP:
            break;
        case GadgetOpKind::CNOT:
            s.cnot(op.qubits[0], op.qubits[1]);
            break;
        case GadgetOpKind::H:
            s.h(op.qubits[0]);
            break;
        case GadgetOpKind::T:
            s.t(op.qubits[0]);
            break;
        case GadgetOpKind::TDG:
            s.tdg(op.qubits[0]);
            break;
        case GadgetOpKind::X:
            s.x(op.qubits[0]);
            break;
        case GadgetOpKind::TOFFOLI:
        case GadgetOpKind::C3NOT: {
            std::vector<uint32_t> controls(op.qubits.begin(), op.qubits.end() - 1);
            s.mcx(controls, op.qubits.back());
            break;
        }
    }
}

void apply_pauli_index(StateVector &s, const FaultLocation &loc, uint32_t pauli) {
    for (size_t j = 0; j < loc.support.size(); j++) {
        s.pauli(loc.support[j], static_cast<Pauli>((pauli >> (2 * j)) & 3));
    }
}

}  // namespace

const char *scheme_name(CorrectionScheme s) {
    return s == CorrectionScheme::MAJORITY_TOFFOLI ? "majority-toffoli" : "projector-c3not";
}

size_t MfecGadget::count(GadgetOpKind kind) const {
    size_t n = 0;
    for (const auto &m : moments) {
        for (const auto &op : m.ops) {
            n += op.kind == kind;
        }
    }
    return n;
}

size_t MfecGadget::cnot_equivalent() const {
    return count(GadgetOpKind::CNOT) + size_t(kToffoliCnotCount) * count(GadgetOpKind::TOFFOLI) +
           size_t(kC3NotCnotCount) * count(GadgetOpKind::C3NOT);
}

MfecGadget build_bitflip_gadget(CorrectionScheme scheme) {
    using K = GadgetOpKind;
    std::vector<GadgetOp> seq;
    for (uint32_t a : {A1, A2, A3}) {
        seq.push_back({K::PREP, {a}});
    }
    // a1 = d1 + d2, a2 = d2 + d3, a3 = d1 + d3.
    seq.push_back({K::CNOT, {D1, A1}});
    seq.push_back({K::CNOT, {D2, A2}});
    seq.push_back({K::CNOT, {D3, A3}});
    seq.push_back({K::CNOT, {D2, A1}});
    seq.push_back({K::CNOT, {D3, A2}});
    seq.push_back({K::CNOT, {D1, A3}});
    if (scheme == CorrectionScheme::MAJORITY_TOFFOLI) {
        append_toffoli(seq, A1, A3, D1);
        append_toffoli(seq, A1, A2, D2);
        append_toffoli(seq, A2, A3, D3);
    } else {
        // Pattern (a1 a2 a3): 101 -> d1, 110 -> d2, 011 -> d3.
        const uint32_t negated[3] = {A2, A3, A1};
        const uint32_t targets[3] = {D1, D2, D3};
        for (int k = 0; k < 3; k++) {
            seq.push_back({K::X, {negated[k]}});
            seq.push_back({K::C3NOT, {A1, A2, A3, targets[k]}});
            seq.push_back({K::X, {negated[k]}});
        }
    }

    MfecGadget g;
    g.scheme = scheme;
    int last[MfecGadget::kNumQubits];
    std::fill(std::begin(last), std::end(last), -1);
    for (const auto &op : seq) {
        int m = 0;
        for (uint32_t q : op.qubits) {
            m = std::max(m, last[q] + 1);
        }
        for (uint32_t q : op.qubits) {
            last[q] = m;
        }
        if (size_t(m) >= g.moments.size()) {
            g.moments.resize(m + 1);
        }
        g.moments[m].ops.push_back(op);
    }

    for (uint32_t q : {D1, D2, D3}) {
        g.locations.push_back({LocationKind::INPUT, 0, {q}, std::string("input ") + qubit_name(q)});
    }
    for (uint32_t m = 0; m < g.moments.size(); m++) {
        bool busy[MfecGadget::kNumQubits] = {};
        for (const auto &op : g.moments[m].ops) {
            for (uint32_t q : op.qubits) {
                busy[q] = true;
            }
            LocationKind kind = op.kind == K::PREP ? LocationKind::PREP : LocationKind::GATE;
            g.locations.push_back({kind, m, op.qubits, "after " + describe(op) + " @" + std::to_string(m)});
        }
        for (uint32_t q = 0; q < MfecGadget::kNumQubits; q++) {
            if (!busy[q]) {
                g.locations.push_back(
                    {LocationKind::IDLE, m, {q}, std::string("idle ") + qubit_name(q) + " @" + std::to_string(m)});
            }
        }
    }
    return g;
}

uint32_t num_paulis(const FaultLocation &loc) {
    return (uint32_t(1) << (2 * loc.support.size())) - 1;
}

StateVector encode_logical(std::complex<double> alpha, std::complex<double> beta) {
    std::vector<StateVector::amp> amps(64, 0);
    amps[0] = alpha;
    amps[7] = beta;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector run_gadget(const MfecGadget &gadget, const StateVector &input, const std::vector<InjectedFault> &faults) {
    if (input.n_qubits() != MfecGadget::kNumQubits) {
        throw std::invalid_argument("gadget input must have 6 qubits");
    }
    std::vector<std::vector<const InjectedFault *>> after(gadget.moments.size());
    std::vector<const InjectedFault *> before;
    for (const auto &f : faults) {
        if (f.location >= gadget.locations.size()) {
            throw std::invalid_argument("fault location " + std::to_string(f.location) + " out of range");
        }
        const auto &loc = gadget.locations[f.location];
        if (f.pauli > num_paulis(loc)) {
            throw std::invalid_argument("Pauli index " + std::to_string(f.pauli) + " out of range for location " +
                                        std::to_string(f.location));
        }
        if (loc.kind == LocationKind::INPUT) {
            before.push_back(&f);
        } else {
            after[loc.moment].push_back(&f);
        }
    }
    StateVector s = input;
    for (const auto *f : before) {
        apply_pauli_index(s, gadget.locations[f->location], f->pauli);
    }
    for (size_t m = 0; m < gadget.moments.size(); m++) {
        for (const auto &op : gadget.moments[m].ops) {
            apply_op(s, op);
        }
        for (const auto *f : after[m]) {
            apply_pauli_index(s, gadget.locations[f->location], f->pauli);
        }
    }
    return s;
}

std::vector<DataBranch> reset_ancillas(const StateVector &pre_reset) {
    std::vector<DataBranch> out;
    for (uint64_t anc = 0; anc < 8; anc++) {
        std::vector<StateVector::amp> amps(8);
        double w = 0;
        for (uint64_t d = 0; d < 8; d++) {
            amps[d] = pre_reset[(anc << 3) | d];
            w += std::norm(amps[d]);
        }
        if (w > 1e-300) {
            out.push_back({w, StateVector::from_amplitudes(std::move(amps))});
        }
    }
    return out;
}

double data_fidelity(const StateVector &pre_reset, const StateVector &ideal_data) {
    double f = 0;
    for (const auto &b : reset_ancillas(pre_reset)) {
        f += b.weight * b.data.overlap(ideal_data);
    }
    return f;
}

double logical_failure_probability(const StateVector &pre_reset, int logical_bit) {
    const uint64_t ref = logical_bit ? 7 : 0;
    double p = 0;
    for (uint64_t i = 0; i < pre_reset.amplitudes().size(); i++) {
        uint64_t diff = (i & 7) ^ ref;
        if (__builtin_popcountll(diff) >= 2) {
            p += std::norm(pre_reset[i]);
        }
    }
    return p;
}

FtReport ft_check(const MfecGadget &gadget) {
    FtReport r;
    r.scheme = gadget.scheme;
    r.n_locations = gadget.locations.size();
    StateVector inputs[2] = {StateVector::basis(6, 0), StateVector::basis(6, 7)};
    for (uint32_t loc = 0; loc < gadget.locations.size(); loc++) {
        bool bad = false;
        for (uint32_t p = 1; p <= num_paulis(gadget.locations[loc]); p++) {
            for (int b = 0; b < 2; b++) {
                r.n_cases++;
                double fail = logical_failure_probability(run_gadget(gadget, inputs[b], {{loc, p}}), b);
                if (fail > kViolationThreshold) {
                    r.violations.push_back({loc, p, b, fail});
                    bad = true;
                }
            }
        }
        if (bad) {
            r.violating_locations.push_back(loc);
        }
    }
    return r;
}

double fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit_loglog_slope: size mismatch");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (!(x[i] > 0) || !(y[i] > 0)) {
            continue;
        }
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        n++;
    }
    if (n < 2) {
        return std::nan("");
    }
    double denom = double(n) * sxx - sx * sx;
    if (denom == 0) {
        return std::nan("");
    }
    return (double(n) * sxy - sx * sy) / denom;
}

ScalingCurve scaling_curve(const MfecGadget &gadget, const std::vector<double> &p_list, uint64_t n_shots,
                           uint64_t seed, unsigned workers) {
    if (n_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    const uint32_t n_loc = uint32_t(gadget.locations.size());
    StateVector inputs[2] = {StateVector::basis(6, 0), StateVector::basis(6, 7)};
    ScalingCurve curve;
    for (size_t pi = 0; pi < p_list.size(); pi++) {
        double p = p_list[pi];
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("fault probability must lie in [0, 1]");
        }
        uint64_t point_seed = derive_seed(seed, 0xB17F11B, pi);
        std::atomic<uint64_t> failures{0};
        auto work = [&](uint64_t begin, uint64_t end) {
            uint64_t local = 0;
            std::vector<InjectedFault> faults;
            for (uint64_t shot = begin; shot < end; shot++) {
                faults.clear();
                for (uint32_t loc = 0; loc < n_loc; loc++) {
                    double u = to_unit(counter_hash(point_seed, shot, loc));
                    if (u < p) {
                        uint32_t n = num_paulis(gadget.locations[loc]);
                        uint32_t pick = std::min(n - 1, uint32_t(u / p * n));
                        faults.push_back({loc, 1 + pick});
                    }
                }
                if (faults.empty()) {
                    continue;
                }
                int b = to_unit(counter_hash(point_seed, shot, n_loc)) < 0.5 ? 0 : 1;
                double fail = logical_failure_probability(run_gadget(gadget, inputs[b], faults), b);
                if (to_unit(counter_hash(point_seed, shot, n_loc + 1)) < fail) {
                    local++;
                }
            }
            failures += local;
        };
        unsigned w = std::max(1u, workers);
        if (w == 1) {
            work(0, n_shots);
        } else {
            std::vector<std::thread> threads;
            uint64_t chunk = (n_shots + w - 1) / w;
            for (unsigned k = 0; k < w; k++) {
                uint64_t begin = std::min<uint64_t>(n_shots, k * chunk);
                uint64_t end = std::min<uint64_t>(n_shots, begin + chunk);
                if (begin < end) {
                    threads.emplace_back(work, begin, end);
                }
            }
            for (auto &t : threads) {
                t.join();
            }
        }
        uint64_t k = failures.load();
        auto ci = wilson_interval(k, n_shots);
        curve.points.push_back({p, double(k) / double(n_shots), ci.low, ci.high, n_shots, k});
    }
    std::vector<double> xs, ys;
    for (const auto &pt : curve.points) {
        xs.push_back(pt.p);
        ys.push_back(pt.p_l);
    }
    curve.slope = fit_loglog_slope(xs, ys);
    return curve;
}

double malignant_pair_weight(const MfecGadget &gadget) {
    const uint32_t n_loc = uint32_t(gadget.locations.size());
    StateVector inputs[2] = {StateVector::basis(6, 0), StateVector::basis(6, 7)};
    double total = 0;
    for (uint32_t l1 = 0; l1 < n_loc; l1++) {
        uint32_t n1 = num_paulis(gadget.locations[l1]);
        for (uint32_t l2 = l1 + 1; l2 < n_loc; l2++) {
            uint32_t n2 = num_paulis(gadget.locations[l2]);
            double sum = 0;
            for (uint32_t p1 = 1; p1 <= n1; p1++) {
                for (uint32_t p2 = 1; p2 <= n2; p2++) {
                    for (int b = 0; b < 2; b++) {
                        sum += logical_failure_probability(run_gadget(gadget, inputs[b], {{l1, p1}, {l2, p2}}), b);
                    }
                }
            }
            total += sum / (2.0 * n1 * n2);
        }
    }
    return total;
}

}  // namespace mfqec
