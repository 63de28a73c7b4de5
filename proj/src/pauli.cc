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

#include "mfqec/pauli.h"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "mfqec/errors.h"

namespace mfqec {

namespace {

size_t num_words(size_t n) {
    return (n + 63) / 64;
}

size_t popcount_and(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) {
    size_t total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::popcount(a[k] & b[k]);
    }
    return total;
}

void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(p.n_qubits()) + " vs " + std::to_string(q.n_qubits()));
    }
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::H:
            return "H";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::RESET:
            return "RESET";
        case GateKind::MEASURE:
            return "MEASURE";
        case GateKind::IDLE:
            return "IDLE";
        case GateKind::TOFFOLI:
            return "TOFFOLI";
        case GateKind::C3NOT:
            return "C3NOT";
    }
    return "?";
}

GateRef GateRef::cnot(uint32_t control, uint32_t target) {
    GateRef g{GateKind::CNOT};
    g.targets[0] = control;
    g.targets[1] = target;
    g.arity = 2;
    return g;
}

GateRef GateRef::h(uint32_t q) {
    return single(GateKind::H, q);
}

GateRef GateRef::swap(uint32_t a, uint32_t b) {
    GateRef g{GateKind::SWAP};
    g.targets[0] = a;
    g.targets[1] = b;
    g.arity = 2;
    return g;
}

GateRef GateRef::single(GateKind kind, uint32_t q) {
    GateRef g{kind};
    g.targets[0] = q;
    g.arity = 1;
    return g;
}

PauliString::PauliString(size_t n_qubits) : n_(n_qubits), xs_(num_words(n_qubits)), zs_(num_words(n_qubits)) {
}

PauliString PauliString::from_factors(size_t n_qubits, std::initializer_list<std::pair<uint32_t, Pauli>> factors) {
    PauliString result(n_qubits);
    for (const auto &[q, p] : factors) {
        PauliString f(n_qubits);
        f.set(q, p);
        result = multiply(result, f);
    }
    return result;
}

PauliString PauliString::x_on(size_t n_qubits, const std::vector<uint32_t> &qubits) {
    PauliString result(n_qubits);
    for (uint32_t q : qubits) {
        result.check_index(q);
        result.xs_[q / 64] ^= uint64_t{1} << (q % 64);
    }
    return result;
}

PauliString PauliString::z_on(size_t n_qubits, const std::vector<uint32_t> &qubits) {
    PauliString result(n_qubits);
    for (uint32_t q : qubits) {
        result.check_index(q);
        result.zs_[q / 64] ^= uint64_t{1} << (q % 64);
    }
    return result;
}

PauliString PauliString::parse(size_t n_qubits, std::string_view text) {
    PauliString result(n_qubits);
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    if (text.empty() || text == "I") {
        result.phase_ = phase;
        return result;
    }
    while (!text.empty()) {
        size_t end = text.find('*');
        std::string_view factor = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (factor.size() < 2) {
            throw std::invalid_argument("bad Pauli factor '" + std::string(factor) + "'");
        }
        Pauli p;
        switch (factor[0]) {
            case 'X':
                p = Pauli::X;
                break;
            case 'Y':
                p = Pauli::Y;
                break;
            case 'Z':
                p = Pauli::Z;
                break;
            default:
                throw std::invalid_argument("bad Pauli factor '" + std::string(factor) + "'");
        }
        uint32_t label = 0;
        auto [ptr, ec] = std::from_chars(factor.data() + 1, factor.data() + factor.size(), label);
        if (ec != std::errc() || ptr != factor.data() + factor.size() || label == 0) {
            throw std::invalid_argument("bad qubit label in '" + std::string(factor) + "'");
        }
        PauliString f(n_qubits);
        f.set(label - 1, p);
        result = multiply(result, f);
    }
    result.phase_ = (result.phase_ + phase) & 3;
    return result;
}

void PauliString::check_index(uint32_t q) const {
    if (q >= n_) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

bool PauliString::x(uint32_t q) const {
    check_index(q);
    return (xs_[q / 64] >> (q % 64)) & 1;
}

bool PauliString::z(uint32_t q) const {
    check_index(q);
    return (zs_[q / 64] >> (q % 64)) & 1;
}

Pauli PauliString::get(uint32_t q) const {
    return static_cast<Pauli>(uint8_t(x(q)) | (uint8_t(z(q)) << 1));
}

void PauliString::set(uint32_t q, Pauli p) {
    check_index(q);
    uint64_t bit = uint64_t{1} << (q % 64);
    uint8_t v = static_cast<uint8_t>(p);
    xs_[q / 64] = (v & 1) ? (xs_[q / 64] | bit) : (xs_[q / 64] & ~bit);
    zs_[q / 64] = (v & 2) ? (zs_[q / 64] | bit) : (zs_[q / 64] & ~bit);
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("Pauli string has an imaginary phase: " + str());
    }
    return phase_ == 0 ? +1 : -1;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

static std::vector<uint32_t> bits_of(const std::vector<uint64_t> &words) {
    std::vector<uint32_t> out;
    for (size_t k = 0; k < words.size(); k++) {
        uint64_t w = words[k];
        while (w) {
            out.push_back(uint32_t(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<uint32_t> PauliString::x_support() const {
    return bits_of(xs_);
}

std::vector<uint32_t> PauliString::z_support() const {
    return bits_of(zs_);
}

std::vector<uint32_t> PauliString::support() const {
    std::vector<uint64_t> both(xs_.size());
    for (size_t k = 0; k < xs_.size(); k++) {
        both[k] = xs_[k] | zs_[k];
    }
    return bits_of(both);
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_];
    bool first = true;
    for (uint32_t q : support()) {
        if (!first) {
            out += '*';
        }
        first = false;
        out += "IXZY"[static_cast<uint8_t>(get(q))];
        out += std::to_string(q + 1);
    }
    if (first) {
        out += 'I';
    }
    return out;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    PauliString r(p.n_);
    for (size_t k = 0; k < r.xs_.size(); k++) {
        r.xs_[k] = p.xs_[k] ^ q.xs_[k];
        r.zs_[k] = p.zs_[k] ^ q.zs_[k];
    }
    // i^{x.z} X^x Z^z convention: reorder Z^zp X^xq and re-absorb the Y factors.
    size_t e = p.phase_ + q.phase_;
    e += popcount_and(p.xs_, p.zs_) + popcount_and(q.xs_, q.zs_);
    e += 2 * popcount_and(p.zs_, q.xs_);
    e += 4 * r.n_ - popcount_and(r.xs_, r.zs_);
    r.phase_ = uint8_t(e & 3);
    return r;
}

CommutationResult commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    size_t overlaps = popcount_and(p.x_words(), q.z_words()) + popcount_and(p.z_words(), q.x_words());
    return {overlaps % 2 == 0};
}

PauliString conjugate_through_gate(const PauliString &p, const GateRef &gate) {
    PauliString r = p;
    for (uint8_t k = 0; k < gate.arity; k++) {
        r.check_index(gate.targets[k]);
    }
    switch (gate.kind) {
        case GateKind::H: {
            uint32_t q = gate.targets[0];
            bool x = r.x(q), z = r.z(q);
            if (x && z) {
                r.negate();
            }
            r.set(q, static_cast<Pauli>(uint8_t(z) | (uint8_t(x) << 1)));
            return r;
        }
        case GateKind::CNOT: {
            uint32_t c = gate.targets[0], t = gate.targets[1];
            if (c == t) {
                throw std::invalid_argument("CNOT control equals target");
            }
            bool xc = r.x(c), zc = r.z(c), xt = r.x(t), zt = r.z(t);
            if (xc && zt && (xt == zc)) {
                r.negate();
            }
            xt ^= xc;
            zc ^= zt;
            r.set(c, static_cast<Pauli>(uint8_t(xc) | (uint8_t(zc) << 1)));
            r.set(t, static_cast<Pauli>(uint8_t(xt) | (uint8_t(zt) << 1)));
            return r;
        }
        case GateKind::SWAP: {
            uint32_t a = gate.targets[0], b = gate.targets[1];
            Pauli pa = r.get(a), pb = r.get(b);
            r.set(a, pb);
            r.set(b, pa);
            return r;
        }
        default:
            throw UnsupportedGate(std::string("cannot conjugate a Pauli through ") + gate_name(gate.kind));
    }
}

}  // namespace mfqec
