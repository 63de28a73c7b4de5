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

#include "mfqec/statevector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mfqec {

StateVector StateVector::basis(uint32_t n, uint64_t index) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("state vectors hold at most " + std::to_string(kMaxQubits) + " qubits");
    }
    StateVector s;
    s.n_ = n;
    s.a_.assign(size_t(1) << n, 0);
    if (index >= s.a_.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    s.a_[index] = 1;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<amp> amplitudes) {
    size_t len = amplitudes.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    uint32_t n = 0;
    while ((size_t(1) << n) < len) {
        n++;
    }
    if (n > kMaxQubits) {
        throw std::invalid_argument("state vectors hold at most " + std::to_string(kMaxQubits) + " qubits");
    }
    double norm2 = 0;
    for (const auto &v : amplitudes) {
        norm2 += std::norm(v);
    }
    if (!(norm2 > 0)) {
        throw std::invalid_argument("zero state");
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &v : amplitudes) {
        v *= scale;
    }
    StateVector s;
    s.n_ = n;
    s.a_ = std::move(amplitudes);
    return s;
}

void StateVector::check(uint32_t q) const {
    if (q >= n_) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
    }
}

void StateVector::x(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    for (size_t i = 0; i < a_.size(); i++) {
        if (!(i & bit)) {
            std::swap(a_[i], a_[i | bit]);
        }
    }
}

void StateVector::y(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    const amp I(0, 1);
    for (size_t i = 0; i < a_.size(); i++) {
        if (!(i & bit)) {
            amp a0 = a_[i];
            amp a1 = a_[i | bit];
            a_[i] = -I * a1;
            a_[i | bit] = I * a0;
        }
    }
}

void StateVector::z(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    for (size_t i = 0; i < a_.size(); i++) {
        if (i & bit) {
            a_[i] = -a_[i];
        }
    }
}

void StateVector::h(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    const double r = 1 / std::sqrt(2.0);
    for (size_t i = 0; i < a_.size(); i++) {
        if (!(i & bit)) {
            amp a0 = a_[i];
            amp a1 = a_[i | bit];
            a_[i] = r * (a0 + a1);
            a_[i | bit] = r * (a0 - a1);
        }
    }
}

void StateVector::t(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    const amp w = std::polar(1.0, M_PI / 4);
    for (size_t i = 0; i < a_.size(); i++) {
        if (i & bit) {
            a_[i] *= w;
        }
    }
}

void StateVector::tdg(uint32_t q) {
    check(q);
    size_t bit = size_t(1) << q;
    const amp w = std::polar(1.0, -M_PI / 4);
    for (size_t i = 0; i < a_.size(); i++) {
        if (i & bit) {
            a_[i] *= w;
        }
    }
}

void StateVector::cnot(uint32_t control, uint32_t target) {
    mcx({control}, target);
}

void StateVector::mcx(const std::vector<uint32_t> &controls, uint32_t target) {
    check(target);
    size_t cmask = 0;
    for (uint32_t c : controls) {
        check(c);
        if (c == target) {
            throw std::invalid_argument("control equals target");
        }
        cmask |= size_t(1) << c;
    }
    size_t bit = size_t(1) << target;
    for (size_t i = 0; i < a_.size(); i++) {
        if (!(i & bit) && (i & cmask) == cmask) {
            std::swap(a_[i], a_[i | bit]);
        }
    }
}

void StateVector::pauli(uint32_t q, Pauli p) {
    switch (p) {
        case Pauli::I:
            check(q);
            break;
        case Pauli::X:
            x(q);
            break;
        case Pauli::Y:
            y(q);
            break;
        case Pauli::Z:
            z(q);
            break;
    }
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &v : a_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double StateVector::overlap(const StateVector &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("overlap: qubit counts differ");
    }
    amp s = 0;
    for (size_t i = 0; i < a_.size(); i++) {
        s += std::conj(a_[i]) * other.a_[i];
    }
    return std::norm(s);
}

}  // namespace mfqec
