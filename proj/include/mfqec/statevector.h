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

#ifndef MFQEC_STATEVECTOR_H
#define MFQEC_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <vector>

#include "mfqec/pauli.h"

namespace mfqec {

/// Dense state of up to kMaxQubits qubits. Qubit q is bit q of the basis
/// index.
class StateVector {
  public:
    static constexpr uint32_t kMaxQubits = 12;
    using amp = std::complex<double>;

    /// |index> on n qubits. Throws std::invalid_argument for n > kMaxQubits.
    static StateVector basis(uint32_t n, uint64_t index = 0);
    /// Normalizes the given amplitudes; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<amp> amplitudes);

    uint32_t n_qubits() const {
        return n_;
    }
    const std::vector<amp> &amplitudes() const {
        return a_;
    }
    amp operator[](uint64_t index) const {
        return a_[index];
    }

    void x(uint32_t q);
    void y(uint32_t q);
    void z(uint32_t q);
    void h(uint32_t q);
    void t(uint32_t q);
    void tdg(uint32_t q);
    void cnot(uint32_t control, uint32_t target);
    /// X on `target` when every control is 1.
    void mcx(const std::vector<uint32_t> &controls, uint32_t target);
    void pauli(uint32_t q, Pauli p);

    double norm() const;
    /// |<this|other>|^2.
    double overlap(const StateVector &other) const;

  private:
    void check(uint32_t q) const;

    uint32_t n_ = 0;
    std::vector<amp> a_;
};

}  // namespace mfqec

#endif
