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

#ifndef MFQEC_PAULI_H
#define MFQEC_PAULI_H

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mfqec {

/// Single-qubit Pauli factor. The numeric values are the (x, z) bit pair
/// packed as x | (z << 1).
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

enum class GateKind : uint8_t {
    CNOT,
    H,
    SWAP,
    RESET,
    MEASURE,
    IDLE,
    TOFFOLI,
    C3NOT,
};

const char *gate_name(GateKind kind);

/// A gate instance. `targets` holds up to four qubit indices; for controlled
/// gates the controls come first and the target last.
struct GateRef {
    GateKind kind;
    uint32_t targets[4] = {0, 0, 0, 0};
    uint8_t arity = 1;

    static GateRef cnot(uint32_t control, uint32_t target);
    static GateRef h(uint32_t q);
    static GateRef swap(uint32_t a, uint32_t b);
    static GateRef single(GateKind kind, uint32_t q);
};

/// Sparse n-qubit Pauli operator stored as x/z bit masks in 64-qubit blocks.
///
/// A qubit present in both masks is a Y factor, with Y = iXZ. The overall
/// phase is i^phase(); operators built from X/Z/Y factors and conjugated by
/// Cliffords stay Hermitian (phase 0 or 2), while the product of two
/// anticommuting operators picks up +-i. Tracking the phase mod 4 keeps the
/// product associative and makes P*P = +I for every Hermitian P.
class PauliString {
  public:
    explicit PauliString(size_t n_qubits = 0);

    /// Builds +P from factors given as (qubit, Pauli) pairs. Repeated qubits
    /// multiply together in order.
    static PauliString from_factors(size_t n_qubits, std::initializer_list<std::pair<uint32_t, Pauli>> factors);
    /// Builds +X_{q...} or +Z_{q...} over the given qubits.
    static PauliString x_on(size_t n_qubits, const std::vector<uint32_t> &qubits);
    static PauliString z_on(size_t n_qubits, const std::vector<uint32_t> &qubits);
    /// Parses "+X1*Z3*Y7" (1-based labels). "+I" or "+" is the identity.
    static PauliString parse(size_t n_qubits, std::string_view text);

    size_t n_qubits() const {
        return n_;
    }
    Pauli get(uint32_t q) const;
    void set(uint32_t q, Pauli p);
    bool x(uint32_t q) const;
    bool z(uint32_t q) const;

    /// Phase exponent k of the overall factor i^k, in [0, 4).
    uint8_t phase() const {
        return phase_;
    }
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    /// +1 or -1. Throws std::logic_error when the phase is imaginary.
    int sign() const;
    void negate() {
        phase_ = (phase_ + 2) & 3;
    }

    size_t weight() const;
    bool is_identity() const;
    std::vector<uint32_t> x_support() const;
    std::vector<uint32_t> z_support() const;
    std::vector<uint32_t> support() const;

    const std::vector<uint64_t> &x_words() const {
        return xs_;
    }
    const std::vector<uint64_t> &z_words() const {
        return zs_;
    }

    /// "+X1*Z3*Y7" with 1-based qubit labels.
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

  private:
    friend PauliString multiply(const PauliString &p, const PauliString &q);
    friend PauliString conjugate_through_gate(const PauliString &p, const GateRef &gate);

    void check_index(uint32_t q) const;

    size_t n_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_ = 0;
};

struct CommutationResult {
    bool commutes;
};

/// Group product p*q with exact phase. Throws std::invalid_argument on a
/// size mismatch.
PauliString multiply(const PauliString &p, const PauliString &q);

/// Symplectic commutation test. Throws std::invalid_argument on a size
/// mismatch.
CommutationResult commutes(const PauliString &p, const PauliString &q);

/// Heisenberg propagation U p U^dagger through a Clifford gate (CNOT, H,
/// SWAP). Every other gate kind raises UnsupportedGate.
PauliString conjugate_through_gate(const PauliString &p, const GateRef &gate);

}  // namespace mfqec

#endif
