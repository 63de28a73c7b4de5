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

#ifndef MFQEC_BITFLIP_MFEC_H
#define MFQEC_BITFLIP_MFEC_H

#include <cstdint>
#include <string>
#include <vector>

#include "mfqec/statevector.h"

namespace mfqec {

// Measurement-free correction gadget for the three-qubit bit-flip code.
//
// Register: data d1, d2, d3 on qubits 0..2 and ancillas a1, a2, a3 on 3..5.
// Extraction copies the parities Z1Z2, Z2Z3, Z1Z3 onto a1, a2, a3 with six
// CNOTs. Correction flips the data qubit picked out by the syndrome, and the
// ancillas are then reset.

enum class CorrectionScheme : uint8_t {
    /// X1 <- a1 a3, X2 <- a1 a2, X3 <- a2 a3 with three Toffolis, each
    /// expanded into its 6-CNOT Clifford+T circuit.
    MAJORITY_TOFFOLI,
    /// One C^3NOT per syndrome pattern (101 -> d1, 110 -> d2, 011 -> d3)
    /// with negated controls from X conjugation; C^3NOTs are atomic.
    PROJECTOR_C3NOT,
};

const char *scheme_name(CorrectionScheme s);

enum class GadgetOpKind : uint8_t { PREP, CNOT, H, T, TDG, X, TOFFOLI, C3NOT };

struct GadgetOp {
    GadgetOpKind kind;
    /// Controls first, target last. PREP and single-qubit ops hold one qubit.
    std::vector<uint32_t> qubits;
};

struct GadgetMoment {
    std::vector<GadgetOp> ops;
};

enum class LocationKind : uint8_t { INPUT, PREP, GATE, IDLE };

/// Place where a single Pauli fault can strike. INPUT faults act on the
/// data before the gadget; the others act right after `moment`.
struct FaultLocation {
    LocationKind kind;
    uint32_t moment;
    std::vector<uint32_t> support;
    std::string description;
};

struct MfecGadget {
    static constexpr uint32_t kNumQubits = 6;
    CorrectionScheme scheme;
    std::vector<GadgetMoment> moments;
    std::vector<FaultLocation> locations;

    size_t count(GadgetOpKind kind) const;
    /// CNOTs actually present, with atomic C^3NOTs counted at 7 and atomic
    /// Toffolis at 6.
    size_t cnot_equivalent() const;
};

/// Builds the gadget with gates placed as early as their qubits allow.
MfecGadget build_bitflip_gadget(CorrectionScheme scheme = CorrectionScheme::MAJORITY_TOFFOLI);

/// Non-identity Paulis on a location: 4^|support| - 1.
uint32_t num_paulis(const FaultLocation &loc);

/// Pauli index p in [1, num_paulis]: base-4 digit j (I, X, Z, Y = 0..3)
/// acts on support[j].
struct InjectedFault {
    uint32_t location;
    uint32_t pauli;
};

/// alpha |000> + beta |111> on the data with ancillas in |000>.
StateVector encode_logical(std::complex<double> alpha, std::complex<double> beta);

/// Runs extraction and correction with the given faults. Returns the
/// six-qubit state just before the ancilla reset. Throws
/// std::invalid_argument for malformed faults.
StateVector run_gadget(const MfecGadget &gadget, const StateVector &input,
                       const std::vector<InjectedFault> &faults = {});

struct DataBranch {
    double weight;
    StateVector data;
};

/// Ancilla reset as an ensemble: one normalized three-qubit data state per
/// ancilla basis value with non-negligible weight.
std::vector<DataBranch> reset_ancillas(const StateVector &pre_reset);

/// Average fidelity of the post-reset data with `ideal_data` (3 qubits).
double data_fidelity(const StateVector &pre_reset, const StateVector &ideal_data);

/// Probability that two or more data bits differ from `logical_bit`, i.e.
/// that majority-vote decoding returns the wrong value.
double logical_failure_probability(const StateVector &pre_reset, int logical_bit);

struct FtViolation {
    uint32_t location;
    uint32_t pauli;
    int input_bit;
    double failure_probability;
};

struct FtReport {
    CorrectionScheme scheme;
    size_t n_locations = 0;
    size_t n_cases = 0;
    std::vector<FtViolation> violations;
    /// Distinct locations with at least one violating Pauli.
    std::vector<uint32_t> violating_locations;

    bool pass() const {
        return violations.empty();
    }
};

/// Injects every non-identity Pauli at every location for both logical
/// basis inputs and flags cases whose failure probability exceeds 1e-10.
FtReport ft_check(const MfecGadget &gadget);

struct ScalingPoint {
    double p;
    double p_l;
    double ci_low;
    double ci_high;
    uint64_t n_shots;
    uint64_t n_failures;
};

struct ScalingCurve {
    std::vector<ScalingPoint> points;
    /// Least-squares slope of log p_l against log p over points with p_l > 0.
    double slope;
};

/// Each shot draws a uniformly random logical basis input and, at every
/// location independently with probability p, a uniformly random
/// non-identity Pauli. A shot fails with the decoded failure probability of
/// its faulty run.
ScalingCurve scaling_curve(const MfecGadget &gadget, const std::vector<double> &p_list, uint64_t n_shots,
                           uint64_t seed, unsigned workers = 1);

/// Sum over location pairs of the average failure probability with one
/// uniformly random Pauli at each, so p_L ~ weight * p^2 for small p.
double malignant_pair_weight(const MfecGadget &gadget);

double fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace mfqec

#endif
