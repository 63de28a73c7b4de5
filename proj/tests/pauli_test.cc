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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "mfqec/errors.h"

using namespace mfqec;

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (uint32_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli>(rng() & 3));
    }
    if (rng() & 1) {
        p.negate();
    }
    return p;
}

/// Dense 2x2 matrix model of a Pauli string, used as an independent oracle
/// for products: the phase of P*Q is read off the matrix product.
struct Mat {
    std::complex<double> a[2][2];
};

Mat single(Pauli p) {
    using C = std::complex<double>;
    switch (p) {
        case Pauli::I:
            return {{{1, 0}, {0, 1}}};
        case Pauli::X:
            return {{{0, 1}, {1, 0}}};
        case Pauli::Z:
            return {{{1, 0}, {0, -1}}};
        case Pauli::Y:
            return {{{0, C(0, -1)}, {C(0, 1), 0}}};
    }
    return {};
}

Mat mul(const Mat &x, const Mat &y) {
    Mat r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                r.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        }
    }
    return r;
}

/// Overall phase i^k of p*q, computed factor by factor from matrices.
int oracle_product_phase(const PauliString &p, const PauliString &q, const PauliString &result) {
    std::complex<double> phase = std::pow(std::complex<double>(0, 1), p.phase() + q.phase());
    for (uint32_t k = 0; k < p.n_qubits(); k++) {
        Mat m = mul(single(p.get(k)), single(q.get(k)));
        Mat r = single(result.get(k));
        // m = c * r for a scalar c in {1, -1, i, -i}.
        std::complex<double> c;
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                if (std::abs(r.a[i][j]) > 0.5) {
                    c = m.a[i][j] / r.a[i][j];
                }
            }
        }
        phase *= c;
    }
    for (int k = 0; k < 4; k++) {
        if (std::abs(phase - std::pow(std::complex<double>(0, 1), k)) < 1e-9) {
            return k;
        }
    }
    return -1;
}

}  // namespace

TEST(pauli, parse_and_str_round_trip) {
    auto p = PauliString::parse(9, "+Z1*Z2*Z5*Z6");
    EXPECT_EQ(p.str(), "+Z1*Z2*Z5*Z6");
    EXPECT_EQ(p.weight(), 4u);
    EXPECT_EQ(p.z_support(), (std::vector<uint32_t>{0, 1, 4, 5}));
    auto y = PauliString::parse(8, "-X1*Z3*Y7");
    EXPECT_EQ(y.str(), "-X1*Z3*Y7");
    EXPECT_EQ(y.sign(), -1);
    EXPECT_EQ(PauliString::parse(3, "+I").str(), "+I");
    EXPECT_THROW(PauliString::parse(3, "+X4"), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(3, "+Q1"), std::invalid_argument);
}

TEST(pauli, multiply_examples) {
    auto x1 = PauliString::parse(3, "+X1");
    auto z1 = PauliString::parse(3, "+Z1");
    auto xx = multiply(x1, x1);
    EXPECT_TRUE(xx.is_identity());
    EXPECT_EQ(xx.sign(), 1);

    auto xz = multiply(x1, z1);
    EXPECT_TRUE(xz.x(0));
    EXPECT_TRUE(xz.z(0));
    EXPECT_EQ(xz.get(0), Pauli::Y);
    // X Z = -i Y.
    EXPECT_EQ(xz.phase(), 3);

    auto a = PauliString::parse(3, "+Z1*Z2");
    auto b = PauliString::parse(3, "+Z2*Z3");
    EXPECT_EQ(multiply(a, b).str(), "+Z1*Z3");

    EXPECT_THROW(multiply(PauliString(3), PauliString(4)), std::invalid_argument);
}

TEST(pauli, every_hermitian_pauli_squares_to_plus_identity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        auto p = random_pauli(1 + rng() % 70, rng);
        auto sq = multiply(p, p);
        EXPECT_TRUE(sq.is_identity());
        EXPECT_EQ(sq.phase(), 0) << p.str();
    }
}

TEST(pauli, product_phase_matches_matrix_model) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 8;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        auto r = multiply(p, q);
        EXPECT_EQ(int(r.phase()), oracle_product_phase(p, q, r)) << p.str() << " * " << q.str();
    }
}

TEST(pauli, product_is_associative_with_sign) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 8;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        auto r = random_pauli(n, rng);
        EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    }
}

TEST(pauli, commutation_examples) {
    EXPECT_FALSE(commutes(PauliString::parse(2, "+X1"), PauliString::parse(2, "+Z1*Z2")).commutes);
    EXPECT_TRUE(commutes(PauliString::parse(2, "+X1*X2"), PauliString::parse(2, "+Z1*Z2")).commutes);
    EXPECT_FALSE(commutes(PauliString::parse(9, "+X5"), PauliString::parse(9, "+Z1*Z2*Z5*Z6")).commutes);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(pauli, commutation_matches_overlap_parity) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 100;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        int overlaps = 0;
        for (uint32_t k = 0; k < n; k++) {
            overlaps += p.x(k) && q.z(k);
            overlaps += p.z(k) && q.x(k);
        }
        EXPECT_EQ(commutes(p, q).commutes, overlaps % 2 == 0);
        // Commuting operators have P Q = Q P; anticommuting ones P Q = -Q P.
        auto pq = multiply(p, q);
        auto qp = multiply(q, p);
        if (overlaps % 2 == 0) {
            EXPECT_EQ(pq, qp);
        } else {
            qp.negate();
            EXPECT_EQ(pq, qp);
        }
    }
}

TEST(pauli, cnot_propagation) {
    auto g = GateRef::cnot(0, 1);
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(2, "+X1"), g).str(), "+X1*X2");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(2, "+Z1"), g).str(), "+Z1");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(2, "+X2"), g).str(), "+X2");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(2, "+Z2"), g).str(), "+Z1*Z2");
}

TEST(pauli, hadamard_and_swap_propagation) {
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(1, "+X1"), GateRef::h(0)).str(), "+Z1");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(1, "+Z1"), GateRef::h(0)).str(), "+X1");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(1, "+Y1"), GateRef::h(0)).str(), "-Y1");
    EXPECT_EQ(conjugate_through_gate(PauliString::parse(3, "+X1"), GateRef::swap(0, 2)).str(), "+X3");
}

TEST(pauli, conjugation_preserves_commutation) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 2 + rng() % 6;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        uint32_t a = uint32_t(rng() % n);
        uint32_t b = uint32_t((a + 1 + rng() % (n - 1)) % n);
        GateRef gates[] = {GateRef::cnot(a, b), GateRef::h(a), GateRef::swap(a, b)};
        for (const auto &g : gates) {
            auto pp = conjugate_through_gate(p, g);
            auto qq = conjugate_through_gate(q, g);
            EXPECT_EQ(commutes(p, q).commutes, commutes(pp, qq).commutes);
            // Conjugation is a group homomorphism.
            EXPECT_EQ(conjugate_through_gate(multiply(p, q), g), multiply(pp, qq));
        }
    }
}

TEST(pauli, non_clifford_gate_is_rejected) {
    GateRef toffoli;
    toffoli.kind = GateKind::TOFFOLI;
    toffoli.arity = 3;
    toffoli.targets[0] = 0;
    toffoli.targets[1] = 1;
    toffoli.targets[2] = 2;
    EXPECT_THROW(conjugate_through_gate(PauliString::parse(3, "+X1"), toffoli), UnsupportedGate);
    EXPECT_THROW(conjugate_through_gate(PauliString::parse(2, "+X1"), GateRef::cnot(0, 5)), std::invalid_argument);
}
