#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nucleonsim/circuit.hpp"
#include "nucleonsim/core.hpp"
#include "oracle.hpp"

using namespace nsim;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector random_state(int num_qubits, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << num_qubits);
    double norm2 = 0.0;
    for (cplx& a : amps) {
        a = cplx{gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (cplx& a : amps) a *= scale;
    return StateVector(num_qubits, std::move(amps));
}

}  // namespace

TEST_CASE("state vector construction and validation") {
    const StateVector zero = StateVector::zero_state(3);
    CHECK(zero.dim() == 8);
    CHECK(zero.amplitude(0) == cplx{1.0});

    // |q1 q2 q3> = |101> lives at index 5
    const StateVector basis = StateVector::basis_state(3, 5);
    CHECK(basis.amplitude(5) == cplx{1.0});
    CHECK(basis.bit(5, 1) == 1);
    CHECK(basis.bit(5, 2) == 0);
    CHECK(basis.bit(5, 3) == 1);

    CHECK_THROWS_AS(StateVector(2, {1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {std::nan(""), 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::out_of_range);
}

TEST_CASE("apply_gate basics") {
    SUBCASE("identity leaves any state alone") {
        std::mt19937 rng(7);
        const StateVector state = random_state(3, rng);
        const StateVector out = apply_gate(state, Operator::identity(2), {2});
        for (std::size_t i = 0; i < 8; ++i)
            CHECK(std::abs(out.amplitude(i) - state.amplitude(i)) < 1e-15);
    }

    SUBCASE("unsatisfied control is a no-op") {
        const StateVector out = apply_gate(StateVector::zero_state(2),
                                           local_matrix(GateKind::X, {}), {2}, {{1, 1}});
        CHECK(std::abs(out.amplitude(0) - 1.0) < 1e-15);
    }

    SUBCASE("H on qubit 2 of |000>") {
        const StateVector out =
            apply_gate(StateVector::zero_state(3), local_matrix(GateKind::H, {}), {2});
        CHECK(std::abs(out.amplitude(0) - kInvSqrt2) < 1e-15);
        CHECK(std::abs(out.amplitude(2) - kInvSqrt2) < 1e-15);
        for (std::size_t i : {1u, 3u, 4u, 5u, 6u, 7u}) CHECK(std::abs(out.amplitude(i)) < 1e-15);
    }

    SUBCASE("two-target local operator") {
        // CNOT as a raw 4x4 local with control on the first listed target
        const Operator cnot(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
        const StateVector out = apply_gate(StateVector::basis_state(2, 2), cnot, {1, 2});
        CHECK(std::abs(out.amplitude(3) - 1.0) < 1e-15);
    }

    SUBCASE("validation errors") {
        const StateVector state = StateVector::zero_state(2);
        const Operator x = local_matrix(GateKind::X, {});
        CHECK_THROWS_AS(apply_gate(state, x, {3}), std::out_of_range);
        CHECK_THROWS_AS(apply_gate(state, x, {1}, {{1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(apply_gate(state, x, {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(apply_gate(state, Operator(2, {1, 0, 0, 2}), {1}),
                        std::invalid_argument);  // not unitary
        CHECK_THROWS_AS(apply_gate(state, Operator::identity(4), {1}), std::invalid_argument);
    }
}

TEST_CASE("controlled application equals the explicit embedding") {
    // For every library gate, a polarity-1 controlled apply_gate must act as
    // |1><1| (x) G + |0><0| (x) I, built here with independent Kronecker code.
    const double angle = 0.713;
    const std::vector<std::pair<GateKind, oracle::Mat>> gates = {
        {GateKind::X, oracle::pauli_x()},
        {GateKind::Z, oracle::pauli_z()},
        {GateKind::H, oracle::hadamard()},
        {GateKind::R, oracle::rot(angle)},
        {GateKind::W, oracle::wgate(angle)},
        {GateKind::Wdag, oracle::wgate_dag(angle)},
    };
    for (int n : {2, 3}) {
        for (const auto& [kind, local] : gates) {
            std::vector<double> params(param_count(kind), angle);
            const Operator lib_local = local_matrix(kind, params);
            for (int control = 1; control <= n; ++control)
                for (int target = 1; target <= n; ++target) {
                    if (control == target) continue;
                    const oracle::Mat expected =
                        oracle::controlled(n, control, 1, target, local);
                    const std::size_t dim = std::size_t{1} << n;
                    for (std::size_t col = 0; col < dim; ++col) {
                        const StateVector image = apply_gate(
                            StateVector::basis_state(n, col), lib_local, {target}, {{control, 1}});
                        for (std::size_t row = 0; row < dim; ++row)
                            CHECK(std::abs(image.amplitude(row) - expected[row][col]) < 1e-12);
                    }
                }
        }
    }
}

TEST_CASE("gate application preserves the norm") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector state = random_state(3, rng);
        const Operator r = local_matrix(GateKind::R, {angle(rng)});
        const StateVector out = apply_gate(state, r, {1 + trial % 3});
        double norm2 = 0.0;
        for (std::size_t i = 0; i < out.dim(); ++i) norm2 += std::norm(out.amplitude(i));
        CHECK(std::abs(norm2 - 1.0) < 1e-12);
    }
}

TEST_CASE("partial trace") {
    SUBCASE("product state returns the marginal factor") {
        const DensityMatrix rho = partial_trace(StateVector::zero_state(2), {1});
        CHECK(std::abs(rho.at(0, 0) - 1.0) < 1e-15);
        CHECK(std::abs(rho.at(1, 1)) < 1e-15);

        // |+>|1>, keep the plus qubit
        const StateVector plus_one(2, {0.0, kInvSqrt2, 0.0, kInvSqrt2});
        const DensityMatrix marginal = partial_trace(plus_one, {1});
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) CHECK(std::abs(marginal.at(r, c) - 0.5) < 1e-15);
    }

    SUBCASE("maximally entangled pair reduces to I/2") {
        const StateVector singlet(2, {0.0, kInvSqrt2, -kInvSqrt2, 0.0});
        const DensityMatrix rho = partial_trace(singlet, {1});
        CHECK(std::abs(rho.at(0, 0) - 0.5) < 1e-15);
        CHECK(std::abs(rho.at(1, 1) - 0.5) < 1e-15);
        CHECK(std::abs(rho.at(0, 1)) < 1e-15);
        CHECK(rho.purity() == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("trace is one and matrix Hermitian for random states") {
        std::mt19937 rng(1234);
        for (int trial = 0; trial < 20; ++trial) {
            const StateVector state = random_state(4, rng);
            const DensityMatrix rho = partial_trace(state, {2, 4});
            CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
        }
    }

    SUBCASE("errors") {
        const StateVector state = StateVector::zero_state(2);
        CHECK_THROWS_AS(partial_trace(state, {}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(state, {3}), std::out_of_range);
        CHECK_THROWS_AS(partial_trace(state, {2, 1}), std::invalid_argument);
    }
}

TEST_CASE("fidelity") {
    std::mt19937 rng(5);
    const StateVector psi = random_state(3, rng);
    CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(StateVector::basis_state(1, 0), StateVector::basis_state(1, 1)) == 0.0);

    SUBCASE("symmetric and phase invariant at 8 phases") {
        const StateVector phi = random_state(3, rng);
        const double base = fidelity(psi, phi);
        CHECK(fidelity(phi, psi) == doctest::Approx(base).epsilon(1e-12));
        for (int k = 0; k < 8; ++k) {
            const cplx phase = std::polar(1.0, 0.785398163397448 * k);
            std::vector<cplx> rotated;
            for (std::size_t i = 0; i < phi.dim(); ++i) rotated.push_back(phase * phi.amplitude(i));
            CHECK(fidelity(psi, StateVector(3, rotated)) == doctest::Approx(base).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(fidelity(StateVector::zero_state(2), StateVector::zero_state(3)),
                    std::invalid_argument);
}

TEST_CASE("expectation values") {
    const Operator sigma_z = local_matrix(GateKind::Z, {});
    CHECK(expectation(StateVector::basis_state(1, 0), sigma_z) == doctest::Approx(1.0));
    CHECK(expectation(StateVector::basis_state(1, 1), sigma_z) == doctest::Approx(-1.0));

    SUBCASE("observable as a sum of local factor products") {
        // sigma_z(1) + sigma_z(2) on |01>
        Observable obs;
        obs.num_qubits = 2;
        obs.terms.push_back({{1, sigma_z}});
        obs.terms.push_back({{2, sigma_z}});
        CHECK(expectation(StateVector::basis_state(2, 1), obs) == doctest::Approx(0.0));
        CHECK(expectation(StateVector::basis_state(2, 3), obs) == doctest::Approx(-2.0));
    }

    SUBCASE("rejects non-Hermitian operators and size mismatch") {
        const Operator skew(2, {0.0, 1.0, 0.0, 0.0});
        CHECK_THROWS_AS(expectation(StateVector::basis_state(1, 0), skew), std::invalid_argument);
        CHECK_THROWS_AS(expectation(StateVector::zero_state(2), sigma_z), std::invalid_argument);
    }
}

TEST_CASE("phase equivalence") {
    std::mt19937 rng(31);
    const StateVector psi = random_state(2, rng);
    std::vector<cplx> negated;
    for (std::size_t i = 0; i < psi.dim(); ++i) negated.push_back(-psi.amplitude(i));
    const StateVector minus_psi(2, negated);

    CHECK(phase_equivalent(psi, minus_psi));
    const auto phase = relative_phase(psi, minus_psi);
    REQUIRE(phase.has_value());
    CHECK(std::abs(*phase - cplx{-1.0}) < 1e-12);

    CHECK_FALSE(phase_equivalent(StateVector::basis_state(1, 0), StateVector::basis_state(1, 1)));
    CHECK_FALSE(phase_equivalent(psi, random_state(2, rng)));
}

TEST_CASE("state dump format") {
    const StateVector bell(2, {kInvSqrt2, 0.0, 0.0, -kInvSqrt2});
    CHECK(dump_state(bell) ==
          "00 0.70710678118654746 0\n"
          "11 -0.70710678118654746 0\n");

    // near-zero amplitudes are dropped; -0 never appears
    std::vector<cplx> amps = {cplx{1.0, -0.0}, cplx{1e-15, 0.0}};
    CHECK(dump_state(StateVector(1, amps)) == "0 1 0\n");
}
