#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nucleonsim/nucleon.hpp"
#include "nucleonsim/photonic.hpp"
#include "oracle.hpp"

using namespace nsim;
using namespace nsim::photonic;

namespace {

constexpr double kPi = 3.14159265358979323846;

// 3x3 beam splitter block on modes (a, b): sin w on the diagonal, cos w off.
oracle::Mat bs3(int a, int b, double w) {
    oracle::Mat m = oracle::mat_identity(3);
    m[a][a] = std::sin(w);
    m[b][b] = -std::sin(w);
    m[a][b] = std::cos(w);
    m[b][a] = std::cos(w);
    return m;
}

// Hand-multiplied chain: pi-phase on mode 1 after the three splitters.
oracle::Mat interferometer_oracle() {
    const oracle::Mat t_first = bs3(1, 2, -std::acos(1.0 / std::sqrt(3.0)));
    const oracle::Mat t_second = bs3(0, 2, -3.0 * kPi / 4.0);
    const oracle::Mat t_third = bs3(0, 1, 0.0);
    oracle::Mat phase = oracle::mat_identity(3);
    phase[1][1] = -1.0;
    return oracle::matmul(phase, oracle::matmul(t_third, oracle::matmul(t_second, t_first)));
}

double max_diff(const Operator& lib, const oracle::Mat& reference) {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            worst = std::max(worst, std::abs(lib.at(r, c) - reference[r][c]));
    return worst;
}

}  // namespace

TEST_CASE("optical element unitaries") {
    SUBCASE("BS(0) swaps the two modes") {
        const Operator u = element_unitary(BeamSplitter{0, 1, 0.0});
        CHECK(std::abs(u.at(0, 1) - 1.0) < 1e-15);
        CHECK(std::abs(u.at(1, 0) - 1.0) < 1e-15);
        CHECK(std::abs(u.at(0, 0)) < 1e-15);
        CHECK(std::abs(u.at(2, 2) - 1.0) < 1e-15);
    }

    SUBCASE("BS(pi/2) acts as sigma_z on the pair") {
        const Operator u = element_unitary(BeamSplitter{0, 1, kPi / 2});
        CHECK(std::abs(u.at(0, 0) - 1.0) < 1e-15);
        CHECK(std::abs(u.at(1, 1) + 1.0) < 1e-15);
        CHECK(std::abs(u.at(0, 1)) < 1e-15);
    }

    SUBCASE("PS(pi) negates one mode") {
        const Operator u = element_unitary(PhaseShifter{1, kPi});
        CHECK(std::abs(u.at(1, 1) + 1.0) < 1e-12);
        CHECK(std::abs(u.at(0, 0) - 1.0) < 1e-15);
    }

    SUBCASE("beam splitters are Hermitian involutions for any angle") {
        for (double w : {0.0, 0.3, kPi / 4, 1.1, kPi / 2, 2.7, kPi, 5.0}) {
            const Operator u = element_unitary(BeamSplitter{1, 2, w});
            CHECK(u.is_hermitian(1e-15));
            CHECK((u * u).max_abs_diff(Operator::identity(3)) < 1e-15);
        }
    }

    CHECK_THROWS_AS(element_unitary(BeamSplitter{0, 0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(element_unitary(BeamSplitter{0, 3, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(element_unitary(PhaseShifter{5, 1.0}), std::invalid_argument);
}

TEST_CASE("reference unitary") {
    const Operator v = reference_unitary();
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);

    SUBCASE("pinned columns") {
        CHECK(std::abs(v.at(0, 0)) < 1e-15);
        CHECK(std::abs(v.at(1, 0) - r2) < 1e-15);
        CHECK(std::abs(v.at(2, 0) + r2) < 1e-15);
        CHECK(std::abs(v.at(0, 1) + std::sqrt(2.0 / 3.0)) < 1e-15);
        CHECK(std::abs(v.at(1, 1) - r6) < 1e-15);
        CHECK(std::abs(v.at(2, 1) - r6) < 1e-15);
        CHECK(std::abs(v.at(0, 2) - r3) < 1e-15);
    }

    SUBCASE("unitary, and the first two columns are the component states") {
        CHECK((v.adjoint() * v).max_abs_diff(Operator::identity(3)) < 1e-12);
        // compact-basis slots are |001>, |010>, |100>
        const StateVector antisym =
            nucleon::flavor_spin_state(nucleon::ComponentState::ProtonA);
        const StateVector sym = nucleon::flavor_spin_state(nucleon::ComponentState::ProtonS);
        const std::size_t slot_ket[3] = {1, 2, 4};
        for (int slot = 0; slot < 3; ++slot) {
            CHECK(std::abs(v.at(slot, 0) - antisym.amplitude(slot_ket[slot])) < 1e-15);
            CHECK(std::abs(v.at(slot, 1) - sym.amplitude(slot_ket[slot])) < 1e-15);
        }
    }
}

TEST_CASE("interferometer composition") {
    const Interferometer interferometer = build_interferometer();
    REQUIRE(interferometer.elements.size() == 4);

    SUBCASE("matches the hand-multiplied chain and the reference") {
        const Operator composed = compose(interferometer);
        CHECK(max_diff(composed, interferometer_oracle()) < 1e-15);
        CHECK(composed.max_abs_diff(reference_unitary()) < 1e-12);
    }

    SUBCASE("first applied element sits rightmost in the product") {
        // compose([a, b]) must equal U_b * U_a
        const Interferometer two{{BeamSplitter{0, 1, 0.4}, PhaseShifter{0, 1.1}}};
        const Operator expected = element_unitary(two.elements[1]) *
                                  element_unitary(two.elements[0]);
        CHECK(compose(two).max_abs_diff(expected) < 1e-15);
    }

    SUBCASE("basis injections reproduce the reference columns") {
        const Operator composed = compose(interferometer);
        const double r2 = 1.0 / std::sqrt(2.0);
        const double r3 = 1.0 / std::sqrt(3.0);
        const double r6 = 1.0 / std::sqrt(6.0);
        const cplx expected[3][3] = {
            {0.0, r2, -r2},                      // photon injected on the |001> slot
            {-std::sqrt(2.0 / 3.0), r6, r6},     // |010> slot
            {r3, r3, r3},                        // |100> slot
        };
        for (int slot = 0; slot < 3; ++slot)
            for (int out = 0; out < 3; ++out)
                CHECK(std::abs(composed.at(out, slot) - expected[slot][out]) < 1e-12);
    }

    SUBCASE("calibration is unique") {
        const CalibrationResult calibration = calibrate();
        CHECK(calibration.match_count == 1);
        CHECK(calibration.map == std::array<int, 3>{0, 1, 2});
        CHECK(calibration.operator_order);
        CHECK(calibration.map == calibrated_mode_map());
    }
}

TEST_CASE("path entanglement") {
    SUBCASE("deterministic path copy") {
        TripletAmplitudes single;
        single.amps[1] = 1.0;
        const TwoPhotonState state = path_entangle(single);
        CHECK(std::abs(state.at(1, 1) - 1.0) < 1e-15);
        CHECK(state.nonzero_count() == 1);
    }

    SUBCASE("balanced superposition lands on the grid diagonal") {
        const double r2 = 1.0 / std::sqrt(2.0);
        TripletAmplitudes pair;
        pair.amps[1] = r2;
        pair.amps[2] = r2;
        const TwoPhotonState state = path_entangle(pair);
        CHECK(std::abs(state.at(1, 1) - r2) < 1e-15);
        CHECK(std::abs(state.at(2, 2) - r2) < 1e-15);
        CHECK(std::abs(state.at(1, 2)) < 1e-15);
        CHECK(state.nonzero_count() == 2);
    }

    SUBCASE("rejects unnormalized input") {
        TripletAmplitudes bad;
        bad.amps[0] = 0.7;
        CHECK_THROWS_AS(path_entangle(bad), std::invalid_argument);
    }
}

TEST_CASE("local mode transformations") {
    const double r2 = 1.0 / std::sqrt(2.0);
    TripletAmplitudes pair;
    pair.amps[0] = r2;
    pair.amps[1] = r2;
    const TwoPhotonState diagonal = path_entangle(pair);

    SUBCASE("identities leave the grid alone") {
        const TwoPhotonState out =
            apply_local(Operator::identity(3), Operator::identity(3), diagonal);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs(out.at(r, c) - diagonal.at(r, c)) < 1e-15);
    }

    SUBCASE("one-sided action mixes rows only") {
        const Operator v = reference_unitary();
        const TwoPhotonState out = apply_local(v, Operator::identity(3), diagonal);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs(out.at(r, c) - v.at(r, c) * diagonal.at(c, c)) < 1e-15);
    }

    SUBCASE("rejects non-unitary factors") {
        Operator bad = Operator::identity(3);
        bad.at(0, 0) = 2.0;
        CHECK_THROWS_AS(apply_local(bad, Operator::identity(3), diagonal),
                        std::invalid_argument);
    }
}

TEST_CASE("decoding to qubits") {
    SUBCASE("single grid entry lands on the paired single-excitation ket") {
        std::array<std::array<cplx, 3>, 3> grid{};
        grid[0][0] = 1.0;  // slot carrying |001> on both triplets
        const StateVector decoded = decode_to_qubits(TwoPhotonState(grid));
        CHECK(std::abs(decoded.amplitude(0b001001) - 1.0) < 1e-15);
    }

    SUBCASE("pipeline output is the proton") {
        const StateVector out = run_protocol();
        const StateVector proton = nucleon::nucleon_state(nucleon::NucleonKind::Proton);
        CHECK(fidelity(out, proton) >= 1.0 - 1e-12);
        CHECK(nucleon::magnetic_moment(out) == doctest::Approx(-3.0).epsilon(1e-12));
    }

    SUBCASE("backends agree") {
        const StateVector qubit_route = run(nucleon::build_preparation(
            nucleon::NucleonKind::Proton, nucleon::PrepLevel::Native));
        CHECK(fidelity(run_protocol(), qubit_route) >= 1.0 - 1e-12);
    }
}

TEST_CASE("mode-literal input survey") {
    // No slot-to-mode assignment makes the (1,1)/(2,2)-correlated input
    // reproduce the proton; under the calibrated convention its fidelity is
    // exactly 1/4 (the symmetric component survives, the antisymmetric one is
    // replaced by the orthogonal third column).
    CHECK(literal_input_survey().empty());

    const double r2 = 1.0 / std::sqrt(2.0);
    std::array<std::array<cplx, 3>, 3> grid{};
    grid[1][1] = r2;
    grid[2][2] = r2;
    const Operator u = compose(build_interferometer());
    const StateVector out = decode_to_qubits(apply_local(u, u, TwoPhotonState(grid)));
    const double fid = fidelity(out, nucleon::nucleon_state(nucleon::NucleonKind::Proton));
    CHECK(fid == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("interferometer dump") {
    const std::string dump = dump_interferometer(build_interferometer());
    CHECK(dump.find("version 1\nmodes 3\n") == 0);
    CHECK(dump.find("element BS modes 2,3 omega -0.95531661812450919") != std::string::npos);
    CHECK(dump.find("element BS modes 1,3 omega -2.3561944901923448") != std::string::npos);
    CHECK(dump.find("element BS modes 1,2 omega 0") != std::string::npos);
    CHECK(dump.find("element PS mode 2 phi 3.1415926535897931") != std::string::npos);
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 9);  // header 2 + elements 4 + matrix 3
    CHECK(dump == dump_interferometer(build_interferometer()));  // deterministic
}
