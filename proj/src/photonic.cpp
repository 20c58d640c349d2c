#include "nucleonsim/photonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nucleonsim/nucleon.hpp"

namespace nsim::photonic {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

// 3-qubit basis ket carried by slot s of the compact basis.
constexpr std::size_t kSlotKet[3] = {1, 2, 4};  // |001>, |010>, |100>

const std::array<std::array<int, 3>, 6> kModePermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

Operator compose_with_order(const Interferometer& interferometer, bool operator_order) {
    Operator acc = Operator::identity(3);
    for (const OpticalElement& element : interferometer.elements) {
        const Operator u = element_unitary(element);
        acc = operator_order ? u * acc : acc * u;
    }
    return acc;
}

// Slot-space matrix of a mode-space unitary under a slot-to-mode map.
Operator slot_matrix(const Operator& mode_unitary, const std::array<int, 3>& map) {
    Operator out(3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.at(r, c) = mode_unitary.at(map[r], map[c]);
    return out;
}

StateVector decode_with_map(const TwoPhotonState& state, const std::array<int, 3>& map) {
    std::vector<cplx> amps(64);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            amps[kSlotKet[r] * 8 + kSlotKet[c]] = state.at(map[r], map[c]);
    return StateVector(6, std::move(amps));
}

}  // namespace

TwoPhotonState::TwoPhotonState(std::array<std::array<cplx, 3>, 3> grid) : grid_(grid) {
    double norm2 = 0.0;
    for (const auto& row : grid_)
        for (const cplx& z : row) {
            require(std::isfinite(z.real()) && std::isfinite(z.imag()),
                    "TwoPhotonState amplitudes must be finite");
            norm2 += std::norm(z);
        }
    require(std::abs(norm2 - 1.0) < kDefaultTol, "TwoPhotonState must have unit Frobenius norm");
}

int TwoPhotonState::nonzero_count(double cutoff) const {
    int count = 0;
    for (const auto& row : grid_)
        for (const cplx& z : row)
            if (std::abs(z) >= cutoff) ++count;
    return count;
}

Operator element_unitary(const OpticalElement& element) {
    Operator out = Operator::identity(3);
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
        require(bs->mode_a >= 0 && bs->mode_a < 3 && bs->mode_b >= 0 && bs->mode_b < 3 &&
                    bs->mode_a != bs->mode_b,
                "beam splitter modes must be distinct and in range");
        const double c = std::cos(bs->omega);
        const double s = std::sin(bs->omega);
        out.at(bs->mode_a, bs->mode_a) = s;
        out.at(bs->mode_a, bs->mode_b) = c;
        out.at(bs->mode_b, bs->mode_a) = c;
        out.at(bs->mode_b, bs->mode_b) = -s;
    } else {
        const auto& ps = std::get<PhaseShifter>(element);
        require(ps.mode >= 0 && ps.mode < 3, "phase shifter mode out of range");
        out.at(ps.mode, ps.mode) = std::polar(1.0, ps.phi);
    }
    return out;
}

Operator compose(const Interferometer& interferometer) {
    return compose_with_order(interferometer, /*operator_order=*/true);
}

Operator reference_unitary() {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    return Operator(3, {
                           0.0, -2.0 * r6, r3,  //
                           r2, r6, r3,          //
                           -r2, r6, r3,         //
                       });
}

Interferometer build_interferometer() {
    Interferometer out;
    out.elements = {
        BeamSplitter{1, 2, -std::acos(1.0 / std::sqrt(3.0))},
        BeamSplitter{0, 2, -3.0 * kPi / 4.0},
        BeamSplitter{0, 1, 0.0},
        PhaseShifter{1, kPi},
    };
    return out;
}

std::array<int, 3> calibrated_mode_map() { return {0, 1, 2}; }

CalibrationResult calibrate(double tol) {
    const Interferometer interferometer = build_interferometer();
    const Operator reference = reference_unitary();
    CalibrationResult result;
    for (const auto& map : kModePermutations)
        for (bool operator_order : {true, false}) {
            const Operator mode_unitary = compose_with_order(interferometer, operator_order);
            if (slot_matrix(mode_unitary, map).max_abs_diff(reference) < tol) {
                ++result.match_count;
                result.map = map;
                result.operator_order = operator_order;
            }
        }
    return result;
}

TwoPhotonState path_entangle(const TripletAmplitudes& input) {
    double norm2 = 0.0;
    for (const cplx& z : input.amps) norm2 += std::norm(z);
    require(std::abs(norm2 - 1.0) < kDefaultTol, "path_entangle input must be normalized");
    std::array<std::array<cplx, 3>, 3> grid{};
    for (int m = 0; m < 3; ++m) grid[m][m] = input.amps[m];
    return TwoPhotonState(grid);
}

TwoPhotonState apply_local(const Operator& u_flavor, const Operator& u_spin,
                           const TwoPhotonState& state) {
    require(u_flavor.dim() == 3 && u_spin.dim() == 3, "apply_local expects 3x3 operators");
    require(u_flavor.is_unitary() && u_spin.is_unitary(), "apply_local expects unitary operators");
    std::array<std::array<cplx, 3>, 3> grid{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            cplx acc = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    acc += u_flavor.at(r, a) * state.at(a, b) * u_spin.at(c, b);
            grid[r][c] = acc;
        }
    return TwoPhotonState(grid);
}

StateVector decode_to_qubits(const TwoPhotonState& state) {
    return decode_with_map(state, calibrated_mode_map());
}

StateVector run_protocol() {
    const auto map = calibrated_mode_map();
    const double r2 = 1.0 / std::sqrt(2.0);
    TripletAmplitudes input;
    input.amps[map[0]] = r2;  // slot carrying |001>
    input.amps[map[1]] = r2;  // slot carrying |010>
    const Operator u = compose(build_interferometer());
    return decode_to_qubits(apply_local(u, u, path_entangle(input)));
}

std::vector<LiteralInputFinding> literal_input_survey(double tol) {
    // Mode-literal input: photon pairs on mode positions (1,1) and (2,2),
    // regardless of which basis slots those modes carry.
    const double r2 = 1.0 / std::sqrt(2.0);
    std::array<std::array<cplx, 3>, 3> grid{};
    grid[1][1] = r2;
    grid[2][2] = r2;
    const TwoPhotonState literal(grid);

    const Interferometer interferometer = build_interferometer();
    const StateVector target = nucleon::nucleon_state(nucleon::NucleonKind::Proton);

    std::vector<LiteralInputFinding> findings;
    for (const auto& map : kModePermutations)
        for (bool operator_order : {true, false}) {
            const Operator u = compose_with_order(interferometer, operator_order);
            const StateVector decoded = decode_with_map(apply_local(u, u, literal), map);
            const double fid = fidelity(decoded, target);
            if (fid >= 1.0 - tol) findings.push_back({map, operator_order, fid});
        }
    return findings;
}

std::string dump_interferometer(const Interferometer& interferometer) {
    std::ostringstream out;
    out << "version 1\n";
    out << "modes 3\n";
    for (const OpticalElement& element : interferometer.elements) {
        if (const auto* bs = std::get_if<BeamSplitter>(&element))
            out << "element BS modes " << bs->mode_a + 1 << ',' << bs->mode_b + 1 << " omega "
                << to_decimal(bs->omega) << '\n';
        else {
            const auto& ps = std::get<PhaseShifter>(element);
            out << "element PS mode " << ps.mode + 1 << " phi " << to_decimal(ps.phi) << '\n';
        }
    }
    const Operator u = compose(interferometer);
    for (int r = 0; r < 3; ++r) {
        out << "matrix";
        for (int c = 0; c < 3; ++c)
            out << ' ' << to_decimal(u.at(r, c).real()) << ' ' << to_decimal(u.at(r, c).imag());
        out << '\n';
    }
    return out.str();
}

}  // namespace nsim::photonic
