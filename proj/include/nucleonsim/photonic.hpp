// photonic.hpp
// Mode-encoded linear-optics backend: single-photon triplet states, beam
// splitter / phase shifter primitives, the three-mode interferometer that
// realizes the compact component unitary, and decoding back to six qubits.
//
// Each logical triplet lives in three spatial modes (positions 0,1,2 within
// the triplet); a single photon's position encodes one of the basis kets
// |001>, |010>, |100> through the calibrated slot-to-mode map.

#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "nucleonsim/core.hpp"

namespace nsim::photonic {

/// Single-photon amplitudes over the three modes of one triplet.
struct TripletAmplitudes {
    std::array<cplx, 3> amps{};
};

/// Two single photons in disjoint triplets: grid(m, n) is the amplitude for
/// the flavor photon on mode m and the spin photon on mode n. Unit Frobenius
/// norm enforced.
class TwoPhotonState {
public:
    explicit TwoPhotonState(std::array<std::array<cplx, 3>, 3> grid);

    const cplx& at(int flavor_mode, int spin_mode) const {
        return grid_[flavor_mode][spin_mode];
    }
    int nonzero_count(double cutoff = 1e-14) const;

private:
    std::array<std::array<cplx, 3>, 3> grid_;
};

/// BS(omega) = cos(omega) sigma_x + sin(omega) sigma_z on a mode pair
/// (Hermitian involution); PS(phi) multiplies one mode by e^{i phi}.
struct BeamSplitter {
    int mode_a = 0;
    int mode_b = 1;
    double omega = 0.0;
};
struct PhaseShifter {
    int mode = 0;
    double phi = 0.0;
};
using OpticalElement = std::variant<BeamSplitter, PhaseShifter>;

/// Elements in application order: elements[0] acts first, so the composed
/// matrix is U_n ... U_1.
struct Interferometer {
    std::vector<OpticalElement> elements;
};

Operator element_unitary(const OpticalElement& element);  // 3x3
Operator compose(const Interferometer& interferometer);

/// The exact 3x3 target unitary in the ordered basis {|001>, |010>, |100>};
/// its first two columns are the antisymmetric and symmetric component
/// states, the third follows from unitarity.
Operator reference_unitary();

/// Three beam splitters and one pi phase shifter realizing the reference
/// unitary: BS_12(-arccos(1/sqrt 3)), BS_02(-3pi/4), BS_01(0), PS_1(pi) in
/// application order.
Interferometer build_interferometer();

/// Slot-to-mode assignment: entry s is the mode position carrying basis slot
/// s of {|001>, |010>, |100>}. Calibrated once against reference_unitary();
/// the identity map with right-to-left composition is the unique match.
std::array<int, 3> calibrated_mode_map();

struct CalibrationResult {
    std::array<int, 3> map{};
    bool operator_order = true;  // factor string read right-to-left
    int match_count = 0;         // over all 6 maps x 2 orderings
};

/// Exhaustive 12-case search; match_count must come back as 1.
CalibrationResult calibrate(double tol = kDefaultTol);

/// Which-path correlation: amplitude on flavor mode m becomes grid entry
/// (m, m), the spin photon tracking the partner mode.
TwoPhotonState path_entangle(const TripletAmplitudes& input);

/// grid <- u_flavor . grid . u_spin^T (one local unitary per triplet).
TwoPhotonState apply_local(const Operator& u_flavor, const Operator& u_spin,
                           const TwoPhotonState& state);

/// Embeds grid entry (m, n) on the six-qubit ket basis-of(m) x basis-of(n)
/// under the calibrated map; everything outside the single-excitation
/// sectors is zero by construction.
StateVector decode_to_qubits(const TwoPhotonState& state);

/// Full pipeline: entangle the photon pair on the slots carrying |001> and
/// |010>, apply the composed interferometer to both triplets, decode.
StateVector run_protocol();

/// Mode assignments (map index 0..5, ordering flag) under which the
/// mode-literal input -- photon pairs on mode positions (1,1) and (2,2) --
/// reproduces the proton after the interferometer. Paired with the
/// calibration report; an empty list means no assignment reconciles the
/// literal mode numbers.
struct LiteralInputFinding {
    std::array<int, 3> map{};
    bool operator_order = true;
    double fidelity = 0.0;
};
std::vector<LiteralInputFinding> literal_input_survey(double tol = kDefaultTol);

/// Ordered element records plus the composed matrix, row-major re/im pairs.
std::string dump_interferometer(const Interferometer& interferometer);

}  // namespace nsim::photonic
