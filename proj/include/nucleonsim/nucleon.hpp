// nucleon.hpp
// Physics layer: exact spin-flavor component states of the nucleons, the
// preparation circuits, the reduced-density-matrix structure checks, the
// magnetic moment observable and the constituent-quark quantum numbers.
//
// Logical encoding throughout: |u> = |0>, |d> = |1>, |up> = |0>, |down> = |1>.
// Qubits 1-3 carry flavor, qubits 4-6 carry spin.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nucleonsim/circuit.hpp"
#include "nucleonsim/core.hpp"

namespace nsim::nucleon {

enum class NucleonKind { Proton, Neutron };

/// Three-qubit component states; A/S marks antisymmetry/symmetry under
/// exchange of the first two qubits. SpinA/SpinS coincide with ProtonA/
/// ProtonS under the encoding.
enum class ComponentState { ProtonA, ProtonS, NeutronA, NeutronS, SpinA, SpinS };

/// Decomposition level of a preparation circuit.
enum class PrepLevel { Native, ExpandCr, ExpandToffoli, Full };

std::string_view nucleon_name(NucleonKind kind);
std::string_view level_name(PrepLevel level);

/// Exact closed-form component state (3 qubits).
StateVector flavor_spin_state(ComponentState which);

/// Exact six-qubit target state (|xS>|chiS> + |xA>|chiA>)/sqrt(2).
StateVector nucleon_state(NucleonKind kind);

/// The three-qubit transform taking |000> to the antisymmetric component and
/// |010> to minus the symmetric one. Application order:
///   CR_(2)3(theta), H_2, CNOT_(2bar)1, Z_1, CCNOT_(3 2bar)1, CR_(3)2(pi/4)
/// with theta = arccos(-sqrt(2/3)).
Circuit component_transform();

/// Six-qubit preparation circuit: H_2, CNOT_(2)5, the component transform on
/// qubits (1,2,3) and on (4,5,6); for the neutron, X on qubits 1,2,3
/// appended. The level applies the rewrite passes.
Circuit build_preparation(NucleonKind kind, PrepLevel level);

/// Largest |111>-projection norm over either qubit triple immediately before
/// any CCNOT while running the preparation circuit; the congruent Toffoli
/// substitution is exact as long as this stays at zero.
double pre_toffoli_support(NucleonKind kind, PrepLevel level);

/// Fidelity and relative phase for the four transform-contract mappings
/// (flavor and spin triple, fiducial inputs |000> and |010>).
struct MappingCheck {
    std::string name;
    double fidelity = 0.0;
    cplx phase;  // unit phase relating circuit output to the target state
};
std::vector<MappingCheck> verify_transform_contract();

/// Eigen-structure of the flavor-side reduced density matrix of the proton:
/// residuals for the two claimed eigenpairs (eigenvalue 1/2 each), purity,
/// and the largest imaginary entry (the matrix is real).
struct ReducedFlavorReport {
    double residual_antisym = 0.0;
    double residual_sym = 0.0;
    double purity = 0.0;
    double max_imag = 0.0;
};
ReducedFlavorReport reduced_flavor_check();

/// Magnetic moment observable in units of the d-quark moment: per quark i,
/// diag(-2, +1) on flavor qubit i times sigma_z on spin qubit i+3, summed
/// over i = 1..3 (mu_u = -2 mu_d).
Observable magnetic_moment_observable();

struct MomentReport {
    double proton = 0.0;
    double neutron = 0.0;
    double ratio = 0.0;  // neutron / proton
};

/// Moments of the exact target states.
MomentReport moments();

/// Moment of an arbitrary six-qubit state under the same observable.
double magnetic_moment(const StateVector& state);

// --- constituent-quark quantum numbers ---

enum class QuarkFlavor { Up, Down, Strange };

/// Exact rational arithmetic for the quantum-number bookkeeping (thirds and
/// halves do not mix well with binary floating point).
struct Rational {
    int num = 0;
    int den = 1;

    static Rational of(int num, int den);
    Rational operator+(Rational rhs) const;
    Rational operator-(Rational rhs) const;
    Rational half() const;
    double value() const { return static_cast<double>(num) / den; }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct QuarkNumbers {
    Rational spin;
    Rational baryon;
    Rational charge;
    Rational isospin3;
    int strangeness = 0;
};

QuarkNumbers quark_numbers(QuarkFlavor flavor);

/// charge - isospin3 - (baryon + strangeness)/2; identically zero for every
/// flavor (Gell-Mann-Nishijima).
Rational gell_mann_nishijima_residual(QuarkFlavor flavor);

struct CompositeNumbers {
    Rational baryon;
    Rational charge;
    Rational isospin3;
    int strangeness = 0;
};

CompositeNumbers composite_numbers(const std::array<QuarkFlavor, 3>& content);

}  // namespace nsim::nucleon
