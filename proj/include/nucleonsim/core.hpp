// core.hpp
// Dense complex linear algebra for small qubit registers: state vectors,
// operators, gate application, partial trace, fidelity and expectation values.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsim {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;

/// Decimal formatting used by every dump/report writer: 17 significant
/// digits (round-trip exact for doubles), negative zero normalized.
std::string to_decimal(double value);

/// Control qubit for a conditioned gate. polarity 1 fires on |1>,
/// polarity 0 fires on |0>.
struct ControlSpec {
    int qubit = 0;
    int polarity = 1;

    friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

/// Dense square complex matrix. dim must be a power of two, or 3 for the
/// three-mode optical unitaries.
class Operator {
public:
    explicit Operator(int dim);
    Operator(int dim, std::vector<cplx> entries);  // row-major

    static Operator identity(int dim);

    int dim() const { return dim_; }
    cplx& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const cplx& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    Operator adjoint() const;
    Operator operator*(const Operator& rhs) const;

    bool is_unitary(double tol = kDefaultTol) const;
    bool is_hermitian(double tol = kDefaultTol) const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const Operator& other) const;

private:
    int dim_;
    std::vector<cplx> entries_;
};

/// Normalized pure state of num_qubits qubits.
///
/// Index convention: a basis label reads like the ket string, qubit 1 is the
/// leftmost symbol and the most significant bit of the amplitude index, so
/// |q1 q2 .. qn> sits at index sum_i q_i * 2^(n-i).  Norm and finiteness are
/// validated on construction; every gate application re-validates.
class StateVector {
public:
    StateVector(int num_qubits, std::vector<cplx> amplitudes);

    static StateVector zero_state(int num_qubits);                     // |00..0>
    static StateVector basis_state(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    cplx amplitude(std::size_t index) const { return amplitudes_.at(index); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }

    /// Bit of `qubit` (1-based) in basis label `index`.
    int bit(std::size_t index, int qubit) const {
        return static_cast<int>((index >> (num_qubits_ - qubit)) & 1u);
    }

private:
    int num_qubits_;
    std::vector<cplx> amplitudes_;
};

/// Density matrix on num_qubits qubits. Hermiticity, unit trace and
/// real-nonnegative diagonal are validated on construction.
class DensityMatrix {
public:
    DensityMatrix(int num_qubits, std::vector<cplx> entries);  // row-major

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    double trace() const;
    double purity() const;  // tr(rho^2)
    double max_imag_entry() const;

    /// rho * v for an amplitude vector of matching dimension.
    std::vector<cplx> apply(const std::vector<cplx>& v) const;

private:
    int num_qubits_;
    std::size_t dim_;
    std::vector<cplx> entries_;
};

/// Hermitian observable kept as a sum of local factor products; each factor
/// is a 2x2 matrix acting on one qubit, identity implied elsewhere.
struct Observable {
    struct Factor {
        int qubit;
        Operator matrix;  // 2x2
    };
    using Term = std::vector<Factor>;

    int num_qubits = 0;
    std::vector<Term> terms;

    Operator to_operator() const;  // dense 2^n x 2^n
};

/// Applies `local` to the target qubits of every basis component whose
/// control bits match their declared polarity; all other components pass
/// through unchanged. local.dim must equal 2^|targets| and be unitary.
StateVector apply_gate(const StateVector& state, const Operator& local,
                       const std::vector<int>& targets,
                       const std::vector<ControlSpec>& controls = {});

/// Reduced density matrix over `keep` (1-based, strictly increasing).
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

double expectation(const StateVector& state, const Operator& hermitian);
double expectation(const StateVector& state, const Observable& obs);

/// Unit phase c with a ~ c*b within tol (max-norm), if one exists. c is read
/// off the largest-magnitude amplitude of b.
std::optional<cplx> relative_phase(const StateVector& a, const StateVector& b,
                                   double tol = kDefaultTol);

bool phase_equivalent(const StateVector& a, const StateVector& b, double tol = kDefaultTol);

/// State dump: one record per basis label with |amplitude| >= 1e-14, in
/// ascending basis order, "<binary label> <re> <im>" per line.
std::string dump_state(const StateVector& state);

}  // namespace nsim
