// circuit.hpp
// Symbolic gate instruction set and circuit representation, the two
// decomposition rewrite passes, truth-table comparison, resource counting
// and the text serialization format.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nucleonsim/core.hpp"

namespace nsim {

/// Gate library. Target-local matrix semantics:
///   X = sigma_x, Z = sigma_z, H = (sigma_z + sigma_x)/sqrt(2),
///   R(z) = sin(z) sigma_z + cos(z) sigma_x   (Hermitian involution),
///   W(z) = R(z) sigma_x,  Wdag(z) = sigma_x R(z),
///   CNOT / CR(z) / CCNOT = controlled X / R(z) / X.
enum class GateKind { X, Z, H, R, W, Wdag, CNOT, CR, CCNOT };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// Number of angle parameters the kind carries (R/W/Wdag/CR: 1, else 0).
int param_count(GateKind kind);

/// Exact control count for the controlled kinds (CNOT/CR: 1, CCNOT: 2);
/// -1 for the single-qubit kinds, which accept any number of extra controls.
int required_controls(GateKind kind);

/// 2x2 target-local matrix of a kind.
Operator local_matrix(GateKind kind, const std::vector<double>& params);

struct GateOp {
    GateKind kind = GateKind::X;
    std::vector<double> params;
    std::vector<ControlSpec> controls;
    std::vector<int> targets;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Throws std::invalid_argument on arity/range/overlap violations.
void validate_op(const GateOp& op, int num_qubits);

/// Ordered gate sequence in application order: ops[0] is applied first.
/// Formulas written in operator order (rightmost factor first) are reversed
/// exactly once, at circuit construction; nothing downstream reverses again.
struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Full 2^n unitary embedding of one op, honoring control polarities.
Operator gate_unitary(const GateOp& op, int num_qubits);

StateVector run(const Circuit& circuit, const StateVector& input);
StateVector run(const Circuit& circuit);  // from |00..0>

/// Ordered product of the op embeddings. Dense; guarded to <= 6 qubits.
Operator circuit_unitary(const Circuit& circuit);

/// Rewrites every CR(z) into R(z/2) . CNOT . R(z/2) on the same target and
/// control; exact (not merely congruent), since R(z/2) sigma_x R(z/2) = R(z)
/// and R is an involution.
Circuit expand_cr(const Circuit& circuit);

/// Rewrites every CCNOT into the nine-op congruent sequence built from X,
/// W(pi/8), Wdag(pi/8) and three CNOTs. Requires one polarity-1 and one
/// polarity-0 control. The replacement matches the exact gate on every basis
/// state except |111> of the affected triple, which picks up a -1 phase.
///
/// The factor string is stored here in application order; its operator-order
/// (right-to-left) reading is the one that reproduces that truth table, the
/// reversed reading instead moves the phase to |011> (see the truth-table
/// tests).
Circuit expand_ccnot_congruent(const Circuit& circuit);

/// Per-basis-column comparison of two unitaries: ratio c with a e_i = c b e_i
/// and |c| = 1, or a mismatch marker.
struct TruthTableEntry {
    int basis_index = 0;
    bool matches = false;
    cplx ratio;  // valid when matches
};

std::vector<TruthTableEntry> truth_table_diff(const Operator& a, const Operator& b,
                                              double tol = kDefaultTol);

enum class CountLevel { Native, TwoQubitOnly };

/// Gate tallies classified by total qubit arity (controls + targets).
struct ResourceReport {
    int single_qubit = 0;
    int two_qubit = 0;
    int three_qubit = 0;
    int total = 0;
    std::map<GateKind, int> by_kind;

    int two_plus_three() const { return two_qubit + three_qubit; }
};

/// TwoQubitOnly rejects circuits still containing three-qubit gates.
ResourceReport count_resources(const Circuit& circuit, CountLevel level);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format, one op per line after the header:
///   version 1
///   qubits <n>
///   gate <KIND> [params <p,..>] [controls <q>:<pol>,..] targets <t,..>
/// Indices are 1-based; angles are radians with 17 significant digits.
std::string serialize(const Circuit& circuit);
Circuit parse_circuit(const std::string& text);  // throws ParseError

}  // namespace nsim
