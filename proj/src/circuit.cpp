#include "nucleonsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

Operator mat2(cplx a, cplx b, cplx c, cplx d) { return Operator(2, {a, b, c, d}); }

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::R: return "R";
        case GateKind::W: return "W";
        case GateKind::Wdag: return "Wdag";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CR: return "CR";
        case GateKind::CCNOT: return "CCNOT";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    static constexpr GateKind kinds[] = {GateKind::X,    GateKind::Z,  GateKind::H,
                                         GateKind::R,    GateKind::W,  GateKind::Wdag,
                                         GateKind::CNOT, GateKind::CR, GateKind::CCNOT};
    for (GateKind k : kinds)
        if (gate_name(k) == name) return k;
    return std::nullopt;
}

int param_count(GateKind kind) {
    switch (kind) {
        case GateKind::R:
        case GateKind::W:
        case GateKind::Wdag:
        case GateKind::CR: return 1;
        default: return 0;
    }
}

int required_controls(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CR: return 1;
        case GateKind::CCNOT: return 2;
        default: return -1;
    }
}

Operator local_matrix(GateKind kind, const std::vector<double>& params) {
    require(static_cast<int>(params.size()) == param_count(kind),
            std::string("wrong parameter count for gate ") + std::string(gate_name(kind)));
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::CCNOT: return mat2(0, 1, 1, 0);
        case GateKind::Z: return mat2(1, 0, 0, -1);
        case GateKind::H: return mat2(s, s, s, -s);
        case GateKind::R:
        case GateKind::CR: {
            const double z = params[0];
            return mat2(std::sin(z), std::cos(z), std::cos(z), -std::sin(z));
        }
        case GateKind::W: {
            const double z = params[0];
            return mat2(std::cos(z), std::sin(z), -std::sin(z), std::cos(z));
        }
        case GateKind::Wdag: {
            const double z = params[0];
            return mat2(std::cos(z), -std::sin(z), std::sin(z), std::cos(z));
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

void validate_op(const GateOp& op, int num_qubits) {
    require(op.targets.size() == 1,
            std::string("gate ") + std::string(gate_name(op.kind)) + " takes exactly one target");
    require(static_cast<int>(op.params.size()) == param_count(op.kind),
            std::string("wrong parameter count for gate ") + std::string(gate_name(op.kind)));
    for (double p : op.params)
        require(std::isfinite(p), "gate parameters must be finite");
    const int rc = required_controls(op.kind);
    if (rc >= 0)
        require(static_cast<int>(op.controls.size()) == rc,
                std::string("gate ") + std::string(gate_name(op.kind)) + " takes exactly " +
                    std::to_string(rc) + " control(s)");
    std::vector<int> seen;
    auto check_index = [&](int q, const char* what) {
        if (q < 1 || q > num_qubits)
            throw std::out_of_range(std::string(what) + " qubit index out of range");
        require(std::find(seen.begin(), seen.end(), q) == seen.end(),
                "control and target qubits must be distinct");
        seen.push_back(q);
    };
    for (int t : op.targets) check_index(t, "target");
    for (const ControlSpec& c : op.controls) {
        check_index(c.qubit, "control");
        require(c.polarity == 0 || c.polarity == 1, "control polarity must be 0 or 1");
    }
}

Operator gate_unitary(const GateOp& op, int num_qubits) {
    validate_op(op, num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    Operator out(static_cast<int>(dim));
    const Operator local = local_matrix(op.kind, op.params);
    for (std::size_t col = 0; col < dim; ++col) {
        const StateVector image =
            apply_gate(StateVector::basis_state(num_qubits, col), local, op.targets, op.controls);
        for (std::size_t row = 0; row < dim; ++row)
            out.at(static_cast<int>(row), static_cast<int>(col)) = image.amplitude(row);
    }
    return out;
}

StateVector run(const Circuit& circuit, const StateVector& input) {
    require(input.num_qubits() == circuit.num_qubits, "circuit/state size mismatch");
    StateVector state = input;
    for (const GateOp& op : circuit.ops) {
        validate_op(op, circuit.num_qubits);
        state = apply_gate(state, local_matrix(op.kind, op.params), op.targets, op.controls);
    }
    return state;
}

StateVector run(const Circuit& circuit) {
    return run(circuit, StateVector::zero_state(circuit.num_qubits));
}

Operator circuit_unitary(const Circuit& circuit) {
    require(circuit.num_qubits >= 1, "circuit needs at least one qubit");
    require(circuit.num_qubits <= 6, "register too large for a dense circuit unitary");
    const std::size_t dim = std::size_t{1} << circuit.num_qubits;
    Operator out(static_cast<int>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const StateVector image =
            run(circuit, StateVector::basis_state(circuit.num_qubits, col));
        for (std::size_t row = 0; row < dim; ++row)
            out.at(static_cast<int>(row), static_cast<int>(col)) = image.amplitude(row);
    }
    return out;
}

Circuit expand_cr(const Circuit& circuit) {
    Circuit out{circuit.num_qubits, {}};
    for (const GateOp& op : circuit.ops) {
        if (op.kind != GateKind::CR) {
            out.ops.push_back(op);
            continue;
        }
        validate_op(op, circuit.num_qubits);
        const double half = op.params[0] / 2.0;
        const GateOp rot{GateKind::R, {half}, {}, op.targets};
        out.ops.push_back(rot);
        out.ops.push_back({GateKind::CNOT, {}, op.controls, op.targets});
        out.ops.push_back(rot);
    }
    return out;
}

Circuit expand_ccnot_congruent(const Circuit& circuit) {
    Circuit out{circuit.num_qubits, {}};
    for (const GateOp& op : circuit.ops) {
        if (op.kind != GateKind::CCNOT) {
            out.ops.push_back(op);
            continue;
        }
        validate_op(op, circuit.num_qubits);
        const ControlSpec& first = op.controls[0];
        const ControlSpec& second = op.controls[1];
        if (first.polarity + second.polarity != 1)
            throw std::invalid_argument(
                "congruent CCNOT expansion requires one polarity-1 and one polarity-0 control");
        const int on_zero = first.polarity == 0 ? first.qubit : second.qubit;
        const int on_one = first.polarity == 1 ? first.qubit : second.qubit;
        const int target = op.targets[0];
        const double eighth = kPi / 8.0;

        // X on the polarity-0 control brackets a plain two-control pattern;
        // inside, the rotations cancel pairwise on inactive sectors.
        const GateOp flip{GateKind::X, {}, {}, {on_zero}};
        const GateOp w{GateKind::W, {eighth}, {}, {target}};
        const GateOp wdag{GateKind::Wdag, {eighth}, {}, {target}};
        const GateOp cnot_zero{GateKind::CNOT, {}, {{on_zero, 1}}, {target}};
        const GateOp cnot_one{GateKind::CNOT, {}, {{on_one, 1}}, {target}};
        for (const GateOp& step :
             {flip, wdag, cnot_zero, wdag, cnot_one, w, cnot_zero, w, flip})
            out.ops.push_back(step);
    }
    return out;
}

std::vector<TruthTableEntry> truth_table_diff(const Operator& a, const Operator& b, double tol) {
    require(a.dim() == b.dim(), "truth table comparison dimension mismatch");
    require(a.is_unitary(tol) && b.is_unitary(tol),
            "truth table comparison requires unitary operators");
    std::vector<TruthTableEntry> entries;
    for (int col = 0; col < a.dim(); ++col) {
        int pivot = 0;
        double best = 0.0;
        for (int row = 0; row < b.dim(); ++row)
            if (std::abs(b.at(row, col)) > best) {
                best = std::abs(b.at(row, col));
                pivot = row;
            }
        cplx ratio = a.at(pivot, col) / b.at(pivot, col);
        const double mag = std::abs(ratio);
        TruthTableEntry entry{col, mag > 0.5, ratio};
        if (entry.matches) {
            entry.ratio = ratio / mag;
            for (int row = 0; row < a.dim(); ++row)
                if (std::abs(a.at(row, col) - entry.ratio * b.at(row, col)) >= tol) {
                    entry.matches = false;
                    break;
                }
        }
        entries.push_back(entry);
    }
    return entries;
}

ResourceReport count_resources(const Circuit& circuit, CountLevel level) {
    ResourceReport report;
    for (const GateOp& op : circuit.ops) {
        const int arity = static_cast<int>(op.controls.size() + op.targets.size());
        if (level == CountLevel::TwoQubitOnly && arity >= 3)
            throw std::invalid_argument(
                "two-qubit-only counting requires a fully expanded circuit");
        if (arity == 1)
            ++report.single_qubit;
        else if (arity == 2)
            ++report.two_qubit;
        else
            ++report.three_qubit;
        ++report.by_kind[op.kind];
        ++report.total;
    }
    return report;
}

// --- serialization ---

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    return parts;
}

int parse_int(const std::string& token, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        parse_fail(line, std::string("invalid ") + what + " '" + token + "'");
    }
}

double parse_double(const std::string& token, std::size_t line) {
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        parse_fail(line, "invalid parameter '" + token + "'");
    }
}

}  // namespace

std::string serialize(const Circuit& circuit) {
    std::ostringstream out;
    out << "version 1\n";
    out << "qubits " << circuit.num_qubits << '\n';
    for (const GateOp& op : circuit.ops) {
        out << "gate " << gate_name(op.kind);
        if (!op.params.empty()) {
            out << " params ";
            for (std::size_t i = 0; i < op.params.size(); ++i) {
                if (i) out << ',';
                out << to_decimal(op.params[i]);
            }
        }
        if (!op.controls.empty()) {
            out << " controls ";
            for (std::size_t i = 0; i < op.controls.size(); ++i) {
                if (i) out << ',';
                out << op.controls[i].qubit << ':' << op.controls[i].polarity;
            }
        }
        out << " targets " << join_ints(op.targets) << '\n';
    }
    return out.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line() || line != "version 1") parse_fail(line_no ? line_no : 1, "expected 'version 1'");
    if (!next_line()) parse_fail(line_no, "expected 'qubits <n>'");
    {
        std::istringstream header(line);
        std::string keyword;
        header >> keyword;
        if (keyword != "qubits") parse_fail(line_no, "expected 'qubits <n>'");
        std::string count;
        if (!(header >> count)) parse_fail(line_no, "expected 'qubits <n>'");
        std::string rest;
        if (header >> rest) parse_fail(line_no, "trailing tokens after qubit count");
        const int n = parse_int(count, line_no, "qubit count");
        if (n < 1) parse_fail(line_no, "qubit count must be positive");
        Circuit circuit{n, {}};

        while (next_line()) {
            std::istringstream fields(line);
            std::string keyword2;
            fields >> keyword2;
            if (keyword2 != "gate") parse_fail(line_no, "expected 'gate <kind> ...'");
            std::string kind_token;
            if (!(fields >> kind_token)) parse_fail(line_no, "missing gate kind");
            const auto kind = gate_from_name(kind_token);
            if (!kind) parse_fail(line_no, "unknown gate kind '" + kind_token + "'");

            GateOp op;
            op.kind = *kind;
            std::string field;
            int last_rank = -1;  // fixed field order: params, controls, targets
            bool have_targets = false;
            while (fields >> field) {
                std::string value;
                if (!(fields >> value)) parse_fail(line_no, "field '" + field + "' missing value");
                int rank = -1;
                if (field == "params")
                    rank = 0;
                else if (field == "controls")
                    rank = 1;
                else if (field == "targets")
                    rank = 2;
                else
                    parse_fail(line_no, "unknown field '" + field + "'");
                if (rank <= last_rank)
                    parse_fail(line_no, "field '" + field + "' duplicated or out of order");
                last_rank = rank;
                if (rank == 0) {
                    for (const std::string& tok : split(value, ','))
                        op.params.push_back(parse_double(tok, line_no));
                } else if (rank == 1) {
                    for (const std::string& tok : split(value, ',')) {
                        const auto parts = split(tok, ':');
                        if (parts.size() != 2)
                            parse_fail(line_no, "control '" + tok + "' must be <qubit>:<polarity>");
                        op.controls.push_back({parse_int(parts[0], line_no, "control qubit"),
                                               parse_int(parts[1], line_no, "control polarity")});
                    }
                } else {
                    for (const std::string& tok : split(value, ','))
                        op.targets.push_back(parse_int(tok, line_no, "target qubit"));
                    have_targets = true;
                }
            }
            if (!have_targets) parse_fail(line_no, "missing 'targets' field");
            try {
                validate_op(op, circuit.num_qubits);
            } catch (const std::logic_error& err) {
                parse_fail(line_no, err.what());
            }
            circuit.ops.push_back(std::move(op));
        }
        return circuit;
    }
}

}  // namespace nsim
