#include "nucleonsim/nucleon.hpp"

#include <cmath>
#include <numeric>

namespace nsim::nucleon {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Amplitude tables over 3-qubit basis indices (qubit 1 = most significant).
// The antisymmetric component is (|010> - |100>)/sqrt(2); the symmetric one
// is (|010> + |100> - 2|001>)/sqrt(6). Neutron components are the bitwise
// flip of the proton ones.
StateVector sparse_state(int num_qubits, const std::vector<std::pair<std::size_t, double>>& amps) {
    std::vector<cplx> full(std::size_t{1} << num_qubits);
    for (const auto& [index, value] : amps) full[index] = value;
    return StateVector(num_qubits, std::move(full));
}

}  // namespace

std::string_view nucleon_name(NucleonKind kind) {
    return kind == NucleonKind::Proton ? "proton" : "neutron";
}

std::string_view level_name(PrepLevel level) {
    switch (level) {
        case PrepLevel::Native: return "native";
        case PrepLevel::ExpandCr: return "expand-cr";
        case PrepLevel::ExpandToffoli: return "expand-toffoli";
        case PrepLevel::Full: return "full";
    }
    return "?";
}

StateVector flavor_spin_state(ComponentState which) {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    switch (which) {
        case ComponentState::ProtonA:
        case ComponentState::SpinA: return sparse_state(3, {{2, r2}, {4, -r2}});
        case ComponentState::ProtonS:
        case ComponentState::SpinS: return sparse_state(3, {{1, -2.0 * r6}, {2, r6}, {4, r6}});
        case ComponentState::NeutronA: return sparse_state(3, {{5, r2}, {3, -r2}});
        case ComponentState::NeutronS: return sparse_state(3, {{5, r6}, {3, r6}, {6, -2.0 * r6}});
    }
    throw std::invalid_argument("unknown component state");
}

StateVector nucleon_state(NucleonKind kind) {
    const StateVector sym = flavor_spin_state(
        kind == NucleonKind::Proton ? ComponentState::ProtonS : ComponentState::NeutronS);
    const StateVector antisym = flavor_spin_state(
        kind == NucleonKind::Proton ? ComponentState::ProtonA : ComponentState::NeutronA);
    const StateVector spin_sym = flavor_spin_state(ComponentState::SpinS);
    const StateVector spin_antisym = flavor_spin_state(ComponentState::SpinA);

    const double r2 = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amps(64);
    for (std::size_t f = 0; f < 8; ++f)
        for (std::size_t s = 0; s < 8; ++s)
            amps[f * 8 + s] = r2 * (sym.amplitude(f) * spin_sym.amplitude(s) +
                                    antisym.amplitude(f) * spin_antisym.amplitude(s));
    return StateVector(6, std::move(amps));
}

Circuit component_transform() {
    const double theta = std::acos(-std::sqrt(2.0 / 3.0));
    const double phi = kPi / 4.0;
    Circuit circuit{3, {}};
    circuit.ops = {
        {GateKind::CR, {theta}, {{2, 1}}, {3}},
        {GateKind::H, {}, {}, {2}},
        {GateKind::CNOT, {}, {{2, 0}}, {1}},
        {GateKind::Z, {}, {}, {1}},
        {GateKind::CCNOT, {}, {{3, 1}, {2, 0}}, {1}},
        {GateKind::CR, {phi}, {{3, 1}}, {2}},
    };
    return circuit;
}

namespace {

GateOp shift_op(GateOp op, int offset) {
    for (int& t : op.targets) t += offset;
    for (ControlSpec& c : op.controls) c.qubit += offset;
    return op;
}

Circuit apply_level(Circuit circuit, PrepLevel level) {
    if (level == PrepLevel::ExpandCr || level == PrepLevel::Full) circuit = expand_cr(circuit);
    if (level == PrepLevel::ExpandToffoli || level == PrepLevel::Full)
        circuit = expand_ccnot_congruent(circuit);
    return circuit;
}

}  // namespace

Circuit build_preparation(NucleonKind kind, PrepLevel level) {
    Circuit circuit{6, {}};
    circuit.ops.push_back({GateKind::H, {}, {}, {2}});
    circuit.ops.push_back({GateKind::CNOT, {}, {{2, 1}}, {5}});
    const Circuit transform = component_transform();
    for (const GateOp& op : transform.ops) circuit.ops.push_back(op);
    for (const GateOp& op : transform.ops) circuit.ops.push_back(shift_op(op, 3));
    if (kind == NucleonKind::Neutron)
        for (int q : {1, 2, 3}) circuit.ops.push_back({GateKind::X, {}, {}, {q}});
    return apply_level(std::move(circuit), level);
}

double pre_toffoli_support(NucleonKind kind, PrepLevel level) {
    const Circuit circuit = build_preparation(kind, level);
    StateVector state = StateVector::zero_state(6);
    double worst = 0.0;
    for (const GateOp& op : circuit.ops) {
        if (op.kind == GateKind::CCNOT) {
            std::vector<int> triple = op.targets;
            for (const ControlSpec& c : op.controls) triple.push_back(c.qubit);
            double prob = 0.0;
            for (std::size_t idx = 0; idx < state.dim(); ++idx) {
                bool all_one = true;
                for (int q : triple)
                    if (!state.bit(idx, q)) {
                        all_one = false;
                        break;
                    }
                if (all_one) prob += std::norm(state.amplitude(idx));
            }
            worst = std::max(worst, std::sqrt(prob));
        }
        state = apply_gate(state, local_matrix(op.kind, op.params), op.targets, op.controls);
    }
    return worst;
}

std::vector<MappingCheck> verify_transform_contract() {
    std::vector<MappingCheck> checks;
    const Circuit transform = component_transform();

    auto record = [&](const std::string& name, const StateVector& output,
                      const StateVector& target) {
        MappingCheck check{name, fidelity(output, target), cplx{}};
        if (const auto phase = relative_phase(output, target)) check.phase = *phase;
        checks.push_back(check);
    };

    record("flavor_000_to_antisym", run(transform, StateVector::basis_state(3, 0)),
           flavor_spin_state(ComponentState::ProtonA));
    record("flavor_010_to_sym", run(transform, StateVector::basis_state(3, 2)),
           flavor_spin_state(ComponentState::ProtonS));

    // Spin triple: same matrix acting on qubits (4,5,6) of a six-qubit
    // register, flavor qubits left in |000>.
    Circuit spin_side{6, {}};
    for (const GateOp& op : transform.ops) spin_side.ops.push_back(shift_op(op, 3));
    auto embed = [](const StateVector& triplet) {
        std::vector<cplx> amps(64);
        for (std::size_t s = 0; s < 8; ++s) amps[s] = triplet.amplitude(s);
        return StateVector(6, std::move(amps));
    };
    record("spin_000_to_antisym", run(spin_side, StateVector::basis_state(6, 0)),
           embed(flavor_spin_state(ComponentState::SpinA)));
    record("spin_010_to_sym", run(spin_side, StateVector::basis_state(6, 2)),
           embed(flavor_spin_state(ComponentState::SpinS)));
    return checks;
}

ReducedFlavorReport reduced_flavor_check() {
    const DensityMatrix rho = partial_trace(nucleon_state(NucleonKind::Proton), {1, 2, 3});

    auto residual = [&](const StateVector& vec, double eigenvalue) {
        const std::vector<cplx> image = rho.apply(vec.amplitudes());
        double sum = 0.0;
        for (std::size_t i = 0; i < image.size(); ++i)
            sum += std::norm(image[i] - eigenvalue * vec.amplitude(i));
        return std::sqrt(sum);
    };

    ReducedFlavorReport report;
    report.residual_antisym = residual(flavor_spin_state(ComponentState::ProtonA), 0.5);
    report.residual_sym = residual(flavor_spin_state(ComponentState::ProtonS), 0.5);
    report.purity = rho.purity();
    report.max_imag = rho.max_imag_entry();
    return report;
}

Observable magnetic_moment_observable() {
    // Flavor factor diag(-2, +1) in units of mu_d; spin factor sigma_z.
    const Operator flavor(2, {-2.0, 0.0, 0.0, 1.0});
    const Operator spin(2, {1.0, 0.0, 0.0, -1.0});
    Observable obs;
    obs.num_qubits = 6;
    for (int quark = 1; quark <= 3; ++quark)
        obs.terms.push_back({{quark, flavor}, {quark + 3, spin}});
    return obs;
}

double magnetic_moment(const StateVector& state) {
    return expectation(state, magnetic_moment_observable());
}

MomentReport moments() {
    MomentReport report;
    report.proton = magnetic_moment(nucleon_state(NucleonKind::Proton));
    report.neutron = magnetic_moment(nucleon_state(NucleonKind::Neutron));
    report.ratio = report.neutron / report.proton;
    return report;
}

// --- quantum numbers ---

Rational Rational::of(int num, int den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const int g = std::gcd(num < 0 ? -num : num, den);
    return g ? Rational{num / g, den / g} : Rational{0, 1};
}

Rational Rational::operator+(Rational rhs) const {
    return of(num * rhs.den + rhs.num * den, den * rhs.den);
}

Rational Rational::operator-(Rational rhs) const {
    return of(num * rhs.den - rhs.num * den, den * rhs.den);
}

Rational Rational::half() const { return of(num, den * 2); }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

QuarkNumbers quark_numbers(QuarkFlavor flavor) {
    switch (flavor) {
        case QuarkFlavor::Up:
            return {Rational::of(1, 2), Rational::of(1, 3), Rational::of(2, 3), Rational::of(1, 2),
                    0};
        case QuarkFlavor::Down:
            return {Rational::of(1, 2), Rational::of(1, 3), Rational::of(-1, 3),
                    Rational::of(-1, 2), 0};
        case QuarkFlavor::Strange:
            return {Rational::of(1, 2), Rational::of(1, 3), Rational::of(-1, 3), Rational::of(0, 1),
                    -1};
    }
    throw std::invalid_argument("unknown quark flavor");
}

Rational gell_mann_nishijima_residual(QuarkFlavor flavor) {
    const QuarkNumbers q = quark_numbers(flavor);
    const Rational strangeness = Rational::of(q.strangeness, 1);
    return q.charge - q.isospin3 - (q.baryon + strangeness).half();
}

CompositeNumbers composite_numbers(const std::array<QuarkFlavor, 3>& content) {
    CompositeNumbers out{Rational::of(0, 1), Rational::of(0, 1), Rational::of(0, 1), 0};
    for (QuarkFlavor flavor : content) {
        const QuarkNumbers q = quark_numbers(flavor);
        out.baryon = out.baryon + q.baryon;
        out.charge = out.charge + q.charge;
        out.isospin3 = out.isospin3 + q.isospin3;
        out.strangeness += q.strangeness;
    }
    return out;
}

}  // namespace nsim::nucleon
