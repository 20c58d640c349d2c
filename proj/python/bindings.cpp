// pybind11 bindings for the nucleonsim core: state vectors, circuits, the
// rewrite passes, the nucleon builders and the photonic backend.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nucleonsim/circuit.hpp"
#include "nucleonsim/core.hpp"
#include "nucleonsim/nucleon.hpp"
#include "nucleonsim/photonic.hpp"
#include "nucleonsim/verify.hpp"

namespace py = pybind11;
using namespace nsim;

namespace {

nucleon::NucleonKind nucleon_from_name(const std::string& name) {
    if (name == "proton") return nucleon::NucleonKind::Proton;
    if (name == "neutron") return nucleon::NucleonKind::Neutron;
    throw std::invalid_argument("unknown nucleon '" + name + "'");
}

nucleon::PrepLevel level_from_name(const std::string& name) {
    if (name == "native") return nucleon::PrepLevel::Native;
    if (name == "expand-cr") return nucleon::PrepLevel::ExpandCr;
    if (name == "expand-toffoli") return nucleon::PrepLevel::ExpandToffoli;
    if (name == "full") return nucleon::PrepLevel::Full;
    throw std::invalid_argument("unknown level '" + name + "'");
}

nucleon::ComponentState component_from_name(const std::string& name) {
    using CS = nucleon::ComponentState;
    if (name == "proton_antisym") return CS::ProtonA;
    if (name == "proton_sym") return CS::ProtonS;
    if (name == "neutron_antisym") return CS::NeutronA;
    if (name == "neutron_sym") return CS::NeutronS;
    if (name == "spin_antisym") return CS::SpinA;
    if (name == "spin_sym") return CS::SpinS;
    throw std::invalid_argument("unknown component state '" + name + "'");
}

std::vector<std::vector<cplx>> as_rows(const Operator& op) {
    std::vector<std::vector<cplx>> rows(op.dim(), std::vector<cplx>(op.dim()));
    for (int r = 0; r < op.dim(); ++r)
        for (int c = 0; c < op.dim(); ++c) rows[r][c] = op.at(r, c);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_nucleonsim, m) {
    m.doc() = "Nucleon spin-flavor state preparation and verification toolkit";

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int, std::vector<cplx>>(), py::arg("num_qubits"), py::arg("amplitudes"))
        .def_static("zero_state", &StateVector::zero_state)
        .def_static("basis_state", &StateVector::basis_state)
        .def_property_readonly("num_qubits", &StateVector::num_qubits)
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) { return s.amplitudes(); })
        .def("dump", &dump_state)
        .def("__len__", &StateVector::dim);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("num_qubits", [](const Circuit& c) { return c.num_qubits; })
        .def("__len__", [](const Circuit& c) { return c.ops.size(); })
        .def("serialize", [](const Circuit& c) { return serialize(c); })
        .def_static("parse", &parse_circuit, py::arg("text"))
        .def("run", [](const Circuit& c) { return run(c); })
        .def("run", [](const Circuit& c, const StateVector& input) { return run(c, input); },
             py::arg("input"))
        .def("unitary", [](const Circuit& c) { return as_rows(circuit_unitary(c)); })
        .def("expand_cr", &expand_cr)
        .def("expand_ccnot_congruent", &expand_ccnot_congruent)
        .def("count_resources", [](const Circuit& c, const std::string& level) {
            const ResourceReport report = count_resources(
                c, level == "two-qubit-only" ? CountLevel::TwoQubitOnly : CountLevel::Native);
            py::dict out;
            out["single_qubit"] = report.single_qubit;
            out["two_qubit"] = report.two_qubit;
            out["three_qubit"] = report.three_qubit;
            out["total"] = report.total;
            py::dict by_kind;
            for (const auto& [kind, count] : report.by_kind)
                by_kind[py::str(std::string(gate_name(kind)))] = count;
            out["by_kind"] = by_kind;
            return out;
        }, py::arg("level") = "native");

    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("phase_equivalent", &phase_equivalent, py::arg("a"), py::arg("b"),
          py::arg("tol") = kDefaultTol);
    m.def("partial_trace", [](const StateVector& state, const std::vector<int>& keep) {
        const DensityMatrix rho = partial_trace(state, keep);
        std::vector<std::vector<cplx>> rows(rho.dim(), std::vector<cplx>(rho.dim()));
        for (std::size_t r = 0; r < rho.dim(); ++r)
            for (std::size_t c = 0; c < rho.dim(); ++c) rows[r][c] = rho.at(r, c);
        return rows;
    }, py::arg("state"), py::arg("keep"));

    m.def("nucleon_state",
          [](const std::string& kind) { return nucleon::nucleon_state(nucleon_from_name(kind)); },
          py::arg("kind"));
    m.def("flavor_spin_state",
          [](const std::string& which) {
              return nucleon::flavor_spin_state(component_from_name(which));
          },
          py::arg("which"));
    m.def("component_transform", &nucleon::component_transform);
    m.def("build_preparation",
          [](const std::string& kind, const std::string& level) {
              return nucleon::build_preparation(nucleon_from_name(kind), level_from_name(level));
          },
          py::arg("kind"), py::arg("level") = "native");
    m.def("magnetic_moment", &nucleon::magnetic_moment, py::arg("state"));
    m.def("moments", [] {
        const nucleon::MomentReport report = nucleon::moments();
        py::dict out;
        out["proton"] = report.proton;
        out["neutron"] = report.neutron;
        out["ratio"] = report.ratio;
        return out;
    });
    m.def("quark_numbers", [](const std::string& flavor) {
        nucleon::QuarkFlavor f;
        if (flavor == "u") f = nucleon::QuarkFlavor::Up;
        else if (flavor == "d") f = nucleon::QuarkFlavor::Down;
        else if (flavor == "s") f = nucleon::QuarkFlavor::Strange;
        else throw std::invalid_argument("unknown quark flavor '" + flavor + "'");
        const nucleon::QuarkNumbers q = nucleon::quark_numbers(f);
        py::dict out;
        out["spin"] = q.spin.value();
        out["baryon"] = q.baryon.str();
        out["charge"] = q.charge.str();
        out["isospin3"] = q.isospin3.str();
        out["strangeness"] = q.strangeness;
        return out;
    }, py::arg("flavor"));

    m.def("reference_unitary", [] { return as_rows(photonic::reference_unitary()); });
    m.def("interferometer_unitary",
          [] { return as_rows(photonic::compose(photonic::build_interferometer())); });
    m.def("dump_interferometer",
          [] { return photonic::dump_interferometer(photonic::build_interferometer()); });
    m.def("run_photonic_protocol", &photonic::run_protocol);

    m.def("verification_suite", [](double tol) {
        py::list out;
        for (const CheckRecord& record : verification_suite(tol)) {
            py::dict entry;
            entry["name"] = record.name;
            entry["pass"] = record.pass;
            entry["measured"] = record.measured;
            entry["tolerance"] = record.tolerance;
            out.append(entry);
        }
        return out;
    }, py::arg("tol") = kDefaultTol);
}
