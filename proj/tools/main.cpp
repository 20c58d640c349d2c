// nucleonsim command line front end: preparation, verification, moments,
// resource reports and circuit/interferometer export.
//
// Exit codes: 0 success, 1 verification or fidelity failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nucleonsim/circuit.hpp"
#include "nucleonsim/core.hpp"
#include "nucleonsim/nucleon.hpp"
#include "nucleonsim/photonic.hpp"
#include "nucleonsim/verify.hpp"

namespace {

using namespace nsim;
using nucleon::NucleonKind;
using nucleon::PrepLevel;

struct Options {
    std::string nucleon = "proton";
    std::string backend = "qubit";
    std::string level = "native";
    std::string format = "circuit";
    double tolerance = kDefaultTol;
    std::string output;
};

int write_output(const Options& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << opts.output << "'\n";
        return 2;
    }
    file << text;
    return 0;
}

NucleonKind parse_nucleon(const std::string& name) {
    return name == "neutron" ? NucleonKind::Neutron : NucleonKind::Proton;
}

PrepLevel parse_level(const std::string& name) {
    if (name == "expand-cr") return PrepLevel::ExpandCr;
    if (name == "expand-toffoli") return PrepLevel::ExpandToffoli;
    if (name == "full") return PrepLevel::Full;
    return PrepLevel::Native;
}

int cmd_prepare(const Options& opts, bool level_given) {
    StateVector state = StateVector::zero_state(6);
    if (opts.backend == "photonic") {
        if (opts.nucleon != "proton") {
            std::cerr << "error: the photonic backend prepares the proton only\n";
            return 2;
        }
        if (level_given) {
            std::cerr << "error: --level applies to the qubit backend only\n";
            return 2;
        }
        state = photonic::run_protocol();
    } else {
        state = run(nucleon::build_preparation(parse_nucleon(opts.nucleon),
                                               parse_level(opts.level)));
    }
    const double fid = fidelity(state, nucleon::nucleon_state(parse_nucleon(opts.nucleon)));
    std::ostringstream out;
    out << dump_state(state);
    out << "fidelity_vs_oracle=" << to_decimal(fid) << '\n';
    if (const int rc = write_output(opts, out.str())) return rc;
    return fid >= 1.0 - opts.tolerance ? 0 : 1;
}

int cmd_verify(const Options& opts) {
    const auto records = verification_suite(opts.tolerance);
    std::ostringstream out;
    out << format_report(records);
    if (const int rc = write_output(opts, out.str())) return rc;
    if (!all_pass(records)) {
        std::cerr << "failed checks:";
        for (const CheckRecord& record : records)
            if (!record.pass) std::cerr << ' ' << record.name;
        std::cerr << '\n';
        return 1;
    }
    return 0;
}

int cmd_moments(const Options& opts) {
    const nucleon::MomentReport report = nucleon::moments();
    std::ostringstream out;
    out << "proton_moment=" << to_decimal(report.proton) << '\n';
    out << "neutron_moment=" << to_decimal(report.neutron) << '\n';
    out << "ratio=" << to_decimal(report.ratio) << '\n';
    return write_output(opts, out.str());
}

int cmd_resources(const Options& opts) {
    const NucleonKind kind = parse_nucleon(opts.nucleon);
    const Circuit transform_full = expand_ccnot_congruent(expand_cr(nucleon::component_transform()));
    std::ostringstream out;
    out << "u_cnots="
        << count_resources(transform_full, CountLevel::Native).by_kind[GateKind::CNOT] << '\n';

    Circuit circuit{0, {}};
    ResourceReport report;
    if (opts.level == "two-qubit-only") {
        circuit = nucleon::build_preparation(kind, PrepLevel::Full);
        report = count_resources(circuit, CountLevel::TwoQubitOnly);
        out << "two_qubit_total=" << report.two_qubit << '\n';
    } else {
        circuit = nucleon::build_preparation(kind, PrepLevel::Native);
        report = count_resources(circuit, CountLevel::Native);
        out << "two_three_qubit_total=" << report.two_plus_three() << '\n';
    }
    out << "single_qubit=" << report.single_qubit << '\n';
    out << "two_qubit=" << report.two_qubit << '\n';
    out << "three_qubit=" << report.three_qubit << '\n';
    out << "total=" << report.total << '\n';
    for (const auto& [kind2, count] : report.by_kind)
        out << "count_" << gate_name(kind2) << '=' << count << '\n';
    return write_output(opts, out.str());
}

int cmd_photonic(const Options& opts) {
    const photonic::Interferometer interferometer = photonic::build_interferometer();
    const StateVector state = photonic::run_protocol();
    const double fid = fidelity(state, nucleon::nucleon_state(NucleonKind::Proton));
    std::ostringstream out;
    out << photonic::dump_interferometer(interferometer);
    out << dump_state(state);
    out << "fidelity_vs_oracle=" << to_decimal(fid) << '\n';
    out << "moment=" << to_decimal(nucleon::magnetic_moment(state)) << '\n';
    if (const int rc = write_output(opts, out.str())) return rc;
    return fid >= 1.0 - opts.tolerance ? 0 : 1;
}

int cmd_export(const Options& opts) {
    std::ostringstream out;
    if (opts.format == "interferometer") {
        out << photonic::dump_interferometer(photonic::build_interferometer());
    } else {
        out << serialize(nucleon::build_preparation(parse_nucleon(opts.nucleon),
                                                    parse_level(opts.level)));
    }
    return write_output(opts, out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nucleon spin-flavor state preparation and verification toolkit"};
    app.require_subcommand(1);

    Options opts;
    const std::vector<std::string> nucleons{"proton", "neutron"};
    const std::vector<std::string> backends{"qubit", "photonic"};
    const std::vector<std::string> prep_levels{"native", "expand-cr", "expand-toffoli", "full"};
    const std::vector<std::string> count_levels{"native", "two-qubit-only"};
    const std::vector<std::string> formats{"circuit", "interferometer"};

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tolerance", opts.tolerance, "Numeric tolerance");
        cmd->add_option("--output", opts.output, "Write output to a file instead of stdout");
    };

    CLI::App* prepare = app.add_subcommand("prepare", "Prepare a nucleon state and dump it");
    prepare->add_option("--nucleon", opts.nucleon)->check(CLI::IsMember(nucleons));
    prepare->add_option("--backend", opts.backend)->check(CLI::IsMember(backends));
    CLI::Option* level_opt =
        prepare->add_option("--level", opts.level)->check(CLI::IsMember(prep_levels));
    add_common(prepare);

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    add_common(verify);

    CLI::App* moments = app.add_subcommand("moments", "Print the magnetic moments");
    add_common(moments);

    CLI::App* resources = app.add_subcommand("resources", "Print gate resource counts");
    resources->add_option("--nucleon", opts.nucleon)->check(CLI::IsMember(nucleons));
    resources->add_option("--level", opts.level)->check(CLI::IsMember(count_levels));
    add_common(resources);

    CLI::App* photonic_cmd =
        app.add_subcommand("photonic", "Run the linear-optical pipeline and dump it");
    add_common(photonic_cmd);

    CLI::App* export_cmd = app.add_subcommand("export", "Write a circuit or interferometer file");
    export_cmd->add_option("--format", opts.format)->check(CLI::IsMember(formats));
    export_cmd->add_option("--nucleon", opts.nucleon)->check(CLI::IsMember(nucleons));
    export_cmd->add_option("--level", opts.level)->check(CLI::IsMember(prep_levels));
    add_common(export_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return 2;
    }

    try {
        if (prepare->parsed()) return cmd_prepare(opts, level_opt->count() > 0);
        if (verify->parsed()) return cmd_verify(opts);
        if (moments->parsed()) return cmd_moments(opts);
        if (resources->parsed()) return cmd_resources(opts);
        if (photonic_cmd->parsed()) return cmd_photonic(opts);
        if (export_cmd->parsed()) return cmd_export(opts);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
