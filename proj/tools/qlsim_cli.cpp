#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlsim/io.hpp"
#include "qlsim/verify.hpp"

namespace {

using namespace qlsim;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

void emit(const json& doc, const std::string& output_path) {
    const std::string text = doc.dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text_file(output_path, text);
}

void emit_text(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text_file(output_path, text);
}

Vec3 parse_r0(const std::string& spec) {
    Vec3 r;
    std::istringstream in(spec);
    char comma = 0;
    if (!(in >> r[0] >> comma >> r[1] >> comma >> r[2]))
        throw UsageError("--r0 expects three comma-separated numbers");
    return r;
}

json axis_json(const GksMatrix& c, double tol) {
    if (auto axis = damping_axis_from_gks(c, tol)) return io::to_json(*axis);
    return nullptr;
}

int cmd_extract_gks(const std::string& input, const std::string& output,
                    double tol) {
    const GksForm g = io::generator_from_json(io::load_json_file(input));
    const AffineGenerator a = affine_from_gks(g);
    const bool psd = validate_gks(g.c) == GksClassification::ValidMarkovian;
    json doc{{"schema_version", io::kSchemaVersion},
             {"gks", io::gks_to_json(g)},
             {"affine", io::affine_to_json(a)},
             {"unital", is_unital(a)},
             {"psd", psd ? "valid-markovian" : "not-psd"},
             {"verdict", psd ? "Markovian generator"
                             : "not a Markovian generator (GKS matrix not PSD)"},
             {"rank", g.c.rank(tol)},
             {"axis", axis_json(g.c, tol)}};
    emit(doc, output);
    return psd ? kExitOk : kExitVerifyFailed;
}

json trajectory_doc(const Trajectory& traj, const std::string& format) {
    return format == "csv" ? json(io::trajectory_to_csv(traj))
                           : io::trajectory_to_json(traj);
}

int cmd_simulate(const std::string& input, const std::string& output, double dt,
                 std::size_t steps, const std::string& r0_spec,
                 const std::string& format) {
    const json in = io::load_json_file(input);
    const BlochVector r0{parse_r0(r0_spec)};

    if (in.contains("euler")) {
        // processor stepping: one closed-form run per step with epsilon = dt
        const io::ProcessorSpec spec = io::processor_spec_from_json(in);
        const CMat2 u2 = su2_from_euler(spec.euler);
        const ProgramState step_program(dt, spec.program.chi);
        Trajectory traj;
        traj.step = dt;
        DensityMatrix rho = density_from_bloch(r0);
        traj.times.push_back(0.0);
        traj.states.push_back(r0);
        for (std::size_t k = 1; k <= steps; ++k) {
            rho = processor_step_closed(step_program, u2, rho);
            traj.times.push_back(static_cast<double>(k) * dt);
            traj.states.push_back(bloch_from_density(rho));
        }
        if (format == "csv") {
            emit_text(io::trajectory_to_csv(traj), output);
        } else {
            const GksForm induced =
                gks_from_affine(generator_from_unitary(u2));
            emit(json{{"schema_version", io::kSchemaVersion},
                      {"mode", "processor"},
                      {"induced", io::gks_to_json(induced)},
                      {"trajectory", io::trajectory_to_json(traj)}},
                 output);
        }
        return kExitOk;
    }

    const GksForm g = io::generator_from_json(in);
    const Trajectory traj =
        euler_trajectory(affine_from_gks(g), r0, dt, steps);
    if (format == "csv")
        emit_text(io::trajectory_to_csv(traj), output);
    else
        emit(json{{"schema_version", io::kSchemaVersion},
                  {"mode", "generator"},
                  {"trajectory", io::trajectory_to_json(traj)}},
             output);
    return kExitOk;
}

int cmd_classify(const std::string& input, const std::string& output,
                 double tol) {
    const io::ProcessorSpec spec =
        io::processor_spec_from_json(io::load_json_file(input));
    const CMat2 u2 = su2_from_euler(spec.euler);
    const HamiltonianVec h = scheme_hamiltonian(spec.euler);
    const GksMatrix c = scheme_gks(spec.euler);
    const cxd tr = u2.trace();
    const bool no_hamiltonian = h.norm() <= tol;
    const bool no_damping = c.mat().max_abs() <= tol;
    const auto axis = damping_axis_from_gks(c, tol);

    std::string label;
    if (no_hamiltonian && no_damping)
        label = "identity channel";
    else if (no_damping)
        label = "unitary generator only";
    else if (no_hamiltonian)
        label = "pure phase damping";
    else
        label = "phase damping with coherent part";

    json doc{{"schema_version", io::kSchemaVersion},
             {"euler",
              {{"theta", spec.euler.theta},
               {"phi", spec.euler.phi},
               {"psi", spec.euler.psi}}},
             {"trace_u2", io::to_json(tr)},
             {"abs_trace_u2", std::abs(tr)},
             {"hamiltonian", io::to_json(h)},
             {"hamiltonian_matrix", io::to_json(scheme_hamiltonian_matrix(spec.euler))},
             {"hamiltonian_vanishes", no_hamiltonian},
             {"gks", io::to_json(c.mat())},
             {"rank", c.rank(tol)},
             {"label", label}};
    if (axis) {
        doc["axis"] = io::to_json(*axis);
        doc["axis_polar"] = {{"theta", std::acos(std::clamp((*axis)[2], -1.0, 1.0))},
                             {"phi", std::atan2((*axis)[1], (*axis)[0])}};
    } else {
        doc["axis"] = nullptr;
    }
    emit(doc, output);
    return kExitOk;
}

int cmd_verify(const std::string& output, std::uint64_t seed, std::size_t cases,
               bool inject_perturbation) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.cases = cases;
    if (inject_perturbation) opt.rank1_perturbation = 1e-3;
    const auto results = run_verification(opt);
    json checks = json::array();
    for (const auto& r : results)
        checks.push_back({{"name", r.name},
                          {"pass", r.pass},
                          {"max_error", r.max_error},
                          {"threshold", r.threshold},
                          {"cases", r.cases}});
    json doc{{"schema_version", io::kSchemaVersion},
             {"seed", seed},
             {"cases", cases},
             {"perturbation_injected", inject_perturbation},
             {"all_passed", all_passed(results)},
             {"checks", checks}};
    emit(doc, output);
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_teleport_sim(const std::string& input, const std::string& output,
                     double dt_override, std::size_t steps,
                     const std::string& r0_spec, const std::string& format) {
    const json in = io::load_json_file(input);
    BellProgram prog = io::bell_program_from_json(in);
    if (dt_override >= 0.0) prog = BellProgram(dt_override, prog.alpha);
    const BlochVector r0{parse_r0(r0_spec)};

    Trajectory traj;
    traj.step = prog.epsilon;
    DensityMatrix rho = density_from_bloch(r0);
    traj.times.push_back(0.0);
    traj.states.push_back(r0);
    for (std::size_t k = 1; k <= steps; ++k) {
        rho = teleport_channel_closed(prog, rho);
        traj.times.push_back(static_cast<double>(k) * prog.epsilon);
        traj.states.push_back(bloch_from_density(rho));
    }
    if (format == "csv") {
        emit_text(io::trajectory_to_csv(traj), output);
    } else {
        emit(json{{"schema_version", io::kSchemaVersion},
                  {"mode", "teleport"},
                  {"program", io::bell_program_to_json(prog)},
                  {"gks", io::to_json(teleport_gks(prog.alpha).mat())},
                  {"trajectory", io::trajectory_to_json(traj)}},
             output);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-qubit Markovian generator simulator"};
    app.require_subcommand(1);

    std::string input, output, r0_spec = "0,0,1", format = "json";
    double dt = 0.01;
    double tolerance = 1e-10;
    std::size_t steps = 100, cases = 1000;
    std::uint64_t seed = 20240901;
    bool inject_perturbation = false;

    auto* extract = app.add_subcommand(
        "extract-gks", "Report GKS and affine forms of a generator file");
    extract->add_option("--input", input, "generator document")->required();
    extract->add_option("--output", output, "write report here (default stdout)");
    extract->add_option("--tolerance", tolerance, "rank/axis tolerance");

    auto* simulate = app.add_subcommand(
        "simulate", "Euler trajectory from a generator or processor spec");
    simulate->add_option("--input", input)->required();
    simulate->add_option("--output", output);
    simulate->add_option("--dt", dt)->check(CLI::Range(1e-12, 1.0));
    simulate->add_option("--steps", steps)->check(CLI::PositiveNumber);
    simulate->add_option("--r0", r0_spec, "initial Bloch vector x,y,z");
    simulate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* classify = app.add_subcommand(
        "classify", "Characterize the generator induced by a processor spec");
    classify->add_option("--input", input)->required();
    classify->add_option("--output", output);
    classify->add_option("--tolerance", tolerance);

    auto* verify = app.add_subcommand(
        "verify", "Run the seeded oracle cross-check suite");
    verify->add_option("--output", output);
    verify->add_option("--seed", seed);
    verify->add_option("--cases", cases)->check(CLI::PositiveNumber);
    verify->add_flag("--inject-perturbation", inject_perturbation,
                     "sanity fixture: perturb C(0,0) by 1e-3 in the rank check");

    auto* teleport = app.add_subcommand(
        "teleport-sim", "Iterate the teleportation-controlled Pauli channel");
    teleport->add_option("--input", input)->required();
    double dt_override = -1.0;
    teleport->add_option("--dt", dt_override,
                         "override the program epsilon used per step");
    teleport->add_option("--output", output);
    teleport->add_option("--steps", steps)->check(CLI::PositiveNumber);
    teleport->add_option("--r0", r0_spec);
    teleport->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) return cmd_extract_gks(input, output, tolerance);
        if (simulate->parsed())
            return cmd_simulate(input, output, dt, steps, r0_spec, format);
        if (classify->parsed()) return cmd_classify(input, output, tolerance);
        if (verify->parsed())
            return cmd_verify(output, seed, cases, inject_perturbation);
        if (teleport->parsed())
            return cmd_teleport_sim(input, output, dt_override, steps, r0_spec,
                                    format);
    } catch (const StepTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
