#include "sdarcy/cli.hpp"

#include <filesystem>
#include <fstream>
#include <thread>

#include "CLI11.hpp"
#include "sdarcy/config.hpp"
#include "sdarcy/output.hpp"

namespace sdarcy {

namespace {

struct Flags {
    std::string config_file;
    std::vector<std::string> settings;
    std::string h_list;
    std::string h;
    std::string tau;
    std::string final_time;
    std::string gamma;
    std::string case_name;
    std::string output_dir;
    unsigned jobs{0};
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string one_line(std::string s)
{
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

void add_common_options(CLI::App* sub, Flags& f, bool single_mesh)
{
    sub->add_option("-c,--config", f.config_file, "configuration file (key = value lines)");
    sub->add_option("-s,--set", f.settings, "override one key, KEY=VALUE (repeatable)");
    if (single_mesh) {
        // "-h" would clash with the mesh size.
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--h", f.h, "mesh size, e.g. 1/8");
    } else {
        sub->add_option("--h-list", f.h_list, "mesh sizes, e.g. 1/4,1/8,1/16");
    }
    sub->add_option("--tau", f.tau, "time step or h^2");
    sub->add_option("--T", f.final_time, "final time");
    sub->add_option("--gamma", f.gamma, "interface penalty");
    sub->add_option("--case", f.case_name, "example51 or zero");
    sub->add_option("-o,--output-dir", f.output_dir, "output directory");
    sub->add_option("-j,--jobs", f.jobs, "concurrent mesh levels (default: available cores)");
}

RunConfig build_config(Mode mode, const Flags& f)
{
    RunConfig c = default_config();
    c.mode = mode;
    c.jobs = std::max(1u, std::thread::hardware_concurrency());
    if (!f.config_file.empty()) apply_config_file(c, f.config_file);
    for (const auto& s : f.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + s + "'");
        apply_setting(c, s.substr(0, eq), s.substr(eq + 1));
    }
    const std::pair<const std::string*, const char*> direct[] = {
        {&f.h_list, "mesh.h_list"}, {&f.h, "mesh.h"},         {&f.tau, "time.tau"},          {&f.final_time, "time.T"},
        {&f.gamma, "params.gamma"}, {&f.case_name, "case"}, {&f.output_dir, "output.dir"},
    };
    for (const auto& [value, key] : direct) {
        if (!value->empty()) apply_setting(c, key, *value);
    }
    if (f.jobs > 0) c.jobs = f.jobs;
    c.validate();
    return c;
}

std::ofstream open_output(const std::string& path)
{
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void check_written(std::ofstream& out, const std::string& path)
{
    out.close();
    if (out.fail()) throw IoError("write to '" + path + "' failed");
}

int cmd_convergence(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const std::string path = c.csv_path();
    std::ofstream csv = open_output(path);
    const StudyConfig study = c.study();
    const ManufacturedCase mcase = c.make_case();
    try {
        const ConvergenceReport report = run_convergence_study(study, mcase);
        write_convergence_csv(csv, report, c.timing);
        check_written(csv, path);
        write_convergence_csv(out, report, c.timing);
        return kExitOk;
    } catch (const StudyFailure& e) {
        write_convergence_csv(csv, e.partial(), c.timing);
        write_failure_line(csv, e.h(), e.what());
        err << "error: solver: " << one_line(e.what()) << '\n';
        return kExitSolver;
    }
}

int cmd_run(const RunConfig& c, std::ostream& out)
{
    const std::string vtk_path = c.vtk_path();
    const std::string summary_path = c.summary_path();
    std::ofstream vtk = open_output(vtk_path);
    std::ofstream summary = open_output(summary_path);

    const LevelResult level = run_level(c.study(), c.n, c.make_case());
    const Spaces spaces = build_spaces(level.mesh);
    write_vtk(vtk, level.mesh, spaces, level.state);
    check_written(vtk, vtk_path);
    const std::string json = run_summary_json(level.row, level.state.t, to_string(c.manufactured),
                                              c.manufactured != CaseKind::Zero);
    summary << json;
    check_written(summary, summary_path);
    out << json;
    return kExitOk;
}

int cmd_ritz(const RunConfig& c, std::ostream& out)
{
    const std::string path = c.csv_path();
    std::ofstream csv = open_output(path);
    const auto rows = run_ritz_study(c.study(), c.make_case(), 0.0);
    write_ritz_csv(csv, rows);
    check_written(csv, path);
    write_ritz_csv(out, rows);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coupled Stokes-Darcy solver with a decoupled time-stepping scheme"};
    app.require_subcommand(0, 1);
    bool list_keys = false;
    app.add_flag("--list-keys", list_keys, "print every configuration key and exit");

    Flags flags;
    CLI::App* convergence = app.add_subcommand("convergence", "error table over a sequence of halving mesh sizes");
    CLI::App* run = app.add_subcommand("run", "single transient solve with VTK and JSON output");
    CLI::App* ritz = app.add_subcommand("ritz", "steady coupled projection errors at t = 0");
    add_common_options(convergence, flags, false);
    add_common_options(run, flags, true);
    add_common_options(ritz, flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: arguments: " << one_line(e.what()) << '\n';
        return kExitConfig;
    }

    if (list_keys) {
        for (const auto& [key, help] : keys()) out << key << "  " << help << '\n';
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        err << "error: arguments: a subcommand is required (convergence, run or ritz)\n";
        return kExitConfig;
    }

    try {
        if (*convergence) return cmd_convergence(build_config(Mode::Convergence, flags), out, err);
        if (*run) return cmd_run(build_config(Mode::Run, flags), out);
        return cmd_ritz(build_config(Mode::Ritz, flags), out);
    } catch (const ConfigError& e) {
        err << "error: config: " << one_line(e.what()) << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "error: io: " << one_line(e.what()) << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: solver: " << one_line(e.what()) << '\n';
        return kExitSolver;
    }
}

}  // namespace sdarcy
