#include "sdarcy/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace sdarcy {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& why)
{
    throw ConfigError(key + ": invalid value '" + value + "' (" + why + ")");
}

double to_double(const std::string& key, const std::string& value)
{
    const std::string v = trim(value);
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
        bad_value(key, value, "expected a finite number");
    }
    return out;
}

long to_integer(const std::string& key, const std::string& value)
{
    const std::string v = trim(value);
    long out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        bad_value(key, value, "expected an integer");
    }
    return out;
}

bool to_bool(const std::string& key, const std::string& value)
{
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    bad_value(key, value, "expected true or false");
}

using Setter = std::function<void(RunConfig&, const std::string& key, const std::string& value)>;

struct KeyInfo {
    std::string help;
    Setter set;
};

Setter param(double ModelParams::*member)
{
    return [member](RunConfig& c, const std::string& k, const std::string& v) { c.params.*member = to_double(k, v); };
}

Setter rect(Rect DomainSpec::*which, double Rect::*coord)
{
    return [which, coord](RunConfig& c, const std::string& k, const std::string& v) {
        c.domain.*which.*coord = to_double(k, v);
    };
}

Setter text(std::string RunConfig::*member)
{
    return [member](RunConfig& c, const std::string& k, const std::string& v) {
        const std::string t = trim(v);
        if (t.empty()) bad_value(k, v, "must not be empty");
        c.*member = t;
    };
}

Setter degree(int QuadratureOptions::*member)
{
    return [member](RunConfig& c, const std::string& k, const std::string& v) {
        c.solver.quad.*member = static_cast<int>(to_integer(k, v));
    };
}

const std::map<std::string, KeyInfo>& table()
{
    static const std::map<std::string, KeyInfo> t = [] {
        std::map<std::string, KeyInfo> m;
        m["geometry.fluid.x0"] = {"fluid rectangle, left", rect(&DomainSpec::fluid, &Rect::x0)};
        m["geometry.fluid.x1"] = {"fluid rectangle, right", rect(&DomainSpec::fluid, &Rect::x1)};
        m["geometry.fluid.y0"] = {"fluid rectangle, bottom", rect(&DomainSpec::fluid, &Rect::y0)};
        m["geometry.fluid.y1"] = {"fluid rectangle, top", rect(&DomainSpec::fluid, &Rect::y1)};
        m["geometry.porous.x0"] = {"porous rectangle, left", rect(&DomainSpec::porous, &Rect::x0)};
        m["geometry.porous.x1"] = {"porous rectangle, right", rect(&DomainSpec::porous, &Rect::x1)};
        m["geometry.porous.y0"] = {"porous rectangle, bottom", rect(&DomainSpec::porous, &Rect::y0)};
        m["geometry.porous.y1"] = {"porous rectangle, top", rect(&DomainSpec::porous, &Rect::y1)};
        m["geometry.pressure_side"] = {"porous side with the pressure condition (bottom|right|top|left)",
                                       [](RunConfig& c, const std::string& k, const std::string& v) {
                                           try {
                                               c.domain.dirichlet_porous_side = side_from_string(trim(v));
                                           } catch (const std::exception&) {
                                               bad_value(k, v, "expected bottom, right, top or left");
                                           }
                                       }};
        m["params.nu"] = {"kinematic viscosity", param(&ModelParams::nu)};
        m["params.k1"] = {"hydraulic conductivity, x", param(&ModelParams::k1)};
        m["params.k2"] = {"hydraulic conductivity, y", param(&ModelParams::k2)};
        m["params.g0"] = {"gravitational acceleration", param(&ModelParams::g0)};
        m["params.alpha"] = {"BJS constant", param(&ModelParams::alpha)};
        m["params.S0"] = {"mass storativity", param(&ModelParams::S0)};
        m["params.gamma"] = {"interface penalty", param(&ModelParams::gamma)};
        m["case"] = {"exact solution: example51 or zero", [](RunConfig& c, const std::string& k, const std::string& v) {
                         const std::string t = trim(v);
                         if (t == "example51") c.manufactured = CaseKind::Example51;
                         else if (t == "zero") c.manufactured = CaseKind::Zero;
                         else bad_value(k, v, "expected example51 or zero");
                     }};
        m["mesh.h_list"] = {"comma separated mesh sizes, halving (convergence, ritz)",
                            [](RunConfig& c, const std::string& k, const std::string& v) {
                                try {
                                    c.subdivisions = parse_mesh_list(v);
                                } catch (const ConfigError& e) {
                                    bad_value(k, v, e.what());
                                }
                            }};
        m["mesh.h"] = {"mesh size of a single run", [](RunConfig& c, const std::string& k, const std::string& v) {
                           try {
                               c.n = parse_mesh_size(v);
                           } catch (const ConfigError& e) {
                               bad_value(k, v, e.what());
                           }
                       }};
        m["time.tau"] = {"time step, a number or h^2", [](RunConfig& c, const std::string& k, const std::string& v) {
                             const std::string t = trim(v);
                             if (t == "h^2" || t == "h2") {
                                 c.time.kind = TimeRule::Kind::HSquared;
                             } else {
                                 c.time.kind = TimeRule::Kind::Fixed;
                                 c.time.tau = to_double(k, t);
                             }
                         }};
        m["time.T"] = {"final time", [](RunConfig& c, const std::string& k, const std::string& v) {
                           c.time.final_time = to_double(k, v);
                       }};
        m["quadrature.volume_degree"] = {"triangle rule degree (1-10)", degree(&QuadratureOptions::volume_degree)};
        m["quadrature.edge_degree"] = {"edge rule degree (1-10)", degree(&QuadratureOptions::edge_degree)};
        m["solver.tolerance"] = {"relative residual accepted from the direct solver",
                                 [](RunConfig& c, const std::string& k, const std::string& v) {
                                     c.solver.tolerance = to_double(k, v);
                                 }};
        m["solver.traction_correction"] = {"add the exact interface traction mismatch to the fluid load",
                                           [](RunConfig& c, const std::string& k, const std::string& v) {
                                               c.solver.interface_traction_correction = to_bool(k, v);
                                           }};
        m["jobs"] = {"concurrent mesh levels", [](RunConfig& c, const std::string& k, const std::string& v) {
                         const long j = to_integer(k, v);
                         if (j < 1) bad_value(k, v, "jobs >= 1");
                         c.jobs = static_cast<unsigned>(j);
                     }};
        m["output.dir"] = {"output directory", text(&RunConfig::output_dir)};
        m["output.csv"] = {"CSV file name", text(&RunConfig::csv_name)};
        m["output.vtk"] = {"VTK file name (run)", text(&RunConfig::vtk_name)};
        m["output.summary"] = {"JSON summary file name", text(&RunConfig::summary_name)};
        m["output.timing"] = {"write wall-clock seconds", [](RunConfig& c, const std::string& k, const std::string& v) {
                                  c.timing = to_bool(k, v);
                              }};
        return m;
    }();
    return t;
}

std::string join(const std::string& dir, const std::string& name)
{
    if (dir.empty() || dir == ".") return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

}  // namespace

const char* to_string(Mode mode)
{
    switch (mode) {
    case Mode::Convergence: return "convergence";
    case Mode::Run: return "run";
    case Mode::Ritz: return "ritz";
    }
    return "?";
}

const char* to_string(CaseKind kind) { return kind == CaseKind::Example51 ? "example51" : "zero"; }

RunConfig default_config()
{
    RunConfig c;
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') c.output_dir = dir;
    return c;
}

int parse_mesh_size(const std::string& text)
{
    const std::string t = trim(text);
    double h = 0.0;
    if (const auto slash = t.find('/'); slash != std::string::npos) {
        const double num = to_double("h", t.substr(0, slash));
        const double den = to_double("h", t.substr(slash + 1));
        if (den == 0.0) throw ConfigError("h: zero denominator in '" + t + "'");
        h = num / den;
    } else {
        h = to_double("h", t);
    }
    if (!(h > 0.0)) throw ConfigError("h must be positive, got '" + t + "'");
    const double n = 1.0 / h;
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-9 * rounded || rounded < 2) {
        throw ConfigError("h must be 1/n with an integer n >= 2, got '" + t + "'");
    }
    return static_cast<int>(rounded);
}

std::vector<int> parse_mesh_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_mesh_size(item));
    if (out.empty()) throw ConfigError("empty mesh list");
    return out;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value)
{
    const auto& t = table();
    const auto it = t.find(trim(key));
    if (it == t.end()) throw ConfigError("unknown configuration key '" + trim(key) + "'");
    it->second.set(config, it->first, value);
}

std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (!section.empty()) key = section + "." + key;
        out.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return out;
}

void apply_config_file(RunConfig& config, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    for (const auto& [key, value] : parse_settings(buf.str())) apply_setting(config, key, value);
}

const std::map<std::string, std::string>& keys()
{
    static const std::map<std::string, std::string> k = [] {
        std::map<std::string, std::string> m;
        for (const auto& [key, info] : table()) m[key] = info.help;
        return m;
    }();
    return k;
}

void RunConfig::validate() const
{
    try {
        domain.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("geometry: ") + e.what());
    }
    try {
        params.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("params: ") + e.what());
    }
    const auto check_degree = [](int d, const char* key) {
        if (d < 1 || d > 10) throw ConfigError(std::string(key) + ": degree must lie in 1..10");
    };
    check_degree(solver.quad.volume_degree, "quadrature.volume_degree");
    check_degree(solver.quad.edge_degree, "quadrature.edge_degree");
    if (!(solver.tolerance > 0.0 && solver.tolerance < 1.0)) {
        throw ConfigError("solver.tolerance: must lie in (0, 1)");
    }
    if (jobs < 1) throw ConfigError("jobs: must be >= 1");
    if (!(time.final_time > 0.0)) throw ConfigError("time.T: must be positive");

    const std::vector<int> levels = mode == Mode::Run ? std::vector<int>{n} : subdivisions;
    if (levels.empty()) throw ConfigError("mesh.h_list: at least one mesh size required");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k] < 2) throw ConfigError("mesh: h must be 1/n with n >= 2");
        if (k > 0 && levels[k] != 2 * levels[k - 1]) {
            throw ConfigError("mesh.h_list: each mesh size must be half the previous one");
        }
        if (mode != Mode::Ritz) {
            try {
                (void)time.grid(levels[k]);
            } catch (const std::exception& e) {
                throw ConfigError(std::string("time.tau: ") + e.what());
            }
        }
    }
}

StudyConfig RunConfig::study() const
{
    StudyConfig s;
    s.domain = domain;
    s.params = params;
    s.subdivisions = mode == Mode::Run ? std::vector<int>{n} : subdivisions;
    s.time = time;
    s.solver = solver;
    s.jobs = jobs;
    return s;
}

ManufacturedCase RunConfig::make_case() const
{
    return manufactured == CaseKind::Example51 ? example51_case(params) : zero_case();
}

std::string RunConfig::csv_path() const
{
    if (!csv_name.empty()) return join(output_dir, csv_name);
    return join(output_dir, mode == Mode::Ritz ? "ritz.csv" : "convergence.csv");
}

std::string RunConfig::vtk_path() const { return join(output_dir, vtk_name); }
std::string RunConfig::summary_path() const { return join(output_dir, summary_name); }

}  // namespace sdarcy
