#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdarcy/verification.hpp"

namespace sdarcy {

/// Bad key, bad value, or a violated range. The message names the key.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Mode { Convergence, Run, Ritz };
enum class CaseKind { Example51, Zero };

const char* to_string(Mode mode);
const char* to_string(CaseKind kind);

struct RunConfig {
    Mode mode{Mode::Convergence};
    DomainSpec domain;
    ModelParams params;
    CaseKind manufactured{CaseKind::Example51};
    std::vector<int> subdivisions{4, 8, 16, 32};  // convergence and ritz
    int n{8};                                     // run
    TimeRule time;
    SolverOptions solver;
    unsigned jobs{1};

    std::string output_dir{"."};
    std::string csv_name{};  // empty: mode dependent default
    std::string vtk_name{"fields.vtk"};
    std::string summary_name{"summary.json"};
    bool timing{true};  // false writes an empty wall_s column

    /// Throws ConfigError naming the violated invariant.
    void validate() const;
    [[nodiscard]] StudyConfig study() const;
    [[nodiscard]] ManufacturedCase make_case() const;
    [[nodiscard]] std::string csv_path() const;
    [[nodiscard]] std::string vtk_path() const;
    [[nodiscard]] std::string summary_path() const;
};

/// Environment variable that replaces the default output directory.
inline constexpr const char* kOutputDirEnv = "SDARCY_OUTPUT_DIR";

/// Defaults of the built-in manufactured case; the output directory comes
/// from the environment when set.
RunConfig default_config();

/// Mesh size written as "1/8" or "0.125". h must be the reciprocal of an
/// integer n >= 2; returns n.
int parse_mesh_size(const std::string& text);
std::vector<int> parse_mesh_list(const std::string& text);

/// One `key = value` assignment. Keys are dotted; see keys().
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Parses `key = value` lines. `#` starts a comment, `[section]` prefixes
/// the keys that follow it with `section.`.
std::vector<std::pair<std::string, std::string>> parse_settings(const std::string& text);

/// Applies the settings of a file in order. Throws ConfigError if the file
/// cannot be read.
void apply_config_file(RunConfig& config, const std::string& path);

/// Every accepted key with a one-line description.
const std::map<std::string, std::string>& keys();

}  // namespace sdarcy
