#pragma once

// Verification harness behind the ncqm-lab command line: run configuration,
// property suites and JSON reports.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncqm/coadjoint.hpp"
#include "ncqm/group.hpp"
#include "ncqm/representation.hpp"

namespace ncqm::lab {

using nlohmann::json;

inline constexpr const char* kSchema = "ncqm-lab/1";

inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPrecondition = 3;

// Malformed user input (config file, vector literal, flag value).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double associativity = 1e-12;
    double homomorphism = 1e-9;
    double unitarity = 1e-10;
    double commutator = 1e-12;
    double weyl_phase = 1e-9;
    double finite_diff = 1e-6;
};

struct SweepSizes {
    int group_trials = 1000;
    int orbit_trajectories = 100;
    int trajectory_steps = 10;
    int homomorphism_trials = 200;
    int gauge_members = 10;
    int torus_packets = 10;
    int weyl_trials = 50;
    int generator_points = 10;
};

struct RunConfig {
    ExtensionConstants constants = ExtensionConstants::general();
    // Set when constants came from a flag or the config file. The torus
    // suite falls back to alpha = beta = gamma = 1 otherwise.
    bool constants_explicit = false;
    std::uint64_t seed = 42;
    Tolerances tol;
    SweepSizes sizes;
    std::optional<double> gauge_l;
    std::optional<double> gauge_m;
    std::string out;

    // Throws ParseError for non-positive tolerances or sweep sizes; constants
    // are checked by the suites (a precondition, not a parse error).
    void validate() const;

    ExtensionConstants torus_constants() const {
        return constants_explicit ? constants : ExtensionConstants::unit();
    }
};

// Fields absent from `j` keep their value from `base`.
RunConfig config_from_json(const json& j, RunConfig base = {});
json to_json(const RunConfig& cfg);

enum class Suite { group, reps, gauge, torus, all };
Suite suite_from_string(std::string_view name);
std::string_view to_string(Suite s);

// "a,b,c,..." or whitespace separated; exactly seven finite numbers.
DualVector parse_dual_vector(std::string_view text);

struct CommandResult {
    json report;
    int exit_code = kExitPass;
};

CommandResult run_classify(const DualVector& f, const RunConfig& cfg);
CommandResult run_verify(Suite suite, const RunConfig& cfg);
CommandResult run_gauge_scan(const std::vector<double>& m_values, double B, const RunConfig& cfg);
// One report per family; all nine presets when `params` is empty.
CommandResult run_torus(const std::optional<RepCase>& params, const RunConfig& cfg);
// Summarises a saved verify report.
CommandResult run_report(const json& saved);

// Preset parameters used by the suites.
std::vector<RepCase> rep_presets();
std::vector<RepCase> torus_presets();

// Deterministic per-check seed derived from the run seed.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream);

// Parameters of a family as a JSON object (used for replay records).
json describe(const RepCase& params);
json describe(const OrbitClass& c);

}  // namespace ncqm::lab
