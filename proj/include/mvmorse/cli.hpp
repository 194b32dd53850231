#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mvmorse/morse.hpp"

namespace mvmorse {

enum class Command { homology, trajectories, verify, oracle };
enum class OutputFormat { text, json };

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct RunConfig {
    Command command = Command::homology;
    std::string complex_path;
    std::string decomposition_path;
    std::optional<Strategy> strategy;  // overrides the decomposition file
    std::optional<std::uint64_t> seed;
    OutputFormat output = OutputFormat::text;
    std::optional<int> degree;
    std::string beta, alpha;  // trajectories only
    std::string fields_out;   // write the fields actually used
};

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDecomposition = 3,
    kExitNotAcyclic = 4,
    kExitInternal = 5,
};

int cmd_homology(const RunConfig& cfg, std::ostream& out);
int cmd_trajectories(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_oracle(const RunConfig& cfg, std::ostream& out);

// Dispatches on cfg.command and maps library exceptions to exit codes,
// printing the message to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvmorse
