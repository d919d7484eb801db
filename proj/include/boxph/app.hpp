#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxph/minibox.hpp"

namespace boxph {

enum class ComplexKind { Minibox, AlphaFlag, Cech };

/// Bad flags, unreadable input or incompatible options (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string input;           // point file; empty when `generate` is set
    std::string generate;        // uniform | s1s2 | paper3 | paper8
    std::vector<std::size_t> n;  // sizes for generators, expected-edges and bench
    std::size_t dim = 0;         // 0: infer from input (generators default to 2)
    MiniboxStrategy strategy = MiniboxStrategy::Auto;
    ComplexKind complex = ComplexKind::Minibox;
    int degree = 1;
    std::uint64_t seed = 0;
    std::optional<double> epsilon;  // perturbation size; default scales with the extent
    std::size_t trials = 5;
    std::string output;  // empty: stdout
    bool diameter = false;  // report diameters instead of radii
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Each command writes its result to `out` and progress lines to `log`, and
/// returns an exit code. Errors are thrown as UsageError (or another
/// std::exception) before anything is written to `out`.
int cmd_edges(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_persistence(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_filtration(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_expected_edges(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_verify_facts(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Parses argv, runs the command and maps errors to exit codes. Output goes
/// to --output (written only on success) or stdout.
int run_cli(int argc, char** argv);

}  // namespace boxph
