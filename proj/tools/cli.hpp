#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracschro/quadrature.hpp"

namespace fracschro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitModule = 4;

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { kernel, scalar, propagate, verify };

struct InitSpec {
    enum class Kind { gaussian, mode };
    Kind kind = Kind::mode;
    /// Gaussian centre and width; empty means L / 2 and L / 16.
    std::optional<double> center;
    std::optional<double> width;
    int k = 1;
};

struct RunConfig {
    Command command = Command::verify;
    double alpha = 0.5;
    int n = 64;
    double L = 6.283185307179586;
    std::optional<std::string> potential_path;
    InitSpec init;
    std::vector<double> times{0.0, 1.0};
    bool times_given = false;
    double beta = 0.5;
    std::vector<double> kernel_t{0.5, 1.0, 2.0};
    QuadratureSpec quad;
    std::uint64_t seed = 7;
    std::optional<std::string> output_path;
    std::vector<std::string> suite;

    /// Throws UsageError for alpha outside (0, 1), a bad grid or non-finite times.
    void validate() const;
};

/// Comma-separated decimals such as "0,3.14159,-2e-3".
std::vector<double> parse_reals(const std::string& text);
/// "mode:K", "gaussian" or "gaussian:CENTER,WIDTH".
InitSpec parse_init(const std::string& text);

/// Parses argv (argv[0] is the program name) into a config. Returns the exit
/// code when parsing ends the run (help, usage error), otherwise nullopt.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config,
                              std::ostream& out, std::ostream& err);

/// Runs a validated config. 0 when every check of the command passes, 1 when
/// one fails, 3 on file errors and 4 on errors raised by the library.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracschro::cli
