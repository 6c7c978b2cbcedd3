#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "boole/identity_verifier.hpp"
#include "boole/rational.hpp"

namespace boole::cli {

enum class Command { Numbers, Triangle, Series, Verify, All };
enum class Format { Pretty, Json, Csv };

/// Exit codes: success / all identities passed, an identity failed, bad usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    Command command = Command::All;
    int n_max = 16;
    int N_max = 8;
    int k_max = 8;
    int i_max = 4;
    int order = 16;
    int r = 1;
    /// Empty means symbolic λ.
    std::optional<Rat> lambda;
    Format format = Format::Pretty;
    std::optional<std::string> out;

    // numbers
    std::string family = "boole";
    Rat x = 0;
    // series
    std::string function = "F";
    // verify: empty runs every family
    std::set<IdentityId> identities;
    /// Set when --n-max was given explicitly; verify uses 12 otherwise.
    bool n_max_given = false;
};

/// Throws UsageError on inconsistent settings (λ = 0, bounds, order too small for ODE).
void validate(const CliConfig& config);

/// Writes the requested artifact to `out`. Returns kExitIdentityFailure when a
/// verified identity fails, otherwise kExitOk.
int run(const CliConfig& config, std::ostream& out);

/// Parses argv-style arguments (without the program name), runs, and maps
/// every failure onto the exit codes above. Diagnostics go to `err`.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boole::cli
