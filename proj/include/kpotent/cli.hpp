#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kpotent {

/// Flags shared by the subcommands. Empty params mean all -1.
struct RunConfig {
    std::string field = "q";
    std::string algebra = "quat";
    std::string params;
    std::string format = "text";
    bool envelope = false;

    std::string coords;
    std::uint64_t max_k = 64;
    bool matrices = false;

    std::string rep;

    std::string kind;
    std::uint64_t k = 0;
    std::string direction;

    std::string mode = "exhaustive";
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;

    std::uint64_t cases = 64;
};

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 for a library error, 2 for a usage error. Errors go to
/// `err` as one line `error[<category>]: <message>`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kpotent
