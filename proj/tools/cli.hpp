#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torcover/ring.hpp"

namespace torcover::cli {

inline const std::vector<std::string> kCommands = {"info",           "flag",             "homology", "torus",
                                                   "cover-homology", "cover-cohomology", "euler",    "cd",
                                                   "subdivide",      "generate"};

struct RunConfig {
    std::string command;
    RingSpec ring;
    /// Exactly one of these is set. "-" reads standard input.
    std::optional<std::string> input_path;
    std::optional<std::string> generator;
    bool json = false;
    /// subdivide: subcomplex L of the input (empty when absent).
    std::optional<std::string> sub_path;
    /// subdivide, generate: also write the resulting complex here.
    std::optional<std::string> output_path;
};

/// Runs one command. Exit status: 0 success, 1 bad input (parse errors,
/// unknown ring, unreadable file), 2 violated precondition.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; argument errors exit with status 1.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace torcover::cli
