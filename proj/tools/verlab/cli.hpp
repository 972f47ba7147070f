#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace verlab::cli {

/// Outcome of one invocation. `payload` is null for --help.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json payload;
    std::string out; // what goes to stdout
    std::string err; // what goes to stderr
};

/// argv[0] is the program name. Exit codes: 0 success, 1 domain error, 2 usage error.
CommandResult run(const std::vector<std::string>& argv);

/// Human-readable rendering of a payload.
std::string render_text(const nlohmann::json& payload);

} // namespace verlab::cli
