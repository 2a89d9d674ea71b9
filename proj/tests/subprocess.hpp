#pragma once

// Minimal popen wrapper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

inline RunResult run_command(const std::string& command) {
    const std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testutil
