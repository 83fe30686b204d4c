#pragma once

// Shared helpers for the tests that drive the built CLI as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;  // -1 when the process did not exit normally
    std::string output;  // captured stdout
};

// Runs `command` through the shell and captures stdout. Append "2>&1" to the
// command when stderr matters; by default it passes through to the test log.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, n);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

// Writes `content` to a fresh file under the system temp directory and
// returns its path. Unique per process and call.
inline std::filesystem::path write_temp_file(const std::string& stem,
                                             const std::string& content) {
    static int counter = 0;
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() /
        (stem + "-" + std::to_string(::getpid()) + "-" +
         std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << content;
    return path;
}

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (const char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

}  // namespace testsupport
