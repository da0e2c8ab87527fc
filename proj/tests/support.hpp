#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

// Helpers shared by the CLI-facing tests: run the audit binary and capture
// exit code plus combined stdout/stderr, and a throwaway directory for --out
// files. CHISINI_CLI_PATH is injected by the build as the binary's location.

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CHISINI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string out;
    char buf[4096];
    std::size_t nread = 0;
    while ((nread = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, nread);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
public:
    explicit TempDir(const std::string& name)
        : m_path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(m_path);
        std::filesystem::create_directories(m_path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(m_path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return m_path; }

private:
    std::filesystem::path m_path;
};

} // namespace testsupport
