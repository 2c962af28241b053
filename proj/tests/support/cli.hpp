#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace cli {

namespace fs = std::filesystem;

inline std::string quote(const std::string& s)
{
    std::string out = "'";
    for (char c : s) {
        out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
}

// Runs the tool with the given argument string; returns its exit status.
// stderr goes to <work>/stderr.txt.
inline int run(const fs::path& tool, const std::string& args, const fs::path& work)
{
    const std::string cmd =
        quote(tool.string()) + " " + args + " > " + quote((work / "stdout.txt").string()) + " 2> " +
        quote((work / "stderr.txt").string());
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) {
        return -1;
    }
    return WEXITSTATUS(status);
}

inline std::string read(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

// Fresh, empty directory.
inline fs::path scratch(const fs::path& path)
{
    fs::remove_all(path);
    fs::create_directories(path);
    return path;
}

} // namespace cli
