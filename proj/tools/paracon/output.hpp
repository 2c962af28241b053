#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace paracon::cli {

using json = nlohmann::json;

// Sidecar manifest for the files one command writes.
// Written as <output>.manifest.json next to every output file.
class Manifest {
public:
    explicit Manifest(std::string command);

    void input(const std::string& name, const std::string& path);
    json& config() { return config_; }
    void seed(std::uint64_t seed) { seed_ = seed; }

    // Writes content to path and records it as an output.
    void write(const std::filesystem::path& path, const std::string& content);

    // Writes one manifest beside each recorded output.
    void finish() const;

private:
    std::string command_;
    json inputs_ = json::object();
    json config_ = json::object();
    std::optional<std::uint64_t> seed_;
    std::vector<std::filesystem::path> outputs_;
};

void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace paracon::cli
