#include "output.hpp"

#include <fstream>

#include "paracon/error.hpp"

#ifndef PARACON_VERSION
#define PARACON_VERSION "unknown"
#endif

namespace paracon::cli {

Manifest::Manifest(std::string command) : command_(std::move(command)) {}

void Manifest::input(const std::string& name, const std::string& path)
{
    inputs_[name] = path;
}

void Manifest::write(const std::filesystem::path& path, const std::string& content)
{
    write_file(path, content);
    outputs_.push_back(path);
}

void Manifest::finish() const
{
    json outputs = json::array();
    for (const auto& p : outputs_) {
        outputs.push_back(p.string());
    }
    json doc = {{"command", command_},
                {"version", PARACON_VERSION},
                {"inputs", inputs_},
                {"config", config_},
                {"seed", seed_ ? json(*seed_) : json(nullptr)},
                {"outputs", outputs}};
    const std::string text = doc.dump(2) + "\n";
    for (const auto& p : outputs_) {
        write_file(p.string() + ".manifest.json", text);
    }
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

} // namespace paracon::cli
