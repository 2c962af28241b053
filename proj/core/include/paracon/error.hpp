#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace paracon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent user input. The CLI maps this to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A condition the library guarantees was violated. The CLI maps this to exit code 2.
class InvariantError : public Error {
public:
    using Error::Error;
};

// Collects non-fatal warnings. Functions that can degrade gracefully take an
// optional pointer to one of these; passing nullptr drops the warnings.
class Diagnostics {
public:
    void warn(std::string message) { warnings_.push_back(std::move(message)); }

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool empty() const noexcept { return warnings_.empty(); }
    void clear() noexcept { warnings_.clear(); }

private:
    std::vector<std::string> warnings_;
};

inline void warn(Diagnostics* diag, std::string message)
{
    if (diag != nullptr) {
        diag->warn(std::move(message));
    }
}

} // namespace paracon
