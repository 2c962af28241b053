#pragma once

// Shared helpers for the newline-delimited JSON readers. Private to the library.

#include <cmath>
#include <functional>
#include <istream>
#include <optional>
#include <string>

#include <json.hpp>

#include "paracon/error.hpp"

namespace paracon::detail {

using json = nlohmann::json;

class LineError : public InputError {
public:
    using InputError::InputError;
};

[[noreturn]] inline void fail(const std::string& message) { throw LineError(message); }

// Calls fn(object, line_number) for every non-blank line. Any InputError thrown
// by fn is rethrown with "<source>:<line>: " prepended. Returns the record count.
inline std::size_t for_each_record(std::istream& in, const std::string& source,
                                   const std::function<void(const json&, std::size_t)>& fn)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        json object;
        try {
            object = json::parse(line);
        } catch (const json::parse_error& e) {
            throw InputError(source + ":" + std::to_string(line_no) + ": malformed JSON: " + e.what());
        }
        try {
            if (!object.is_object()) {
                fail("expected a JSON object");
            }
            fn(object, line_no);
        } catch (const InputError& e) {
            throw InputError(source + ":" + std::to_string(line_no) + ": " + e.what());
        } catch (const json::exception& e) {
            throw InputError(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
        ++records;
    }
    return records;
}

inline const json& require(const json& object, const char* key)
{
    auto it = object.find(key);
    if (it == object.end()) {
        fail(std::string("missing required field '") + key + "'");
    }
    return *it;
}

inline std::string require_string(const json& object, const char* key)
{
    const json& v = require(object, key);
    if (!v.is_string()) {
        fail(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

inline std::optional<std::string> optional_string(const json& object, const char* key)
{
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        fail(std::string("field '") + key + "' must be a string");
    }
    return it->get<std::string>();
}

inline double as_finite(const json& v, const char* key)
{
    if (!v.is_number()) {
        fail(std::string("field '") + key + "' must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(std::string("field '") + key + "' must be finite");
    }
    return x;
}

inline double require_number(const json& object, const char* key) { return as_finite(require(object, key), key); }

inline std::optional<double> optional_number(const json& object, const char* key)
{
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
        return std::nullopt;
    }
    return as_finite(*it, key);
}

inline double require_probability(const json& object, const char* key)
{
    const double x = require_number(object, key);
    if (x < 0.0 || x > 1.0) {
        fail(std::string("field '") + key + "' outside [0,1]: " + std::to_string(x));
    }
    return x;
}

} // namespace paracon::detail
