#pragma once

#include <optional>
#include <string>
#include <vector>

namespace paracon {

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

// x * 100 with one decimal ("80.0"); "—" when absent.
std::string format_percent(std::optional<double> x);

// Joins cells with commas, quoting cells that contain a comma, quote or newline.
std::string csv_row(const std::vector<std::string>& cells);

} // namespace paracon
