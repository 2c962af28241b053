#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "paracon/data.hpp"
#include "paracon/error.hpp"

namespace paracon {

struct LoadOptions {
    // Optional two-label alphabet per dataset tag. Tags without an entry have
    // their alphabet inferred from the gold labels seen (at most two).
    std::map<std::string, std::vector<std::string>> label_alphabets;
};

// buckets.jsonl: one bucket per line. Errors carry "<source>:<line>: ".
Dataset load_buckets(const std::filesystem::path& path, const LoadOptions& options = {}, Diagnostics* diag = nullptr);
Dataset read_buckets(std::istream& in, const std::string& source_name, const LoadOptions& options = {},
                     Diagnostics* diag = nullptr);

// predictions.jsonl joined against a loaded dataset.
RunTable load_predictions(const std::filesystem::path& path, const Dataset& dataset, Diagnostics* diag = nullptr);
RunTable read_predictions(std::istream& in, const std::string& source_name, const Dataset& dataset,
                          Diagnostics* diag = nullptr);

// Canonical single-line JSON (sorted keys, original item first).
std::string bucket_to_json_line(const ParaphraseBucket& bucket);
std::string prediction_to_json_line(const PredictionRecord& record);

void write_buckets(std::ostream& out, const Dataset& dataset);
void write_predictions(std::ostream& out, const RunTable& table);

// Canonical form of a buckets.jsonl text: every record re-emitted with sorted
// keys and the original item first. Used for round-trip checks.
std::string normalize_buckets_text(const std::string& text);

// Reads a whole file; throws InputError naming the path when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

} // namespace paracon
