#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paracon/probe.hpp"

namespace paracon {

// Adversarial filtering with an ensemble of linear probes. Defaults are the
// values used to build the paraphrase benchmark (n=64, m=5000, k=500, tau=0.75).
struct AfliteConfig {
    std::size_t n_ensemble = 64;
    std::size_t m_train = 5000;
    std::size_t k_remove = 500;
    double tau = 0.75;
    std::uint64_t seed = 0;
    ProbeConfig probe;
    std::size_t threads = 1; // ensemble members trained concurrently; 0 = hardware concurrency
};

struct FilterResult {
    std::vector<std::string> easy_ids; // in removal order
    std::vector<std::string> hard_ids; // in input order
    // Last score each example received; nullopt if it was never held out.
    std::map<std::string, std::optional<double>> final_scores;
    std::size_t iterations = 0;

    bool operator==(const FilterResult&) const = default;
};

// Each iteration, every member trains on an independent random m_train-subset
// of the remaining examples and votes on the rest. An example's score is its
// fraction of correct votes. Up to k_remove examples with score > tau move to
// the easy partition (score descending, id ascending). The loop stops after
// an iteration that removes fewer than k_remove examples, or once no more than
// m_train examples remain.
FilterResult aflite_filter(std::span<const EmbeddedExample> data, const AfliteConfig& config);

// embeddings.jsonl: {example_id, label, vector:[...]}
std::vector<EmbeddedExample> load_embeddings(const std::filesystem::path& path);
std::vector<EmbeddedExample> read_embeddings(std::istream& in, const std::string& source_name);

// {"easy": [...], "hard": [...], "scores": {id: score|null}, "iterations": n}
std::string filter_result_to_json(const FilterResult& result);

} // namespace paracon
