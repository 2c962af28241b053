#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paracon/error.hpp"

namespace paracon::cli {

struct EvalArgs {
    std::string buckets;
    std::string predictions;
    std::vector<std::string> runs; // empty: every run in the predictions file
    std::string weighting = "uniform";
    std::string estimator = "plugin";
    std::optional<std::string> reference;
    std::vector<std::string> test_accuracy; // "VALUE" or "RUN=VALUE"
    std::string out;
    std::optional<std::string> table; // stdout when unset
};

struct SweepArgs {
    std::string manifest;
    std::string out;
};

struct CurvesArgs {
    double acc_min = 0.5;
    double acc_max = 1.0;
    std::size_t acc_steps = 51;
    std::vector<double> fractions{1.0, 0.75, 0.5, 0.25, 0.0};
    std::string out;
};

struct AfliteArgs {
    std::string embeddings;
    std::size_t n_ensemble = 64;
    std::size_t m_train = 5000;
    std::size_t k_remove = 500;
    double tau = 0.75;
    std::uint64_t seed = 0;
    double learning_rate = 0.5;
    std::size_t epochs = 100;
    double l2 = 1e-4;
    std::size_t threads = 1;
    std::string out;
};

struct StratifyArgs {
    std::string candidates;
    std::size_t total = 125;
    std::optional<std::size_t> quota;
    std::uint64_t seed = 0;
    std::string out;
};

struct DiversityArgs {
    std::string pairs;
    std::size_t depth = 3;
    std::string out;
};

struct ArtifactArgs {
    std::string buckets;
    std::vector<std::string> predictions;
    std::string partial_run = "partial";
    std::string full_run = "full";
    std::string weighting = "uniform";
    std::string estimator = "plugin";
    std::optional<std::string> reference;
    std::optional<std::string> reference_likely;
    std::optional<std::string> reference_unlikely;
    bool allow_missing = false;
    std::string out_csv;
    std::optional<std::string> out_json;
};

struct SynthArgs {
    std::string kind = "pure";
    std::size_t n_buckets = 10;
    std::size_t bucket_size = 5;
    double accuracy = 0.8;
    double spread = 0.0;
    std::uint64_t seed = 0;
    std::string run_id = "synthetic";
    std::string out_buckets;
    std::string out_predictions;
};

// Each command prints warnings to stderr and throws paracon::Error on failure.
void run_eval(const EvalArgs& args);
void run_sweep(const SweepArgs& args);
void run_curves(const CurvesArgs& args);
void run_aflite(const AfliteArgs& args);
void run_stratify(const StratifyArgs& args);
void run_diversity(const DiversityArgs& args);
void run_artifact(const ArtifactArgs& args);
void run_synth(const SynthArgs& args);

} // namespace paracon::cli
