#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paracon/consistency.hpp"
#include "paracon/correction.hpp"
#include "paracon/data.hpp"

namespace paracon {

struct EvaluateOptions {
    Weighting weighting = Weighting::uniform;
    Estimator estimator = Estimator::plugin;
    std::optional<StratumDistribution> reference; // enables the corrected columns
    std::optional<double> test_accuracy;          // A_T, passed through
};

// The metric panel for one run.
struct EvaluationReport {
    std::string run_id;
    std::size_t n_buckets = 0;     // buckets with at least one predicted valid paraphrase
    std::size_t n_paraphrases = 0; // predicted valid paraphrases across those buckets
    double coverage = 0.0;         // fraction of evaluable items with a prediction
    std::optional<double> a_original;
    std::optional<double> a_test;
    double a_bucket = 0.0;
    std::optional<double> a_bucket_corrected;
    double p_c = 0.0;
    std::optional<double> p_c_corrected;
    double vap = 0.0;
    std::optional<double> pvap;
    double total_variance = 0.0;
    Weighting weighting = Weighting::uniform;
    Estimator estimator = Estimator::plugin;
};

EvaluationReport evaluate_run(const Dataset& dataset, const Run& run, const EvaluateOptions& options,
                              Diagnostics* diag = nullptr);

// {"reports": [...]} with explicit nulls for absent values.
std::string reports_to_json(std::span<const EvaluationReport> reports);

// Fixed-width table, percentages to one decimal.
std::string reports_to_table(std::span<const EvaluationReport> reports);

} // namespace paracon
