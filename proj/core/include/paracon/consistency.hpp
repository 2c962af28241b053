#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/data.hpp"
#include "paracon/error.hpp"

namespace paracon {

// How buckets are weighted in expectations over buckets. `uniform` counts each
// reasoning problem once; `size` weights a bucket by its number of predicted
// valid paraphrases, which makes the pooled variance decomposition exact.
enum class Weighting { uniform, size };

// `plugin` evaluates E[theta^2] + E[(1-theta)^2] (ordered pairs drawn with
// replacement); `unbiased_pairs` counts distinct paraphrase pairs within each
// bucket and skips buckets with a single paraphrase.
enum class Estimator { plugin, unbiased_pairs };

std::string_view to_string(Weighting w) noexcept;
std::string_view to_string(Estimator e) noexcept;
std::optional<Weighting> parse_weighting(std::string_view text) noexcept;
std::optional<Estimator> parse_estimator(std::string_view text) noexcept;

// Correctness summary of one bucket under one run.
struct BucketStats {
    std::string problem_id;
    std::size_t n = 0;         // predicted valid paraphrases
    std::size_t n_correct = 0; // of which correct
    std::optional<bool> original_correct;
    std::optional<double> original_confidence_in_gold;

    double theta() const noexcept { return static_cast<double>(n_correct) / static_cast<double>(n); }
};

// nullopt when no valid paraphrase of the bucket has a prediction.
std::optional<BucketStats> bucket_stats(const ParaphraseBucket& bucket, const Run& run);

// Stats for every bucket with at least one predicted valid paraphrase, sorted by
// problem_id. Buckets without one are skipped with a warning.
std::vector<BucketStats> collect_bucket_stats(const Dataset& dataset, const Run& run, Diagnostics* diag = nullptr);

// Raw (unnormalized) weights: 1 per bucket for uniform, n for size.
std::vector<double> raw_weights(std::span<const BucketStats> stats, Weighting w);

// Weighted mean of theta, i.e. paraphrase accuracy A_bucket.
double mean_accuracy(std::span<const BucketStats> stats, Weighting w);
double mean_accuracy(std::span<const BucketStats> stats, std::span<const double> weights);

// Paraphrastic consistency. Weights need not be normalized.
double estimate_pc(std::span<const BucketStats> stats, Weighting w = Weighting::uniform,
                   Estimator estimator = Estimator::plugin);
double estimate_pc(std::span<const BucketStats> stats, std::span<const double> weights, Estimator estimator);

// P_C through the flip probabilities: 1 - 2 E[theta (1 - theta)].
double estimate_pc_flip(std::span<const BucketStats> stats, Weighting w = Weighting::uniform);

// Variance attributable to paraphrasing, E[theta (1 - theta)].
double vap(std::span<const BucketStats> stats, Weighting w = Weighting::uniform);
double vap(std::span<const BucketStats> stats, std::span<const double> weights);

struct VarianceDecomposition {
    double total = 0.0;   // pooled variance of correctness over all predicted paraphrases
    double within = 0.0;  // E_size[theta (1 - theta)]
    double between = 0.0; // Var_size(theta)
};

// Law of total variance under size weighting.
VarianceDecomposition variance_decomposition(std::span<const BucketStats> stats);

// within / total; nullopt when the total variance is zero.
std::optional<double> pvap(std::span<const BucketStats> stats);

// Lowest P_C reachable at a given accuracy: 1 - 2 acc (1 - acc).
double min_pc(double accuracy);

// P_C at which `fraction` of the Bernoulli variance at `accuracy` comes from paraphrasing.
double iso_pvap_curve(double accuracy, double fraction);

struct AccuracyPanel {
    std::optional<double> a_original; // A_O
    std::size_t n_original_predicted = 0;
    std::size_t n_original_correct = 0;
    std::optional<double> a_test; // A_T, passed through
    double a_bucket = 0.0;        // A_bucket under the active weighting
};

AccuracyPanel accuracy_panel(std::span<const BucketStats> stats, Weighting w,
                             std::optional<double> test_accuracy = std::nullopt, Diagnostics* diag = nullptr);

} // namespace paracon
