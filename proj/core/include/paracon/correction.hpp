#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "paracon/consistency.hpp"
#include "paracon/error.hpp"

namespace paracon {

inline constexpr std::size_t kDeciles = 10;

// Decile of a confidence: [0,0.1), [0.1,0.2), ..., [0.9,1.0]. The last bin is closed.
std::size_t decile_of(double confidence);

// Probability mass over the ten confidence deciles.
class StratumDistribution {
public:
    // Throws InputError unless proportions are finite, non-negative and sum to 1 within 1e-9.
    static StratumDistribution from_proportions(const std::array<double, kDeciles>& proportions);
    // Empirical distribution of a set of confidences in [0,1].
    static StratumDistribution from_confidences(std::span<const double> confidences);

    const std::array<double, kDeciles>& proportions() const noexcept { return proportions_; }
    double operator[](std::size_t decile) const { return proportions_.at(decile); }

    // Lower edges 0.0, 0.1, ..., 0.9 plus the closing edge 1.0.
    static std::array<double, kDeciles + 1> bin_edges() noexcept;

private:
    std::array<double, kDeciles> proportions_{};
};

// Bucket-count distribution of original confidences. Throws InputError if a
// bucket has no original_confidence_in_gold.
StratumDistribution sample_distribution(std::span<const BucketStats> stats);

// Base weights rescaled by reference/sample mass of each bucket's decile.
// Reference mass on deciles without sample buckets is spread over the
// non-empty deciles in proportion to their reference mass (with a warning).
std::vector<double> corrected_weights(std::span<const BucketStats> stats, const StratumDistribution& reference,
                                      Weighting w, Diagnostics* diag = nullptr);

struct CorrectedMetrics {
    double p_c = 0.0;      // corrected P_C
    double a_bucket = 0.0; // corrected A_bucket
};

// Reference file: {"proportions": [10 values]} or {"confidences": [values in [0,1]]}.
StratumDistribution load_reference_distribution(const std::filesystem::path& path);
StratumDistribution parse_reference_distribution(const std::string& text, const std::string& source_name);

CorrectedMetrics corrected_metrics(std::span<const BucketStats> stats, const StratumDistribution& reference,
                                   Weighting w, Estimator estimator = Estimator::plugin, Diagnostics* diag = nullptr);

} // namespace paracon
