#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/consistency.hpp"
#include "paracon/correction.hpp"
#include "paracon/data.hpp"

namespace paracon {

// Buckets split by whether a partial-input model got the original item right.
struct ArtifactPartition {
    std::vector<std::string> likely_ids;   // partial prediction on the original == gold
    std::vector<std::string> unlikely_ids; // partial prediction on the original != gold
};

struct PartitionOptions {
    // When false, buckets whose original has no partial-input prediction are
    // left out of both subsets with a warning instead of raising InputError.
    bool require_complete = true;
};

// Membership depends only on the partial run's predictions on original items.
ArtifactPartition partition_by_partial_input(const Dataset& dataset, const Run& partial,
                                             const PartitionOptions& options = {}, Diagnostics* diag = nullptr);

enum class ArtifactSubset { likely, unlikely };
std::string_view to_string(ArtifactSubset subset) noexcept;

struct RunPanel {
    std::optional<double> a_original;
    std::size_t n_original_predicted = 0;
    std::size_t n_original_correct = 0;
    std::optional<double> a_bucket;
    std::optional<double> a_bucket_corrected;
};

struct ArtifactRow {
    ArtifactSubset subset = ArtifactSubset::likely;
    std::size_t n_buckets = 0;
    RunPanel partial;
    RunPanel full;
    std::optional<double> p_c; // full-input run
    std::optional<double> p_c_corrected;
};

struct ArtifactOptions {
    Weighting weighting = Weighting::uniform;
    Estimator estimator = Estimator::plugin;
    // Whole-set reference for the corrected columns.
    std::optional<StratumDistribution> reference;
    // Per-subset references; when set they take precedence for their subset.
    std::optional<StratumDistribution> reference_likely;
    std::optional<StratumDistribution> reference_unlikely;
};

struct ArtifactReport {
    std::vector<ArtifactRow> rows; // likely first; empty subsets are omitted
    Weighting weighting = Weighting::uniform;
    Estimator estimator = Estimator::plugin;
};

ArtifactReport artifact_report(const ArtifactPartition& partition, const Dataset& dataset, const Run& partial,
                               const Run& full, const ArtifactOptions& options = {}, Diagnostics* diag = nullptr);

// Table-shaped CSV with percentages to one decimal; blank cells for absent values.
std::string artifact_report_to_csv(const ArtifactReport& report);
// Raw values, nulls for absent ones, plus the partition.
std::string artifact_report_to_json(const ArtifactReport& report, const ArtifactPartition& partition);

} // namespace paracon
