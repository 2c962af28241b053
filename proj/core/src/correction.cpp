#include "paracon/correction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "numeric.hpp"
#include "paracon/io.hpp"

namespace paracon {

std::size_t decile_of(double confidence)
{
    if (!(confidence >= 0.0 && confidence <= 1.0)) {
        throw InputError("confidence outside [0,1]: " + std::to_string(confidence));
    }
    const auto d = static_cast<std::size_t>(std::floor(confidence * 10.0));
    return d >= kDeciles ? kDeciles - 1 : d;
}

StratumDistribution StratumDistribution::from_proportions(const std::array<double, kDeciles>& proportions)
{
    detail::Accumulator sum;
    for (double p : proportions) {
        if (!std::isfinite(p) || p < 0.0) {
            throw InputError("stratum proportions must be finite and non-negative");
        }
        sum.add(p);
    }
    if (std::fabs(static_cast<double>(sum.value()) - 1.0) > 1e-9) {
        throw InputError("stratum proportions must sum to 1 (got " + std::to_string(static_cast<double>(sum.value())) +
                         ")");
    }
    StratumDistribution d;
    d.proportions_ = proportions;
    return d;
}

StratumDistribution StratumDistribution::from_confidences(std::span<const double> confidences)
{
    if (confidences.empty()) {
        throw InputError("cannot build a stratum distribution from zero confidences");
    }
    std::array<std::size_t, kDeciles> counts{};
    for (double c : confidences) {
        ++counts[decile_of(c)];
    }
    StratumDistribution d;
    for (std::size_t i = 0; i < kDeciles; ++i) {
        d.proportions_[i] = static_cast<double>(counts[i]) / static_cast<double>(confidences.size());
    }
    return d;
}

std::array<double, kDeciles + 1> StratumDistribution::bin_edges() noexcept
{
    std::array<double, kDeciles + 1> edges{};
    for (std::size_t i = 0; i <= kDeciles; ++i) {
        edges[i] = static_cast<double>(i) / 10.0;
    }
    return edges;
}

namespace {

std::vector<std::size_t> bucket_deciles(std::span<const BucketStats> stats)
{
    std::vector<std::size_t> deciles;
    deciles.reserve(stats.size());
    for (const auto& s : stats) {
        if (!s.original_confidence_in_gold) {
            throw InputError("bucket '" + s.problem_id +
                             "' has no original_confidence_in_gold; corrected metrics need one per bucket");
        }
        deciles.push_back(decile_of(*s.original_confidence_in_gold));
    }
    return deciles;
}

} // namespace

StratumDistribution sample_distribution(std::span<const BucketStats> stats)
{
    std::vector<double> confidences;
    confidences.reserve(stats.size());
    bucket_deciles(stats); // validates presence
    for (const auto& s : stats) {
        confidences.push_back(*s.original_confidence_in_gold);
    }
    return StratumDistribution::from_confidences(confidences);
}

std::vector<double> corrected_weights(std::span<const BucketStats> stats, const StratumDistribution& reference,
                                      Weighting w, Diagnostics* diag)
{
    if (stats.empty()) {
        throw InputError("no bucket statistics to correct");
    }
    const auto deciles = bucket_deciles(stats);
    const auto sample = sample_distribution(stats);

    std::array<double, kDeciles> target = reference.proportions();
    double missing = 0.0;
    double present = 0.0;
    for (std::size_t d = 0; d < kDeciles; ++d) {
        if (sample[d] == 0.0) {
            missing += target[d];
        } else {
            present += target[d];
        }
    }
    if (missing > 0.0) {
        if (present > 0.0) {
            warn(diag, "reference mass " + std::to_string(missing) +
                           " falls on deciles without sampled buckets; redistributed over non-empty deciles");
            for (std::size_t d = 0; d < kDeciles; ++d) {
                target[d] = sample[d] == 0.0 ? 0.0 : target[d] / present;
            }
        } else {
            warn(diag, "reference mass lies entirely on deciles without sampled buckets; "
                       "falling back to the sample distribution");
            target = sample.proportions();
        }
    }

    auto weights = raw_weights(stats, w);
    for (std::size_t i = 0; i < stats.size(); ++i) {
        weights[i] *= target[deciles[i]] / sample[deciles[i]];
    }
    return weights;
}

CorrectedMetrics corrected_metrics(std::span<const BucketStats> stats, const StratumDistribution& reference,
                                   Weighting w, Estimator estimator, Diagnostics* diag)
{
    const auto weights = corrected_weights(stats, reference, w, diag);
    return CorrectedMetrics{estimate_pc(stats, weights, estimator), mean_accuracy(stats, weights)};
}

StratumDistribution parse_reference_distribution(const std::string& text, const std::string& source_name)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(source_name + ": malformed JSON: " + e.what());
    }
    auto numbers = [&](const char* key) {
        const auto& arr = doc.at(key);
        if (!arr.is_array()) {
            throw InputError(source_name + ": '" + key + "' must be an array");
        }
        std::vector<double> out;
        for (const auto& v : arr) {
            if (!v.is_number()) {
                throw InputError(source_name + ": '" + key + "' must contain only numbers");
            }
            out.push_back(v.get<double>());
        }
        return out;
    };
    try {
        if (!doc.is_object()) {
            throw InputError("expected a JSON object");
        }
        if (doc.contains("proportions") == doc.contains("confidences")) {
            throw InputError("expected exactly one of 'proportions' or 'confidences'");
        }
        if (doc.contains("proportions")) {
            const auto p = numbers("proportions");
            if (p.size() != kDeciles) {
                throw InputError("'proportions' must have 10 entries");
            }
            std::array<double, kDeciles> a{};
            std::copy(p.begin(), p.end(), a.begin());
            return StratumDistribution::from_proportions(a);
        }
        return StratumDistribution::from_confidences(numbers("confidences"));
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind(source_name, 0) == 0) {
            throw;
        }
        throw InputError(source_name + ": " + what);
    }
}

StratumDistribution load_reference_distribution(const std::filesystem::path& path)
{
    return parse_reference_distribution(read_text_file(path), path.string());
}

} // namespace paracon
