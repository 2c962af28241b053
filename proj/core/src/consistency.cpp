#include "paracon/consistency.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"

namespace paracon {

namespace {

using Ratio = long double;

Ratio ratio(std::size_t num, std::size_t den) { return static_cast<Ratio>(num) / static_cast<Ratio>(den); }

// theta^2 + (1 - theta)^2 as an exact integer ratio.
Ratio plugin_agreement(const BucketStats& s)
{
    const std::size_t c = s.n_correct;
    const std::size_t w = s.n - s.n_correct;
    return ratio(c * c + w * w, s.n * s.n);
}

// theta (1 - theta)
Ratio within_variance(const BucketStats& s) { return ratio(s.n_correct * (s.n - s.n_correct), s.n * s.n); }

// Agreement over unordered pairs of distinct paraphrases.
Ratio pair_agreement(const BucketStats& s)
{
    const std::size_t c = s.n_correct;
    const std::size_t w = s.n - s.n_correct;
    const std::size_t agree = c * (c == 0 ? 0 : c - 1) + w * (w == 0 ? 0 : w - 1);
    return ratio(agree, s.n * (s.n - 1));
}

void require_non_empty(std::span<const BucketStats> stats)
{
    if (stats.empty()) {
        throw InputError("no bucket statistics: every bucket lacks predicted valid paraphrases");
    }
}

void check_weights(std::span<const BucketStats> stats, std::span<const double> weights)
{
    require_non_empty(stats);
    if (weights.size() != stats.size()) {
        throw InvariantError("weight vector length does not match the number of buckets");
    }
}

template <typename F>
double weighted_mean(std::span<const BucketStats> stats, std::span<const double> weights, F value)
{
    check_weights(stats, weights);
    detail::Accumulator num;
    detail::Accumulator den;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (weights[i] < 0.0 || !std::isfinite(weights[i])) {
            throw InvariantError("bucket weights must be finite and non-negative");
        }
        if (weights[i] == 0.0) {
            continue;
        }
        if (stats[i].n == 0) {
            throw InvariantError("bucket '" + stats[i].problem_id + "' has no predicted paraphrases");
        }
        num.add(static_cast<long double>(weights[i]) * value(stats[i]));
        den.add(weights[i]);
    }
    if (den.value() <= 0.0L) {
        throw InputError("bucket weights sum to zero");
    }
    return static_cast<double>(num.value() / den.value());
}

} // namespace

std::string_view to_string(Weighting w) noexcept { return w == Weighting::uniform ? "uniform" : "size"; }

std::string_view to_string(Estimator e) noexcept { return e == Estimator::plugin ? "plugin" : "unbiased_pairs"; }

std::optional<Weighting> parse_weighting(std::string_view text) noexcept
{
    if (text == "uniform") {
        return Weighting::uniform;
    }
    if (text == "size") {
        return Weighting::size;
    }
    return std::nullopt;
}

std::optional<Estimator> parse_estimator(std::string_view text) noexcept
{
    if (text == "plugin") {
        return Estimator::plugin;
    }
    if (text == "unbiased_pairs") {
        return Estimator::unbiased_pairs;
    }
    return std::nullopt;
}

std::optional<BucketStats> bucket_stats(const ParaphraseBucket& bucket, const Run& run)
{
    BucketStats s;
    s.problem_id = bucket.problem_id;
    s.original_confidence_in_gold = bucket.original_confidence_in_gold;
    for (const auto& item : bucket.paraphrase_items) {
        if (!item.valid) {
            continue;
        }
        if (const Prediction* p = run.find(item.item_id)) {
            ++s.n;
            s.n_correct += is_correct(bucket, *p) ? 1 : 0;
        }
    }
    if (s.n == 0) {
        return std::nullopt;
    }
    if (bucket.original_item.valid) {
        if (const Prediction* p = run.find(bucket.original_item.item_id)) {
            s.original_correct = is_correct(bucket, *p);
        }
    }
    return s;
}

std::vector<BucketStats> collect_bucket_stats(const Dataset& dataset, const Run& run, Diagnostics* diag)
{
    std::vector<BucketStats> out;
    out.reserve(dataset.size());
    for (const auto& b : dataset.buckets()) {
        if (auto s = bucket_stats(b, run)) {
            out.push_back(std::move(*s));
        } else {
            warn(diag, "run '" + run.id() + "': bucket '" + b.problem_id +
                           "' has no predicted valid paraphrases; excluded");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BucketStats& a, const BucketStats& b) { return a.problem_id < b.problem_id; });
    return out;
}

std::vector<double> raw_weights(std::span<const BucketStats> stats, Weighting w)
{
    std::vector<double> weights(stats.size(), 1.0);
    if (w == Weighting::size) {
        for (std::size_t i = 0; i < stats.size(); ++i) {
            weights[i] = static_cast<double>(stats[i].n);
        }
    }
    return weights;
}

double mean_accuracy(std::span<const BucketStats> stats, std::span<const double> weights)
{
    return weighted_mean(stats, weights, [](const BucketStats& s) { return ratio(s.n_correct, s.n); });
}

double mean_accuracy(std::span<const BucketStats> stats, Weighting w)
{
    return mean_accuracy(stats, raw_weights(stats, w));
}

double estimate_pc(std::span<const BucketStats> stats, std::span<const double> weights, Estimator estimator)
{
    if (estimator == Estimator::plugin) {
        return weighted_mean(stats, weights, plugin_agreement);
    }
    check_weights(stats, weights);
    std::vector<BucketStats> eligible;
    std::vector<double> eligible_weights;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (stats[i].n >= 2) {
            eligible.push_back(stats[i]);
            eligible_weights.push_back(weights[i]);
        }
    }
    if (eligible.empty()) {
        throw InputError("unbiased_pairs estimator needs at least one bucket with two or more predicted paraphrases");
    }
    return weighted_mean(eligible, eligible_weights, pair_agreement);
}

double estimate_pc(std::span<const BucketStats> stats, Weighting w, Estimator estimator)
{
    return estimate_pc(stats, raw_weights(stats, w), estimator);
}

double vap(std::span<const BucketStats> stats, std::span<const double> weights)
{
    return weighted_mean(stats, weights, within_variance);
}

double vap(std::span<const BucketStats> stats, Weighting w) { return vap(stats, raw_weights(stats, w)); }

double estimate_pc_flip(std::span<const BucketStats> stats, Weighting w)
{
    // Both flip directions contribute E[theta (1 - theta)].
    const double flips_to_incorrect = vap(stats, w);
    const double flips_to_correct = flips_to_incorrect;
    return 1.0 - flips_to_incorrect - flips_to_correct;
}

VarianceDecomposition variance_decomposition(std::span<const BucketStats> stats)
{
    require_non_empty(stats);
    std::size_t total_n = 0;
    std::size_t total_c = 0;
    for (const auto& s : stats) {
        total_n += s.n;
        total_c += s.n_correct;
    }
    const long double pooled = ratio(total_c, total_n);
    detail::Accumulator within;
    detail::Accumulator between;
    for (const auto& s : stats) {
        const long double weight = ratio(s.n, total_n);
        within.add(weight * within_variance(s));
        const long double d = ratio(s.n_correct, s.n) - pooled;
        between.add(weight * d * d);
    }
    VarianceDecomposition out;
    out.total = static_cast<double>(ratio(total_c * (total_n - total_c), total_n * total_n));
    out.within = static_cast<double>(within.value());
    out.between = static_cast<double>(between.value());
    return out;
}

std::optional<double> pvap(std::span<const BucketStats> stats)
{
    const auto d = variance_decomposition(stats);
    if (d.total == 0.0) {
        return std::nullopt;
    }
    return d.within / d.total;
}

namespace {

void require_unit_interval(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InputError(std::string(what) + " must lie in [0,1], got " + std::to_string(x));
    }
}

} // namespace

double min_pc(double accuracy)
{
    require_unit_interval(accuracy, "accuracy");
    return 1.0 - 2.0 * accuracy * (1.0 - accuracy);
}

double iso_pvap_curve(double accuracy, double fraction)
{
    require_unit_interval(accuracy, "accuracy");
    require_unit_interval(fraction, "fraction");
    return 1.0 - 2.0 * fraction * (accuracy * (1.0 - accuracy));
}

AccuracyPanel accuracy_panel(std::span<const BucketStats> stats, Weighting w, std::optional<double> test_accuracy,
                             Diagnostics* diag)
{
    AccuracyPanel panel;
    panel.a_bucket = mean_accuracy(stats, w);
    if (test_accuracy) {
        require_unit_interval(*test_accuracy, "test accuracy");
        panel.a_test = test_accuracy;
    }
    for (const auto& s : stats) {
        if (s.original_correct) {
            ++panel.n_original_predicted;
            panel.n_original_correct += *s.original_correct ? 1 : 0;
        }
    }
    if (panel.n_original_predicted > 0) {
        panel.a_original = static_cast<double>(ratio(panel.n_original_correct, panel.n_original_predicted));
    } else {
        warn(diag, "no predictions on original items; A_O is absent");
    }
    return panel;
}

} // namespace paracon
