#include "paracon/synth.hpp"

#include <cmath>
#include <algorithm>

#include "paracon/error.hpp"
#include "paracon/random.hpp"

namespace paracon {

namespace {

constexpr double kIntegralTolerance = 1e-9;
const std::vector<std::string> kLabels = {"strengthener", "weakener"};

std::size_t integral_count(double x, const char* what)
{
    const double r = std::round(x);
    if (std::fabs(x - r) > kIntegralTolerance) {
        throw InputError(std::string(what) + " must be integral, got " + std::to_string(x));
    }
    return static_cast<std::size_t>(r);
}

std::string padded(std::size_t i, std::size_t n)
{
    std::string digits = std::to_string(i);
    const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
    return "p" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

} // namespace

std::string_view to_string(ScenarioKind kind) noexcept
{
    switch (kind) {
    case ScenarioKind::pure: return "pure";
    case ScenarioKind::uniform: return "uniform";
    case ScenarioKind::mixed: return "mixed";
    }
    return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view text) noexcept
{
    if (text == "pure") return ScenarioKind::pure;
    if (text == "uniform") return ScenarioKind::uniform;
    if (text == "mixed") return ScenarioKind::mixed;
    return std::nullopt;
}

void ScenarioSpec::validate() const
{
    if (n_buckets == 0 || bucket_size == 0) {
        throw InputError("n_buckets and bucket_size must be positive");
    }
    if (!std::isfinite(accuracy) || accuracy < 0.0 || accuracy > 1.0) {
        throw InputError("accuracy must lie in [0, 1]");
    }
    switch (kind) {
    case ScenarioKind::pure:
        integral_count(accuracy * static_cast<double>(n_buckets), "accuracy * n_buckets");
        break;
    case ScenarioKind::uniform:
        integral_count(accuracy * static_cast<double>(bucket_size), "accuracy * bucket_size");
        break;
    case ScenarioKind::mixed:
        if (!std::isfinite(theta_spread) || theta_spread < 0.0) {
            throw InputError("theta_spread must be non-negative");
        }
        if (accuracy - theta_spread < -kIntegralTolerance || accuracy + theta_spread > 1.0 + kIntegralTolerance) {
            throw InputError("theta range [accuracy - spread, accuracy + spread] leaves [0, 1]");
        }
        break;
    }
}

RunTable Scenario::runs() const
{
    RunTable table;
    for (const auto& r : predictions) {
        table.add(r);
    }
    return table;
}

Scenario generate_scenario(const ScenarioSpec& spec)
{
    spec.validate();
    Rng rng(derive_seed(spec.seed, {static_cast<std::uint64_t>(spec.kind)}));
    const std::size_t B = spec.n_buckets;
    const std::size_t n = spec.bucket_size;

    // Per-bucket correctness of the paraphrases, then of the original.
    std::vector<std::vector<bool>> correct(B, std::vector<bool>(n, false));
    std::vector<bool> original_correct(B, false);
    switch (spec.kind) {
    case ScenarioKind::pure: {
        const std::size_t good = integral_count(spec.accuracy * static_cast<double>(B), "accuracy * n_buckets");
        std::vector<bool> all_right(B, false);
        for (std::size_t i = 0; i < good; ++i) {
            all_right[i] = true;
        }
        rng.shuffle(all_right);
        for (std::size_t b = 0; b < B; ++b) {
            correct[b].assign(n, all_right[b]);
            original_correct[b] = all_right[b];
        }
        break;
    }
    case ScenarioKind::uniform: {
        const std::size_t good = integral_count(spec.accuracy * static_cast<double>(n), "accuracy * bucket_size");
        for (std::size_t b = 0; b < B; ++b) {
            for (std::size_t i = 0; i < good; ++i) {
                correct[b][i] = true;
            }
            rng.shuffle(correct[b]);
            original_correct[b] = rng.bernoulli(spec.accuracy);
        }
        break;
    }
    case ScenarioKind::mixed: {
        const double lo = std::max(0.0, spec.accuracy - spec.theta_spread);
        const double hi = std::min(1.0, spec.accuracy + spec.theta_spread);
        for (std::size_t b = 0; b < B; ++b) {
            const double theta = rng.uniform(lo, hi);
            for (std::size_t i = 0; i < n; ++i) {
                correct[b][i] = rng.bernoulli(theta);
            }
            original_correct[b] = rng.bernoulli(theta);
        }
        break;
    }
    }

    Scenario out;
    auto confidence = [&](bool right) { return right ? 0.5 + 0.5 * rng.uniform01() : 0.5 * rng.uniform01(); };
    for (std::size_t b = 0; b < B; ++b) {
        ParaphraseBucket bucket;
        bucket.problem_id = padded(b, B);
        bucket.dataset_tag = "synthetic";
        bucket.context.push_back({"premise", "premise " + bucket.problem_id});
        const std::size_t gold = rng.uniform_index(2);
        bucket.gold_label = kLabels[gold];
        const std::string& wrong = kLabels[1 - gold];
        bucket.original_item = {bucket.problem_id + "-o", "original " + bucket.problem_id, ItemSource::original, true};
        const double original_conf = confidence(original_correct[b]);
        bucket.original_confidence_in_gold = original_conf;
        out.predictions.push_back(
            {spec.run_id, bucket.original_item.item_id, original_correct[b] ? bucket.gold_label : wrong, original_conf});
        for (std::size_t i = 0; i < n; ++i) {
            Item item{bucket.problem_id + "-" + std::to_string(i + 1),
                      "paraphrase " + std::to_string(i + 1) + " of " + bucket.problem_id, ItemSource::human, true};
            out.predictions.push_back(
                {spec.run_id, item.item_id, correct[b][i] ? bucket.gold_label : wrong, confidence(correct[b][i])});
            bucket.paraphrase_items.push_back(std::move(item));
        }
        out.dataset.add(std::move(bucket));
    }
    out.dataset.set_alphabet("synthetic", kLabels);
    return out;
}

} // namespace paracon
