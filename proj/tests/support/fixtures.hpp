#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paracon/consistency.hpp"
#include "paracon/data.hpp"

namespace fixture {

inline paracon::BucketStats stats(std::size_t n, std::size_t correct, std::optional<double> confidence = std::nullopt,
                                  std::string id = {})
{
    paracon::BucketStats s;
    s.problem_id = std::move(id);
    s.n = n;
    s.n_correct = correct;
    s.original_confidence_in_gold = confidence;
    return s;
}

// Bucket counts in [1, max_buckets], sizes in [1, max_size], confidences uniform.
inline std::vector<paracon::BucketStats> random_stats(std::mt19937_64& rng, std::size_t max_buckets = 200,
                                                      std::size_t max_size = 12)
{
    std::uniform_int_distribution<std::size_t> count(1, max_buckets);
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_real_distribution<double> conf(0.0, 1.0);
    std::vector<paracon::BucketStats> out(count(rng));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t n = size(rng);
        out[i] = stats(n, std::uniform_int_distribution<std::size_t>(0, n)(rng), conf(rng), "b" + std::to_string(i));
    }
    return out;
}

// A bucket with `size` paraphrases; ids are <id>-o and <id>-1..size.
inline paracon::ParaphraseBucket bucket(const std::string& id, std::size_t size, const std::string& gold = "yes",
                                        std::optional<double> confidence = std::nullopt)
{
    paracon::ParaphraseBucket b;
    b.problem_id = id;
    b.gold_label = gold;
    b.original_item = {id + "-o", "original " + id, paracon::ItemSource::original, true};
    for (std::size_t i = 1; i <= size; ++i) {
        b.paraphrase_items.push_back(
            {id + "-" + std::to_string(i), "paraphrase " + std::to_string(i), paracon::ItemSource::human, true});
    }
    b.original_confidence_in_gold = confidence;
    return b;
}

inline paracon::Dataset dataset_of(std::vector<paracon::ParaphraseBucket> buckets)
{
    paracon::Dataset d;
    d.set_alphabet("", {"yes", "no"});
    for (auto& b : buckets) {
        d.add(std::move(b));
    }
    return d;
}

// Predictions for one bucket: original right or wrong, then the first
// `paraphrases_right` paraphrases right and the rest wrong.
inline void predict(paracon::Run& run, const paracon::ParaphraseBucket& b, bool original_right,
                    std::size_t paraphrases_right)
{
    const std::string wrong = b.gold_label == "yes" ? "no" : "yes";
    run.add(b.original_item.item_id, {original_right ? b.gold_label : wrong, original_right ? 0.9 : 0.1});
    for (std::size_t i = 0; i < b.paraphrase_items.size(); ++i) {
        const bool right = i < paraphrases_right;
        run.add(b.paraphrase_items[i].item_id, {right ? b.gold_label : wrong, right ? 0.9 : 0.1});
    }
}

} // namespace fixture
