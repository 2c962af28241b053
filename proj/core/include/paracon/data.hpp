#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/error.hpp"

namespace paracon {

enum class ItemSource { original, human, qcpg, gpt3, other };

std::string_view to_string(ItemSource source) noexcept;
std::optional<ItemSource> parse_item_source(std::string_view text) noexcept;

struct Item {
    std::string item_id;
    std::string text;
    ItemSource source = ItemSource::human;
    bool valid = true;
};

struct ContextEntry {
    std::string role;
    std::string text;
};

// One reasoning problem: the original phrasing plus its paraphrases. Every item
// shares the bucket's gold label.
struct ParaphraseBucket {
    std::string problem_id;
    std::string dataset_tag;
    std::vector<ContextEntry> context;
    Item original_item;
    std::vector<Item> paraphrase_items;
    std::string gold_label;
    std::optional<double> original_confidence_in_gold;

    std::size_t valid_paraphrase_count() const noexcept;
    bool has_valid_paraphrase() const noexcept { return valid_paraphrase_count() > 0; }

    // Throws InputError when a structural invariant does not hold.
    void validate() const;
};

// Position of an item inside a Dataset.
struct ItemRef {
    std::size_t bucket = 0;
    std::optional<std::size_t> paraphrase; // nullopt for the original item
    bool is_original() const noexcept { return !paraphrase.has_value(); }
};

// Validated collection of buckets with item lookup. Item ids are unique across
// the whole collection so predictions can be joined on item_id alone.
class Dataset {
public:
    Dataset() = default;

    // Adds a bucket after validating it against the collection. Throws
    // InputError on duplicate ids or a third label in a dataset's alphabet.
    void add(ParaphraseBucket bucket);

    // Pins the two-label alphabet of a dataset tag before buckets are added.
    void set_alphabet(const std::string& dataset_tag, std::vector<std::string> labels);

    const std::vector<ParaphraseBucket>& buckets() const noexcept { return buckets_; }
    std::size_t size() const noexcept { return buckets_.size(); }
    bool empty() const noexcept { return buckets_.empty(); }

    const ParaphraseBucket* find_bucket(std::string_view problem_id) const;
    std::optional<ItemRef> find_item(std::string_view item_id) const;
    const ParaphraseBucket& bucket(const ItemRef& ref) const { return buckets_.at(ref.bucket); }
    const Item& item(const ItemRef& ref) const;

    // Labels seen (or pinned) for a dataset tag; at most two.
    const std::vector<std::string>& alphabet(const std::string& dataset_tag) const;

    // Number of items that take part in metrics: the original and every valid paraphrase.
    std::size_t evaluable_item_count() const noexcept;

private:
    std::vector<ParaphraseBucket> buckets_;
    std::map<std::string, std::size_t, std::less<>> bucket_index_;
    std::map<std::string, ItemRef, std::less<>> item_index_;
    std::map<std::string, std::vector<std::string>> alphabets_;
    std::map<std::string, bool> pinned_;
};

struct PredictionRecord {
    std::string run_id;
    std::string item_id;
    std::string predicted_label;
    double confidence_in_gold = 0.0;
};

struct Prediction {
    std::string predicted_label;
    double confidence_in_gold = 0.0;
};

// All predictions of one model run, keyed by item id.
class Run {
public:
    explicit Run(std::string id = {}) : id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

    // Throws InputError on a duplicate item id.
    void add(const std::string& item_id, Prediction prediction);

    const Prediction* find(std::string_view item_id) const;
    std::size_t size() const noexcept { return predictions_.size(); }
    const std::map<std::string, Prediction, std::less<>>& predictions() const noexcept { return predictions_; }

private:
    std::string id_;
    std::map<std::string, Prediction, std::less<>> predictions_;
};

// Predictions of any number of runs, keyed by (run_id, item_id).
class RunTable {
public:
    // Throws InputError on a duplicate (run_id, item_id).
    void add(const PredictionRecord& record);

    const Run* find(std::string_view run_id) const;
    const Run& at(std::string_view run_id) const;
    std::vector<std::string> run_ids() const;
    const std::map<std::string, Run, std::less<>>& runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }

private:
    std::map<std::string, Run, std::less<>> runs_;
};

// Correctness is derived from the bucket's gold label, never stored.
inline bool is_correct(const ParaphraseBucket& bucket, const Prediction& prediction) noexcept
{
    return prediction.predicted_label == bucket.gold_label;
}

// Fraction of evaluable items (originals and valid paraphrases) that the run covers.
double coverage(const Dataset& dataset, const Run& run);

} // namespace paracon
