#include "paracon/data.hpp"

#include <algorithm>
#include <set>

namespace paracon {

std::string_view to_string(ItemSource source) noexcept
{
    switch (source) {
    case ItemSource::original:
        return "original";
    case ItemSource::human:
        return "human";
    case ItemSource::qcpg:
        return "qcpg";
    case ItemSource::gpt3:
        return "gpt3";
    case ItemSource::other:
        return "other";
    }
    return "other";
}

std::optional<ItemSource> parse_item_source(std::string_view text) noexcept
{
    for (auto s : {ItemSource::original, ItemSource::human, ItemSource::qcpg, ItemSource::gpt3, ItemSource::other}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

std::size_t ParaphraseBucket::valid_paraphrase_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(paraphrase_items.begin(), paraphrase_items.end(), [](const Item& i) { return i.valid; }));
}

void ParaphraseBucket::validate() const
{
    if (problem_id.empty()) {
        throw InputError("problem_id must be non-empty");
    }
    if (gold_label.empty()) {
        throw InputError("bucket " + problem_id + ": gold_label must be non-empty");
    }
    if (original_item.source != ItemSource::original) {
        throw InputError("bucket " + problem_id + ": original item must have source 'original'");
    }
    if (original_confidence_in_gold) {
        const double c = *original_confidence_in_gold;
        if (!(c >= 0.0 && c <= 1.0)) {
            throw InputError("bucket " + problem_id + ": original_confidence_in_gold outside [0,1]");
        }
    }
    std::set<std::string_view> ids{original_item.item_id};
    if (original_item.item_id.empty()) {
        throw InputError("bucket " + problem_id + ": empty item_id");
    }
    for (const auto& item : paraphrase_items) {
        if (item.source == ItemSource::original) {
            throw InputError("bucket " + problem_id + ": more than one item with source 'original'");
        }
        if (item.item_id.empty()) {
            throw InputError("bucket " + problem_id + ": empty item_id");
        }
        if (!ids.insert(item.item_id).second) {
            throw InputError("bucket " + problem_id + ": duplicate item_id '" + item.item_id + "'");
        }
    }
}

void Dataset::set_alphabet(const std::string& dataset_tag, std::vector<std::string> labels)
{
    if (labels.size() != 2 || labels[0] == labels[1]) {
        throw InputError("label alphabet for '" + dataset_tag + "' must contain exactly two distinct labels");
    }
    alphabets_[dataset_tag] = std::move(labels);
    pinned_[dataset_tag] = true;
}

void Dataset::add(ParaphraseBucket bucket)
{
    bucket.validate();
    if (bucket_index_.count(bucket.problem_id) != 0) {
        throw InputError("duplicate problem_id '" + bucket.problem_id + "'");
    }
    auto check_item = [&](const Item& item) {
        if (item_index_.count(item.item_id) != 0) {
            throw InputError("item_id '" + item.item_id + "' already used by another bucket");
        }
    };
    check_item(bucket.original_item);
    for (const auto& item : bucket.paraphrase_items) {
        check_item(item);
    }

    auto& labels = alphabets_[bucket.dataset_tag];
    if (std::find(labels.begin(), labels.end(), bucket.gold_label) == labels.end()) {
        if (pinned_[bucket.dataset_tag] || labels.size() >= 2) {
            std::string known;
            for (const auto& l : labels) {
                known += (known.empty() ? "" : ", ") + l;
            }
            throw InputError("gold_label '" + bucket.gold_label + "' outside the two-label alphabet {" + known +
                             "} of dataset '" + bucket.dataset_tag + "'");
        }
        labels.push_back(bucket.gold_label);
    }

    const std::size_t index = buckets_.size();
    bucket_index_.emplace(bucket.problem_id, index);
    item_index_.emplace(bucket.original_item.item_id, ItemRef{index, std::nullopt});
    for (std::size_t i = 0; i < bucket.paraphrase_items.size(); ++i) {
        item_index_.emplace(bucket.paraphrase_items[i].item_id, ItemRef{index, i});
    }
    buckets_.push_back(std::move(bucket));
}

const ParaphraseBucket* Dataset::find_bucket(std::string_view problem_id) const
{
    auto it = bucket_index_.find(problem_id);
    return it == bucket_index_.end() ? nullptr : &buckets_[it->second];
}

std::optional<ItemRef> Dataset::find_item(std::string_view item_id) const
{
    auto it = item_index_.find(item_id);
    if (it == item_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const Item& Dataset::item(const ItemRef& ref) const
{
    const auto& b = buckets_.at(ref.bucket);
    return ref.paraphrase ? b.paraphrase_items.at(*ref.paraphrase) : b.original_item;
}

const std::vector<std::string>& Dataset::alphabet(const std::string& dataset_tag) const
{
    static const std::vector<std::string> empty;
    auto it = alphabets_.find(dataset_tag);
    return it == alphabets_.end() ? empty : it->second;
}

std::size_t Dataset::evaluable_item_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& b : buckets_) {
        n += (b.original_item.valid ? 1 : 0) + b.valid_paraphrase_count();
    }
    return n;
}

void Run::add(const std::string& item_id, Prediction prediction)
{
    if (!predictions_.emplace(item_id, std::move(prediction)).second) {
        throw InputError("duplicate prediction for (run_id '" + id_ + "', item_id '" + item_id + "')");
    }
}

const Prediction* Run::find(std::string_view item_id) const
{
    auto it = predictions_.find(item_id);
    return it == predictions_.end() ? nullptr : &it->second;
}

void RunTable::add(const PredictionRecord& record)
{
    auto it = runs_.find(record.run_id);
    if (it == runs_.end()) {
        it = runs_.emplace(record.run_id, Run(record.run_id)).first;
    }
    it->second.add(record.item_id, Prediction{record.predicted_label, record.confidence_in_gold});
}

const Run* RunTable::find(std::string_view run_id) const
{
    auto it = runs_.find(run_id);
    return it == runs_.end() ? nullptr : &it->second;
}

const Run& RunTable::at(std::string_view run_id) const
{
    if (const Run* r = find(run_id)) {
        return *r;
    }
    throw InputError("unknown run_id '" + std::string(run_id) + "'");
}

std::vector<std::string> RunTable::run_ids() const
{
    std::vector<std::string> ids;
    ids.reserve(runs_.size());
    for (const auto& [id, run] : runs_) {
        ids.push_back(id);
    }
    return ids;
}

double coverage(const Dataset& dataset, const Run& run)
{
    std::size_t total = 0;
    std::size_t covered = 0;
    auto visit = [&](const Item& item) {
        if (!item.valid) {
            return;
        }
        ++total;
        covered += run.find(item.item_id) != nullptr ? 1 : 0;
    };
    for (const auto& b : dataset.buckets()) {
        visit(b.original_item);
        for (const auto& item : b.paraphrase_items) {
            visit(item);
        }
    }
    return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
}

} // namespace paracon
