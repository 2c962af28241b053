#include "paracon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jsonl.hpp"

namespace paracon {

using detail::json;

namespace {

Item parse_item(const json& j)
{
    if (!j.is_object()) {
        detail::fail("items must be JSON objects");
    }
    Item item;
    item.item_id = detail::require_string(j, "item_id");
    item.text = detail::optional_string(j, "text").value_or("");
    const std::string source = detail::require_string(j, "source");
    auto parsed = parse_item_source(source);
    if (!parsed) {
        detail::fail("item '" + item.item_id + "': unknown source '" + source + "'");
    }
    item.source = *parsed;
    if (auto it = j.find("valid"); it != j.end() && !it->is_null()) {
        if (!it->is_boolean()) {
            detail::fail("item '" + item.item_id + "': field 'valid' must be a boolean");
        }
        item.valid = it->get<bool>();
    }
    return item;
}

ParaphraseBucket parse_bucket(const json& j)
{
    ParaphraseBucket b;
    b.problem_id = detail::require_string(j, "problem_id");
    b.dataset_tag = detail::optional_string(j, "dataset_tag").value_or("");
    b.gold_label = detail::require_string(j, "gold_label");
    if (j.contains("original_confidence_in_gold") && !j["original_confidence_in_gold"].is_null()) {
        b.original_confidence_in_gold = detail::require_probability(j, "original_confidence_in_gold");
    }
    if (auto it = j.find("context"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) {
            detail::fail("field 'context' must be an array");
        }
        for (const auto& c : *it) {
            if (!c.is_object()) {
                detail::fail("context entries must be objects");
            }
            b.context.push_back({detail::require_string(c, "role"), detail::require_string(c, "text")});
        }
    }
    const json& items = detail::require(j, "items");
    if (!items.is_array()) {
        detail::fail("field 'items' must be an array");
    }
    bool have_original = false;
    for (const auto& ij : items) {
        Item item = parse_item(ij);
        if (item.source == ItemSource::original) {
            if (have_original) {
                detail::fail("bucket '" + b.problem_id + "' has more than one item with source 'original'");
            }
            have_original = true;
            b.original_item = std::move(item);
        } else {
            b.paraphrase_items.push_back(std::move(item));
        }
    }
    if (!have_original) {
        detail::fail("bucket '" + b.problem_id + "' has no item with source 'original'");
    }
    return b;
}

json item_to_json(const Item& item)
{
    return json{{"item_id", item.item_id},
                {"text", item.text},
                {"source", std::string(to_string(item.source))},
                {"valid", item.valid}};
}

json bucket_to_json(const ParaphraseBucket& b)
{
    json j;
    j["problem_id"] = b.problem_id;
    j["dataset_tag"] = b.dataset_tag;
    j["gold_label"] = b.gold_label;
    j["context"] = json::array();
    for (const auto& c : b.context) {
        j["context"].push_back(json{{"role", c.role}, {"text", c.text}});
    }
    if (b.original_confidence_in_gold) {
        j["original_confidence_in_gold"] = *b.original_confidence_in_gold;
    }
    j["items"] = json::array();
    j["items"].push_back(item_to_json(b.original_item));
    for (const auto& item : b.paraphrase_items) {
        j["items"].push_back(item_to_json(item));
    }
    return j;
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return in;
}

} // namespace

Dataset read_buckets(std::istream& in, const std::string& source_name, const LoadOptions& options, Diagnostics* diag)
{
    Dataset dataset;
    for (const auto& [tag, labels] : options.label_alphabets) {
        dataset.set_alphabet(tag, labels);
    }
    const std::size_t n = detail::for_each_record(in, source_name, [&](const json& j, std::size_t line) {
        ParaphraseBucket bucket = parse_bucket(j);
        if (!bucket.has_valid_paraphrase()) {
            warn(diag, source_name + ":" + std::to_string(line) + ": bucket '" + bucket.problem_id +
                           "' has no valid paraphrases and will be excluded from metrics");
        }
        dataset.add(std::move(bucket));
    });
    if (n == 0) {
        warn(diag, source_name + ": no bucket records");
    }
    return dataset;
}

Dataset load_buckets(const std::filesystem::path& path, const LoadOptions& options, Diagnostics* diag)
{
    auto in = open_input(path);
    return read_buckets(in, path.string(), options, diag);
}

RunTable read_predictions(std::istream& in, const std::string& source_name, const Dataset& dataset, Diagnostics* diag)
{
    RunTable table;
    const std::size_t n = detail::for_each_record(in, source_name, [&](const json& j, std::size_t) {
        PredictionRecord r;
        r.run_id = detail::require_string(j, "run_id");
        r.item_id = detail::require_string(j, "item_id");
        r.predicted_label = detail::require_string(j, "predicted_label");
        r.confidence_in_gold = detail::require_probability(j, "confidence_in_gold");
        auto ref = dataset.find_item(r.item_id);
        if (!ref) {
            detail::fail("unknown item_id '" + r.item_id + "'");
        }
        const auto& alphabet = dataset.alphabet(dataset.bucket(*ref).dataset_tag);
        if (alphabet.size() == 2 && std::find(alphabet.begin(), alphabet.end(), r.predicted_label) == alphabet.end()) {
            detail::fail("predicted_label '" + r.predicted_label + "' outside the label alphabet of dataset '" +
                         dataset.bucket(*ref).dataset_tag + "'");
        }
        table.add(r);
    });
    if (n == 0) {
        warn(diag, source_name + ": no prediction records");
    }
    return table;
}

RunTable load_predictions(const std::filesystem::path& path, const Dataset& dataset, Diagnostics* diag)
{
    auto in = open_input(path);
    return read_predictions(in, path.string(), dataset, diag);
}

std::string bucket_to_json_line(const ParaphraseBucket& bucket) { return bucket_to_json(bucket).dump(); }

std::string prediction_to_json_line(const PredictionRecord& r)
{
    return json{{"run_id", r.run_id},
                {"item_id", r.item_id},
                {"predicted_label", r.predicted_label},
                {"confidence_in_gold", r.confidence_in_gold}}
        .dump();
}

void write_buckets(std::ostream& out, const Dataset& dataset)
{
    for (const auto& b : dataset.buckets()) {
        out << bucket_to_json_line(b) << '\n';
    }
}

void write_predictions(std::ostream& out, const RunTable& table)
{
    for (const auto& [run_id, run] : table.runs()) {
        for (const auto& [item_id, p] : run.predictions()) {
            out << prediction_to_json_line({run_id, item_id, p.predicted_label, p.confidence_in_gold}) << '\n';
        }
    }
}

std::string normalize_buckets_text(const std::string& text)
{
    std::istringstream in(text);
    std::ostringstream out;
    detail::for_each_record(in, "<text>", [&](const json& j, std::size_t) {
        out << bucket_to_json(parse_bucket(j)).dump() << '\n';
    });
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace paracon
