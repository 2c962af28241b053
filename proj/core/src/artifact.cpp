#include "paracon/artifact.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "paracon/format.hpp"

namespace paracon {

using json = nlohmann::json;

std::string_view to_string(ArtifactSubset subset) noexcept
{
    return subset == ArtifactSubset::likely ? "likely" : "unlikely";
}

ArtifactPartition partition_by_partial_input(const Dataset& dataset, const Run& partial,
                                             const PartitionOptions& options, Diagnostics* diag)
{
    ArtifactPartition out;
    for (const auto& b : dataset.buckets()) {
        const Prediction* p = partial.find(b.original_item.item_id);
        if (p == nullptr) {
            if (options.require_complete) {
                throw InputError("run '" + partial.id() + "' has no prediction for original item '" +
                                 b.original_item.item_id + "' of bucket '" + b.problem_id + "'");
            }
            warn(diag, "bucket '" + b.problem_id + "' has no partial-input prediction on its original; excluded");
            continue;
        }
        (is_correct(b, *p) ? out.likely_ids : out.unlikely_ids).push_back(b.problem_id);
    }
    std::sort(out.likely_ids.begin(), out.likely_ids.end());
    std::sort(out.unlikely_ids.begin(), out.unlikely_ids.end());
    return out;
}

namespace {

std::vector<BucketStats> restrict_to(const std::vector<BucketStats>& stats, const std::set<std::string>& ids)
{
    std::vector<BucketStats> out;
    for (const auto& s : stats) {
        if (ids.count(s.problem_id) != 0) {
            out.push_back(s);
        }
    }
    return out;
}

// A_O over the subset's originals, regardless of paraphrase coverage, so the
// two subsets recompose the whole-set original accuracy.
void original_accuracy(const Dataset& dataset, const Run& run, const std::set<std::string>& ids, RunPanel& panel)
{
    for (const auto& id : ids) {
        const ParaphraseBucket* b = dataset.find_bucket(id);
        if (b == nullptr || !b->original_item.valid) {
            continue;
        }
        if (const Prediction* p = run.find(b->original_item.item_id)) {
            ++panel.n_original_predicted;
            panel.n_original_correct += is_correct(*b, *p) ? 1 : 0;
        }
    }
    if (panel.n_original_predicted > 0) {
        panel.a_original =
            static_cast<double>(panel.n_original_correct) / static_cast<double>(panel.n_original_predicted);
    }
}

RunPanel run_panel(const Dataset& dataset, const Run& run, const std::vector<BucketStats>& stats,
                   const std::set<std::string>& ids, const StratumDistribution* reference, Weighting w,
                   Diagnostics* diag)
{
    RunPanel panel;
    original_accuracy(dataset, run, ids, panel);
    if (!stats.empty()) {
        panel.a_bucket = mean_accuracy(stats, w);
        if (reference != nullptr) {
            panel.a_bucket_corrected = corrected_metrics(stats, *reference, w, Estimator::plugin, diag).a_bucket;
        }
    }
    return panel;
}

} // namespace

ArtifactReport artifact_report(const ArtifactPartition& partition, const Dataset& dataset, const Run& partial,
                               const Run& full, const ArtifactOptions& options, Diagnostics* diag)
{
    ArtifactReport report;
    report.weighting = options.weighting;
    report.estimator = options.estimator;
    const auto partial_stats = collect_bucket_stats(dataset, partial, nullptr);
    const auto full_stats = collect_bucket_stats(dataset, full, diag);

    for (auto subset : {ArtifactSubset::likely, ArtifactSubset::unlikely}) {
        const auto& id_list = subset == ArtifactSubset::likely ? partition.likely_ids : partition.unlikely_ids;
        if (id_list.empty()) {
            warn(diag, std::string("artifact subset '") + std::string(to_string(subset)) +
                           "' has no buckets; row omitted");
            continue;
        }
        const std::set<std::string> ids(id_list.begin(), id_list.end());
        const auto& per_subset = subset == ArtifactSubset::likely ? options.reference_likely : options.reference_unlikely;
        const StratumDistribution* reference =
            per_subset ? &*per_subset : (options.reference ? &*options.reference : nullptr);

        ArtifactRow row;
        row.subset = subset;
        row.n_buckets = ids.size();
        const auto ps = restrict_to(partial_stats, ids);
        const auto fs = restrict_to(full_stats, ids);
        row.partial = run_panel(dataset, partial, ps, ids, reference, options.weighting, diag);
        row.full = run_panel(dataset, full, fs, ids, reference, options.weighting, diag);
        if (!fs.empty()) {
            row.p_c = estimate_pc(fs, options.weighting, options.estimator);
            if (reference != nullptr) {
                row.p_c_corrected = corrected_metrics(fs, *reference, options.weighting, options.estimator, diag).p_c;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

std::string artifact_report_to_csv(const ArtifactReport& report)
{
    auto pct = [](std::optional<double> x) { return x ? format_percent(x) : std::string(); };
    std::string out = csv_row({"subset", "n_buckets", "partial_A_O", "partial_A_bucket", "partial_A_bucket_corrected",
                               "full_A_O", "full_A_bucket", "full_A_bucket_corrected", "P_C", "P_C_corrected"}) +
                      "\n";
    for (const auto& r : report.rows) {
        out += csv_row({std::string(to_string(r.subset)), std::to_string(r.n_buckets), pct(r.partial.a_original),
                        pct(r.partial.a_bucket), pct(r.partial.a_bucket_corrected), pct(r.full.a_original),
                        pct(r.full.a_bucket), pct(r.full.a_bucket_corrected), pct(r.p_c), pct(r.p_c_corrected)}) +
               "\n";
    }
    return out;
}

namespace {

json opt(std::optional<double> x)
{
    if (!x) {
        return nullptr;
    }
    if (!std::isfinite(*x)) {
        throw InvariantError("non-finite value in artifact report");
    }
    return *x;
}

json panel_json(const RunPanel& p)
{
    return json{{"A_O", opt(p.a_original)},
                {"n_original_predicted", p.n_original_predicted},
                {"n_original_correct", p.n_original_correct},
                {"A_bucket", opt(p.a_bucket)},
                {"A_bucket_corrected", opt(p.a_bucket_corrected)}};
}

} // namespace

std::string artifact_report_to_json(const ArtifactReport& report, const ArtifactPartition& partition)
{
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back(json{{"subset", std::string(to_string(r.subset))},
                            {"n_buckets", r.n_buckets},
                            {"partial", panel_json(r.partial)},
                            {"full", panel_json(r.full)},
                            {"P_C", opt(r.p_c)},
                            {"P_C_corrected", opt(r.p_c_corrected)}});
    }
    return json{{"rows", rows},
                {"partition", json{{"likely", partition.likely_ids}, {"unlikely", partition.unlikely_ids}}},
                {"weighting", std::string(to_string(report.weighting))},
                {"estimator", std::string(to_string(report.estimator))}}
               .dump(2) +
           "\n";
}

} // namespace paracon
