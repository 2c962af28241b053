#include "paracon/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "paracon/format.hpp"

namespace paracon {

using json = nlohmann::json;

EvaluationReport evaluate_run(const Dataset& dataset, const Run& run, const EvaluateOptions& options,
                              Diagnostics* diag)
{
    const auto stats = collect_bucket_stats(dataset, run, diag);
    if (stats.empty()) {
        throw InputError("run '" + run.id() + "' has no bucket with a predicted valid paraphrase");
    }
    EvaluationReport r;
    r.run_id = run.id();
    r.weighting = options.weighting;
    r.estimator = options.estimator;
    r.n_buckets = stats.size();
    for (const auto& s : stats) {
        r.n_paraphrases += s.n;
    }
    r.coverage = coverage(dataset, run);

    const auto panel = accuracy_panel(stats, options.weighting, options.test_accuracy, diag);
    r.a_original = panel.a_original;
    r.a_test = panel.a_test;
    r.a_bucket = panel.a_bucket;
    r.p_c = estimate_pc(stats, options.weighting, options.estimator);
    r.vap = vap(stats, options.weighting);
    const auto decomposition = variance_decomposition(stats);
    r.total_variance = decomposition.total;
    r.pvap = pvap(stats);

    if (options.reference) {
        const auto corrected = corrected_metrics(stats, *options.reference, options.weighting, options.estimator, diag);
        r.p_c_corrected = corrected.p_c;
        r.a_bucket_corrected = corrected.a_bucket;
    }
    return r;
}

namespace {

json number_or_null(std::optional<double> x)
{
    if (!x) {
        return nullptr;
    }
    if (!std::isfinite(*x)) {
        throw InvariantError("non-finite value in report");
    }
    return *x;
}

} // namespace

std::string reports_to_json(std::span<const EvaluationReport> reports)
{
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(json{
            {"run_id", r.run_id},
            {"n_buckets", r.n_buckets},
            {"n_paraphrases", r.n_paraphrases},
            {"coverage", number_or_null(r.coverage)},
            {"A_O", number_or_null(r.a_original)},
            {"A_T", number_or_null(r.a_test)},
            {"A_bucket", number_or_null(r.a_bucket)},
            {"A_bucket_corrected", number_or_null(r.a_bucket_corrected)},
            {"P_C", number_or_null(r.p_c)},
            {"P_C_corrected", number_or_null(r.p_c_corrected)},
            {"VAP", number_or_null(r.vap)},
            {"PVAP", number_or_null(r.pvap)},
            {"total_variance", number_or_null(r.total_variance)},
            {"weighting", std::string(to_string(r.weighting))},
            {"estimator", std::string(to_string(r.estimator))},
        });
    }
    return json{{"reports", arr}}.dump(2) + "\n";
}

std::string reports_to_table(std::span<const EvaluationReport> reports)
{
    const std::vector<std::string> header{"run", "A_O", "A_T", "A_bucket", "P_C", "~A_bucket", "~P_C", "VAP", "PVAP"};
    std::vector<std::vector<std::string>> rows{header};
    for (const auto& r : reports) {
        rows.push_back({r.run_id, format_percent(r.a_original), format_percent(r.a_test), format_percent(r.a_bucket),
                        format_percent(r.p_c), format_percent(r.a_bucket_corrected), format_percent(r.p_c_corrected),
                        format_percent(r.vap), format_percent(r.pvap)});
    }
    // Width in code points so the em dash for absent values aligns.
    auto width = [](const std::string& s) {
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    };
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], width(row[i]));
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string pad(widths[i] - width(row[i]), ' ');
            if (i == 0) {
                out << row[i] << pad;
            } else {
                out << "  " << pad << row[i];
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace paracon
