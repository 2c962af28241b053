#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "output.hpp"
#include "paracon/aflite.hpp"
#include "paracon/artifact.hpp"
#include "paracon/consistency.hpp"
#include "paracon/correction.hpp"
#include "paracon/diversity.hpp"
#include "paracon/format.hpp"
#include "paracon/io.hpp"
#include "paracon/report.hpp"
#include "paracon/stratify.hpp"
#include "paracon/synth.hpp"

namespace paracon::cli {

namespace fs = std::filesystem;

namespace {

void print_warnings(const Diagnostics& diag)
{
    std::set<std::string> shown;
    for (const auto& w : diag.warnings()) {
        if (shown.insert(w).second) {
            std::cerr << "warning: " << w << "\n";
        }
    }
}

Weighting weighting_arg(const std::string& text)
{
    if (auto w = parse_weighting(text)) {
        return *w;
    }
    throw InputError("unknown weighting '" + text + "' (expected uniform or size)");
}

Estimator estimator_arg(const std::string& text)
{
    if (auto e = parse_estimator(text)) {
        return *e;
    }
    throw InputError("unknown estimator '" + text + "' (expected plugin or unbiased_pairs)");
}

double parse_real(const std::string& text, const std::string& what)
{
    double x = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (ec != std::errc() || ptr != end) {
        throw InputError("invalid number for " + what + ": '" + text + "'");
    }
    return x;
}

std::string cell(std::optional<double> x)
{
    return x ? format_double(*x) : std::string();
}

std::optional<StratumDistribution> optional_reference(const std::optional<std::string>& path)
{
    if (!path) {
        return std::nullopt;
    }
    return load_reference_distribution(*path);
}

json optional_json(const std::optional<std::string>& s)
{
    return s ? json(*s) : json(nullptr);
}

} // namespace

void run_eval(const EvalArgs& args)
{
    Diagnostics diag;
    Manifest manifest("eval");
    manifest.input("buckets", args.buckets);
    manifest.input("predictions", args.predictions);
    if (args.reference) {
        manifest.input("reference", *args.reference);
    }

    EvaluateOptions options;
    options.weighting = weighting_arg(args.weighting);
    options.estimator = estimator_arg(args.estimator);
    const Dataset dataset = load_buckets(args.buckets, {}, &diag);
    const RunTable table = load_predictions(args.predictions, dataset, &diag);
    options.reference = optional_reference(args.reference);
    if (!options.reference) {
        diag.warn("no --reference given; corrected columns are absent");
    }

    const std::vector<std::string> run_ids = args.runs.empty() ? table.run_ids() : args.runs;
    std::optional<double> default_accuracy;
    std::map<std::string, double> run_accuracy;
    for (const auto& spec : args.test_accuracy) {
        const auto eq = spec.find('=');
        const double value = parse_real(eq == std::string::npos ? spec : spec.substr(eq + 1), "--test-accuracy");
        if (!(value >= 0.0 && value <= 1.0)) {
            throw InputError("--test-accuracy must lie in [0, 1]: '" + spec + "'");
        }
        if (eq == std::string::npos) {
            default_accuracy = value;
        } else {
            const std::string run = spec.substr(0, eq);
            if (std::find(run_ids.begin(), run_ids.end(), run) == run_ids.end()) {
                throw InputError("--test-accuracy names unknown run '" + run + "'");
            }
            run_accuracy[run] = value;
        }
    }

    std::vector<EvaluationReport> reports;
    for (const auto& id : run_ids) {
        EvaluateOptions o = options;
        auto it = run_accuracy.find(id);
        o.test_accuracy = it != run_accuracy.end() ? std::optional<double>(it->second) : default_accuracy;
        reports.push_back(evaluate_run(dataset, table.at(id), o, &diag));
    }

    manifest.config() = {{"runs", run_ids},
                         {"weighting", args.weighting},
                         {"estimator", args.estimator},
                         {"reference", optional_json(args.reference)},
                         {"test_accuracy", args.test_accuracy}};
    manifest.write(args.out, reports_to_json(reports));
    const std::string text = reports_to_table(reports);
    if (args.table) {
        manifest.write(*args.table, text);
    } else {
        std::cout << text;
    }
    manifest.finish();
    print_warnings(diag);
}

void run_sweep(const SweepArgs& args)
{
    Diagnostics diag;
    Manifest manifest("sweep");
    manifest.input("manifest", args.manifest);
    const fs::path base = fs::path(args.manifest).parent_path();
    json doc;
    try {
        doc = json::parse(read_text_file(args.manifest));
    } catch (const json::exception& e) {
        throw InputError(args.manifest + ": malformed JSON: " + e.what());
    }
    auto field = [&](const json& obj, const char* key, bool required) -> std::optional<std::string> {
        if (!obj.contains(key)) {
            if (required) {
                throw InputError(args.manifest + ": missing '" + key + "'");
            }
            return std::nullopt;
        }
        if (!obj.at(key).is_string()) {
            throw InputError(args.manifest + ": '" + key + "' must be a string");
        }
        return obj.at(key).get<std::string>();
    };
    if (!doc.is_object() || !doc.contains("runs") || !doc.at("runs").is_array()) {
        throw InputError(args.manifest + ": expected an object with a 'runs' array");
    }
    auto resolve = [&](const std::string& p) { return (base / p).lexically_normal(); };
    const Weighting w = weighting_arg(field(doc, "weighting", false).value_or("uniform"));
    const Estimator e = estimator_arg(field(doc, "estimator", false).value_or("plugin"));
    const auto default_reference = field(doc, "reference", false);

    std::map<std::string, Dataset> datasets;
    std::vector<EvaluationReport> reports;
    std::set<std::string> seen;
    for (const auto& entry : doc.at("runs")) {
        if (!entry.is_object()) {
            throw InputError(args.manifest + ": every entry of 'runs' must be an object");
        }
        const fs::path buckets = resolve(*field(entry, "buckets", true));
        const fs::path predictions = resolve(*field(entry, "predictions", true));
        auto it = datasets.find(buckets.string());
        if (it == datasets.end()) {
            it = datasets.emplace(buckets.string(), load_buckets(buckets, {}, &diag)).first;
        }
        const RunTable table = load_predictions(predictions, it->second, &diag);
        const auto run_id = field(entry, "run_id", false);
        const auto reference_path = field(entry, "reference", false) ? field(entry, "reference", false)
                                                                     : default_reference;
        EvaluateOptions options;
        options.weighting = w;
        options.estimator = e;
        if (reference_path) {
            options.reference = load_reference_distribution(resolve(*reference_path));
        }
        for (const auto& id : run_id ? std::vector<std::string>{*run_id} : table.run_ids()) {
            if (!seen.insert(id).second) {
                throw InputError(args.manifest + ": duplicate run id '" + id + "'");
            }
            reports.push_back(evaluate_run(it->second, table.at(id), options, &diag));
        }
    }
    if (reports.size() < 2) {
        throw InputError(args.manifest + ": a sweep needs at least 2 runs, found " + std::to_string(reports.size()));
    }
    std::sort(reports.begin(), reports.end(),
              [](const EvaluationReport& a, const EvaluationReport& b) { return a.run_id < b.run_id; });

    std::string csv = csv_row({"run_id", "n_buckets", "a_bucket", "a_bucket_corrected", "p_c", "p_c_corrected", "vap",
                               "pvap"}) +
                      "\n";
    for (const auto& r : reports) {
        csv += csv_row({r.run_id, std::to_string(r.n_buckets), format_double(r.a_bucket), cell(r.a_bucket_corrected),
                        format_double(r.p_c), cell(r.p_c_corrected), format_double(r.vap), cell(r.pvap)}) +
               "\n";
    }
    manifest.config() = {{"weighting", std::string(to_string(w))},
                         {"estimator", std::string(to_string(e))},
                         {"runs", doc.at("runs")}};
    manifest.write(args.out, csv);
    manifest.finish();
    print_warnings(diag);
}

void run_curves(const CurvesArgs& args)
{
    if (!(args.acc_min >= 0.0 && args.acc_max <= 1.0 && args.acc_min <= args.acc_max)) {
        throw InputError("accuracy grid must satisfy 0 <= acc-min <= acc-max <= 1");
    }
    if (args.acc_steps == 0) {
        throw InputError("--acc-steps must be positive");
    }
    if (args.fractions.empty()) {
        throw InputError("--fractions must name at least one fraction");
    }
    for (double f : args.fractions) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw InputError("fraction outside [0, 1]: " + format_double(f));
        }
    }
    Manifest manifest("curves");
    std::string csv = csv_row({"acc", "fraction", "p_c"}) + "\n";
    for (double f : args.fractions) {
        for (std::size_t i = 0; i < args.acc_steps; ++i) {
            const double acc =
                args.acc_steps == 1
                    ? args.acc_min
                    : args.acc_min + static_cast<double>(i) * (args.acc_max - args.acc_min) /
                                         static_cast<double>(args.acc_steps - 1);
            csv += csv_row({format_double(acc), format_double(f), format_double(iso_pvap_curve(acc, f))}) + "\n";
        }
    }
    manifest.config() = {{"acc_min", args.acc_min},
                         {"acc_max", args.acc_max},
                         {"acc_steps", args.acc_steps},
                         {"fractions", args.fractions}};
    manifest.write(args.out, csv);
    manifest.finish();
}

void run_aflite(const AfliteArgs& args)
{
    Manifest manifest("aflite");
    manifest.input("embeddings", args.embeddings);
    AfliteConfig config;
    config.n_ensemble = args.n_ensemble;
    config.m_train = args.m_train;
    config.k_remove = args.k_remove;
    config.tau = args.tau;
    config.seed = args.seed;
    config.probe.learning_rate = args.learning_rate;
    config.probe.epochs = args.epochs;
    config.probe.l2 = args.l2;
    config.threads = args.threads;
    const auto data = load_embeddings(args.embeddings);
    const FilterResult result = aflite_filter(data, config);

    // threads is left out of the echo: results do not depend on it.
    manifest.config() = {{"n_ensemble", args.n_ensemble}, {"m_train", args.m_train},
                         {"k_remove", args.k_remove},     {"tau", args.tau},
                         {"learning_rate", args.learning_rate}, {"epochs", args.epochs},
                         {"l2", args.l2}};
    manifest.seed(args.seed);
    manifest.write(args.out, filter_result_to_json(result));
    manifest.finish();
}

void run_stratify(const StratifyArgs& args)
{
    Manifest manifest("stratify");
    manifest.input("candidates", args.candidates);
    StratifyConfig config;
    config.quota_per_decile = args.quota;
    config.seed = args.seed;
    const auto candidates = load_candidates(args.candidates);
    const StratifiedSample sample = stratified_sample(candidates, config, args.total);
    json doc = {{"ids", sample.ids()},
                {"easy", sample.easy},
                {"hard", sample.hard},
                {"per_decile", {{"easy", sample.easy_per_decile}, {"hard", sample.hard_per_decile}}}};
    manifest.config() = {{"total_per_subset", args.total},
                         {"quota_per_decile", args.quota ? json(*args.quota) : json(nullptr)}};
    manifest.seed(args.seed);
    manifest.write(args.out, doc.dump(2) + "\n");
    manifest.finish();
}

void run_diversity(const DiversityArgs& args)
{
    Manifest manifest("diversity");
    manifest.input("pairs", args.pairs);
    const auto pairs = load_pairs(args.pairs);
    const auto rows = summarize_diversity(pairs, args.depth);
    manifest.config() = {{"depth", args.depth}};
    manifest.write(args.out, diversity_to_csv(rows));
    manifest.finish();
}

void run_artifact(const ArtifactArgs& args)
{
    Diagnostics diag;
    Manifest manifest("artifact-split");
    manifest.input("buckets", args.buckets);
    for (std::size_t i = 0; i < args.predictions.size(); ++i) {
        manifest.input("predictions[" + std::to_string(i) + "]", args.predictions[i]);
    }
    if (args.predictions.empty()) {
        throw InputError("at least one --predictions file is required");
    }
    ArtifactOptions options;
    options.weighting = weighting_arg(args.weighting);
    options.estimator = estimator_arg(args.estimator);
    const Dataset dataset = load_buckets(args.buckets, {}, &diag);

    RunTable merged;
    for (const auto& path : args.predictions) {
        const RunTable t = load_predictions(path, dataset, &diag);
        for (const auto& [run_id, run] : t.runs()) {
            for (const auto& [item_id, p] : run.predictions()) {
                merged.add({run_id, item_id, p.predicted_label, p.confidence_in_gold});
            }
        }
    }
    options.reference = optional_reference(args.reference);
    options.reference_likely = optional_reference(args.reference_likely);
    options.reference_unlikely = optional_reference(args.reference_unlikely);

    PartitionOptions popts;
    popts.require_complete = !args.allow_missing;
    const Run& partial = merged.at(args.partial_run);
    const Run& full = merged.at(args.full_run);
    const ArtifactPartition partition = partition_by_partial_input(dataset, partial, popts, &diag);
    const ArtifactReport report = artifact_report(partition, dataset, partial, full, options, &diag);

    manifest.config() = {{"partial_run", args.partial_run},
                         {"full_run", args.full_run},
                         {"weighting", args.weighting},
                         {"estimator", args.estimator},
                         {"reference", optional_json(args.reference)},
                         {"reference_likely", optional_json(args.reference_likely)},
                         {"reference_unlikely", optional_json(args.reference_unlikely)},
                         {"allow_missing", args.allow_missing}};
    manifest.write(args.out_csv, artifact_report_to_csv(report));
    if (args.out_json) {
        manifest.write(*args.out_json, artifact_report_to_json(report, partition));
    }
    manifest.finish();
    print_warnings(diag);
}

void run_synth(const SynthArgs& args)
{
    Manifest manifest("synth");
    ScenarioSpec spec;
    if (auto k = parse_scenario_kind(args.kind)) {
        spec.kind = *k;
    } else {
        throw InputError("unknown scenario kind '" + args.kind + "' (expected pure, uniform or mixed)");
    }
    spec.n_buckets = args.n_buckets;
    spec.bucket_size = args.bucket_size;
    spec.accuracy = args.accuracy;
    spec.theta_spread = args.spread;
    spec.seed = args.seed;
    spec.run_id = args.run_id;
    const Scenario scenario = generate_scenario(spec);

    std::ostringstream buckets;
    write_buckets(buckets, scenario.dataset);
    std::ostringstream predictions;
    write_predictions(predictions, scenario.runs());

    manifest.config() = {{"kind", args.kind},
                         {"n_buckets", args.n_buckets},
                         {"bucket_size", args.bucket_size},
                         {"accuracy", args.accuracy},
                         {"spread", args.spread},
                         {"run_id", args.run_id}};
    manifest.seed(args.seed);
    manifest.write(args.out_buckets, buckets.str());
    manifest.write(args.out_predictions, predictions.str());
    manifest.finish();
}

} // namespace paracon::cli
