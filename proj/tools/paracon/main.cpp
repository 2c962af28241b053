#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

#ifndef PARACON_VERSION
#define PARACON_VERSION "unknown"
#endif

using namespace paracon::cli;

namespace {

void add_eval(CLI::App& app, EvalArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("eval", "Consistency and accuracy report for prediction runs");
    cmd->add_option("--buckets", a.buckets, "buckets.jsonl")->required();
    cmd->add_option("--predictions", a.predictions, "predictions.jsonl")->required();
    cmd->add_option("--run", a.runs, "Run id to evaluate (repeatable; default all)");
    cmd->add_option("--weighting", a.weighting, "uniform | size")->capture_default_str();
    cmd->add_option("--estimator", a.estimator, "plugin | unbiased_pairs")->capture_default_str();
    cmd->add_option("--reference", a.reference, "Reference decile distribution (JSON)");
    cmd->add_option("--test-accuracy", a.test_accuracy, "A_T as VALUE or RUN=VALUE (repeatable)");
    cmd->add_option("--out", a.out, "Report JSON")->required();
    cmd->add_option("--table", a.table, "Human-readable table (default stdout)");
    cmd->callback([&] { action = [&] { run_eval(a); }; });
}

void add_sweep(CLI::App& app, SweepArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("sweep", "One CSV row per run across several runs");
    cmd->add_option("--manifest", a.manifest, "Sweep manifest (JSON)")->required();
    cmd->add_option("--out", a.out, "CSV output")->required();
    cmd->callback([&] { action = [&] { run_sweep(a); }; });
}

void add_curves(CLI::App& app, CurvesArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("curves", "Minimum-P_C and iso-PVAP curves");
    cmd->add_option("--acc-min", a.acc_min)->capture_default_str();
    cmd->add_option("--acc-max", a.acc_max)->capture_default_str();
    cmd->add_option("--acc-steps", a.acc_steps)->capture_default_str();
    cmd->add_option("--fractions", a.fractions, "Comma-separated PVAP fractions")->delimiter(',')->capture_default_str();
    cmd->add_option("--out", a.out, "CSV output")->required();
    cmd->callback([&] { action = [&] { run_curves(a); }; });
}

void add_aflite(CLI::App& app, AfliteArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("aflite", "Adversarial filtering of embedded examples");
    cmd->add_option("--embeddings", a.embeddings, "embeddings.jsonl")->required();
    cmd->add_option("-n,--n-ensemble", a.n_ensemble)->capture_default_str();
    cmd->add_option("-m,--m-train", a.m_train)->capture_default_str();
    cmd->add_option("-k,--k-remove", a.k_remove)->capture_default_str();
    cmd->add_option("--tau", a.tau)->capture_default_str();
    cmd->add_option("--seed", a.seed)->capture_default_str();
    cmd->add_option("--lr", a.learning_rate, "Probe learning rate")->capture_default_str();
    cmd->add_option("--epochs", a.epochs, "Probe epochs")->capture_default_str();
    cmd->add_option("--l2", a.l2, "Probe L2 penalty")->capture_default_str();
    cmd->add_option("--threads", a.threads, "0 = all cores")->capture_default_str();
    cmd->add_option("--out", a.out, "Result JSON")->required();
    cmd->callback([&] { action = [&] { run_aflite(a); }; });
}

void add_stratify(CLI::App& app, StratifyArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("stratify", "Confidence-decile round-robin sample of easy and hard items");
    cmd->add_option("--candidates", a.candidates, "candidates.jsonl")->required();
    cmd->add_option("--total", a.total, "Ids per subset")->capture_default_str();
    cmd->add_option("--quota", a.quota, "Cap per decile and subset");
    cmd->add_option("--seed", a.seed)->capture_default_str();
    cmd->add_option("--out", a.out, "Selection JSON")->required();
    cmd->callback([&] { action = [&] { run_stratify(a); }; });
}

void add_diversity(CLI::App& app, DiversityArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("diversity", "Lexical and syntactic diversity of paraphrase pairs");
    cmd->add_option("--pairs", a.pairs, "pairs.jsonl")->required();
    cmd->add_option("--depth", a.depth, "Parse-tree truncation depth")->capture_default_str();
    cmd->add_option("--out", a.out, "CSV output")->required();
    cmd->callback([&] { action = [&] { run_diversity(a); }; });
}

void add_artifact(CLI::App& app, ArtifactArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("artifact-split", "Split by partial-input correctness and report per subset");
    cmd->add_option("--buckets", a.buckets, "buckets.jsonl")->required();
    cmd->add_option("--predictions", a.predictions, "predictions.jsonl (repeatable)")->required();
    cmd->add_option("--partial-run", a.partial_run)->capture_default_str();
    cmd->add_option("--full-run", a.full_run)->capture_default_str();
    cmd->add_option("--weighting", a.weighting)->capture_default_str();
    cmd->add_option("--estimator", a.estimator)->capture_default_str();
    cmd->add_option("--reference", a.reference, "Whole-set reference distribution (JSON)");
    cmd->add_option("--reference-likely", a.reference_likely, "Reference for the likely subset");
    cmd->add_option("--reference-unlikely", a.reference_unlikely, "Reference for the unlikely subset");
    cmd->add_flag("--allow-missing", a.allow_missing, "Skip buckets lacking a partial-input prediction");
    cmd->add_option("--out-csv", a.out_csv)->required();
    cmd->add_option("--out-json", a.out_json);
    cmd->callback([&] { action = [&] { run_artifact(a); }; });
}

void add_synth(CLI::App& app, SynthArgs& a, std::function<void()>& action)
{
    auto* cmd = app.add_subcommand("synth", "Synthetic buckets and predictions");
    cmd->add_option("--kind", a.kind, "pure | uniform | mixed")->capture_default_str();
    cmd->add_option("--n-buckets", a.n_buckets)->capture_default_str();
    cmd->add_option("--bucket-size", a.bucket_size)->capture_default_str();
    cmd->add_option("--accuracy", a.accuracy)->capture_default_str();
    cmd->add_option("--spread", a.spread, "Half-width of the theta range (mixed)")->capture_default_str();
    cmd->add_option("--seed", a.seed)->capture_default_str();
    cmd->add_option("--run-id", a.run_id)->capture_default_str();
    cmd->add_option("--out-buckets", a.out_buckets)->required();
    cmd->add_option("--out-predictions", a.out_predictions)->required();
    cmd->callback([&] { action = [&] { run_synth(a); }; });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Paraphrastic consistency toolkit"};
    app.set_version_flag("--version", PARACON_VERSION);
    app.require_subcommand(1);

    std::function<void()> action;
    EvalArgs eval;
    SweepArgs sweep;
    CurvesArgs curves;
    AfliteArgs aflite;
    StratifyArgs stratify;
    DiversityArgs diversity;
    ArtifactArgs artifact;
    SynthArgs synth;
    add_eval(app, eval, action);
    add_sweep(app, sweep, action);
    add_curves(app, curves, action);
    add_aflite(app, aflite, action);
    add_stratify(app, stratify, action);
    add_diversity(app, diversity, action);
    add_artifact(app, artifact, action);
    add_synth(app, synth, action);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        action();
    } catch (const paracon::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const paracon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
