#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/data.hpp"

namespace paracon {

// pure: each bucket all right or all wrong. uniform: every bucket at the same
// accuracy. mixed: per-bucket accuracy drawn around the target.
enum class ScenarioKind { pure, uniform, mixed };

std::string_view to_string(ScenarioKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario_kind(std::string_view text) noexcept;

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::pure;
    std::size_t n_buckets = 10;
    std::size_t bucket_size = 5;
    double accuracy = 0.8;
    double theta_spread = 0.0; // mixed only: theta ~ U[accuracy - spread, accuracy + spread]
    std::uint64_t seed = 0;
    std::string run_id = "synthetic";

    // Throws InputError on a non-integral count or a theta range outside [0, 1].
    void validate() const;
};

struct Scenario {
    Dataset dataset;
    std::vector<PredictionRecord> predictions; // bucket order, original first
    RunTable runs() const;
};

Scenario generate_scenario(const ScenarioSpec& spec);

} // namespace paracon
