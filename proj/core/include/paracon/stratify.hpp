#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/correction.hpp"

namespace paracon {

enum class Subset { easy, hard };

std::string_view to_string(Subset subset) noexcept;
std::optional<Subset> parse_subset(std::string_view text) noexcept;

struct StratifyCandidate {
    std::string id;
    double confidence_in_gold = 0.0;
    Subset subset = Subset::easy;
};

struct StratifyConfig {
    // Optional cap on selections from one decile of one subset; must be >= 1 when set.
    std::optional<std::size_t> quota_per_decile;
    std::uint64_t seed = 0;
};

struct StratifiedSample {
    std::vector<std::string> easy; // selection order
    std::vector<std::string> hard;
    std::array<std::size_t, kDeciles> easy_per_decile{};
    std::array<std::size_t, kDeciles> hard_per_decile{};

    // easy ids followed by hard ids
    std::vector<std::string> ids() const;
};

// Round-robin over confidence deciles, separately for each subset: every round
// visits deciles in ascending order and draws one random unselected candidate
// from each decile that still has one, until total_per_subset ids are chosen.
// Throws InputError if a subset cannot supply total_per_subset candidates.
StratifiedSample stratified_sample(std::span<const StratifyCandidate> candidates, const StratifyConfig& config,
                                   std::size_t total_per_subset);

// candidates.jsonl: {id, confidence_in_gold, subset: "easy"|"hard"}
std::vector<StratifyCandidate> load_candidates(const std::filesystem::path& path);
std::vector<StratifyCandidate> read_candidates(std::istream& in, const std::string& source_name);

} // namespace paracon
