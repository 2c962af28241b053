#include "paracon/stratify.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "jsonl.hpp"
#include "paracon/error.hpp"
#include "paracon/random.hpp"

namespace paracon {

std::string_view to_string(Subset subset) noexcept { return subset == Subset::easy ? "easy" : "hard"; }

std::optional<Subset> parse_subset(std::string_view text) noexcept
{
    if (text == "easy") {
        return Subset::easy;
    }
    if (text == "hard") {
        return Subset::hard;
    }
    return std::nullopt;
}

std::vector<std::string> StratifiedSample::ids() const
{
    std::vector<std::string> out = easy;
    out.insert(out.end(), hard.begin(), hard.end());
    return out;
}

namespace {

void sample_subset(std::vector<const StratifyCandidate*> members, Subset subset, const StratifyConfig& config,
                   std::size_t total, std::vector<std::string>& selected, std::array<std::size_t, kDeciles>& counts)
{
    std::sort(members.begin(), members.end(),
              [](const StratifyCandidate* a, const StratifyCandidate* b) { return a->id < b->id; });
    std::array<std::vector<const StratifyCandidate*>, kDeciles> pools;
    for (const auto* c : members) {
        pools[decile_of(c->confidence_in_gold)].push_back(c);
    }
    auto available = [&](std::size_t d) {
        std::size_t n = pools[d].size();
        if (config.quota_per_decile) {
            n = std::min(n, *config.quota_per_decile);
        }
        return n;
    };
    std::size_t capacity = 0;
    for (std::size_t d = 0; d < kDeciles; ++d) {
        capacity += available(d);
    }
    if (total > capacity) {
        throw InputError("subset '" + std::string(to_string(subset)) + "' can supply " + std::to_string(capacity) +
                         " candidates, " + std::to_string(total) + " requested");
    }

    Rng rng(derive_seed(config.seed, {subset == Subset::easy ? 0u : 1u}));
    while (selected.size() < total) {
        for (std::size_t d = 0; d < kDeciles && selected.size() < total; ++d) {
            auto& pool = pools[d];
            if (pool.empty() || (config.quota_per_decile && counts[d] >= *config.quota_per_decile)) {
                continue;
            }
            const std::size_t pick = rng.uniform_index(pool.size());
            selected.push_back(pool[pick]->id);
            pool[pick] = pool.back();
            pool.pop_back();
            ++counts[d];
        }
    }
}

} // namespace

StratifiedSample stratified_sample(std::span<const StratifyCandidate> candidates, const StratifyConfig& config,
                                   std::size_t total_per_subset)
{
    if (config.quota_per_decile && *config.quota_per_decile == 0) {
        throw InputError("quota_per_decile must be at least 1");
    }
    std::set<std::string_view> ids;
    std::vector<const StratifyCandidate*> easy;
    std::vector<const StratifyCandidate*> hard;
    for (const auto& c : candidates) {
        if (!ids.insert(c.id).second) {
            throw InputError("duplicate candidate id '" + c.id + "'");
        }
        decile_of(c.confidence_in_gold); // range check
        (c.subset == Subset::easy ? easy : hard).push_back(&c);
    }
    StratifiedSample out;
    sample_subset(std::move(easy), Subset::easy, config, total_per_subset, out.easy, out.easy_per_decile);
    sample_subset(std::move(hard), Subset::hard, config, total_per_subset, out.hard, out.hard_per_decile);
    return out;
}

std::vector<StratifyCandidate> read_candidates(std::istream& in, const std::string& source_name)
{
    std::vector<StratifyCandidate> out;
    detail::for_each_record(in, source_name, [&](const detail::json& j, std::size_t) {
        StratifyCandidate c;
        c.id = detail::require_string(j, "id");
        c.confidence_in_gold = detail::require_probability(j, "confidence_in_gold");
        const std::string subset = detail::require_string(j, "subset");
        auto parsed = parse_subset(subset);
        if (!parsed) {
            detail::fail("field 'subset' must be 'easy' or 'hard', got '" + subset + "'");
        }
        c.subset = *parsed;
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<StratifyCandidate> load_candidates(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return read_candidates(in, path.string());
}

} // namespace paracon
