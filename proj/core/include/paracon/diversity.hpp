#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paracon/tree.hpp"

namespace paracon {

// Character-level Levenshtein distance over Unicode code points.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

// Lowercased, deduplicated, sorted tokens joined by single spaces.
std::string canonical_bag(std::string_view text);

// Levenshtein distance between the canonical bags of words, divided by the
// longer bag's length in code points. 0 when both are empty.
double lexical_distance(std::string_view a, std::string_view b);

// Tree edit distance between the depth-limited trees, divided by the sum of
// their node counts.
double syntactic_distance(const ParseTree& a, const ParseTree& b, std::size_t depth = 3);

enum class ParaphraseOrigin { human, automatic };

std::string_view to_string(ParaphraseOrigin origin) noexcept;
std::optional<ParaphraseOrigin> parse_paraphrase_origin(std::string_view text) noexcept;

struct ParaphrasePairRecord {
    std::string problem_id;
    std::string dataset_tag;
    std::string original_text;
    std::string paraphrase_text;
    ParaphraseOrigin source = ParaphraseOrigin::human;
    std::optional<ParseTree> original_tree;
    std::optional<ParseTree> paraphrase_tree;
    std::optional<double> semantic_score; // precomputed upstream
};

struct DiversitySummary {
    std::string dataset_tag;
    ParaphraseOrigin source = ParaphraseOrigin::human;
    double mean_lex = 0.0;
    std::optional<double> mean_syn; // over pairs that carry both trees
    std::optional<double> mean_sem; // over pairs with a semantic score
    std::size_t n_pairs = 0;
};

// Per (dataset_tag, source) means, ordered by dataset_tag then source.
std::vector<DiversitySummary> summarize_diversity(std::span<const ParaphrasePairRecord> pairs, std::size_t depth = 3);

// pairs.jsonl: {problem_id, dataset_tag?, original_text, paraphrase_text, source,
// original_tree?, paraphrase_tree?, semantic_score?}
std::vector<ParaphrasePairRecord> load_pairs(const std::filesystem::path& path);
std::vector<ParaphrasePairRecord> read_pairs(std::istream& in, const std::string& source_name);

// dataset,source,n_pairs,lex,syn,sem with percentages to one decimal.
std::string diversity_to_csv(std::span<const DiversitySummary> rows);

} // namespace paracon
