#include "paracon/diversity.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "jsonl.hpp"
#include "numeric.hpp"
#include "paracon/error.hpp"
#include "paracon/format.hpp"
#include "paracon/text.hpp"

namespace paracon {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b)
{
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string canonical_bag(std::string_view text)
{
    auto tokens = tokenize(text);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) {
            out += ' ';
        }
        out += t;
    }
    return out;
}

double lexical_distance(std::string_view a, std::string_view b)
{
    const auto ca = decode_utf8(canonical_bag(a));
    const auto cb = decode_utf8(canonical_bag(b));
    const std::size_t longer = std::max(ca.size(), cb.size());
    if (longer == 0) {
        return 0.0;
    }
    return static_cast<double>(levenshtein(ca, cb)) / static_cast<double>(longer);
}

double syntactic_distance(const ParseTree& a, const ParseTree& b, std::size_t depth)
{
    const ParseTree ta = truncate_tree(a, depth);
    const ParseTree tb = truncate_tree(b, depth);
    const std::size_t nodes = ta.node_count() + tb.node_count();
    return static_cast<double>(tree_edit_distance(ta, tb)) / static_cast<double>(nodes);
}

std::string_view to_string(ParaphraseOrigin origin) noexcept
{
    return origin == ParaphraseOrigin::human ? "human" : "automatic";
}

std::optional<ParaphraseOrigin> parse_paraphrase_origin(std::string_view text) noexcept
{
    if (text == "human") {
        return ParaphraseOrigin::human;
    }
    if (text == "automatic") {
        return ParaphraseOrigin::automatic;
    }
    return std::nullopt;
}

std::vector<DiversitySummary> summarize_diversity(std::span<const ParaphrasePairRecord> pairs, std::size_t depth)
{
    if (pairs.empty()) {
        throw InputError("no paraphrase pairs to summarize");
    }
    struct Sums {
        detail::Accumulator lex, syn, sem;
        std::size_t n = 0, n_syn = 0, n_sem = 0;
    };
    std::map<std::tuple<std::string, ParaphraseOrigin>, Sums> groups;
    for (const auto& p : pairs) {
        auto& g = groups[{p.dataset_tag, p.source}];
        ++g.n;
        g.lex.add(lexical_distance(p.original_text, p.paraphrase_text));
        if (p.original_tree && p.paraphrase_tree) {
            ++g.n_syn;
            g.syn.add(syntactic_distance(*p.original_tree, *p.paraphrase_tree, depth));
        }
        if (p.semantic_score) {
            ++g.n_sem;
            g.sem.add(*p.semantic_score);
        }
    }
    std::vector<DiversitySummary> out;
    for (const auto& [key, g] : groups) {
        DiversitySummary s;
        s.dataset_tag = std::get<0>(key);
        s.source = std::get<1>(key);
        s.n_pairs = g.n;
        s.mean_lex = static_cast<double>(g.lex.value() / static_cast<long double>(g.n));
        if (g.n_syn > 0) {
            s.mean_syn = static_cast<double>(g.syn.value() / static_cast<long double>(g.n_syn));
        }
        if (g.n_sem > 0) {
            s.mean_sem = static_cast<double>(g.sem.value() / static_cast<long double>(g.n_sem));
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

std::optional<ParseTree> optional_tree(const detail::json& j, const char* key)
{
    auto text = detail::optional_string(j, key);
    if (!text) {
        return std::nullopt;
    }
    return parse_bracketed(*text);
}

} // namespace

std::vector<ParaphrasePairRecord> read_pairs(std::istream& in, const std::string& source_name)
{
    std::vector<ParaphrasePairRecord> out;
    detail::for_each_record(in, source_name, [&](const detail::json& j, std::size_t) {
        ParaphrasePairRecord p;
        p.problem_id = detail::require_string(j, "problem_id");
        p.dataset_tag = detail::optional_string(j, "dataset_tag").value_or("");
        p.original_text = detail::require_string(j, "original_text");
        p.paraphrase_text = detail::require_string(j, "paraphrase_text");
        const std::string source = detail::require_string(j, "source");
        auto parsed = parse_paraphrase_origin(source);
        if (!parsed) {
            detail::fail("field 'source' must be 'human' or 'automatic', got '" + source + "'");
        }
        p.source = *parsed;
        p.original_tree = optional_tree(j, "original_tree");
        p.paraphrase_tree = optional_tree(j, "paraphrase_tree");
        p.semantic_score = detail::optional_number(j, "semantic_score");
        out.push_back(std::move(p));
    });
    return out;
}

std::vector<ParaphrasePairRecord> load_pairs(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return read_pairs(in, path.string());
}

std::string diversity_to_csv(std::span<const DiversitySummary> rows)
{
    auto pct = [](std::optional<double> x) { return x ? format_percent(x) : std::string(); };
    std::string out = csv_row({"dataset", "source", "n_pairs", "lex", "syn", "sem"}) + "\n";
    for (const auto& r : rows) {
        out += csv_row({r.dataset_tag, std::string(to_string(r.source)), std::to_string(r.n_pairs),
                        format_percent(r.mean_lex), pct(r.mean_syn), pct(r.mean_sem)}) +
               "\n";
    }
    return out;
}

} // namespace paracon
