#include "paracon/agreement.hpp"

#include <set>
#include <string>

#include "numeric.hpp"
#include "paracon/error.hpp"
#include "paracon/text.hpp"

namespace paracon {

FleissKappa fleiss_kappa(const std::vector<std::vector<std::size_t>>& ratings)
{
    if (ratings.empty()) {
        throw InputError("Fleiss's kappa needs at least one rated item");
    }
    const std::size_t categories = ratings.front().size();
    if (categories == 0) {
        throw InputError("Fleiss's kappa needs at least one category");
    }
    std::size_t raters = 0;
    for (std::size_t j = 0; j < categories; ++j) {
        raters += ratings.front()[j];
    }
    if (raters < 2) {
        throw InputError("Fleiss's kappa needs at least two raters per item");
    }

    std::vector<std::size_t> column_totals(categories, 0);
    detail::Accumulator agreement_sum;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        const auto& row = ratings[i];
        if (row.size() != categories) {
            throw InputError("item " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " categories, expected " + std::to_string(categories));
        }
        std::size_t row_total = 0;
        std::size_t pairs = 0;
        for (std::size_t j = 0; j < categories; ++j) {
            row_total += row[j];
            pairs += row[j] * (row[j] == 0 ? 0 : row[j] - 1);
            column_totals[j] += row[j];
        }
        if (row_total != raters) {
            throw InputError("item " + std::to_string(i) + " rated by " + std::to_string(row_total) +
                             " raters, expected " + std::to_string(raters));
        }
        agreement_sum.add(static_cast<long double>(pairs) / static_cast<long double>(raters * (raters - 1)));
    }

    const long double total = static_cast<long double>(ratings.size() * raters);
    long double chance = 0.0L;
    for (std::size_t j = 0; j < categories; ++j) {
        const long double p = static_cast<long double>(column_totals[j]) / total;
        chance += p * p;
    }
    const long double observed = agreement_sum.value() / static_cast<long double>(ratings.size());

    FleissKappa out;
    out.raters = raters;
    out.observed_agreement = static_cast<double>(observed);
    out.chance_agreement = static_cast<double>(chance);
    // Chance agreement is exactly 1 only when a single category holds every rating.
    bool single_category = false;
    for (std::size_t j = 0; j < categories; ++j) {
        single_category = single_category || column_totals[j] == ratings.size() * raters;
    }
    if (!single_category) {
        out.kappa = static_cast<double>((observed - chance) / (1.0L - chance));
    }
    return out;
}

double jaccard_similarity(std::string_view a, std::string_view b)
{
    const auto ta = tokenize(a);
    const auto tb = tokenize(b);
    const std::set<std::string> sa(ta.begin(), ta.end());
    const std::set<std::string> sb(tb.begin(), tb.end());
    if (sa.empty() && sb.empty()) {
        return 1.0;
    }
    std::size_t common = 0;
    for (const auto& t : sa) {
        common += sb.count(t);
    }
    const std::size_t unite = sa.size() + sb.size() - common;
    return static_cast<double>(common) / static_cast<double>(unite);
}

} // namespace paracon
