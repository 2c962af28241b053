#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace paracon {

struct FleissKappa {
    // nullopt when chance agreement is 1 (every rating in one category): kappa is undefined.
    std::optional<double> kappa;
    double observed_agreement = 0.0; // P-bar
    double chance_agreement = 0.0;   // P-bar_e
    std::size_t raters = 0;
};

// ratings[i][j] = number of raters who put item i in category j. Every item
// must be rated by the same number of raters (at least two); throws InputError otherwise.
FleissKappa fleiss_kappa(const std::vector<std::vector<std::size_t>>& ratings);

// |A n B| / |A u B| over token sets; 1 when both texts have no tokens.
double jaccard_similarity(std::string_view a, std::string_view b);

} // namespace paracon
