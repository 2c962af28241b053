#pragma once

// Reference implementations used only by tests. They are written from the
// definitions and deliberately share no code with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paracon/consistency.hpp"
#include "paracon/tree.hpp"

namespace oracle {

// Ordered pairs (i, j), i and j drawn with replacement, whose correctness agrees.
inline std::uint64_t agreeing_pairs(const std::vector<bool>& correct)
{
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < correct.size(); ++i) {
        for (std::size_t j = 0; j < correct.size(); ++j) {
            count += correct[i] == correct[j] ? 1 : 0;
        }
    }
    return count;
}

// Same, without replacement (i != j).
inline std::uint64_t agreeing_distinct_pairs(const std::vector<bool>& correct)
{
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < correct.size(); ++i) {
        for (std::size_t j = 0; j < correct.size(); ++j) {
            count += (i != j && correct[i] == correct[j]) ? 1 : 0;
        }
    }
    return count;
}

inline std::vector<double> weights_of(const std::vector<paracon::BucketStats>& stats, paracon::Weighting w)
{
    std::vector<double> out;
    for (const auto& s : stats) {
        out.push_back(w == paracon::Weighting::size ? static_cast<double>(s.n) : 1.0);
    }
    return out;
}

inline double weighted(const std::vector<paracon::BucketStats>& stats, paracon::Weighting w,
                       const std::function<double(double)>& f)
{
    const auto ws = weights_of(stats, w);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const double theta = static_cast<double>(stats[i].n_correct) / static_cast<double>(stats[i].n);
        num += ws[i] * f(theta);
        den += ws[i];
    }
    return num / den;
}

inline double plugin_pc(const std::vector<paracon::BucketStats>& stats, paracon::Weighting w)
{
    return weighted(stats, w, [](double t) { return t * t + (1 - t) * (1 - t); });
}

inline double mean_theta(const std::vector<paracon::BucketStats>& stats, paracon::Weighting w)
{
    return weighted(stats, w, [](double t) { return t; });
}

struct Variance {
    double total;
    double within;
    double between;
};

// Population variance of every individual 0/1 correctness value, and its split
// into the size-weighted mean of bucket variances plus the variance of bucket means.
inline Variance variance_by_enumeration(const std::vector<paracon::BucketStats>& stats)
{
    std::vector<double> xs;
    for (const auto& s : stats) {
        for (std::size_t i = 0; i < s.n; ++i) {
            xs.push_back(i < s.n_correct ? 1.0 : 0.0);
        }
    }
    double mean = 0.0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double total = 0.0;
    for (double x : xs) {
        total += (x - mean) * (x - mean);
    }
    total /= static_cast<double>(xs.size());

    double within = 0.0;
    double between = 0.0;
    for (const auto& s : stats) {
        const double m = static_cast<double>(s.n_correct) / static_cast<double>(s.n);
        double v = 0.0;
        for (std::size_t i = 0; i < s.n; ++i) {
            const double x = i < s.n_correct ? 1.0 : 0.0;
            v += (x - m) * (x - m);
        }
        within += v;
        between += static_cast<double>(s.n) * (m - mean) * (m - mean);
    }
    within /= static_cast<double>(xs.size());
    between /= static_cast<double>(xs.size());
    return {total, within, between};
}

// Textbook full-matrix Levenshtein over code points.
inline std::size_t edit_distance(const std::u32string& a, const std::u32string& b)
{
    std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i) {
        d[i][0] = i;
    }
    for (std::size_t j = 0; j <= b.size(); ++j) {
        d[0][j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        }
    }
    return d[a.size()][b.size()];
}

// Code points by leading-byte length; input is assumed valid UTF-8.
inline std::u32string code_points(const std::string& s)
{
    std::u32string out;
    for (std::size_t i = 0; i < s.size();) {
        const auto b = static_cast<unsigned char>(s[i]);
        const std::size_t len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
        char32_t cp = len == 1 ? b : b & (0xFF >> (len + 1));
        for (std::size_t k = 1; k < len; ++k) {
            cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

// Token bag with ASCII-only lowercasing, whitespace split, distinct tokens sorted, space joined.
inline std::string token_bag(const std::string& text)
{
    std::string lower;
    for (char c : text) {
        lower += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    std::istringstream in(lower);
    std::set<std::string> tokens;
    for (std::string t; in >> t;) {
        tokens.insert(t);
    }
    std::string out;
    for (const auto& t : tokens) {
        out += (out.empty() ? "" : " ") + t;
    }
    return out;
}

inline double lexical(const std::string& a, const std::string& b)
{
    const std::u32string ua = code_points(token_bag(a));
    const std::u32string ub = code_points(token_bag(b));
    const std::size_t longest = std::max(ua.size(), ub.size());
    if (longest == 0) {
        return 0.0;
    }
    return static_cast<double>(edit_distance(ua, ub)) / static_cast<double>(longest);
}

// Preorder flattening with ancestor relation.
struct FlatTree {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> ancestor; // ancestor[i][j]: i is a proper ancestor of j
};

inline FlatTree flatten(const paracon::ParseTree& t)
{
    FlatTree f;
    std::vector<std::size_t> parent;
    std::function<void(const paracon::ParseTree&, std::size_t)> walk = [&](const paracon::ParseTree& node,
                                                                             std::size_t up) {
        const std::size_t me = f.labels.size();
        f.labels.push_back(node.label);
        parent.push_back(up);
        for (const auto& c : node.children) {
            walk(c, me);
        }
    };
    walk(t, std::numeric_limits<std::size_t>::max());
    const std::size_t n = f.labels.size();
    f.ancestor.assign(n, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t p = parent[j]; p != std::numeric_limits<std::size_t>::max(); p = parent[p]) {
            f.ancestor[p][j] = true;
        }
    }
    return f;
}

// Minimum unit-cost edit script found by searching every valid ordered mapping
// (one-to-one, ancestor- and sibling-order preserving). Exponential; small trees only.
inline std::size_t tree_distance_exhaustive(const paracon::ParseTree& a, const paracon::ParseTree& b)
{
    const FlatTree fa = flatten(a);
    const FlatTree fb = flatten(b);
    const std::size_t na = fa.labels.size();
    const std::size_t nb = fb.labels.size();
    std::vector<std::pair<std::size_t, std::size_t>> mapping;
    std::vector<bool> used(nb, false);
    std::size_t best = na + nb;

    auto compatible = [&](std::size_t i, std::size_t j) {
        for (const auto& [p, q] : mapping) {
            if (fa.ancestor[p][i] != fb.ancestor[q][j] || fa.ancestor[i][p] != fb.ancestor[j][q]) {
                return false;
            }
            if ((p < i) != (q < j)) {
                return false;
            }
        }
        return true;
    };
    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t relabels) {
        if (i == na) {
            const std::size_t m = mapping.size();
            best = std::min(best, relabels + (na - m) + (nb - m));
            return;
        }
        search(i + 1, relabels);
        for (std::size_t j = 0; j < nb; ++j) {
            if (!used[j] && compatible(i, j)) {
                used[j] = true;
                mapping.emplace_back(i, j);
                search(i + 1, relabels + (fa.labels[i] == fb.labels[j] ? 0 : 1));
                mapping.pop_back();
                used[j] = false;
            }
        }
    };
    search(0, 0);
    return best;
}

// Keeps nodes at depth <= max_depth (root at depth 1).
inline paracon::ParseTree cut(const paracon::ParseTree& t, std::size_t max_depth)
{
    paracon::ParseTree out;
    out.label = t.label;
    if (max_depth > 1) {
        for (const auto& c : t.children) {
            out.children.push_back(cut(c, max_depth - 1));
        }
    }
    return out;
}

inline std::size_t count_nodes(const paracon::ParseTree& t)
{
    std::size_t n = 1;
    for (const auto& c : t.children) {
        n += count_nodes(c);
    }
    return n;
}

// Every ordered tree shape with exactly n nodes, labelled "x".
inline std::vector<paracon::ParseTree> shapes(std::size_t n)
{
    // forests(k): every ordered forest with k nodes in total
    std::function<std::vector<std::vector<paracon::ParseTree>>(std::size_t)> forests =
        [&](std::size_t k) -> std::vector<std::vector<paracon::ParseTree>> {
        if (k == 0) {
            return {{}};
        }
        std::vector<std::vector<paracon::ParseTree>> out;
        for (std::size_t first = 1; first <= k; ++first) {
            for (const auto& head : shapes(first)) {
                for (auto rest : forests(k - first)) {
                    rest.insert(rest.begin(), head);
                    out.push_back(std::move(rest));
                }
            }
        }
        return out;
    };
    std::vector<paracon::ParseTree> out;
    for (auto& kids : forests(n - 1)) {
        paracon::ParseTree t;
        t.label = "x";
        t.children = std::move(kids);
        out.push_back(std::move(t));
    }
    return out;
}

// Fleiss's kappa straight from the definition, for cross-checking.
inline double fleiss(const std::vector<std::vector<std::size_t>>& counts)
{
    const double N = static_cast<double>(counts.size());
    double r = 0;
    for (auto c : counts[0]) {
        r += static_cast<double>(c);
    }
    std::vector<double> pj(counts[0].size(), 0.0);
    double pbar = 0.0;
    for (const auto& row : counts) {
        double agree = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            pj[j] += static_cast<double>(row[j]);
            agree += static_cast<double>(row[j]) * static_cast<double>(row[j] - (row[j] > 0 ? 1 : 0));
        }
        pbar += agree / (r * (r - 1));
    }
    pbar /= N;
    double pe = 0.0;
    for (double p : pj) {
        const double q = p / (N * r);
        pe += q * q;
    }
    return (pbar - pe) / (1 - pe);
}

} // namespace oracle
