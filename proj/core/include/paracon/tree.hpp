#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace paracon {

// Labeled ordered tree, e.g. a constituency parse.
struct ParseTree {
    std::string label;
    std::vector<ParseTree> children;

    std::size_t node_count() const noexcept;
    std::size_t depth() const noexcept; // a lone root has depth 1

    bool operator==(const ParseTree&) const = default;
};

// Parses "(S (NP (DT the) (NN cat)) (VP sat))". Bare tokens become leaves.
// Throws InputError on unbalanced or empty input.
ParseTree parse_bracketed(std::string_view text);

// Inverse of parse_bracketed; leaves print as bare labels.
std::string to_bracketed(const ParseTree& tree);

// Drops every node deeper than max_depth (root = depth 1). max_depth must be >= 1.
ParseTree truncate_tree(const ParseTree& tree, std::size_t max_depth = 3);

// Ordered tree edit distance (Zhang-Shasha) with unit insert, delete and relabel costs.
std::size_t tree_edit_distance(const ParseTree& a, const ParseTree& b);

} // namespace paracon
