#include "paracon/tree.hpp"

#include <algorithm>
#include <cctype>

#include "paracon/error.hpp"

namespace paracon {

std::size_t ParseTree::node_count() const noexcept
{
    std::size_t n = 1;
    for (const auto& c : children) {
        n += c.node_count();
    }
    return n;
}

std::size_t ParseTree::depth() const noexcept
{
    std::size_t d = 0;
    for (const auto& c : children) {
        d = std::max(d, c.depth());
    }
    return d + 1;
}

namespace {

class BracketParser {
public:
    explicit BracketParser(std::string_view text) : text_(text) {}

    ParseTree parse()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            throw InputError("empty tree");
        }
        ParseTree tree = node();
        skip_space();
        if (pos_ != text_.size()) {
            throw error("trailing input after tree");
        }
        return tree;
    }

private:
    InputError error(const std::string& what) const
    {
        return InputError("bracketed tree: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string token()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')') {
            ++pos_;
        }
        if (pos_ == start) {
            throw error("expected a label");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    ParseTree node()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            throw error("unexpected end of input");
        }
        if (text_[pos_] != '(') {
            return ParseTree{token(), {}};
        }
        ++pos_;
        skip_space();
        ParseTree tree{token(), {}};
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) {
                throw error("unbalanced parentheses");
            }
            if (text_[pos_] == ')') {
                ++pos_;
                return tree;
            }
            tree.children.push_back(node());
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void write_bracketed(const ParseTree& t, std::string& out)
{
    if (t.children.empty()) {
        out += t.label;
        return;
    }
    out += '(';
    out += t.label;
    for (const auto& c : t.children) {
        out += ' ';
        write_bracketed(c, out);
    }
    out += ')';
}

void truncate_into(const ParseTree& src, ParseTree& dst, std::size_t remaining)
{
    dst.label = src.label;
    if (remaining <= 1) {
        return;
    }
    dst.children.resize(src.children.size());
    for (std::size_t i = 0; i < src.children.size(); ++i) {
        truncate_into(src.children[i], dst.children[i], remaining - 1);
    }
}

// Post-order view of a tree: labels, leftmost-leaf index of each node, keyroots.
struct PostOrder {
    std::vector<const std::string*> labels;
    std::vector<std::size_t> leftmost;
    std::vector<std::size_t> keyroots;

    explicit PostOrder(const ParseTree& t)
    {
        visit(t);
        // A keyroot is the highest node with a given leftmost leaf.
        std::vector<bool> seen(labels.size(), false);
        for (std::size_t i = labels.size(); i-- > 0;) {
            if (!seen[leftmost[i]]) {
                seen[leftmost[i]] = true;
                keyroots.push_back(i);
            }
        }
        std::sort(keyroots.begin(), keyroots.end());
    }

    std::size_t visit(const ParseTree& t)
    {
        std::size_t first = labels.size();
        bool have_first = false;
        for (const auto& c : t.children) {
            const std::size_t l = visit(c);
            if (!have_first) {
                first = l;
                have_first = true;
            }
        }
        labels.push_back(&t.label);
        const std::size_t self = labels.size() - 1;
        leftmost.push_back(have_first ? first : self);
        return leftmost.back();
    }
};

} // namespace

ParseTree parse_bracketed(std::string_view text) { return BracketParser(text).parse(); }

std::string to_bracketed(const ParseTree& tree)
{
    std::string out;
    write_bracketed(tree, out);
    return out;
}

ParseTree truncate_tree(const ParseTree& tree, std::size_t max_depth)
{
    if (max_depth == 0) {
        throw InputError("truncation depth must be at least 1");
    }
    ParseTree out;
    truncate_into(tree, out, max_depth);
    return out;
}

std::size_t tree_edit_distance(const ParseTree& a, const ParseTree& b)
{
    const PostOrder ta(a);
    const PostOrder tb(b);
    const std::size_t na = ta.labels.size();
    const std::size_t nb = tb.labels.size();

    std::vector<std::size_t> tree_dist(na * nb, 0);
    std::vector<std::size_t> forest((na + 1) * (nb + 1), 0);
    auto td = [&](std::size_t i, std::size_t j) -> std::size_t& { return tree_dist[i * nb + j]; };

    for (std::size_t ki : ta.keyroots) {
        for (std::size_t kj : tb.keyroots) {
            const std::size_t li = ta.leftmost[ki];
            const std::size_t lj = tb.leftmost[kj];
            const std::size_t rows = ki - li + 2;
            const std::size_t cols = kj - lj + 2;
            auto fd = [&](std::size_t x, std::size_t y) -> std::size_t& { return forest[x * cols + y]; };
            fd(0, 0) = 0;
            for (std::size_t x = 1; x < rows; ++x) {
                fd(x, 0) = fd(x - 1, 0) + 1;
            }
            for (std::size_t y = 1; y < cols; ++y) {
                fd(0, y) = fd(0, y - 1) + 1;
            }
            for (std::size_t x = 1; x < rows; ++x) {
                const std::size_t i = li + x - 1;
                for (std::size_t y = 1; y < cols; ++y) {
                    const std::size_t j = lj + y - 1;
                    const std::size_t del = fd(x - 1, y) + 1;
                    const std::size_t ins = fd(x, y - 1) + 1;
                    if (ta.leftmost[i] == li && tb.leftmost[j] == lj) {
                        const std::size_t rel = fd(x - 1, y - 1) + (*ta.labels[i] == *tb.labels[j] ? 0 : 1);
                        fd(x, y) = std::min({del, ins, rel});
                        td(i, j) = fd(x, y);
                    } else {
                        const std::size_t px = ta.leftmost[i] - li;
                        const std::size_t py = tb.leftmost[j] - lj;
                        fd(x, y) = std::min({del, ins, fd(px, py) + td(i, j)});
                    }
                }
            }
        }
    }
    return td(na - 1, nb - 1);
}

} // namespace paracon
