#pragma once

#include <cstdint>
#include <vector>

#include "dsq/squares.hpp"
#include "dsq/suffix.hpp"
#include "dsq/text.hpp"

namespace dsq {

// Compacted suffix trie. Nodes are 1-based ids (0 = null), root = 1.
// Children are linked in order of the first edge symbol; leaf_label is the
// suffix number for leaves and 0 for internal nodes.
struct SuffixTree {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> string_depth;
    std::vector<std::uint32_t> first_child;
    std::vector<std::uint32_t> next_sibling;
    std::vector<std::uint32_t> leaf_label;
    std::vector<std::uint32_t> min_leaf_label;
    std::vector<std::uint32_t> leaf_node;  // leaf_node[label] -> node id
    std::uint32_t n = 0;                   // text length
    std::uint32_t root = 1;

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(parent.size()) - 1; }
    bool is_leaf(std::uint32_t v) const { return leaf_label[v] != 0; }
    // A suffix whose path passes through v; the node's string label is
    // T[witness(v) .. witness(v) + string_depth[v] - 1].
    std::uint32_t witness(std::uint32_t v) const { return min_leaf_label[v]; }
    unsigned char edge_first_char(const Text& t, std::uint32_t child) const {
        return t.bytes[witness(child) + string_depth[parent[child]]];
    }
};

// One left-to-right stack pass over SA/LCP; min leaf labels by a bottom-up
// pass afterwards.
SuffixTree build_suffix_tree(const Text& t, const SuffixArray& sa, const PlcpBits& plcp);

struct DecorationEntry {
    std::uint32_t node;    // lower endpoint of the decorated edge
    std::uint32_t length;  // square length
    bool operator==(const DecorationEntry&) const = default;
};

// Phase II: propagate the per-position square lists bottom-up, inheriting at
// each node from the child whose subtree holds the smallest leaf label, and
// emit every length that ends on the edge to the parent. Throws
// std::logic_error if a non-inherited list is dropped non-empty, which would
// mean a duplicate square upstream.
std::vector<DecorationEntry> decorate_with_squares(const SuffixTree& st,
                                                   const PositionLists& lists);

// Character-by-character descent; returns the highest node whose string label
// has T[s..s+ell-1] as prefix. Testing oracle for the decoration.
std::uint32_t locate_square_by_descent(const SuffixTree& st, const Text& t, std::uint32_t s,
                                       std::uint32_t ell);

}  // namespace dsq
