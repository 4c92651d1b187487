#pragma once

#include <cstdint>
#include <vector>

#include "dsq/sufftree.hpp"

namespace dsq {

// Nearest-marked-ancestor queries on a fixed tree. The root is marked at
// construction. Marking here always grows a root-connected region downwards
// (every fresh mark has a marked parent), so the marked nodes on any
// root-to-leaf path form a prefix; query exploits that with ancestor jump
// tables. mark is O(1), query O(log n).
class LowestMarkedAncestor {
  public:
    explicit LowestMarkedAncestor(const SuffixTree& st);

    void mark(std::uint32_t v) { marked_[v] = 1; }
    bool is_marked(std::uint32_t v) const { return marked_[v] != 0; }

    // Nearest marked ancestor-or-self of v.
    std::uint32_t query(std::uint32_t v) const;

  private:
    const SuffixTree* st_;
    unsigned levels_ = 0;
    std::vector<std::vector<std::uint32_t>> up_;
    std::vector<std::uint8_t> marked_;
};

struct EdgeSplit {
    std::uint32_t node;        // lower endpoint v of the edge to split
    std::uint32_t suffix_len;  // edge-label chars remaining on (new node -> v)
    bool operator==(const EdgeSplit&) const = default;
};

struct MastInstrumentation {
    std::uint64_t visits = 0;        // nodes touched while marking, plus one per entry
    std::uint64_t nodes_marked = 0;  // each node at most once
};

// Processes the decoration entries in ascending square length. For each
// (v, l): find the lowest marked ancestor u of v; if its depth is below l/2,
// mark all descendants of u shallower than l/2 together with their children
// and re-query; the node w found this way is the first on the path with
// depth >= l/2. Emits a split unless w sits at exactly l/2. Duplicate
// (node, depth) pairs are dropped.
std::vector<EdgeSplit> mast_topology(const SuffixTree& st,
                                     const std::vector<DecorationEntry>& decorations,
                                     MastInstrumentation* instr = nullptr);

// New tree with every split edge (u,v) replaced by (u,w),(w,v); several
// splits on one edge chain up in depth order. Original node ids survive.
SuffixTree apply_splits(const SuffixTree& st, const std::vector<EdgeSplit>& splits);

}  // namespace dsq
