#include "dsq/mast.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace dsq {

LowestMarkedAncestor::LowestMarkedAncestor(const SuffixTree& st) : st_(&st) {
    std::uint32_t cnt = static_cast<std::uint32_t>(st.parent.size());
    marked_.assign(cnt, 0);
    marked_[st.root] = 1;
    levels_ = std::max<unsigned>(1, std::bit_width(cnt));
    up_.assign(levels_, std::vector<std::uint32_t>(cnt, st.root));
    for (std::uint32_t v = 1; v < cnt; ++v)
        up_[0][v] = (v == st.root) ? st.root : st.parent[v];
    for (unsigned j = 1; j < levels_; ++j)
        for (std::uint32_t v = 1; v < cnt; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
}

std::uint32_t LowestMarkedAncestor::query(std::uint32_t v) const {
    if (marked_[v]) return v;
    // Marked ancestors form a path prefix; lift v to the highest unmarked
    // ancestor, whose parent is the answer.
    std::uint32_t w = v;
    for (unsigned j = levels_; j-- > 0;) {
        std::uint32_t a = up_[j][w];
        if (!marked_[a]) w = a;
    }
    return up_[0][w];
}

std::vector<EdgeSplit> mast_topology(const SuffixTree& st,
                                     const std::vector<DecorationEntry>& decorations,
                                     MastInstrumentation* instr) {
    // stable counting sort by square length
    std::uint32_t max_len = 0;
    for (const auto& d : decorations) max_len = std::max(max_len, d.length);
    std::vector<std::uint32_t> cnt(max_len + 2, 0);
    for (const auto& d : decorations) ++cnt[d.length];
    for (std::uint32_t l = 1; l <= max_len; ++l) cnt[l] += cnt[l - 1];
    std::vector<DecorationEntry> sorted(decorations.size());
    for (auto it = decorations.rbegin(); it != decorations.rend(); ++it)
        sorted[--cnt[it->length]] = *it;

    LowestMarkedAncestor lma(st);
    MastInstrumentation local;
    MastInstrumentation& m = instr ? *instr : local;
    m = {};
    // swept_to[x]: the subtree of x has already been marked down to this
    // depth bound; prunes re-entry since bounds only grow.
    std::vector<std::uint32_t> swept_to(st.parent.size(), 0);
    std::vector<std::uint32_t> stack;
    std::unordered_set<std::uint64_t> seen;
    std::vector<EdgeSplit> out;

    for (const auto& d : sorted) {
        if (d.length % 2 != 0) throw std::logic_error("square length must be even");
        std::uint32_t h = d.length / 2;
        ++m.visits;
        std::uint32_t u = lma.query(d.node);
        if (st.string_depth[u] < h) {
            stack.push_back(u);
            while (!stack.empty()) {
                std::uint32_t x = stack.back();
                stack.pop_back();
                ++m.visits;
                if (!lma.is_marked(x)) {
                    lma.mark(x);
                    ++m.nodes_marked;
                }
                if (st.string_depth[x] >= h) continue;  // frontier child, no recursion
                if (swept_to[x] >= h) continue;
                swept_to[x] = h;
                for (std::uint32_t c = st.first_child[x]; c != 0; c = st.next_sibling[c])
                    stack.push_back(c);
            }
            u = lma.query(d.node);
        }
        // u now has depth >= h and its parent is shallower than h
        if (st.string_depth[u] > h) {
            std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | h;
            if (seen.insert(key).second) out.push_back({u, st.string_depth[u] - h});
        }
    }
    return out;
}

SuffixTree apply_splits(const SuffixTree& st, const std::vector<EdgeSplit>& splits) {
    SuffixTree out = st;
    // group splits by lower endpoint, then order each edge's new nodes by depth
    std::vector<std::vector<std::uint32_t>> depths_for(st.parent.size());
    for (const auto& sp : splits) {
        if (sp.suffix_len == 0 || sp.suffix_len >= st.string_depth[sp.node] -
                                                      st.string_depth[st.parent[sp.node]])
            throw std::invalid_argument("split must fall strictly inside the edge");
        depths_for[sp.node].push_back(st.string_depth[sp.node] - sp.suffix_len);
    }
    for (std::uint32_t v = 1; v < st.parent.size(); ++v) {
        auto& ds = depths_for[v];
        if (ds.empty()) continue;
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        std::uint32_t u = out.parent[v];
        std::uint32_t attach = u;  // deepest node of the growing chain
        for (std::uint32_t depth : ds) {
            out.parent.push_back(attach);
            out.string_depth.push_back(depth);
            out.first_child.push_back(0);
            out.next_sibling.push_back(0);
            out.leaf_label.push_back(0);
            out.min_leaf_label.push_back(out.min_leaf_label[v]);
            std::uint32_t w = static_cast<std::uint32_t>(out.parent.size()) - 1;
            if (attach == u) {
                // splice w into u's child list in v's place
                if (out.first_child[u] == v) {
                    out.first_child[u] = w;
                } else {
                    std::uint32_t c = out.first_child[u];
                    while (out.next_sibling[c] != v) c = out.next_sibling[c];
                    out.next_sibling[c] = w;
                }
                out.next_sibling[w] = out.next_sibling[v];
                out.next_sibling[v] = 0;
            } else {
                out.first_child[attach] = w;
            }
            attach = w;
        }
        out.first_child[attach] = v;
        out.parent[v] = attach;
    }
    return out;
}

}  // namespace dsq
