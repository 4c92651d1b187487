#include "dsq/sufftree.hpp"

#include <stdexcept>

namespace dsq {

namespace {

struct TreeBuilder {
    SuffixTree st;
    std::vector<std::uint32_t> last_child;

    std::uint32_t new_node(std::uint32_t depth, std::uint32_t label) {
        st.parent.push_back(0);
        st.string_depth.push_back(depth);
        st.first_child.push_back(0);
        st.next_sibling.push_back(0);
        st.leaf_label.push_back(label);
        last_child.push_back(0);
        return static_cast<std::uint32_t>(st.parent.size()) - 1;
    }

    void attach(std::uint32_t child, std::uint32_t par) {
        st.parent[child] = par;
        if (last_child[par] == 0)
            st.first_child[par] = child;
        else
            st.next_sibling[last_child[par]] = child;
        last_child[par] = child;
    }
};

}  // namespace

SuffixTree build_suffix_tree(const Text& t, const SuffixArray& sa, const PlcpBits& plcp) {
    std::uint32_t n = t.n;
    TreeBuilder b;
    b.st.n = n;
    b.new_node(0, 0);  // id 0 = null slot
    std::uint32_t root = b.new_node(0, 0);
    b.st.root = root;
    b.st.leaf_node.assign(n + 1, 0);

    std::vector<std::uint32_t> stack;
    stack.reserve(64);
    stack.push_back(root);
    auto depth_of = [&](std::uint32_t v) { return b.st.string_depth[v]; };

    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint32_t ell = (i == 1) ? 0 : lcp_access(plcp, sa, i);
        // Nodes deeper than ell leave the rightmost path; each one attaches to
        // the element below it, except when a new branching node at depth ell
        // has to be created in between.
        while (depth_of(stack.back()) > ell) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            std::uint32_t below = stack.back();
            if (depth_of(below) >= ell) {
                b.attach(v, below);
            } else {
                std::uint32_t u = b.new_node(ell, 0);
                b.attach(v, u);
                stack.push_back(u);
            }
        }
        std::uint32_t label = sa.sa[i];
        std::uint32_t leaf = b.new_node(n - label + 1, label);
        b.st.leaf_node[label] = leaf;
        stack.push_back(leaf);
    }
    while (stack.size() > 1) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        b.attach(v, stack.back());
    }

    SuffixTree st = std::move(b.st);

    // min leaf labels: preorder, then one reverse sweep toward the parents
    st.min_leaf_label.assign(st.parent.size(), 0);
    std::vector<std::uint32_t> order;
    order.reserve(st.parent.size());
    std::vector<std::uint32_t> dfs{root};
    while (!dfs.empty()) {
        std::uint32_t v = dfs.back();
        dfs.pop_back();
        order.push_back(v);
        for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c]) dfs.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::uint32_t v = *it;
        if (st.is_leaf(v)) st.min_leaf_label[v] = st.leaf_label[v];
        std::uint32_t p = st.parent[v];
        if (p != 0 && (st.min_leaf_label[p] == 0 || st.min_leaf_label[v] < st.min_leaf_label[p]))
            st.min_leaf_label[p] = st.min_leaf_label[v];
    }
    return st;
}

std::vector<DecorationEntry> decorate_with_squares(const SuffixTree& st,
                                                   const PositionLists& lists) {
    std::vector<DecorationEntry> out;
    std::vector<std::uint32_t> node_list(st.parent.size() + 1, 0);
    for (std::uint32_t lab = 1; lab <= st.n; ++lab)
        node_list[st.leaf_node[lab]] = lists.head[lab];

    // post-order over the explicit tree
    std::vector<std::pair<std::uint32_t, bool>> stack{{st.root, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (st.is_leaf(v)) continue;
        if (!expanded) {
            stack.push_back({v, true});
            for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c])
                stack.push_back({c, false});
            continue;
        }
        std::uint32_t d = st.string_depth[v];
        std::uint32_t inherit_child = 0;
        for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c]) {
            // lengths ending on the edge (v, c) sit at the list front
            std::uint32_t h = node_list[c];
            while (h != 0 && lists.pool_len[h] > d) {
                out.push_back({c, lists.pool_len[h]});
                h = lists.pool_next[h];
            }
            node_list[c] = h;
            if (inherit_child == 0 ||
                st.min_leaf_label[c] < st.min_leaf_label[inherit_child])
                inherit_child = c;
        }
        for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c]) {
            if (c != inherit_child && node_list[c] != 0)
                throw std::logic_error("decorate_with_squares: dropped list not empty");
        }
        node_list[v] = node_list[inherit_child];
    }
    return out;
}

std::uint32_t locate_square_by_descent(const SuffixTree& st, const Text& t, std::uint32_t s,
                                       std::uint32_t ell) {
    std::uint32_t v = st.root;
    while (st.string_depth[v] < ell) {
        std::uint32_t d = st.string_depth[v];
        unsigned char want = t.bytes[s + d];
        std::uint32_t c = st.first_child[v];
        while (c != 0 && st.edge_first_char(t, c) != want) c = st.next_sibling[c];
        if (c == 0) throw std::logic_error("descent failed: no child edge matches");
        std::uint32_t lim = std::min(st.string_depth[c], ell);
        std::uint32_t w = st.witness(c);
        for (std::uint32_t k = d + 1; k <= lim; ++k)
            if (t.bytes[w + k - 1] != t.bytes[s + k - 1])
                throw std::logic_error("descent failed: edge label mismatch");
        v = c;
    }
    return v;
}

}  // namespace dsq
