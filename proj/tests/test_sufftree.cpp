#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "dsq/pipeline.hpp"
#include "oracles.hpp"

using namespace dsq;

namespace {

std::vector<std::uint32_t> children_of(const SuffixTree& st, std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c]) out.push_back(c);
    return out;
}

void check_tree_invariants(const SuffixTree& st, const Text& t) {
    std::uint32_t leaves = 0;
    for (std::uint32_t v = 1; v < st.parent.size(); ++v) {
        if (st.is_leaf(v)) {
            ++leaves;
            REQUIRE(st.string_depth[v] == t.n - st.leaf_label[v] + 1);
            REQUIRE(children_of(st, v).empty());
        }
        if (v != st.root) REQUIRE(st.string_depth[v] > st.string_depth[st.parent[v]]);
        auto ch = children_of(st, v);
        if (!ch.empty()) {
            std::uint32_t min_label = st.min_leaf_label[ch[0]];
            for (std::size_t i = 1; i < ch.size(); ++i) {
                REQUIRE(st.edge_first_char(t, ch[i - 1]) < st.edge_first_char(t, ch[i]));
                min_label = std::min(min_label, st.min_leaf_label[ch[i]]);
            }
            REQUIRE(st.min_leaf_label[v] == min_label);
        }
        if (!st.is_leaf(v) && v != st.root) REQUIRE(ch.size() >= 2);
    }
    REQUIRE(leaves == t.n);
}

}  // namespace

TEST_CASE("suffix tree of the running example") {
    Text t = prepare_text("ababaaababa");
    SuffixArray sa = build_suffix_array(t);
    PlcpBits plcp = build_plcp(t, sa);
    SuffixTree st = build_suffix_tree(t, sa, plcp);
    check_tree_invariants(st, t);

    std::multiset<std::uint32_t> internal_depths;
    std::uint32_t leaves = 0;
    for (std::uint32_t v = 1; v < st.parent.size(); ++v) {
        if (st.is_leaf(v))
            ++leaves;
        else
            internal_depths.insert(st.string_depth[v]);
    }
    CHECK(leaves == 12);
    CHECK(internal_depths == std::multiset<std::uint32_t>{0, 1, 2, 2, 3, 4, 5});
}

TEST_CASE("suffix tree trivial shapes") {
    Text dollar = prepare_text("");
    SuffixArray sa1 = build_suffix_array(dollar);
    PlcpBits p1 = build_plcp(dollar, sa1);
    SuffixTree st1 = build_suffix_tree(dollar, sa1, p1);
    CHECK(st1.node_count() == 2);
    CHECK(children_of(st1, st1.root).size() == 1);

    Text ab = prepare_text("ab");
    SuffixArray sa2 = build_suffix_array(ab);
    PlcpBits p2 = build_plcp(ab, sa2);
    SuffixTree st2 = build_suffix_tree(ab, sa2, p2);
    CHECK(children_of(st2, st2.root).size() == 3);
    check_tree_invariants(st2, ab);
}

TEST_CASE("suffix tree invariants on random texts") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 25; ++round) {
        std::uint32_t alpha = 1 + static_cast<std::uint32_t>(rng() % 4);
        Text t = prepare_text(
            oracle::random_string(rng, 1 + static_cast<std::uint32_t>(rng() % 1500), alpha)
                .c_str());
        SuffixArray sa = build_suffix_array(t);
        PlcpBits plcp = build_plcp(t, sa);
        check_tree_invariants(build_suffix_tree(t, sa, plcp), t);
    }
}

TEST_CASE("decoration of the running example") {
    Pipeline p = build_pipeline(prepare_text("ababaaababa"));
    auto squares = run_squares(p);
    auto entries = decorate_with_squares(p.tree, build_position_lists(squares, p.text.n));
    REQUIRE(entries.size() == squares.size());
    // entry nodes are exactly what the top-down descent finds
    std::map<std::uint32_t, std::uint32_t> by_length_node;
    for (const auto& e : entries) by_length_node[e.length * 10000 + e.node] = e.node;
    for (const auto& sq : squares) {
        std::uint32_t node = locate_square_by_descent(p.tree, p.text, sq.start, sq.length);
        CHECK(by_length_node.count(sq.length * 10000 + node) == 1);
    }
    // the three decorated nodes carry labels aa, ababa, baba
    std::uint32_t node_aa = locate_square_by_descent(p.tree, p.text, 5, 2);
    CHECK(p.tree.string_depth[node_aa] == 2);
    std::uint32_t node_ababa = locate_square_by_descent(p.tree, p.text, 1, 4);
    CHECK(p.tree.string_depth[node_ababa] == 5);
    std::uint32_t node_baba = locate_square_by_descent(p.tree, p.text, 2, 4);
    CHECK(p.tree.string_depth[node_baba] == 4);
}

TEST_CASE("descent examples") {
    Pipeline p = build_pipeline(prepare_text("aaaa"));
    auto squares = run_squares(p);
    REQUIRE(squares == std::vector<SquareOccurrence>{{1, 2}, {1, 4}});
    std::uint32_t v2 = locate_square_by_descent(p.tree, p.text, 1, 2);
    CHECK(p.tree.string_depth[v2] == 2);
    std::uint32_t v4 = locate_square_by_descent(p.tree, p.text, 1, 4);
    CHECK(p.tree.string_depth[v4] >= 4);
    CHECK(p.tree.is_leaf(v4));  // square spanning T[1..n-1] ends on a leaf edge

    auto entries = decorate_with_squares(p.tree, build_position_lists(squares, p.text.n));
    REQUIRE(entries.size() == 2);
}

TEST_CASE("decoration agrees with descent on random and exhaustive suites") {
    auto check_one = [](Pipeline& p) {
        auto squares = run_squares(p);
        auto entries = decorate_with_squares(p.tree, build_position_lists(squares, p.text.n));
        REQUIRE(entries.size() == squares.size());
        std::multiset<std::pair<std::uint32_t, std::uint32_t>> got, want;
        for (const auto& e : entries) got.insert({e.node, e.length});
        for (const auto& sq : squares) {
            want.insert({locate_square_by_descent(p.tree, p.text, sq.start, sq.length),
                         sq.length});
        }
        REQUIRE(got == want);
        for (const auto& e : entries) {
            REQUIRE(e.length <= p.tree.string_depth[e.node]);
            REQUIRE(e.length > p.tree.string_depth[p.tree.parent[e.node]]);
        }
    };
    for (std::uint32_t len = 1; len <= 11; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            Pipeline p = build_pipeline(prepare_text(oracle::binary_string(bits, len).c_str()));
            check_one(p);
        }
    std::mt19937_64 rng(53);
    for (int round = 0; round < 20; ++round) {
        std::uint32_t alpha = 1 + static_cast<std::uint32_t>(rng() % 3);
        Pipeline p = build_pipeline(prepare_text(
            oracle::random_string(rng, 1 + static_cast<std::uint32_t>(rng() % 1800), alpha)
                .c_str()));
        check_one(p);
    }
}
