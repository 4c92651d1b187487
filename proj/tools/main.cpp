// Command-line front end: pipeline stages as subcommands, TSV by default,
// JSON/DOT behind flags. Exit codes: 0 ok, 1 verification mismatch, 2 usage
// or I/O errors (including sentinel bytes in the input).
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dsq/mast.hpp"
#include "dsq/pipeline.hpp"

namespace {

using namespace dsq;

std::vector<unsigned char> read_input(const std::string& path) {
    std::string data;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        data = ss.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        data = ss.str();
    }
    return {data.begin(), data.end()};
}

Pipeline load_pipeline(const std::string& path) {
    auto raw = read_input(path);
    return build_pipeline(prepare_text(std::span<const unsigned char>(raw)));
}

std::string printable(unsigned char c) {
    if (c == kSentinel) return "$";
    if (c >= 0x20 && c < 0x7f) return std::string(1, static_cast<char>(c));
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", c);
    return buf;
}

std::string edge_label(const SuffixTree& st, const Text& t, std::uint32_t c) {
    std::uint32_t from = st.witness(c) + st.string_depth[st.parent[c]];
    std::uint32_t to = st.witness(c) + st.string_depth[c] - 1;
    std::string out;
    for (std::uint32_t k = from; k <= to && out.size() < 12; ++k) out += printable(t.bytes[k]);
    if (to - from + 1 > 12) out += "..";
    return out;
}

void print_dot(const SuffixTree& st, const Text& t,
               const std::vector<DecorationEntry>& decorations, std::uint32_t first_new_node) {
    std::vector<std::vector<std::uint32_t>> deco(st.parent.size());
    for (const auto& d : decorations) deco[d.node].push_back(d.length);
    std::printf("digraph suffix_tree {\n");
    for (std::uint32_t v = 1; v < st.parent.size(); ++v) {
        std::string label = std::to_string(v) + " d=" + std::to_string(st.string_depth[v]);
        if (st.is_leaf(v)) label = std::to_string(st.leaf_label[v]);
        std::string extra;
        if (!deco[v].empty()) {
            extra = ", peripheries=2, color=blue";
            label += " sq=";
            for (std::size_t i = 0; i < deco[v].size(); ++i)
                label += (i ? "," : "") + std::to_string(deco[v][i]);
        }
        if (first_new_node != 0 && v >= first_new_node) extra += ", color=red, style=dashed";
        std::printf("  n%u [shape=%s, label=\"%s\"%s];\n", v, st.is_leaf(v) ? "box" : "ellipse",
                    label.c_str(), extra.c_str());
    }
    for (std::uint32_t v = 1; v < st.parent.size(); ++v)
        for (std::uint32_t c = st.first_child[v]; c != 0; c = st.next_sibling[c])
            std::printf("  n%u -> n%u [label=\"%s\"];\n", v, c, edge_label(st, t, c).c_str());
    std::printf("}\n");
}

int cmd_array(const std::string& input, const std::string& which) {
    Pipeline p = load_pipeline(input);
    for (std::uint32_t i = 1; i <= p.text.n; ++i) {
        std::uint32_t v = 0;
        if (which == "sa")
            v = p.sa.sa[i];
        else if (which == "lcp")
            v = lcp_access(p.plcp, p.sa, i);
        else
            v = p.lpf.access(i);
        std::printf("%u\n", v);
    }
    return 0;
}

int cmd_lz(const std::string& input) {
    Pipeline p = load_pipeline(input);
    for (std::uint32_t x = 1; x <= p.lz.z; ++x) {
        auto [start, len] = lz_factor_at(p.lz, x);
        std::printf("%u\t%u\n", start, len);
    }
    return 0;
}

int cmd_squares(const std::string& input, bool json) {
    Pipeline p = load_pipeline(input);
    auto occ = run_squares(p);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sq : occ) arr.push_back({{"start", sq.start}, {"length", sq.length}});
        std::printf("%s\n", arr.dump().c_str());
    } else {
        for (const auto& sq : occ) std::printf("%u\t%u\n", sq.start, sq.length);
    }
    return 0;
}

int cmd_decorate(const std::string& input, bool dot) {
    Pipeline p = load_pipeline(input);
    auto entries = decorate_with_squares(p.tree, build_position_lists(run_squares(p), p.text.n));
    if (dot) {
        print_dot(p.tree, p.text, entries, 0);
    } else {
        for (const auto& e : entries)
            std::printf("%u\t%u\t%u\n", e.node, p.tree.string_depth[e.node], e.length);
    }
    return 0;
}

int cmd_mast(const std::string& input, bool dot) {
    Pipeline p = load_pipeline(input);
    auto entries = decorate_with_squares(p.tree, build_position_lists(run_squares(p), p.text.n));
    auto splits = mast_topology(p.tree, entries);
    if (dot) {
        SuffixTree mast = apply_splits(p.tree, splits);
        print_dot(mast, p.text, {}, p.tree.node_count() + 1);
    } else {
        for (const auto& sp : splits)
            std::printf("%u\t%u\n", sp.node, p.tree.string_depth[sp.node] - sp.suffix_len);
    }
    return 0;
}

int cmd_stats(const std::string& input) {
    Pipeline p = load_pipeline(input);
    StatsReport r = compute_stats(p);
    std::printf("sigma\t%u\n", r.sigma);
    std::printf("max_lcp\t%u\n", r.max_lcp);
    std::printf("avg_lcp\t%.6f\n", r.avg_lcp);
    std::printf("z\t%u\n", r.z);
    std::printf("max_factor_len\t%u\n", r.max_factor_len);
    std::printf("max_adjacent_factor_len\t%u\n", r.max_adjacent_factor_len);
    std::printf("occ\t%llu\n", static_cast<unsigned long long>(r.occ));
    std::printf("time_ms\t%.3f\n", r.elapsed_ms);
    return 0;
}

int cmd_verify(std::uint64_t seed, std::uint32_t count, std::uint32_t max_len) {
    std::mt19937_64 rng(seed);
    std::uint64_t done = 0;
    for (std::uint32_t alpha : {2u, 4u, 26u}) {
        for (std::uint32_t i = 0; i < count; ++i) {
            std::uint32_t len = 1 + static_cast<std::uint32_t>(rng() % max_len);
            std::string s(len, 'a');
            for (auto& c : s) c = static_cast<char>('a' + rng() % alpha);
            Text t = prepare_text(s.c_str());
            Pipeline p = build_pipeline(std::move(t));
            auto got = run_squares(p);
            auto want = brute_force_distinct_squares(p.text);
            std::uint64_t n = p.text.n;
            if (got != want || got.size() > 11 * n / 6) {
                std::fprintf(stderr, "verify: MISMATCH on alphabet=%u len=%u text=%s\n", alpha,
                             len, s.c_str());
                std::fprintf(stderr, "  expected %zu squares, got %zu\n", want.size(),
                             got.size());
                return 1;
            }
            if (++done % 100 == 0)
                std::fprintf(stderr, "verify: %llu inputs checked\n",
                             static_cast<unsigned long long>(done));
        }
    }
    std::printf("verify: %llu inputs, all outputs match the brute-force oracle\n",
                static_cast<unsigned long long>(done));
    return 0;
}

int cmd_bench(std::uint32_t min_exp, std::uint32_t max_exp, const std::string& family) {
    auto run_family = [&](const std::string& name) {
        for (std::uint32_t e = min_exp; e <= max_exp; ++e) {
            std::uint32_t n = 1u << e;
            std::string s;
            s.reserve(n);
            if (name == "an") {
                s.assign(n, 'a');
            } else if (name == "ab") {
                for (std::uint32_t i = 0; i < n; ++i) s.push_back(i % 2 == 0 ? 'a' : 'b');
            } else {
                std::mt19937_64 rng(4242);
                for (std::uint32_t i = 0; i < n; ++i)
                    s.push_back(static_cast<char>('a' + (rng() & 1)));
            }
            using clock = std::chrono::steady_clock;
            auto ms_since = [](clock::time_point t0) {
                return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            };
            auto report = [&](const char* stage, double ms) {
                std::printf("%s\t%u\t%s\t%.3f\n", name.c_str(), n, stage, ms);
            };
            auto t0 = clock::now();
            Text text = prepare_text(s.c_str());
            auto t1 = clock::now();
            SuffixArray sa = build_suffix_array(text);
            auto t2 = clock::now();
            PlcpBits plcp = build_plcp(text, sa);
            auto t3 = clock::now();
            LcePair lce(text, sa, plcp);
            auto t4 = clock::now();
            SuffixTree tree = build_suffix_tree(text, sa, plcp);
            auto t5 = clock::now();
            SuccinctLpf lpf = build_lpf_succinct(tree);
            RmqIndex lpf_rmq = build_lpf_rmq(lpf);
            LzFactorization lz = lz_factorize(lpf);
            auto t6 = clock::now();
            auto occ = find_distinct_squares(text, lz, lpf, lpf_rmq, lce);
            auto t7 = clock::now();
            report("prepare", std::chrono::duration<double, std::milli>(t1 - t0).count());
            report("sa", std::chrono::duration<double, std::milli>(t2 - t1).count());
            report("plcp", std::chrono::duration<double, std::milli>(t3 - t2).count());
            report("lce", std::chrono::duration<double, std::milli>(t4 - t3).count());
            report("tree", std::chrono::duration<double, std::milli>(t5 - t4).count());
            report("lpf+lz", std::chrono::duration<double, std::milli>(t6 - t5).count());
            report("squares", std::chrono::duration<double, std::milli>(t7 - t6).count());
            report("total", ms_since(t0));
            std::fprintf(stderr, "bench %s n=%u occ=%zu probes=%llu\n", name.c_str(), n,
                         occ.size(), static_cast<unsigned long long>(lce.probes()));
        }
    };
    if (family == "all" || family == "an") run_family("an");
    if (family == "all" || family == "ab") run_family("ab");
    if (family == "all" || family == "rand") run_family("rand");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinct squares over an integer alphabet: succinct LPF, "
                 "Lempel-Ziv factorization, suffix tree decoration, MAST topology"};
    app.require_subcommand(1);

    std::string input = "-";
    bool json = false, dot = false;
    std::uint64_t seed = 42;
    std::uint32_t count = 200, max_len = 2000, min_exp = 16, max_exp = 20;
    std::string family = "all";

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file, or - for stdin")->default_val("-");
    };
    auto* c_sa = app.add_subcommand("sa", "print the suffix array, one value per line");
    add_input(c_sa);
    auto* c_lcp = app.add_subcommand("lcp", "print the LCP array, one value per line");
    add_input(c_lcp);
    auto* c_lpf = app.add_subcommand("lpf", "print the decoded LPF array");
    add_input(c_lpf);
    auto* c_lz = app.add_subcommand("lz", "print the Lempel-Ziv factors as start<TAB>length");
    add_input(c_lz);
    auto* c_sq = app.add_subcommand("squares",
                                    "leftmost occurrences of all distinct squares, "
                                    "start<TAB>length in (length, start) order");
    add_input(c_sq);
    c_sq->add_flag("--json", json, "emit a JSON array of {start, length}");
    auto* c_dec = app.add_subcommand("decorate",
                                     "suffix tree decoration: node<TAB>depth<TAB>length");
    add_input(c_dec);
    c_dec->add_flag("--dot", dot, "emit the decorated tree in DOT format");
    auto* c_mast = app.add_subcommand("mast", "MAST edge splits: node<TAB>new_node_depth");
    add_input(c_mast);
    c_mast->add_flag("--dot", dot, "emit the post-split tree in DOT format");
    auto* c_stats = app.add_subcommand("stats", "evaluation statistics of the input");
    add_input(c_stats);
    auto* c_verify = app.add_subcommand("verify",
                                        "compare against the brute-force oracle on random "
                                        "inputs; nonzero exit on mismatch");
    c_verify->add_option("--seed", seed, "random seed")->default_val(42);
    c_verify->add_option("--count", count, "inputs per alphabet size")->default_val(200);
    c_verify->add_option("--max-len", max_len, "maximum input length")->default_val(2000);
    auto* c_bench = app.add_subcommand("bench", "per-stage timings on doubling input sizes");
    c_bench->add_option("--min-exp", min_exp, "smallest size as a power of two")->default_val(16);
    c_bench->add_option("--max-exp", max_exp, "largest size as a power of two")->default_val(20);
    c_bench->add_option("--family", family, "an | ab | rand | all")->default_val("all");

    try {
        app.parse(argc, argv);
        if (c_sa->parsed()) return cmd_array(input, "sa");
        if (c_lcp->parsed()) return cmd_array(input, "lcp");
        if (c_lpf->parsed()) return cmd_array(input, "lpf");
        if (c_lz->parsed()) return cmd_lz(input);
        if (c_sq->parsed()) return cmd_squares(input, json);
        if (c_dec->parsed()) return cmd_decorate(input, dot);
        if (c_mast->parsed()) return cmd_mast(input, dot);
        if (c_stats->parsed()) return cmd_stats(input);
        if (c_verify->parsed()) return cmd_verify(seed, count, max_len);
        if (c_bench->parsed()) return cmd_bench(min_exp, max_exp, family);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
