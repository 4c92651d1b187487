#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "dsq/pipeline.hpp"
#include "oracles.hpp"

using namespace dsq;

namespace {

std::vector<SquareOccurrence> to_occ(const std::vector<oracle::Square>& v) {
    std::vector<SquareOccurrence> out;
    for (const auto& s : v) out.push_back({s.start, s.length});
    return out;
}

void check_report_invariants(const Pipeline& p, const std::vector<SquareOccurrence>& occ) {
    std::set<std::string> contents;
    for (const auto& sq : occ) {
        REQUIRE(sq.length % 2 == 0);
        REQUIRE(sq.length >= 2);
        REQUIRE(sq.start + sq.length - 1 <= p.text.n);
        std::uint32_t half = sq.length / 2;
        for (std::uint32_t k = 0; k < half; ++k)
            REQUIRE(p.text.bytes[sq.start + k] == p.text.bytes[sq.start + half + k]);
        REQUIRE(p.lpf.access(sq.start) < sq.length);
        if (p.text.n <= 600) {
            std::string content(reinterpret_cast<const char*>(&p.text.bytes[sq.start]),
                                sq.length);
            REQUIRE(contents.insert(content).second);  // no duplicate square strings
        }
    }
    // sorted by (length, start)
    for (std::size_t i = 1; i < occ.size(); ++i) {
        bool ordered = occ[i - 1].length < occ[i].length ||
                       (occ[i - 1].length == occ[i].length && occ[i - 1].start < occ[i].start);
        REQUIRE(ordered);
    }
    std::uint64_t n = p.text.n;
    CHECK(occ.size() <= 2 * n);
    CHECK(occ.size() <= 11 * n / 6);
}

void check_leftmost_covering(const Pipeline& p, const std::vector<SquareOccurrence>& occ) {
    // every square occurrence must be a right-rotation of a reported one
    std::set<std::pair<std::uint32_t, std::uint32_t>> reported;
    for (const auto& sq : occ) reported.insert({sq.length, sq.start});
    for (const auto& all : oracle::naive_all_squares(p.text)) {
        std::uint32_t i = all.start, p2 = all.length / 2;
        bool covered = false;
        for (std::uint32_t j = i;; --j) {
            if (reported.count({all.length, j})) {
                covered = true;
                break;
            }
            if (j == 1 || oracle::naive_lce(p.text, j - 1, j - 1 + p2) < p2) break;
        }
        REQUIRE(covered);
    }
}

}  // namespace

TEST_CASE("distinct squares of the worked examples") {
    Pipeline p = build_pipeline(prepare_text("ababaaababa"));
    auto occ = run_squares(p);
    CHECK(occ == std::vector<SquareOccurrence>{{5, 2}, {1, 4}, {2, 4}});

    Pipeline empty = build_pipeline(prepare_text(""));
    CHECK(run_squares(empty).empty());

    Pipeline app_a = build_pipeline(prepare_text("abaabab"));
    CHECK(run_squares(app_a) == std::vector<SquareOccurrence>{{3, 2}, {4, 4}, {1, 6}});

    Pipeline app_d = build_pipeline(prepare_text("abaaabaababaaabaaa"));
    PeriodScanState st;
    auto occ_d = find_distinct_squares(app_d.text, app_d.lz, app_d.lpf, app_d.lpf_rmq, app_d.lce,
                                       &st);
    bool has_1_8 = false, has_11_8 = false, eleven_by_recursion = false;
    for (std::size_t i = 0; i < occ_d.size(); ++i) {
        if (occ_d[i] == SquareOccurrence{1, 8}) has_1_8 = true;
        if (occ_d[i] == SquareOccurrence{11, 8}) {
            has_11_8 = true;
            eleven_by_recursion = st.origin[i] == ReportOrigin::kRecursiveRotate;
        }
    }
    CHECK(has_1_8);
    CHECK(has_11_8);
    CHECK(eleven_by_recursion);
}

TEST_CASE("right_rotate and recursive_rotate op behaviour") {
    Pipeline p = build_pipeline(prepare_text("ababaaababa"));
    PeriodScanState state;
    state.init(p.text.n, p.lz.z);
    state.begin_period(2);

    right_rotate(1, 2, state, p.lpf, p.lpf_rmq, p.lce);
    CHECK(state.reported == std::vector<SquareOccurrence>{{1, 4}, {2, 4}});

    right_rotate(7, 2, state, p.lpf, p.lpf_rmq, p.lce);  // LPF[7] = 5 >= 4, [8..8] filtered
    CHECK(state.reported.size() == 2);

    right_rotate(1, 2, state, p.lpf, p.lpf_rmq, p.lce);  // marked: no output
    CHECK(state.reported.size() == 2);

    recursive_rotate(9, 8, 2, state, p.lpf, p.lpf_rmq);  // empty interval
    CHECK(state.reported.size() == 2);
    recursive_rotate(8, 8, 2, state, p.lpf, p.lpf_rmq);  // LPF[8] = 4 >= 4
    CHECK(state.reported.size() == 2);

    Pipeline d = build_pipeline(prepare_text("abaaabaababaaabaaa"));
    PeriodScanState sd;
    sd.init(d.text.n, d.lz.z);
    sd.begin_period(4);
    recursive_rotate(11, 11, 4, sd, d.lpf, d.lpf_rmq);  // LPF[11] = 7 < 8
    CHECK(sd.reported == std::vector<SquareOccurrence>{{11, 8}});
    CHECK(sd.origin[0] == ReportOrigin::kRecursiveRotate);
}

TEST_CASE("brute force oracle on known inputs") {
    CHECK(brute_force_distinct_squares(prepare_text("ababaaababa")) ==
          std::vector<SquareOccurrence>{{5, 2}, {1, 4}, {2, 4}});
    CHECK(brute_force_distinct_squares(prepare_text("abc")).empty());
    CHECK(brute_force_distinct_squares(prepare_text("aaaa")) ==
          std::vector<SquareOccurrence>{{1, 2}, {1, 4}});
    // the library oracle itself against the direct content-map enumeration
    std::mt19937_64 rng(37);
    for (int round = 0; round < 60; ++round) {
        std::uint32_t alpha = 1 + static_cast<std::uint32_t>(rng() % 3);
        Text t = prepare_text(
            oracle::random_string(rng, 1 + static_cast<std::uint32_t>(rng() % 120), alpha)
                .c_str());
        CHECK(brute_force_distinct_squares(t) == to_occ(oracle::naive_distinct_squares(t)));
    }
}

TEST_CASE("algorithm equals the oracle exhaustively on binary strings") {
    for (std::uint32_t len = 1; len <= 12; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            Pipeline p = build_pipeline(prepare_text(oracle::binary_string(bits, len).c_str()));
            auto occ = run_squares(p);
            REQUIRE(occ == brute_force_distinct_squares(p.text));
            check_report_invariants(p, occ);
        }
}

TEST_CASE("algorithm equals the oracle on random strings") {
    std::mt19937_64 rng(41);
    for (std::uint32_t alpha : {2u, 4u, 26u}) {
        for (int round = 0; round < 30; ++round) {
            std::uint32_t len = 1 + static_cast<std::uint32_t>(rng() % 2000);
            Pipeline p = build_pipeline(prepare_text(oracle::random_string(rng, len, alpha).c_str()));
            PeriodScanState st;
            auto occ = find_distinct_squares(p.text, p.lz, p.lpf, p.lpf_rmq, p.lce, &st);
            REQUIRE(occ == brute_force_distinct_squares(p.text));
            check_report_invariants(p, occ);
            // probe budget: at most forward+backward per probe site plus one
            // lce per rotation pass
            std::uint64_t pair_sums = 0;
            for (std::uint32_t x = 1; x <= p.lz.z; ++x)
                pair_sums += p.lz.factor_len(x) +
                             ((x < p.lz.z) ? p.lz.factor_len(x + 1) : 1);
            CHECK(p.lce.probes() <= 5 * pair_sums + 16);
            p.lce.reset_probes();
        }
    }
}

TEST_CASE("reported squares cover all occurrences by right-rotation") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 25; ++round) {
        std::uint32_t alpha = 1 + static_cast<std::uint32_t>(rng() % 3);
        Pipeline p = build_pipeline(prepare_text(
            oracle::random_string(rng, 1 + static_cast<std::uint32_t>(rng() % 200), alpha)
                .c_str()));
        check_leftmost_covering(p, run_squares(p));
    }
    for (std::uint32_t len = 1; len <= 10; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            Pipeline p = build_pipeline(prepare_text(oracle::binary_string(bits, len).c_str()));
            check_leftmost_covering(p, run_squares(p));
        }
}

TEST_CASE("position lists hold lengths in descending order") {
    Pipeline p = build_pipeline(prepare_text("ababaaababa"));
    PositionLists pl = build_position_lists(run_squares(p), p.text.n);
    auto list_at = [&](std::uint32_t i) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t h = pl.head[i]; h != 0; h = pl.pool_next[h])
            out.push_back(pl.pool_len[h]);
        return out;
    };
    CHECK(list_at(1) == std::vector<std::uint32_t>{4});
    CHECK(list_at(2) == std::vector<std::uint32_t>{4});
    CHECK(list_at(5) == std::vector<std::uint32_t>{2});
    for (std::uint32_t i : {3u, 4u, 6u, 7u, 8u, 9u, 10u, 11u, 12u}) CHECK(list_at(i).empty());

    Pipeline sf = build_pipeline(prepare_text("abc"));
    PositionLists plf = build_position_lists(run_squares(sf), sf.text.n);
    for (std::uint32_t i = 1; i <= sf.text.n; ++i) CHECK(plf.head[i] == 0);

    Pipeline a4 = build_pipeline(prepare_text("aaaa"));
    PositionLists pla = build_position_lists(run_squares(a4), a4.text.n);
    std::vector<std::uint32_t> l1;
    for (std::uint32_t h = pla.head[1]; h != 0; h = pla.pool_next[h])
        l1.push_back(pla.pool_len[h]);
    CHECK(l1 == std::vector<std::uint32_t>{4, 2});
}
