#pragma once

#include <cstdint>
#include <vector>

#include "dsq/bitvec.hpp"
#include "dsq/lpf.hpp"
#include "dsq/suffix.hpp"
#include "dsq/text.hpp"

namespace dsq {

struct SquareOccurrence {
    std::uint32_t start;
    std::uint32_t length;  // 2p
    bool operator==(const SquareOccurrence&) const = default;
    auto operator<=>(const SquareOccurrence&) const = default;
};

enum class ReportOrigin : std::uint8_t {
    kRightRotate,      // reported directly for a probed square start
    kRecursiveRotate,  // reported by the RMQ-driven rotation search
};

// Scratch state for one period sweep. Marking uses period timestamps instead
// of a fresh length-n bit vector per period; the semantics are identical.
struct PeriodScanState {
    std::uint32_t n = 0;
    std::uint32_t z = 0;
    std::uint32_t period = 0;
    std::vector<std::uint32_t> mark_stamp;  // mark_stamp[s] == period <=> marked
    std::vector<std::uint32_t> z_skip;      // next factor with a large enough pair sum
    std::vector<SquareOccurrence> reported;
    std::vector<ReportOrigin> origin;
    std::uint64_t rmq_calls = 0;

    void init(std::uint32_t text_n, std::uint32_t factor_count);
    void begin_period(std::uint32_t p) { period = p; }
    bool marked(std::uint32_t s) const { return mark_stamp[s] == period; }
    void mark(std::uint32_t s) { mark_stamp[s] = period; }
    void report(std::uint32_t s, std::uint32_t len, ReportOrigin o) {
        reported.push_back({s, len});
        origin.push_back(o);
    }
};

// Reports (s, 2p) if it is a leftmost occurrence, then searches the rotation
// interval [s+1 .. min(s+p-1, s+l-p)] (l = forward LCE of s and s+p) for
// further leftmost occurrences, and finally marks s for this period.
void right_rotate(std::uint32_t s, std::uint32_t p, PeriodScanState& state, const SuccinctLpf& lpf,
                  const RmqIndex& lpf_rmq, const LcePair& lce);

// Splits [lo..hi] at the leftmost LPF argmin; prunes when the minimum is
// already 2p or larger. Reports are emitted in ascending position order.
void recursive_rotate(std::uint32_t lo, std::uint32_t hi, std::uint32_t p, PeriodScanState& state,
                      const SuccinctLpf& lpf, const RmqIndex& lpf_rmq);

// Leftmost occurrences of all distinct squares, sorted by (length, start).
// Periods run from 1 to the maximum adjacent factor-length sum; factor
// borders are probed per the two border configurations, skipping factors via
// the z_skip array. If state_out is given, the final scan state (reports with
// origins, counters) is moved there.
std::vector<SquareOccurrence> find_distinct_squares(const Text& t, const LzFactorization& fz,
                                                    const SuccinctLpf& lpf,
                                                    const RmqIndex& lpf_rmq, const LcePair& lce,
                                                    PeriodScanState* state_out = nullptr);

// Quadratic-time oracle over a character-comparison DP table; intended for
// n up to a few thousand.
std::vector<SquareOccurrence> brute_force_distinct_squares(const Text& t);

// Per-position lists of square lengths in descending order, stored as linked
// lists into one shared pool (front insertion of the ascending-length report
// stream).
struct PositionLists {
    std::vector<std::uint32_t> head;       // head[i], 1 <= i <= n; 0 = empty
    std::vector<std::uint32_t> pool_len;   // pool slot -> square length
    std::vector<std::uint32_t> pool_next;  // pool slot -> next slot or 0
};

PositionLists build_position_lists(const std::vector<SquareOccurrence>& squares, std::uint32_t n);

}  // namespace dsq
