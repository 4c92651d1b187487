#include "dsq/squares.hpp"

#include <algorithm>
#include <cassert>

namespace dsq {

void PeriodScanState::init(std::uint32_t text_n, std::uint32_t factor_count) {
    n = text_n;
    z = factor_count;
    period = 0;
    mark_stamp.assign(n + 2, 0);
    z_skip.assign(z + 2, 0);
    reported.clear();
    origin.clear();
    rmq_calls = 0;
}

void recursive_rotate(std::uint32_t lo, std::uint32_t hi, std::uint32_t p, PeriodScanState& state,
                      const SuccinctLpf& lpf, const RmqIndex& lpf_rmq) {
    if (lo > hi) return;
    struct Frame {
        std::uint32_t lo, hi;
        bool emit;  // emit == true: lo holds a position to report
    };
    std::vector<Frame> stack;
    stack.push_back({lo, hi, false});
    std::uint32_t twice_p = 2 * p;
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.emit) {
            if (!state.marked(f.lo)) {
                state.report(f.lo, twice_p, ReportOrigin::kRecursiveRotate);
                state.mark(f.lo);
            }
            continue;
        }
        if (f.lo > f.hi) continue;
        std::uint32_t m = lpf_rmq.query(f.lo, f.hi);
        ++state.rmq_calls;
        if (lpf.access(m) >= twice_p) continue;
        // in-order: left interval, then m, then right interval
        if (m < f.hi) stack.push_back({m + 1, f.hi, false});
        stack.push_back({m, 0, true});
        if (f.lo < m) stack.push_back({f.lo, m - 1, false});
    }
}

void right_rotate(std::uint32_t s, std::uint32_t p, PeriodScanState& state, const SuccinctLpf& lpf,
                  const RmqIndex& lpf_rmq, const LcePair& lce) {
    if (state.marked(s)) return;
    std::uint32_t twice_p = 2 * p;
    if (lpf.access(s) < twice_p) state.report(s, twice_p, ReportOrigin::kRightRotate);
    std::uint32_t ell = lce.lce_forward(s, s + p);
    assert(ell >= p);
    std::uint32_t hi = std::min(s + p - 1, s + ell - p);
    recursive_rotate(s + 1, hi, p, state, lpf, lpf_rmq);
    state.mark(s);
}

namespace {

struct BorderProber {
    const Text& t;
    const LzFactorization& fz;
    const SuccinctLpf& lpf;
    const RmqIndex& lpf_rmq;
    const LcePair& lce;
    PeriodScanState& state;

    std::uint32_t n() const { return t.n; }
    // B(x); the dummy factor f_{z+1} = T[n] begins past the end.
    std::uint32_t begin(std::uint32_t x) const { return x <= fz.z ? fz.starts[x] : n() + 1; }
    std::uint32_t flen(std::uint32_t x) const { return x <= fz.z ? fz.factor_len(x) : 1; }

    // Square with its left end in f_x and its right end in f_{x+1};
    // requires |f_x| >= p. Probes p positions left of the border.
    void probe_right_end(std::uint32_t x, std::uint32_t p) {
        std::uint32_t b = begin(x + 1);
        if (b > n()) return;  // no text right of the border
        std::uint32_t q = b - p;
        if (t.bytes[b] != t.bytes[q]) return;  // forward LCE would be 0
        std::uint32_t lr = lce.lce_forward(b, q);
        std::uint32_t ll =
            (q >= 2 && t.bytes[b - 1] == t.bytes[q - 1]) ? lce.lce_backward(b - 1, q - 1) : 0;
        if (lr + ll >= p && lr > 0) {
            std::uint32_t s = std::max(q - ll, q - p + 1);
            right_rotate(s, p, state, lpf, lpf_rmq, lce);
        }
    }

    // Square whose center lies in f_x and whose left end reaches into f_{x-1}
    // or further; probes p positions right of the factor start.
    void probe_left_overhang(std::uint32_t x, std::uint32_t p) {
        std::uint32_t bl = begin(x);
        std::uint32_t q = bl + p;
        if (q > n() || bl < 2) return;
        if (t.bytes[bl] != t.bytes[q]) return;          // forward LCE would be 0
        if (t.bytes[bl - 1] != t.bytes[q - 1]) return;  // backward LCE would be 0
        std::uint32_t lr = lce.lce_forward(bl, q);
        std::uint32_t ll = lce.lce_backward(bl - 1, q - 1);
        std::uint32_t s = std::max(bl - ll, bl - p + 1);
        if (lr + ll >= p && lr > 0 && s + p <= begin(x + 1) && ll > 0)
            right_rotate(s, p, state, lpf, lpf_rmq, lce);
    }
};

}  // namespace

std::vector<SquareOccurrence> find_distinct_squares(const Text& t, const LzFactorization& fz,
                                                    const SuccinctLpf& lpf,
                                                    const RmqIndex& lpf_rmq, const LcePair& lce,
                                                    PeriodScanState* state_out) {
    PeriodScanState state;
    state.init(t.n, fz.z);
    BorderProber prober{t, fz, lpf, lpf_rmq, lce, state};

    std::uint32_t max_period = 0;
    for (std::uint32_t x = 1; x + 1 <= fz.z; ++x)
        max_period = std::max(max_period, prober.flen(x) + prober.flen(x + 1));

    auto pair_sum = [&](std::uint32_t x) { return prober.flen(x) + prober.flen(x + 1); };

    for (std::uint32_t p = 1; p <= max_period; ++p) {
        state.begin_period(p);
        std::uint32_t x = 1;
        while (x <= fz.z) {
            if (pair_sum(x) < p) {
                std::uint32_t y = x;
                while (y <= fz.z && pair_sum(y) < p)
                    y = state.z_skip[y] != 0 ? state.z_skip[y] : y + 1;
                state.z_skip[x] = y;
                x = y;
                if (x > fz.z) break;
            }
            // The left-overhang probe belongs to the border of f_{x-1} and
            // f_x, so it runs before this iteration's right-end probe: per
            // border, right-end squares are handled first.
            prober.probe_left_overhang(x, p);
            if (prober.flen(x) >= p) prober.probe_right_end(x, p);
            ++x;
        }
    }
    std::vector<SquareOccurrence> out = state.reported;
    if (state_out) *state_out = std::move(state);
    return out;
}

PositionLists build_position_lists(const std::vector<SquareOccurrence>& squares, std::uint32_t n) {
    PositionLists pl;
    pl.head.assign(n + 1, 0);
    pl.pool_len.assign(1, 0);  // slot 0 = null
    pl.pool_next.assign(1, 0);
    for (const auto& sq : squares) {
        pl.pool_len.push_back(sq.length);
        pl.pool_next.push_back(pl.head[sq.start]);
        pl.head[sq.start] = static_cast<std::uint32_t>(pl.pool_len.size()) - 1;
    }
    return pl;
}

}  // namespace dsq
