#include "dsq/pipeline.hpp"

#include <chrono>
#include <utility>

namespace dsq {

Pipeline build_pipeline(Text t) {
    Pipeline p;
    p.text = std::move(t);
    p.sa = build_suffix_array(p.text);
    p.plcp = build_plcp(p.text, p.sa);
    p.lce = LcePair(p.text, p.sa, p.plcp);
    p.tree = build_suffix_tree(p.text, p.sa, p.plcp);
    p.lpf = build_lpf_succinct(p.tree);
    p.lpf_rmq = build_lpf_rmq(p.lpf);
    p.lz = lz_factorize(p.lpf);
    return p;
}

std::vector<SquareOccurrence> run_squares(const Pipeline& p, PeriodScanState* state) {
    return find_distinct_squares(p.text, p.lz, p.lpf, p.lpf_rmq, p.lce, state);
}

StatsReport compute_stats(const Pipeline& p) {
    StatsReport r;
    auto t0 = std::chrono::steady_clock::now();
    r.sigma = p.text.sigma;
    std::uint64_t sum = 0;
    for (std::uint32_t i = 1; i <= p.text.n; ++i) {
        std::uint32_t v = lcp_access(p.plcp, p.sa, i);
        r.max_lcp = std::max(r.max_lcp, v);
        sum += v;
    }
    r.avg_lcp = static_cast<double>(sum) / p.text.n;
    r.z = p.lz.z;
    for (std::uint32_t x = 1; x <= p.lz.z; ++x) {
        r.max_factor_len = std::max(r.max_factor_len, p.lz.factor_len(x));
        if (x + 1 <= p.lz.z)
            r.max_adjacent_factor_len =
                std::max(r.max_adjacent_factor_len, p.lz.factor_len(x) + p.lz.factor_len(x + 1));
    }
    r.occ = run_squares(p).size();
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

}  // namespace dsq
