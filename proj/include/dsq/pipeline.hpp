#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsq/lpf.hpp"
#include "dsq/mast.hpp"
#include "dsq/squares.hpp"
#include "dsq/suffix.hpp"
#include "dsq/sufftree.hpp"
#include "dsq/text.hpp"

namespace dsq {

// Everything the CLI stages share, built once per input.
struct Pipeline {
    Text text;
    SuffixArray sa;
    PlcpBits plcp;
    LcePair lce;
    SuffixTree tree;
    SuccinctLpf lpf;
    RmqIndex lpf_rmq;
    LzFactorization lz;
};

Pipeline build_pipeline(Text t);

std::vector<SquareOccurrence> run_squares(const Pipeline& p, PeriodScanState* state = nullptr);

// Evaluation statistics columns: alphabet size, LCP maximum and average,
// factor count, largest factor and adjacent-factor sum, number of distinct
// squares, wall time.
struct StatsReport {
    std::uint32_t sigma = 0;
    std::uint32_t max_lcp = 0;
    double avg_lcp = 0.0;
    std::uint32_t z = 0;
    std::uint32_t max_factor_len = 0;
    std::uint32_t max_adjacent_factor_len = 0;
    std::uint64_t occ = 0;
    double elapsed_ms = 0.0;
};

StatsReport compute_stats(const Pipeline& p);

}  // namespace dsq
