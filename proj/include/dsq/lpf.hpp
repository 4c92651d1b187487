#pragma once

#include <cstdint>
#include <vector>

#include "dsq/bitvec.hpp"
#include "dsq/suffix.hpp"
#include "dsq/text.hpp"

namespace dsq {

struct SuffixTree;

// LPF in the same unary-increment encoding as PLCP: LPF[j] + j is
// non-decreasing and LPF[j] <= n - j, so the vector is exactly 2n bits and
// access(j) = select1(j) - 2j.
struct SuccinctLpf {
    SuccinctBits s_bits;
    std::uint32_t n = 0;

    std::uint32_t access(std::uint32_t j) const {
        return static_cast<std::uint32_t>(s_bits.select1(j) - 2 * static_cast<std::uint64_t>(j));
    }
};

// Stack pass over SA and LCP (rank order); reference construction used to
// cross-check the tree pass. Returns a plain 1-based array.
std::vector<std::uint32_t> build_lpf_plain(const SuffixArray& sa, const PlcpBits& plcp);

// Production path: visit suffix tree leaves in label order, climb until the
// root (emit 0) or the first marked node (emit its string depth), marking
// nodes on the way. Values arrive in text order and go straight into the
// unary stream; no plain LPF array is materialized.
SuccinctLpf build_lpf_succinct(const SuffixTree& st);
SuccinctLpf build_lpf_succinct(const Text& t, const SuffixArray& sa, const PlcpBits& plcp);

// RMQ over the decoded LPF values (one pass through access).
RmqIndex build_lpf_rmq(const SuccinctLpf& lpf);

// Greedy tiling with |f_x| = max(1, LPF[start_x]). Factor starts are kept
// both as a plain array and as a marked bit vector with select.
struct LzFactorization {
    std::vector<std::uint32_t> starts;  // starts[0] unused; starts[1] = 1
    std::uint32_t z = 0;
    std::uint32_t n = 0;
    SuccinctBits boundary_bits;

    std::uint32_t factor_start(std::uint32_t x) const;
    std::uint32_t factor_len(std::uint32_t x) const;
};

LzFactorization lz_factorize(const SuccinctLpf& lpf);

// (start, length) of factor x via select on the boundary bits.
// Throws std::out_of_range unless 1 <= x <= z.
std::pair<std::uint32_t, std::uint32_t> lz_factor_at(const LzFactorization& fz, std::uint32_t x);

}  // namespace dsq
