#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "dsq/bitvec.hpp"
#include "dsq/text.hpp"

namespace dsq {

// sa[i] (1-based) is the start of the i-th lexicographically smallest suffix;
// sa[1] = n because the sentinel suffix is smallest.
struct SuffixArray {
    std::vector<std::uint32_t> sa;  // sa[0] unused
    std::uint32_t n = 0;

    std::uint32_t operator[](std::uint32_t i) const { return sa[i]; }
};

struct InverseSuffixArray {
    std::vector<std::uint32_t> isa;  // isa[0] unused

    std::uint32_t operator[](std::uint32_t pos) const { return isa[pos]; }
};

// Induced-sorting construction, linear in n.
SuffixArray build_suffix_array(const Text& t);
InverseSuffixArray invert(const SuffixArray& sa);

// PLCP in the unary-increment encoding: the non-decreasing sequence
// PLCP[i] + i is stored as runs 0^{d_i} 1, so the whole vector is exactly
// 2n bits and PLCP[i] = select1(i) - 2i.
struct PlcpBits {
    SuccinctBits s_bits;
    std::uint32_t n = 0;

    std::uint32_t plcp(std::uint32_t i) const {
        return static_cast<std::uint32_t>(s_bits.select1(i) - 2 * static_cast<std::uint64_t>(i));
    }
};

// Phi-pass in text order, appending unary increments directly; no plain
// PLCP array is materialized.
PlcpBits build_plcp(const Text& t, const SuffixArray& sa);

// LCP[i] for a rank, via PLCP: select1(SA[i]) - 2 SA[i]. LCP[1] = 0.
std::uint32_t lcp_access(const PlcpBits& p, const SuffixArray& sa, std::uint32_t i);

// Forward LCE queries on one text: ISA + RMQ over LCP ranks. The LCP values
// live only in the PLCP bits; the RMQ stores its own rank-ordered copy.
class LceIndex {
  public:
    LceIndex() = default;
    LceIndex(const Text& t, SuffixArray sa, PlcpBits plcp);

    std::uint32_t n() const { return n_; }
    // Longest common prefix of the suffixes at s and u; n - s + 1 when s == u.
    std::uint32_t lce(std::uint32_t s, std::uint32_t u) const;

    std::uint64_t probes() const { return probes_.load(std::memory_order_relaxed); }
    void reset_probes() const { probes_.store(0, std::memory_order_relaxed); }

    const SuffixArray& sa() const { return sa_; }
    const InverseSuffixArray& isa() const { return isa_; }
    const PlcpBits& plcp() const { return plcp_; }

  private:
    std::uint32_t n_ = 0;
    SuffixArray sa_;
    InverseSuffixArray isa_;
    PlcpBits plcp_;
    RmqIndex lcp_rmq_;
    mutable std::atomic<std::uint64_t> probes_{0};
};

LceIndex build_lce(const Text& t);
LceIndex build_lce(const Text& t, SuffixArray sa, PlcpBits plcp);

// Forward LCE plus backward LCE over the reversed text (indices mirrored by
// i -> n - i). Owns both index sets.
class LcePair {
  public:
    LcePair() = default;
    LcePair(const Text& t, SuffixArray sa, PlcpBits plcp);

    std::uint32_t n() const { return n_; }
    std::uint32_t lce_forward(std::uint32_t s, std::uint32_t u) const { return fwd_.lce(s, u); }
    // Longest common suffix of the prefixes T[1..s] and T[1..u]; 0 <= s,u <= n-1
    // and 0 yields 0.
    std::uint32_t lce_backward(std::uint32_t s, std::uint32_t u) const;

    std::uint64_t probes() const { return fwd_.probes() + bwd_.probes(); }
    void reset_probes() const {
        fwd_.reset_probes();
        bwd_.reset_probes();
    }

    const LceIndex& forward_index() const { return fwd_; }

  private:
    std::uint32_t n_ = 0;
    LceIndex fwd_;
    LceIndex bwd_;
};

LcePair build_lce_pair(const Text& t, SuffixArray sa, PlcpBits plcp);

}  // namespace dsq
