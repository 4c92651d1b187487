#include "dsq/lpf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dsq/sufftree.hpp"

namespace dsq {

namespace {

// Lemma guard shared by both constructions: LPF[j] + j non-decreasing and
// LPF[j] <= n - j.
void check_lpf_step(std::uint32_t val, std::int64_t prev, std::uint32_t j, std::uint32_t n) {
    if (val > n - j || static_cast<std::int64_t>(val) < prev)
        throw std::logic_error("LPF monotonicity violated");
}

}  // namespace

std::vector<std::uint32_t> build_lpf_plain(const SuffixArray& sa, const PlcpBits& plcp) {
    std::uint32_t n = sa.n;
    std::vector<std::uint32_t> lpf(n + 1, 0);
    // Stack of (text position, min LCP to the stack element below); positions
    // on the stack increase. A smaller position resolves every deeper entry.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> st;
    st.reserve(64);
    for (std::uint32_t i = 1; i <= n + 1; ++i) {
        std::uint32_t cur_pos = (i <= n) ? sa.sa[i] : 0;
        std::uint32_t cur_lcp = (i <= n) ? lcp_access(plcp, sa, i) : 0;
        while (!st.empty() && cur_pos < st.back().first) {
            auto [pos_t, lcp_t] = st.back();
            st.pop_back();
            lpf[pos_t] = std::max(lcp_t, cur_lcp);
            cur_lcp = std::min(lcp_t, cur_lcp);
        }
        if (i <= n) st.emplace_back(cur_pos, cur_lcp);
    }
    std::int64_t prev = -1;
    for (std::uint32_t j = 1; j <= n; ++j) {
        check_lpf_step(lpf[j], prev, j, n);
        prev = static_cast<std::int64_t>(lpf[j]) - 1;
    }
    return lpf;
}

SuccinctLpf build_lpf_succinct(const SuffixTree& st) {
    std::uint32_t n = st.n;
    BitBuilder bb;
    std::vector<bool> visited(st.parent.size(), false);
    std::int64_t prev = -1;
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::uint32_t v = st.parent[st.leaf_node[j]];
        while (v != st.root && !visited[v]) {
            visited[v] = true;
            v = st.parent[v];
        }
        std::uint32_t val = (v == st.root) ? 0 : st.string_depth[v];
        check_lpf_step(val, prev, j, n);
        bb.append_zeros(static_cast<std::uint64_t>(static_cast<std::int64_t>(val) - prev));
        bb.append_one();
        prev = static_cast<std::int64_t>(val) - 1;
    }
    SuccinctLpf out;
    out.n = n;
    out.s_bits = std::move(bb).finish();
    return out;
}

SuccinctLpf build_lpf_succinct(const Text& t, const SuffixArray& sa, const PlcpBits& plcp) {
    return build_lpf_succinct(build_suffix_tree(t, sa, plcp));
}

RmqIndex build_lpf_rmq(const SuccinctLpf& lpf) {
    std::vector<std::uint32_t> vals(lpf.n + 1, 0);
    for (std::uint32_t j = 1; j <= lpf.n; ++j) vals[j] = lpf.access(j);
    return RmqIndex(std::move(vals));
}

std::uint32_t LzFactorization::factor_start(std::uint32_t x) const { return starts[x]; }

std::uint32_t LzFactorization::factor_len(std::uint32_t x) const {
    return (x < z ? starts[x + 1] : n + 1) - starts[x];
}

LzFactorization lz_factorize(const SuccinctLpf& lpf) {
    LzFactorization fz;
    fz.n = lpf.n;
    fz.starts.push_back(0);
    std::vector<bool> boundary(lpf.n);
    std::uint32_t k = 1;
    while (k <= lpf.n) {
        fz.starts.push_back(k);
        boundary[k - 1] = true;
        k += std::max<std::uint32_t>(1, lpf.access(k));
    }
    fz.z = static_cast<std::uint32_t>(fz.starts.size()) - 1;
    fz.boundary_bits = SuccinctBits(boundary);
    return fz;
}

std::pair<std::uint32_t, std::uint32_t> lz_factor_at(const LzFactorization& fz, std::uint32_t x) {
    if (x < 1 || x > fz.z) throw std::out_of_range("lz_factor_at");
    auto start = static_cast<std::uint32_t>(fz.boundary_bits.select1(x));
    std::uint32_t end =
        (x < fz.z) ? static_cast<std::uint32_t>(fz.boundary_bits.select1(x + 1)) : fz.n + 1;
    return {start, end - start};
}

}  // namespace dsq
