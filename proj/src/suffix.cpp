#include "dsq/suffix.hpp"

#include <stdexcept>
#include <utility>

namespace dsq {

namespace detail {
void sais(const std::int32_t* s, std::int32_t* sa, std::int32_t n, std::int32_t K);
}

SuffixArray build_suffix_array(const Text& t) {
    std::uint32_t n = t.n;
    std::vector<std::int32_t> s(n), sa0(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = t.bytes[i + 1];
    detail::sais(s.data(), sa0.data(), static_cast<std::int32_t>(n), 256);
    SuffixArray sa;
    sa.n = n;
    sa.sa.resize(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) sa.sa[i] = static_cast<std::uint32_t>(sa0[i - 1]) + 1;
    return sa;
}

InverseSuffixArray invert(const SuffixArray& sa) {
    InverseSuffixArray isa;
    isa.isa.resize(sa.n + 1);
    for (std::uint32_t i = 1; i <= sa.n; ++i) isa.isa[sa.sa[i]] = i;
    return isa;
}

PlcpBits build_plcp(const Text& t, const SuffixArray& sa) {
    std::uint32_t n = t.n;
    std::vector<std::uint32_t> phi(n + 1, 0);  // phi[sa[1]] stays 0: no predecessor
    for (std::uint32_t i = 2; i <= n; ++i) phi[sa.sa[i]] = sa.sa[i - 1];
    BitBuilder bb;
    std::uint32_t ell = 0;
    std::int64_t prev = -1;
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::uint32_t k = phi[j];
        if (k == 0) {
            ell = 0;
        } else {
            while (j + ell <= n && k + ell <= n && t.bytes[j + ell] == t.bytes[k + ell]) ++ell;
        }
        std::int64_t delta = static_cast<std::int64_t>(ell) - prev;
        if (delta < 0) throw std::logic_error("PLCP increments must be non-negative");
        bb.append_zeros(static_cast<std::uint64_t>(delta));
        bb.append_one();
        prev = static_cast<std::int64_t>(ell) - 1;
        if (ell > 0) --ell;
    }
    PlcpBits p;
    p.n = n;
    p.s_bits = std::move(bb).finish();
    return p;
}

std::uint32_t lcp_access(const PlcpBits& p, const SuffixArray& sa, std::uint32_t i) {
    if (i < 1 || i > p.n) throw std::out_of_range("lcp_access");
    return p.plcp(sa.sa[i]);
}

LceIndex::LceIndex(const Text& t, SuffixArray sa, PlcpBits plcp)
    : n_(t.n), sa_(std::move(sa)), plcp_(std::move(plcp)) {
    isa_ = invert(sa_);
    std::vector<std::uint32_t> lcp_by_rank(n_ + 1, 0);
    for (std::uint32_t i = 1; i <= n_; ++i) lcp_by_rank[i] = lcp_access(plcp_, sa_, i);
    lcp_rmq_ = RmqIndex(std::move(lcp_by_rank));
}

std::uint32_t LceIndex::lce(std::uint32_t s, std::uint32_t u) const {
    if (s < 1 || s > n_ || u < 1 || u > n_) throw std::out_of_range("LceIndex::lce");
    probes_.fetch_add(1, std::memory_order_relaxed);
    if (s == u) return n_ - s + 1;
    std::uint32_t a = isa_.isa[s], b = isa_.isa[u];
    if (a > b) std::swap(a, b);
    std::uint32_t m = lcp_rmq_.query(a + 1, b);
    return plcp_.plcp(sa_.sa[m]);
}

LceIndex build_lce(const Text& t) {
    SuffixArray sa = build_suffix_array(t);
    PlcpBits plcp = build_plcp(t, sa);
    return LceIndex(t, std::move(sa), std::move(plcp));
}

LceIndex build_lce(const Text& t, SuffixArray sa, PlcpBits plcp) {
    return LceIndex(t, std::move(sa), std::move(plcp));
}

LcePair::LcePair(const Text& t, SuffixArray sa, PlcpBits plcp) : n_(t.n) {
    fwd_ = LceIndex(t, std::move(sa), std::move(plcp));
    Text rev = reverse_text(t);
    SuffixArray rsa = build_suffix_array(rev);
    PlcpBits rplcp = build_plcp(rev, rsa);
    bwd_ = LceIndex(rev, std::move(rsa), std::move(rplcp));
}

std::uint32_t LcePair::lce_backward(std::uint32_t s, std::uint32_t u) const {
    if (s > n_ - 1 || u > n_ - 1) throw std::out_of_range("LcePair::lce_backward");
    if (s == 0 || u == 0) return 0;
    if (s == u) return s;
    return bwd_.lce(n_ - s, n_ - u);
}

LcePair build_lce_pair(const Text& t, SuffixArray sa, PlcpBits plcp) {
    return LcePair(t, std::move(sa), std::move(plcp));
}

}  // namespace dsq
