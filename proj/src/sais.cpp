// Suffix array construction by induced sorting (SA-IS).
// Internal 0-based core; the public wrapper lives in suffix.cpp.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dsq::detail {

namespace {

void get_buckets(const std::int32_t* s, std::int32_t* bkt, std::int32_t n, std::int32_t K,
                 bool end) {
    std::fill(bkt, bkt + K, 0);
    for (std::int32_t i = 0; i < n; ++i) ++bkt[s[i]];
    std::int32_t sum = 0;
    for (std::int32_t i = 0; i < K; ++i) {
        sum += bkt[i];
        bkt[i] = end ? sum : sum - bkt[i];
    }
}

void induce_l(const std::int32_t* s, std::int32_t* sa, const std::vector<bool>& stype,
              std::int32_t* bkt, std::int32_t n, std::int32_t K) {
    get_buckets(s, bkt, n, K, false);
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t j = sa[i] - 1;
        if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
    }
}

void induce_s(const std::int32_t* s, std::int32_t* sa, const std::vector<bool>& stype,
              std::int32_t* bkt, std::int32_t n, std::int32_t K) {
    get_buckets(s, bkt, n, K, true);
    for (std::int32_t i = n - 1; i >= 0; --i) {
        std::int32_t j = sa[i] - 1;
        if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
    }
}

}  // namespace

// s[n-1] must be the unique smallest symbol; symbols in [0, K).
void sais(const std::int32_t* s, std::int32_t* sa, std::int32_t n, std::int32_t K) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<bool> stype(n);
    stype[n - 1] = true;
    for (std::int32_t i = n - 2; i >= 0; --i)
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int32_t> bkt(K);
    std::fill(sa, sa + n, -1);
    get_buckets(s, bkt.data(), n, K, true);
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) sa[--bkt[s[i]]] = i;
    induce_l(s, sa, stype, bkt.data(), n, K);
    induce_s(s, sa, stype, bkt.data(), n, K);

    // LMS substrings are now sorted; name them.
    std::int32_t n1 = 0;
    for (std::int32_t i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[n1++] = sa[i];
    std::fill(sa + n1, sa + n, -1);
    std::int32_t name = 0, prev = -1;
    for (std::int32_t i = 0; i < n1; ++i) {
        std::int32_t pos = sa[i];
        bool diff = false;
        if (prev < 0) {
            diff = true;
        } else {
            for (std::int32_t d = 0; d < n; ++d) {
                if (s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                    diff = true;
                    break;
                }
                if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
        }
        if (diff) {
            ++name;
            prev = pos;
        }
        sa[n1 + pos / 2] = name - 1;
    }
    for (std::int32_t i = n - 1, j = n - 1; i >= n1; --i)
        if (sa[i] >= 0) sa[j--] = sa[i];

    std::int32_t* sa1 = sa;
    std::int32_t* s1 = sa + n - n1;
    if (name < n1)
        sais(s1, sa1, n1, name);
    else
        for (std::int32_t i = 0; i < n1; ++i) sa1[s1[i]] = i;

    // Map the reduced order back to LMS text positions and induce once more.
    {
        std::int32_t j = 0;
        for (std::int32_t i = 1; i < n; ++i)
            if (is_lms(i)) s1[j++] = i;
        for (std::int32_t i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
        std::fill(sa + n1, sa + n, -1);
        get_buckets(s, bkt.data(), n, K, true);
        for (std::int32_t i = n1 - 1; i >= 0; --i) {
            std::int32_t j2 = sa[i];
            sa[i] = -1;
            sa[--bkt[s[j2]]] = j2;
        }
    }
    induce_l(s, sa, stype, bkt.data(), n, K);
    induce_s(s, sa, stype, bkt.data(), n, K);
}

}  // namespace dsq::detail
