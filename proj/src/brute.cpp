#include <stdexcept>

#include "dsq/squares.hpp"

namespace dsq {

// Character-comparison DP, one diagonal at a time: diag[i] = lce(i, i+d).
// First sweep accumulates the naive LPF (max lce against all earlier
// positions), second sweep collects period-p squares whose LPF certifies a
// leftmost occurrence. O(n^2) time, O(n) space.
std::vector<SquareOccurrence> brute_force_distinct_squares(const Text& t) {
    const std::uint32_t n = t.n;
    if (n > 100000) throw std::invalid_argument("brute force oracle limited to small inputs");
    std::vector<std::uint32_t> lpf_nv(n + 2, 0), diag(n + 2, 0);
    auto fill_diag = [&](std::uint32_t d) {
        std::uint32_t next = 0;
        for (std::uint32_t i = n - d; i >= 1; --i) {
            std::uint32_t v = (t.bytes[i] == t.bytes[i + d]) ? next + 1 : 0;
            diag[i] = v;
            next = v;
        }
    };
    for (std::uint32_t d = 1; d + 1 <= n; ++d) {
        fill_diag(d);
        for (std::uint32_t s = d + 1; s <= n; ++s)
            lpf_nv[s] = std::max(lpf_nv[s], diag[s - d]);
    }
    std::vector<SquareOccurrence> out;
    for (std::uint32_t p = 1; 2 * p + 1 <= n; ++p) {
        fill_diag(p);
        for (std::uint32_t s = 1; s + 2 * p <= n; ++s)
            if (diag[s] >= p && lpf_nv[s] < 2 * p) out.push_back({s, 2 * p});
    }
    return out;
}

}  // namespace dsq
