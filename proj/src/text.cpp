#include "dsq/text.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

namespace dsq {

Text prepare_text(std::span<const unsigned char> raw) {
    Text t;
    t.bytes.resize(raw.size() + 2);
    std::array<bool, 256> seen{};
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == kSentinel)
            throw std::invalid_argument("input contains the sentinel byte");
        t.bytes[i + 1] = raw[i];
        seen[raw[i]] = true;
    }
    t.n = static_cast<std::uint32_t>(raw.size()) + 1;
    t.bytes[t.n] = kSentinel;
    seen[kSentinel] = true;
    t.sigma = 0;
    for (bool b : seen) t.sigma += b ? 1 : 0;
    return t;
}

Text prepare_text(const char* str) {
    return prepare_text(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(str), std::strlen(str)));
}

Text reverse_text(const Text& t) {
    Text r;
    r.n = t.n;
    r.sigma = t.sigma;
    r.bytes.resize(t.n + 1);
    for (std::uint32_t i = 1; i + 1 <= t.n; ++i) r.bytes[i] = t.bytes[t.n - i];
    r.bytes[r.n] = kSentinel;
    return r;
}

}  // namespace dsq
