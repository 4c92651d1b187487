#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dsq {

// The sentinel terminates every text and compares smaller than all other
// symbols. Input data must not contain it.
inline constexpr unsigned char kSentinel = 0;

// Sentinel-terminated byte string with 1-based positions. bytes[0] is unused
// padding so that bytes[i] is the i-th symbol; bytes[n] is the sentinel.
struct Text {
    std::vector<unsigned char> bytes;
    std::uint32_t n = 0;      // length including the sentinel
    std::uint32_t sigma = 0;  // distinct symbols, sentinel included

    unsigned char at(std::uint32_t pos) const { return bytes[pos]; }
};

// Appends the sentinel and counts distinct symbols. Throws
// std::invalid_argument if the raw input already contains the sentinel byte.
Text prepare_text(std::span<const unsigned char> raw);
Text prepare_text(const char* str);

// T[n-1] ... T[1] followed by the sentinel; same length as the input.
Text reverse_text(const Text& t);

}  // namespace dsq
