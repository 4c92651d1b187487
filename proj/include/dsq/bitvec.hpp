#pragma once

#include <cstdint>
#include <vector>

namespace dsq {

class SuccinctBits;

// Appends bits left to right; positions are 1-based in the finished vector.
class BitBuilder {
  public:
    void append_one();
    void append_zeros(std::uint64_t count);
    void append_bit(bool bit);
    std::uint64_t size() const { return size_; }
    SuccinctBits finish() &&;

  private:
    friend class SuccinctBits;
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    std::uint64_t ones_ = 0;
};

// Static bit vector with select1 support. The directory samples every 64th
// 1-bit; windows whose span exceeds kLongWindow bits store all positions
// explicitly so a select never scans more than kLongWindow bits.
class SuccinctBits {
  public:
    SuccinctBits() = default;
    explicit SuccinctBits(const std::vector<bool>& bits);

    std::uint64_t size() const { return size_; }
    std::uint64_t ones() const { return ones_; }
    bool get(std::uint64_t pos) const;  // 1-based

    // Position of the i-th 1-bit, 1-based on both sides.
    // Throws std::out_of_range unless 1 <= i <= ones().
    std::uint64_t select1(std::uint64_t i) const;

  private:
    friend class BitBuilder;
    static constexpr std::uint64_t kSampleRate = 64;
    static constexpr std::uint64_t kLongWindow = 4096;

    void build_select_index();

    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> sample_pos_;    // position of 1-bit #(64k+1)
    std::vector<std::uint32_t> overflow_ref_;  // per window; UINT32_MAX = inline
    std::vector<std::uint64_t> overflow_pos_;
};

SuccinctBits build_select(const std::vector<bool>& bits);

// Sparse-table range minimum index over a copy of the source sequence.
// query(l, r) returns the leftmost argmin position; 1-based inclusive.
class RmqIndex {
  public:
    RmqIndex() = default;
    explicit RmqIndex(std::vector<std::uint32_t> source);  // source[0] unused

    std::uint32_t size() const { return n_; }
    std::uint32_t value(std::uint32_t pos) const { return source_[pos]; }

    // Throws std::out_of_range unless 1 <= l <= r <= size().
    std::uint32_t query(std::uint32_t l, std::uint32_t r) const;

  private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> source_;
    std::vector<std::vector<std::uint32_t>> level_;  // argmin of [i, i+2^j)
};

RmqIndex build_rmq(std::vector<std::uint32_t> source);

}  // namespace dsq
