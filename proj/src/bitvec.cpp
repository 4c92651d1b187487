#include "dsq/bitvec.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <utility>

namespace dsq {

namespace {

// Index of the k-th set bit of w (k is 1-based, result 0-based).
inline unsigned nth_set_bit(std::uint64_t w, unsigned k) {
    unsigned pos = 0;
    for (;;) {
        unsigned tz = static_cast<unsigned>(std::countr_zero(w));
        pos = tz;
        if (--k == 0) return pos;
        w &= w - 1;
    }
}

}  // namespace

void BitBuilder::append_one() {
    std::uint64_t word = size_ >> 6, bit = size_ & 63;
    if (word >= words_.size()) words_.push_back(0);
    words_[word] |= std::uint64_t{1} << bit;
    ++size_;
    ++ones_;
}

void BitBuilder::append_zeros(std::uint64_t count) {
    size_ += count;
    std::uint64_t need = (size_ + 63) >> 6;
    if (need > words_.size()) words_.resize(need, 0);
}

void BitBuilder::append_bit(bool bit) {
    if (bit)
        append_one();
    else
        append_zeros(1);
}

SuccinctBits BitBuilder::finish() && {
    SuccinctBits b;
    b.words_ = std::move(words_);
    b.size_ = size_;
    b.ones_ = ones_;
    if ((b.size_ + 63) / 64 > b.words_.size()) b.words_.resize((b.size_ + 63) / 64, 0);
    b.build_select_index();
    return b;
}

SuccinctBits::SuccinctBits(const std::vector<bool>& bits) {
    BitBuilder bb;
    for (bool bit : bits) bb.append_bit(bit);
    *this = std::move(bb).finish();
}

bool SuccinctBits::get(std::uint64_t pos) const {
    if (pos < 1 || pos > size_) throw std::out_of_range("SuccinctBits::get");
    std::uint64_t i = pos - 1;
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void SuccinctBits::build_select_index() {
    sample_pos_.clear();
    overflow_ref_.clear();
    overflow_pos_.clear();
    if (ones_ == 0) return;
    std::vector<std::uint64_t> pending;  // current window positions
    pending.reserve(kSampleRate);
    std::uint64_t count = 0;
    auto flush_window = [&]() {
        std::uint64_t span = pending.back() - pending.front();
        if (span >= kLongWindow) {
            overflow_ref_.push_back(static_cast<std::uint32_t>(overflow_pos_.size()));
            overflow_pos_.insert(overflow_pos_.end(), pending.begin(), pending.end());
        } else {
            overflow_ref_.push_back(std::numeric_limits<std::uint32_t>::max());
        }
        pending.clear();
    };
    for (std::uint64_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            unsigned tz = static_cast<unsigned>(std::countr_zero(word));
            std::uint64_t pos = (w << 6) + tz + 1;
            if (count % kSampleRate == 0) sample_pos_.push_back(pos);
            pending.push_back(pos);
            ++count;
            if (pending.size() == kSampleRate) flush_window();
            word &= word - 1;
        }
    }
    if (!pending.empty()) flush_window();
}

std::uint64_t SuccinctBits::select1(std::uint64_t i) const {
    if (i < 1 || i > ones_) throw std::out_of_range("SuccinctBits::select1");
    std::uint64_t window = (i - 1) / kSampleRate;
    std::uint64_t rest = (i - 1) % kSampleRate;  // ones to skip after the sample
    std::uint32_t ov = overflow_ref_[window];
    if (ov != std::numeric_limits<std::uint32_t>::max()) return overflow_pos_[ov + rest];
    std::uint64_t p = sample_pos_[window];
    if (rest == 0) return p;
    std::uint64_t word_idx = (p - 1) >> 6;
    unsigned bit = static_cast<unsigned>((p - 1) & 63);
    // clear the sample bit and everything below it
    std::uint64_t cur = words_[word_idx] & ~((bit == 63) ? ~std::uint64_t{0}
                                                         : ((std::uint64_t{1} << (bit + 1)) - 1));
    for (;;) {
        unsigned c = static_cast<unsigned>(std::popcount(cur));
        if (c >= rest) {
            unsigned off = nth_set_bit(cur, static_cast<unsigned>(rest));
            return (word_idx << 6) + off + 1;
        }
        rest -= c;
        ++word_idx;
        cur = words_[word_idx];
    }
}

SuccinctBits build_select(const std::vector<bool>& bits) { return SuccinctBits(bits); }

RmqIndex::RmqIndex(std::vector<std::uint32_t> source) : source_(std::move(source)) {
    n_ = source_.empty() ? 0 : static_cast<std::uint32_t>(source_.size()) - 1;
    if (n_ == 0) return;
    unsigned levels = std::bit_width(n_);
    level_.resize(levels);
    level_[0].resize(n_ + 1);
    for (std::uint32_t i = 1; i <= n_; ++i) level_[0][i] = i;
    for (unsigned j = 1; j < levels; ++j) {
        std::uint32_t len = std::uint32_t{1} << j;
        level_[j].resize(n_ + 2 - len);
        for (std::uint32_t i = 1; i + len - 1 <= n_; ++i) {
            std::uint32_t a = level_[j - 1][i];
            std::uint32_t b = level_[j - 1][i + len / 2];
            level_[j][i] = source_[a] <= source_[b] ? a : b;
        }
    }
}

std::uint32_t RmqIndex::query(std::uint32_t l, std::uint32_t r) const {
    if (l < 1 || l > r || r > n_) throw std::out_of_range("RmqIndex::query");
    unsigned j = std::bit_width(r - l + 1) - 1;
    std::uint32_t a = level_[j][l];
    std::uint32_t b = level_[j][r - (std::uint32_t{1} << j) + 1];
    return source_[a] <= source_[b] ? a : b;
}

RmqIndex build_rmq(std::vector<std::uint32_t> source) { return RmqIndex(std::move(source)); }

}  // namespace dsq
