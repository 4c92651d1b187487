#include <doctest.h>

#include <random>

#include "dsq/text.hpp"
#include "oracles.hpp"

using namespace dsq;

TEST_CASE("prepare_text appends the sentinel") {
    Text t = prepare_text("ababaaababa");
    CHECK(t.n == 12);
    CHECK(t.bytes[12] == kSentinel);
    CHECK(t.bytes[1] == 'a');
    CHECK(t.sigma == 3);

    Text empty = prepare_text("");
    CHECK(empty.n == 1);
    CHECK(empty.bytes[1] == kSentinel);
    CHECK(empty.sigma == 1);

    Text app = prepare_text("abaabab");
    CHECK(app.n == 8);
}

TEST_CASE("prepare_text rejects the sentinel byte") {
    std::vector<unsigned char> raw{'a', 0, 'b'};
    CHECK_THROWS_AS(prepare_text(std::span<const unsigned char>(raw)), std::invalid_argument);
}

TEST_CASE("reverse_text examples") {
    Text t = prepare_text("ababaaababa");
    Text r = reverse_text(t);
    CHECK(r.n == t.n);
    for (std::uint32_t i = 1; i <= t.n; ++i) CHECK(r.bytes[i] == t.bytes[i]);  // palindrome

    Text s = prepare_text("");
    Text rs = reverse_text(s);
    CHECK(rs.n == 1);
    CHECK(rs.bytes[1] == kSentinel);

    Text ab = prepare_text("ab");
    Text ba = reverse_text(ab);
    CHECK(ba.bytes[1] == 'b');
    CHECK(ba.bytes[2] == 'a');
    CHECK(ba.bytes[3] == kSentinel);
}

TEST_CASE("reverse_text is an involution") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        auto s = oracle::random_string(rng, 1 + it * 3, 4);
        Text t = prepare_text(s.c_str());
        Text rr = reverse_text(reverse_text(t));
        CHECK(rr.bytes == t.bytes);
    }
}
