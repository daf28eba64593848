#include "doctest.h"
#include "lzpl/codec.hpp"
#include "lzpl/generators.hpp"

#include <random>

using namespace lzpl;

TEST_CASE("encode emits header-only streams for empty input") {
    EncodeResult r = encode({}, CodecParams{12, 4}, Strategy::Greedy);
    CHECK(r.stream.size() == 15);  // 4 magic + 1 version + W + L + 8 length
    CHECK(r.stats.token_count == 0);
    CHECK(r.stats.encoded_bits == 0);
    CHECK(decode(r.stream).empty());
}

TEST_CASE("payload bit accounting follows the format definition") {
    EncodeResult abab = encode(to_bytes("abab"), CodecParams{12, 4}, Strategy::Greedy);
    CHECK(abab.stats.token_count == 3);
    CHECK(abab.stats.encoded_bits == 35);  // 2*(1+8) + 1*(1+12+4)

    EncodeResult aaaa = encode(to_bytes("aaaa"), CodecParams{12, 4}, Strategy::Greedy);
    CHECK(aaaa.stats.token_count == 3);
    CHECK(aaaa.stats.literal_count == 1);
    CHECK(aaaa.stats.pointer_count == 2);
    CHECK(aaaa.stats.encoded_bits == 43);  // 9 + 2*17

    CHECK(payload_bits(aaaa.stats, CodecParams{12, 4}) == 43);
}

TEST_CASE("encode validates parameters") {
    CHECK_THROWS_AS(encode({}, CodecParams{0, 4}, Strategy::Greedy), ParamOutOfRange);
    CHECK_THROWS_AS(encode({}, CodecParams{25, 4}, Strategy::Greedy), ParamOutOfRange);
    CHECK_THROWS_AS(encode({}, CodecParams{12, 17}, Strategy::Greedy), ParamOutOfRange);
}

TEST_CASE("decode rejects malformed streams") {
    EncodeResult r = encode(to_bytes("abab"), CodecParams{12, 4}, Strategy::Greedy);

    Bytes bad = r.stream;
    bad[0] = 'X';
    CHECK_THROWS_AS(decode(bad), BadMagic);

    Bytes cut(r.stream.begin(), r.stream.begin() + 16);
    CHECK_THROWS_AS(decode(cut), TruncatedStream);

    CHECK_THROWS_AS(decode(Bytes{'L', 'Z'}), BadMagic);
}

TEST_CASE("decode round-trips every strategy") {
    std::mt19937_64 rng(53);
    for (std::size_t trial = 0; trial < 120; ++trial) {
        Bytes text = trial % 2 == 0 ? gen_iid(rng, trial * 3 % 200, 7)
                                    : gen_repetitive(rng, trial * 3 % 200, 3);
        CodecParams params{static_cast<unsigned>(4 + trial % 10),
                           static_cast<unsigned>(2 + trial % 8)};
        for (Strategy s : {Strategy::Greedy, Strategy::Optimal, Strategy::Flexible}) {
            EncodeResult r = encode(text, params, s);
            CHECK(decode(r.stream) == text);
            CHECK(r.stats.encoded_bits == payload_bits(r.stats, params));
        }
    }
}

TEST_CASE("greedy and optimal agree on token count at fixed params") {
    std::mt19937_64 rng(59);
    for (std::size_t trial = 0; trial < 60; ++trial) {
        Bytes text = gen_repetitive(rng, 20 + trial % 100, 2);
        CodecParams params{8, 3};
        EncodeResult g = encode(text, params, Strategy::Greedy);
        EncodeResult o = encode(text, params, Strategy::Optimal);
        CHECK(g.stats.token_count == o.stats.token_count);
    }
}

TEST_CASE("decode tolerates overlapping pointers") {
    // hand-built stream: W=8, L=4, text "aaaa" as [lit 'a', ptr(1,3)]
    Bytes stream = {'L', 'Z', 'P', 'L', 1, 8, 4, 4, 0, 0, 0, 0, 0, 0, 0};
    // bits: 0 01100001 | 1 00000000 0010  -> pad to 3 bytes
    stream.push_back(0b00110000);
    stream.push_back(0b11000000);
    stream.push_back(0b00001000);
    CHECK(decode(stream) == to_bytes("aaaa"));
}
