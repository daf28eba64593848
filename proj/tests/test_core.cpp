#include "doctest.h"
#include "lzpl/core.hpp"
#include "lzpl/generators.hpp"
#include "lzpl/parsers.hpp"

#include <random>

using namespace lzpl;

TEST_CASE("expand replays pointer copies") {
    Parsing p;
    p.push(Token::literal('a'));
    p.push(Token::literal('b'));
    p.push(Token::pointer(2, 2));
    CHECK(expand(p, DictionaryConfig::lz77()) == to_bytes("abab"));
}

TEST_CASE("expand of the empty parsing is the empty text") {
    CHECK(expand(Parsing{}, DictionaryConfig::lz77()).empty());
}

TEST_CASE("expand rejects a pointer with no prior symbols") {
    Parsing p;
    p.push(Token::pointer(1, 1));
    CHECK_THROWS_AS(expand(p, DictionaryConfig::lz77()), PointerOutOfRange);
}

TEST_CASE("expand rejects overlap unless allowed") {
    Parsing p;
    p.push(Token::literal('a'));
    p.push(Token::pointer(1, 3));
    DictionaryConfig strict = DictionaryConfig::lz77();
    CHECK_THROWS_AS(expand(p, strict), PointerOutOfRange);
    DictionaryConfig loose = strict;
    loose.allow_overlap = true;
    CHECK(expand(p, loose) == to_bytes("aaaa"));
}

TEST_CASE("expand resolves static phrase ordinals") {
    DictionaryConfig config =
        DictionaryConfig::static_dict({to_bytes("a"), to_bytes("ba"), to_bytes("aba")});
    Parsing p;
    p.push(Token::pointer(1, 1));
    p.push(Token::pointer(2, 2));
    CHECK(expand(p, config) == to_bytes("aba"));

    Parsing bad;
    bad.push(Token::pointer(4, 1));
    CHECK_THROWS_AS(expand(bad, config), PointerOutOfRange);
}

TEST_CASE("stats counts tokens by kind") {
    Parsing p;
    p.push(Token::literal('a'));
    p.push(Token::literal('b'));
    p.push(Token::pointer(2, 2));
    ParseStats s = stats(p);
    CHECK(s.token_count == 3);
    CHECK(s.pointer_count == 1);
    CHECK(s.literal_count == 2);

    CHECK(stats(Parsing{}).token_count == 0);

    Parsing q;
    q.push(Token::pointer(2, 2));
    q.push(Token::pointer(4, 4));
    ParseStats t = stats(q);
    CHECK(t.token_count == 2);
    CHECK(t.pointer_count == 2);
    CHECK(t.literal_count == 0);
}

TEST_CASE("round trip: expand(greedy_parse(T)) == T with valid structure") {
    std::mt19937_64 rng(7);
    for (std::size_t trial = 0; trial < 300; ++trial) {
        std::size_t len = trial % 50;
        std::size_t alphabet = 1 + trial % 4;
        Bytes text = trial % 2 == 0 ? gen_iid(rng, len, alphabet)
                                    : gen_repetitive(rng, len, alphabet);
        std::size_t h = trial % 3 == 0 ? kUnbounded : 1 + trial % 17;
        DictionaryConfig config = DictionaryConfig::lz77(h);
        Parsing p = greedy_parse(config, text);
        CHECK(is_valid_parsing(p, config, text));
    }
}
