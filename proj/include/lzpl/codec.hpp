#pragma once

#include "lzpl/core.hpp"
#include "lzpl/dictionary.hpp"

namespace lzpl {

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct BadMagic : Error {
    using Error::Error;
};

struct TruncatedStream : Error {
    using Error::Error;
};

/// Fixed-width pointer code: W bits of (offset - 1), L bits of (length - 1).
/// The matcher window is 2^W and matches are capped at 2^L symbols.
struct CodecParams {
    unsigned offset_bits = 12;  // W, 1..24
    unsigned length_bits = 4;   // L, 1..16

    std::size_t window() const { return std::size_t{1} << offset_bits; }
    std::size_t max_length() const { return std::size_t{1} << length_bits; }
};

enum class Strategy : std::uint8_t { Greedy, Optimal, Flexible };

struct EncodeResult {
    Bytes stream;
    Parsing parsing;
    ParseStats stats;  // encoded_bits = payload bits (header excluded)
};

/// Token payload size by the format definition: 1 flag bit per token, 8 bits
/// per literal, W+L bits per pointer.
std::size_t payload_bits(const ParseStats& s, const CodecParams& params);

/// LZSS-style bit stream: "LZPL" magic, version, W, L, 64-bit little-endian
/// text length, then flag-prefixed tokens MSB-first, zero-padded to a byte.
EncodeResult encode(const Bytes& text, const CodecParams& params, Strategy strategy,
                    const ScaleLimits& limits = {});

Bytes decode(const Bytes& stream);

}  // namespace lzpl
