#include "lzpl/codec.hpp"

#include <algorithm>

#include "lzpl/parsers.hpp"

namespace lzpl {

namespace {

constexpr char kMagic[4] = {'L', 'Z', 'P', 'L'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 4 + 1 + 1 + 1 + 8;

class BitWriter {
public:
    // MSB-first within each byte
    void put(std::uint64_t value, unsigned bits) {
        for (unsigned b = bits; b-- > 0;) {
            if (fill_ == 0) out_.push_back(0);
            out_.back() = static_cast<std::uint8_t>(out_.back() << 1 | ((value >> b) & 1));
            fill_ = (fill_ + 1) % 8;
        }
    }

    Bytes finish() {
        if (fill_ != 0) {
            out_.back() = static_cast<std::uint8_t>(out_.back() << (8 - fill_));
            fill_ = 0;
        }
        return std::move(out_);
    }

private:
    Bytes out_;
    unsigned fill_ = 0;
};

class BitReader {
public:
    BitReader(const Bytes& data, std::size_t byte_offset)
        : data_(data), bit_pos_(byte_offset * 8) {}

    std::uint64_t get(unsigned bits) {
        std::uint64_t value = 0;
        for (unsigned b = 0; b < bits; ++b) {
            std::size_t byte = bit_pos_ / 8;
            if (byte >= data_.size()) throw TruncatedStream("stream ends mid-token");
            value = value << 1 | ((data_[byte] >> (7 - bit_pos_ % 8)) & 1);
            ++bit_pos_;
        }
        return value;
    }

private:
    const Bytes& data_;
    std::size_t bit_pos_;
};

void validate(const CodecParams& params) {
    if (params.offset_bits < 1 || params.offset_bits > 24)
        throw ParamOutOfRange("offset_bits must be in 1..24");
    if (params.length_bits < 1 || params.length_bits > 16)
        throw ParamOutOfRange("length_bits must be in 1..16");
}

}  // namespace

std::size_t payload_bits(const ParseStats& s, const CodecParams& params) {
    return s.token_count * 1 + s.literal_count * 8 +
           s.pointer_count * (params.offset_bits + params.length_bits);
}

EncodeResult encode(const Bytes& text, const CodecParams& params, Strategy strategy,
                    const ScaleLimits& limits) {
    validate(params);
    DictionaryConfig config = DictionaryConfig::lz77(params.window());
    config.max_phrase_len = params.max_length();

    EncodeResult result;
    switch (strategy) {
        case Strategy::Greedy: result.parsing = greedy_parse(config, text); break;
        case Strategy::Optimal: result.parsing = optimal_parse(config, text, limits); break;
        case Strategy::Flexible: result.parsing = flexible_parse(config, text); break;
    }

    BitWriter writer;
    for (const Token& t : result.parsing.tokens) {
        if (t.is_literal()) {
            writer.put(0, 1);
            writer.put(t.symbol, 8);
        } else {
            writer.put(1, 1);
            writer.put(t.offset - 1, params.offset_bits);
            writer.put(t.length - 1, params.length_bits);
        }
    }

    Bytes stream(kMagic, kMagic + 4);
    stream.push_back(kVersion);
    stream.push_back(static_cast<std::uint8_t>(params.offset_bits));
    stream.push_back(static_cast<std::uint8_t>(params.length_bits));
    std::uint64_t n = text.size();
    for (int b = 0; b < 8; ++b) stream.push_back(static_cast<std::uint8_t>(n >> (8 * b)));
    Bytes payload = writer.finish();
    stream.insert(stream.end(), payload.begin(), payload.end());

    result.stats = stats(result.parsing);
    result.stats.encoded_bits = payload_bits(result.stats, params);
    result.stream = std::move(stream);
    return result;
}

Bytes decode(const Bytes& stream) {
    if (stream.size() < 4 || !std::equal(kMagic, kMagic + 4, stream.begin()))
        throw BadMagic("missing LZPL magic");
    if (stream.size() < kHeaderBytes) throw TruncatedStream("incomplete header");
    if (stream[4] != kVersion) throw BadMagic("unsupported version");
    CodecParams params{stream[5], stream[6]};
    validate(params);
    std::uint64_t n = 0;
    for (int b = 0; b < 8; ++b) n |= static_cast<std::uint64_t>(stream[7 + b]) << (8 * b);

    BitReader reader(stream, kHeaderBytes);
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        if (reader.get(1) == 0) {
            out.push_back(static_cast<std::uint8_t>(reader.get(8)));
            continue;
        }
        std::size_t offset = static_cast<std::size_t>(reader.get(params.offset_bits)) + 1;
        std::size_t length = static_cast<std::size_t>(reader.get(params.length_bits)) + 1;
        if (offset > out.size())
            throw PointerOutOfRange("pointer offset exceeds decoded length");
        if (out.size() + length > n)
            throw TruncatedStream("token overruns the declared text length");
        std::size_t src = out.size() - offset;
        // byte-wise copy: overlapping pointers decode as repeated runs
        for (std::size_t k = 0; k < length; ++k) out.push_back(out[src + k]);
    }
    return out;
}

}  // namespace lzpl
