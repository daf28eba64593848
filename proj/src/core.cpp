#include "lzpl/core.hpp"

#include <string_view>

namespace lzpl {

Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_string(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

Bytes expand(const Parsing& parsing, const DictionaryConfig& config) {
    Bytes out;
    for (const Token& t : parsing.tokens) {
        if (t.is_literal()) {
            out.push_back(t.symbol);
            continue;
        }
        if (t.offset == 0 || t.length == 0)
            throw PointerOutOfRange("pointer with zero offset or length");
        if (config.family == Family::Static) {
            // offset is the 1-based phrase ordinal
            if (t.offset > config.static_phrases.size())
                throw PointerOutOfRange("static phrase ordinal out of range");
            const Bytes& phrase = config.static_phrases[t.offset - 1];
            if (phrase.size() != t.length)
                throw PointerOutOfRange("static pointer length does not match phrase");
            out.insert(out.end(), phrase.begin(), phrase.end());
            continue;
        }
        if (t.offset > out.size())
            throw PointerOutOfRange("pointer offset exceeds reconstructed length");
        if (!config.allow_overlap && t.length > t.offset)
            throw PointerOutOfRange("overlapping pointer with allow_overlap off");
        std::size_t src = out.size() - t.offset;
        for (std::size_t k = 0; k < t.length; ++k)
            out.push_back(out[src + k]);  // byte-wise: overlap copies repeat
    }
    return out;
}

ParseStats stats(const Parsing& parsing) {
    ParseStats s;
    s.token_count = parsing.tokens.size();
    for (const Token& t : parsing.tokens) {
        if (t.is_pointer())
            ++s.pointer_count;
        else
            ++s.literal_count;
    }
    return s;
}

bool is_valid_parsing(const Parsing& parsing, const DictionaryConfig& config, const Bytes& text) {
    if (parsing.tokens.size() != parsing.starts.size()) return false;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < parsing.tokens.size(); ++i) {
        if (parsing.starts[i] != pos) return false;
        pos += parsing.tokens[i].span();
    }
    if (pos != text.size()) return false;
    try {
        return expand(parsing, config) == text;
    } catch (const PointerOutOfRange&) {
        return false;
    }
}

}  // namespace lzpl
