#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzpl {

using Bytes = std::vector<std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(const Bytes& b);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointerOutOfRange : Error {
    using Error::Error;
};

struct ScaleExceeded : Error {
    using Error::Error;
};

struct FamilyMismatch : Error {
    using Error::Error;
};

/// One parsing unit: a plain symbol or a dictionary phrase reference.
///
/// Pointer semantics depend on the dictionary family:
///   - LZ77Sliding / LZ78: `offset` is the backward distance from the
///     current position to the phrase occurrence, `length` its length.
///   - Static: `offset` is the 1-based ordinal of the phrase in the
///     dictionary's phrase list (static phrases need not occur earlier
///     in the text, so a backward copy distance is meaningless).
struct Token {
    enum class Kind : std::uint8_t { Literal, Pointer };

    Kind kind = Kind::Literal;
    std::uint8_t symbol = 0;    // Literal only
    std::size_t offset = 0;     // Pointer only, >= 1
    std::size_t length = 0;     // Pointer only, >= 1

    static Token literal(std::uint8_t sym) {
        Token t;
        t.kind = Kind::Literal;
        t.symbol = sym;
        return t;
    }

    static Token pointer(std::size_t offset, std::size_t length) {
        Token t;
        t.kind = Kind::Pointer;
        t.offset = offset;
        t.length = length;
        return t;
    }

    bool is_pointer() const { return kind == Kind::Pointer; }
    bool is_literal() const { return kind == Kind::Literal; }

    // Number of text symbols the token covers.
    std::size_t span() const { return is_literal() ? 1 : length; }

    friend bool operator==(const Token&, const Token&) = default;
};

/// An ordered token sequence covering a text, with per-token start positions.
struct Parsing {
    std::vector<Token> tokens;
    std::vector<std::size_t> starts;

    void push(const Token& t) {
        starts.push_back(covered());
        tokens.push_back(t);
    }

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }

    // Total number of text symbols covered so far.
    std::size_t covered() const {
        if (tokens.empty()) return 0;
        return starts.back() + tokens.back().span();
    }
};

enum class Family : std::uint8_t { LZ77Sliding, LZ78, Static };

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Selects the dictionary family and its parameters.
struct DictionaryConfig {
    Family family = Family::LZ77Sliding;
    std::size_t window_h = kUnbounded;       // LZ77Sliding only
    std::size_t max_phrase_len = 0;          // 0 = no cap; caps D at length <= cap
    bool allow_overlap = false;              // codec experiments only
    std::vector<Bytes> static_phrases;       // Static only; no empty phrase

    static DictionaryConfig lz77(std::size_t h = kUnbounded) {
        DictionaryConfig c;
        c.family = Family::LZ77Sliding;
        c.window_h = h;
        return c;
    }

    static DictionaryConfig lz78() {
        DictionaryConfig c;
        c.family = Family::LZ78;
        return c;
    }

    static DictionaryConfig static_dict(std::vector<Bytes> phrases) {
        DictionaryConfig c;
        c.family = Family::Static;
        c.static_phrases = std::move(phrases);
        return c;
    }

    // Effective window size at time i. D_i is the dictionary once the first
    // i symbols are processed; the window is T[max(0, i-h) .. i), the 0-based
    // half-open form of the 1-based T[i-h+1..i].
    std::size_t window_start(std::size_t i) const {
        if (window_h == kUnbounded || window_h >= i) return 0;
        return i - window_h;
    }
};

struct ParseStats {
    std::size_t token_count = 0;
    std::size_t pointer_count = 0;
    std::size_t literal_count = 0;
    std::size_t encoded_bits = 0;  // filled by the codec
};

/// Reconstructs the text a parsing denotes.
/// Throws PointerOutOfRange on invalid backward references (or, with
/// allow_overlap off, on pointers reaching past their own start).
Bytes expand(const Parsing& parsing, const DictionaryConfig& config);

ParseStats stats(const Parsing& parsing);

/// Structural validation: starts strictly increasing from 0, exact coverage,
/// and expand() reproduces `text`. Used by tests and the verify command.
bool is_valid_parsing(const Parsing& parsing, const DictionaryConfig& config, const Bytes& text);

}  // namespace lzpl
