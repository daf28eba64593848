#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzpl/core.hpp"

namespace lzpl {

// Upper bounds for the exhaustive checkers and oracles; they are
// quadratic-to-cubic and must refuse oversized inputs instead of hanging.
struct ScaleLimits {
    std::size_t checker_text = 256;
    std::size_t checker_window = 64;
    std::size_t graph_text = 4096;
    std::size_t oracle_text = 20;
};

enum class PropertyViolation : std::uint8_t {
    SuffixMissingNow,    // w[k..] not in D_i
    SuffixMissingLater,  // w[k..] not in D_{i+k}
    PhraseDropped,       // w in D_i but not in D_{i+1}
    SuffixMissing,       // static: proper suffix absent
    PrefixMissing,       // static: proper prefix absent
    EdgeMissing,         // graph: (k, j) absent for dictionary edge (i, j)
};

const char* to_string(PropertyViolation v);

struct PropertyWitness {
    std::size_t time = 0;   // time i (for EdgeMissing: the inner node k)
    Bytes phrase;           // the phrase w under inspection
    std::size_t index = 0;  // suffix/prefix index k (for EdgeMissing: target j)
    PropertyViolation violation = PropertyViolation::SuffixMissingNow;
};

struct PropertyReport {
    bool holds = true;
    std::optional<PropertyWitness> witness;

    static PropertyReport ok() { return {}; }
    static PropertyReport fail(PropertyWitness w) { return {false, std::move(w)}; }
};

/// LZ78 dictionary replay: each log entry records the inserted phrase, the
/// time from which it is queryable, and where its occurrence starts in the
/// text. A phrase inserted by the greedy step ending at position j becomes a
/// member of D_{j+1}.
struct Lz78Trace {
    struct Entry {
        std::size_t avail_time;  // first time i with phrase in D_i
        Bytes phrase;
        std::size_t occ_start;   // phrase == text[occ_start .. occ_start + |phrase|)
    };
    std::vector<Entry> entries;
};

Lz78Trace lz78_trace(const Bytes& text);

struct MatchResult {
    std::size_t length = 0;  // 0 = no match
    std::size_t offset = 0;  // LZ77/LZ78: backward distance; Static: 1-based ordinal
};

/// Query view over the dictionary D_i induced by a config and a text.
/// Immutable after construction; the text must outlive the view.
class Dictionary {
public:
    Dictionary(const DictionaryConfig& config, const Bytes& text);

    // w in D_time? Time ranges over 0..|text|.
    bool contains(std::size_t time, const Bytes& w) const;

    // Longest l >= 0 with text[i..i+l) in D_i, plus the occurrence with the
    // smallest offset (LZ77/LZ78) or the phrase ordinal (Static).
    MatchResult longest_match(std::size_t i) const;

    // { l >= 1 : text[i..i+l) in D_i }, ascending. Computed, not assumed
    // contiguous.
    std::vector<std::size_t> match_lengths(std::size_t i) const;

    // Smallest offset (or static ordinal) realizing a match of exactly `len`
    // symbols at position i; 0 if there is none.
    std::size_t match_offset(std::size_t i, std::size_t len) const;

    // Materializes D_time as an explicit sorted phrase set. Checker-scale
    // only: for LZ77 windows this is Theta(h^2) phrases.
    std::vector<Bytes> phrases_at(std::size_t time) const;

    const DictionaryConfig& config() const { return config_; }
    const Bytes& text() const { return text_; }
    const Lz78Trace& trace() const { return trace_; }

private:
    std::size_t length_cap(std::size_t i) const;

    DictionaryConfig config_;  // by value: configs are small and callers may
                               // pass temporaries
    const Bytes& text_;
    Lz78Trace trace_;  // LZ78 only
};

PropertyReport is_suffix_closed_static(const std::vector<Bytes>& phrases);
PropertyReport is_prefix_closed_static(const std::vector<Bytes>& phrases);

/// Definition check for dynamic suffix-closedness: for every time i, every
/// w in D_i and every 0 <= k < |w|, the suffix w[k..] must be in D_i and in
/// D_{i+k}. The k = 0 case is checked verbatim even though it is implied.
PropertyReport check_dynamic_suffix_closed(const DictionaryConfig& config, const Bytes& text,
                                           const ScaleLimits& limits = {});

/// D_i subset of D_j for all i <= j over the text's lifetime.
PropertyReport check_non_decreasing(const DictionaryConfig& config, const Bytes& text,
                                    const ScaleLimits& limits = {});

/// At every single time i, D_i is suffix-closed as a static set. This is the
/// weaker per-time property implied by the dynamic one.
PropertyReport check_natural_suffix_closed(const DictionaryConfig& config, const Bytes& text,
                                           const ScaleLimits& limits = {});

/// Newline-delimited phrase file, one phrase per line, raw bytes. Phrases
/// cannot be empty or contain newlines; a trailing newline is allowed.
std::vector<Bytes> load_static_phrases(const std::string& path);

}  // namespace lzpl
