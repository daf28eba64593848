#pragma once

#include <cstdint>
#include <optional>

#include "lzpl/core.hpp"
#include "lzpl/dictionary.hpp"

namespace lzpl {

/// Left-to-right longest-match parsing with literal fallback. Every token
/// costs 1 under the uniform cost model.
Parsing greedy_parse(const DictionaryConfig& config, const Bytes& text);

/// Minimum-token parsing via the parse graph's shortest path.
Parsing optimal_parse(const DictionaryConfig& config, const Bytes& text,
                      const ScaleLimits& limits = {});

/// One-step-lookahead parsing: among all first steps at the current position
/// (every dictionary match length plus the literal step) take the one whose
/// two-step reach is longest. Ties: longer first step, then pointer over
/// literal.
Parsing flexible_parse(const DictionaryConfig& config, const Bytes& text);

/// Right-to-left greedy parsing for static dictionaries: repeatedly take the
/// longest dictionary phrase that is a suffix of the unparsed portion.
/// Throws FamilyMismatch for dynamic families.
Parsing reverse_greedy_parse(const DictionaryConfig& config, const Bytes& text);

struct OracleResult {
    std::size_t min_tokens = 0;
    Parsing witness;
};

/// Exhaustive enumeration of every token sequence consistent with the
/// dictionary semantics; the minimum token count is the oracle the fast
/// parsers are checked against. Shares no shortest-path machinery with the
/// parse-graph module and does its own LZ77 window membership scan.
OracleResult brute_force_optimal(const DictionaryConfig& config, const Bytes& text,
                                 const ScaleLimits& limits = {});

struct GapInstance {
    Bytes text;
    std::size_t greedy_tokens = 0;
    std::size_t optimal_tokens = 0;
};

struct GapSearchResult {
    std::optional<GapInstance> gap;
    std::size_t explored = 0;
};

/// Randomized search for texts where greedy parsing is strictly suboptimal.
/// Candidates failing the cheap greedy-vs-shortest-path filter are discarded;
/// a hit is confirmed by the brute-force oracle before being reported.
GapSearchResult search_greedy_gap(const DictionaryConfig& config, std::size_t alphabet,
                                  std::size_t max_len, std::size_t budget, std::uint64_t seed);

}  // namespace lzpl
