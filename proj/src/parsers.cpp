#include "lzpl/parsers.hpp"

#include <algorithm>
#include <random>

#include "lzpl/generators.hpp"
#include "lzpl/matcher.hpp"
#include "lzpl/parse_graph.hpp"

namespace lzpl {

namespace {

// Oracle-side LZ77 membership: per-length substring search over the window,
// a different route than the per-offset scan used by the Dictionary queries.
std::vector<std::size_t> oracle_lengths_lz77(const DictionaryConfig& config, const Bytes& text,
                                             std::size_t i) {
    std::vector<std::size_t> lengths;
    std::size_t cap = text.size() - i;
    if (config.max_phrase_len > 0) cap = std::min(cap, config.max_phrase_len);
    std::size_t ws = config.window_start(i);
    for (std::size_t len = 1; len <= cap; ++len) {
        bool found = false;
        if (config.allow_overlap) {
            // overlapping ranges compare correctly: self-overlap equality is
            // exactly the periodic-copy condition
            for (std::size_t p = ws; !found && p < i; ++p)
                found = std::equal(text.begin() + static_cast<std::ptrdiff_t>(i),
                                   text.begin() + static_cast<std::ptrdiff_t>(i + len),
                                   text.begin() + static_cast<std::ptrdiff_t>(p));
        } else {
            auto window_begin = text.begin() + static_cast<std::ptrdiff_t>(ws);
            auto window_end = text.begin() + static_cast<std::ptrdiff_t>(i);
            auto it = std::search(window_begin, window_end,
                                  text.begin() + static_cast<std::ptrdiff_t>(i),
                                  text.begin() + static_cast<std::ptrdiff_t>(i + len));
            found = it != window_end;
        }
        if (found) lengths.push_back(len);
    }
    return lengths;
}

std::vector<std::size_t> oracle_lengths(const DictionaryConfig& config, const Bytes& text,
                                        const Lz78Trace& trace, std::size_t i) {
    if (config.family == Family::LZ77Sliding) return oracle_lengths_lz77(config, text, i);
    std::size_t cap = text.size() - i;
    if (config.max_phrase_len > 0) cap = std::min(cap, config.max_phrase_len);
    std::vector<bool> seen(cap + 1, false);
    if (config.family == Family::LZ78) {
        for (const auto& e : trace.entries)
            if (e.avail_time <= i && e.phrase.size() <= cap &&
                std::equal(e.phrase.begin(), e.phrase.end(),
                           text.begin() + static_cast<std::ptrdiff_t>(i)))
                seen[e.phrase.size()] = true;
    } else {
        for (const auto& w : config.static_phrases)
            if (!w.empty() && w.size() <= cap &&
                std::equal(w.begin(), w.end(), text.begin() + static_cast<std::ptrdiff_t>(i)))
                seen[w.size()] = true;
    }
    std::vector<std::size_t> lengths;
    for (std::size_t l = 1; l <= cap; ++l)
        if (seen[l]) lengths.push_back(l);
    return lengths;
}

struct OracleSearch {
    const DictionaryConfig& config;
    const Bytes& text;
    Lz78Trace trace;
    std::vector<std::vector<std::size_t>> steps;  // candidate lengths per pos, descending
    std::vector<std::size_t> current;
    std::vector<std::size_t> best_steps;
    std::size_t best;

    void dfs(std::size_t pos, std::size_t count) {
        if (pos == text.size()) {
            if (count < best) {
                best = count;
                best_steps = current;
            }
            return;
        }
        if (count + 1 >= best) return;  // at least one more token is needed
        for (std::size_t len : steps[pos]) {
            current.push_back(len);
            dfs(pos + len, count + 1);
            current.pop_back();
        }
    }
};

Parsing steps_to_parsing(const DictionaryConfig& config, const Bytes& text,
                         const std::vector<std::size_t>& steps) {
    Dictionary dict(config, text);
    Parsing parsing;
    std::size_t pos = 0;
    for (std::size_t len : steps) {
        std::size_t offset = dict.match_offset(pos, len);
        if (len == 1 && offset == 0)
            parsing.push(Token::literal(text[pos]));
        else
            parsing.push(Token::pointer(offset, len));
        pos += len;
    }
    return parsing;
}

}  // namespace

Parsing greedy_parse(const DictionaryConfig& config, const Bytes& text) {
    Parsing parsing;
    if (config.family == Family::LZ77Sliding) {
        SlidingMatcher matcher(text, config);
        std::size_t pos = 0;
        while (pos < text.size()) {
            MatchResult m = matcher.find(pos);
            if (m.length >= 1) {
                parsing.push(Token::pointer(m.offset, m.length));
                pos += m.length;
            } else {
                parsing.push(Token::literal(text[pos]));
                ++pos;
            }
        }
        return parsing;
    }
    Dictionary dict(config, text);
    std::size_t pos = 0;
    while (pos < text.size()) {
        MatchResult m = dict.longest_match(pos);
        if (m.length >= 1) {
            parsing.push(Token::pointer(m.offset, m.length));
            pos += m.length;
        } else {
            parsing.push(Token::literal(text[pos]));
            ++pos;
        }
    }
    return parsing;
}

Parsing optimal_parse(const DictionaryConfig& config, const Bytes& text,
                      const ScaleLimits& limits) {
    ParseGraph graph = build_graph(config, text, limits);
    Dictionary dict(config, text);
    Parsing parsing;
    for (const PathEdge& e : shortest_path(graph)) {
        if (e.kind == EdgeKind::Literal) {
            parsing.push(Token::literal(text[e.from]));
        } else {
            std::size_t len = e.to - e.from;
            parsing.push(Token::pointer(dict.match_offset(e.from, len), len));
        }
    }
    return parsing;
}

Parsing flexible_parse(const DictionaryConfig& config, const Bytes& text) {
    Dictionary dict(config, text);
    std::size_t n = text.size();
    Parsing parsing;
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t best_len = 1;
        bool best_pointer = false;
        std::size_t best_reach = 0;
        auto lookahead = [&](std::size_t next) {
            if (next >= n) return std::size_t{0};
            return std::max<std::size_t>(dict.longest_match(next).length, 1);
        };
        auto consider = [&](std::size_t len, bool pointer) {
            std::size_t reach = len + lookahead(pos + len);
            bool better = reach > best_reach || (reach == best_reach && len > best_len) ||
                          (reach == best_reach && len == best_len && pointer && !best_pointer);
            if (better) {
                best_reach = reach;
                best_len = len;
                best_pointer = pointer;
            }
        };
        consider(1, false);  // literal step
        for (std::size_t len : dict.match_lengths(pos)) consider(len, true);
        if (best_pointer)
            parsing.push(Token::pointer(dict.match_offset(pos, best_len), best_len));
        else
            parsing.push(Token::literal(text[pos]));
        pos += best_len;
    }
    return parsing;
}

Parsing reverse_greedy_parse(const DictionaryConfig& config, const Bytes& text) {
    if (config.family != Family::Static)
        throw FamilyMismatch("reverse greedy parsing requires a static dictionary");
    std::size_t end = text.size();
    std::vector<Token> reversed;
    while (end > 0) {
        std::size_t best_len = 0;
        std::size_t best_ordinal = 0;
        for (std::size_t p = 0; p < config.static_phrases.size(); ++p) {
            const Bytes& w = config.static_phrases[p];
            if (w.empty() || w.size() > end || w.size() <= best_len) continue;
            if (config.max_phrase_len > 0 && w.size() > config.max_phrase_len) continue;
            if (std::equal(w.begin(), w.end(),
                           text.begin() + static_cast<std::ptrdiff_t>(end - w.size()))) {
                best_len = w.size();
                best_ordinal = p + 1;
            }
        }
        if (best_len >= 1) {
            reversed.push_back(Token::pointer(best_ordinal, best_len));
            end -= best_len;
        } else {
            reversed.push_back(Token::literal(text[end - 1]));
            --end;
        }
    }
    Parsing parsing;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) parsing.push(*it);
    return parsing;
}

OracleResult brute_force_optimal(const DictionaryConfig& config, const Bytes& text,
                                 const ScaleLimits& limits) {
    if (text.size() > limits.oracle_text)
        throw ScaleExceeded("text length " + std::to_string(text.size()) +
                            " exceeds oracle bound " + std::to_string(limits.oracle_text));
    OracleSearch search{config, text, {}, {}, {}, {}, text.size()};
    if (config.family == Family::LZ78) search.trace = lz78_trace(text);
    search.steps.resize(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto lengths = oracle_lengths(config, text, search.trace, i);
        if (lengths.empty() || lengths.front() != 1) lengths.insert(lengths.begin(), 1);
        std::sort(lengths.rbegin(), lengths.rend());  // long first: tighter pruning
        search.steps[i] = std::move(lengths);
    }
    // the all-literal parse is the starting upper bound (and witness)
    search.best = text.size();
    search.best_steps.assign(text.size(), 1);
    search.dfs(0, 0);
    OracleResult result;
    result.min_tokens = text.empty() ? 0 : search.best;
    result.witness = steps_to_parsing(config, text, search.best_steps);
    return result;
}

GapSearchResult search_greedy_gap(const DictionaryConfig& config, std::size_t alphabet,
                                  std::size_t max_len, std::size_t budget, std::uint64_t seed) {
    if (max_len > 24)
        throw ScaleExceeded("search max_len " + std::to_string(max_len) + " exceeds bound 24");
    std::mt19937_64 rng(seed);
    ScaleLimits oracle_limits;
    oracle_limits.oracle_text = max_len;
    GapSearchResult result;
    for (std::size_t trial = 0; trial < budget; ++trial) {
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
        Bytes text = trial % 2 == 0 ? gen_iid(rng, len, alphabet)
                                    : gen_repetitive(rng, len, alphabet);
        ++result.explored;
        std::size_t greedy = greedy_parse(config, text).size();
        std::size_t optimal = optimal_parse(config, text).size();
        if (greedy <= optimal) continue;
        // confirm with the independent oracle before reporting
        OracleResult oracle = brute_force_optimal(config, text, oracle_limits);
        if (greedy > oracle.min_tokens) {
            result.gap = GapInstance{text, greedy, oracle.min_tokens};
            return result;
        }
    }
    return result;
}

}  // namespace lzpl
