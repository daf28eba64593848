#include "lzpl/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace lzpl {

namespace {

bool equals_at(const Bytes& text, std::size_t pos, const Bytes& w) {
    if (pos + w.size() > text.size()) return false;
    return std::equal(w.begin(), w.end(), text.begin() + static_cast<std::ptrdiff_t>(pos));
}

void require_checker_scale(const DictionaryConfig& config, const Bytes& text,
                           const ScaleLimits& limits) {
    if (text.size() > limits.checker_text)
        throw ScaleExceeded("text length " + std::to_string(text.size()) +
                            " exceeds checker bound " + std::to_string(limits.checker_text));
    if (config.family == Family::LZ77Sliding) {
        std::size_t effective_h = std::min(config.window_h, text.size());
        if (effective_h > limits.checker_window)
            throw ScaleExceeded("window " + std::to_string(effective_h) +
                                " exceeds checker bound " + std::to_string(limits.checker_window));
    }
}

}  // namespace

const char* to_string(PropertyViolation v) {
    switch (v) {
        case PropertyViolation::SuffixMissingNow: return "suffix_missing_in_D_i";
        case PropertyViolation::SuffixMissingLater: return "suffix_missing_in_D_i_plus_k";
        case PropertyViolation::PhraseDropped: return "phrase_dropped";
        case PropertyViolation::SuffixMissing: return "suffix_missing";
        case PropertyViolation::PrefixMissing: return "prefix_missing";
        case PropertyViolation::EdgeMissing: return "edge_missing";
    }
    return "unknown";
}

Lz78Trace lz78_trace(const Bytes& text) {
    Lz78Trace trace;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // Greedy phrase over the phrases available at this boundary. All
        // previous insertions have avail_time <= pos by construction.
        std::size_t best = 0;
        for (const auto& e : trace.entries) {
            if (e.phrase.size() > best && equals_at(text, pos, e.phrase))
                best = e.phrase.size();
        }
        // Insert (greedy phrase) + (next symbol); the step consumes both.
        std::size_t end = pos + best;  // position of the appended symbol
        if (end < text.size()) {
            Bytes phrase(text.begin() + static_cast<std::ptrdiff_t>(pos),
                         text.begin() + static_cast<std::ptrdiff_t>(end + 1));
            trace.entries.push_back({end + 1, std::move(phrase), pos});
        }
        pos = end + 1;
    }
    return trace;
}

Dictionary::Dictionary(const DictionaryConfig& config, const Bytes& text)
    : config_(config), text_(text) {
    if (config.family == Family::LZ78) trace_ = lz78_trace(text);
}

std::size_t Dictionary::length_cap(std::size_t i) const {
    std::size_t cap = text_.size() - i;
    if (config_.max_phrase_len > 0) cap = std::min(cap, config_.max_phrase_len);
    return cap;
}

bool Dictionary::contains(std::size_t time, const Bytes& w) const {
    if (w.empty()) return false;
    if (config_.max_phrase_len > 0 && w.size() > config_.max_phrase_len) return false;
    switch (config_.family) {
        case Family::LZ77Sliding: {
            std::size_t ws = config_.window_start(time);
            if (time - ws < w.size()) return false;
            for (std::size_t p = ws; p + w.size() <= time; ++p)
                if (equals_at(text_, p, w)) return true;
            return false;
        }
        case Family::LZ78: {
            for (const auto& e : trace_.entries)
                if (e.avail_time <= time && e.phrase == w) return true;
            return false;
        }
        case Family::Static: {
            for (const auto& p : config_.static_phrases)
                if (p == w) return true;
            return false;
        }
    }
    return false;
}

MatchResult Dictionary::longest_match(std::size_t i) const {
    MatchResult best;
    std::size_t cap = length_cap(i);
    if (cap == 0) return best;
    switch (config_.family) {
        case Family::LZ77Sliding: {
            std::size_t max_d = std::min(i, config_.window_h);
            for (std::size_t d = 1; d <= max_d; ++d) {
                std::size_t d_cap = config_.allow_overlap ? cap : std::min(cap, d);
                std::size_t len = 0;
                while (len < d_cap && text_[i - d + len] == text_[i + len]) ++len;
                if (len > best.length) best = {len, d};  // strict >: smallest offset wins ties
            }
            break;
        }
        case Family::LZ78: {
            for (const auto& e : trace_.entries) {
                if (e.avail_time > i || e.phrase.size() > cap) continue;
                if (e.phrase.size() > best.length && equals_at(text_, i, e.phrase))
                    best = {e.phrase.size(), i - e.occ_start};
            }
            break;
        }
        case Family::Static: {
            for (std::size_t p = 0; p < config_.static_phrases.size(); ++p) {
                const Bytes& w = config_.static_phrases[p];
                if (w.empty() || w.size() > cap) continue;
                if (w.size() > best.length && equals_at(text_, i, w))
                    best = {w.size(), p + 1};
            }
            break;
        }
    }
    return best;
}

std::vector<std::size_t> Dictionary::match_lengths(std::size_t i) const {
    std::size_t cap = length_cap(i);
    std::vector<bool> seen(cap + 1, false);
    switch (config_.family) {
        case Family::LZ77Sliding: {
            std::size_t max_d = std::min(i, config_.window_h);
            for (std::size_t d = 1; d <= max_d; ++d) {
                std::size_t d_cap = config_.allow_overlap ? cap : std::min(cap, d);
                std::size_t len = 0;
                while (len < d_cap && text_[i - d + len] == text_[i + len]) ++len;
                // the occurrence at distance d realizes every length 1..len
                for (std::size_t l = 1; l <= len; ++l) seen[l] = true;
            }
            break;
        }
        case Family::LZ78: {
            for (const auto& e : trace_.entries)
                if (e.avail_time <= i && e.phrase.size() <= cap && equals_at(text_, i, e.phrase))
                    seen[e.phrase.size()] = true;
            break;
        }
        case Family::Static: {
            for (const auto& w : config_.static_phrases)
                if (!w.empty() && w.size() <= cap && equals_at(text_, i, w))
                    seen[w.size()] = true;
            break;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= cap; ++l)
        if (seen[l]) out.push_back(l);
    return out;
}

std::size_t Dictionary::match_offset(std::size_t i, std::size_t len) const {
    if (len == 0 || len > length_cap(i)) return 0;
    switch (config_.family) {
        case Family::LZ77Sliding: {
            std::size_t max_d = std::min(i, config_.window_h);
            std::size_t min_d = config_.allow_overlap ? 1 : len;
            for (std::size_t d = min_d; d <= max_d; ++d) {
                bool match = true;
                for (std::size_t k = 0; k < len && match; ++k)
                    match = text_[i - d + k] == text_[i + k];
                if (match) return d;
            }
            return 0;
        }
        case Family::LZ78: {
            for (const auto& e : trace_.entries)
                if (e.avail_time <= i && e.phrase.size() == len && equals_at(text_, i, e.phrase))
                    return i - e.occ_start;
            return 0;
        }
        case Family::Static: {
            for (std::size_t p = 0; p < config_.static_phrases.size(); ++p) {
                const Bytes& w = config_.static_phrases[p];
                if (w.size() == len && equals_at(text_, i, w)) return p + 1;
            }
            return 0;
        }
    }
    return 0;
}

std::vector<Bytes> Dictionary::phrases_at(std::size_t time) const {
    std::set<Bytes> out;
    switch (config_.family) {
        case Family::LZ77Sliding: {
            std::size_t ws = config_.window_start(time);
            for (std::size_t p = ws; p < time; ++p) {
                std::size_t max_len = time - p;
                if (config_.max_phrase_len > 0)
                    max_len = std::min(max_len, config_.max_phrase_len);
                for (std::size_t l = 1; l <= max_len; ++l)
                    out.insert(Bytes(text_.begin() + static_cast<std::ptrdiff_t>(p),
                                     text_.begin() + static_cast<std::ptrdiff_t>(p + l)));
            }
            break;
        }
        case Family::LZ78:
            for (const auto& e : trace_.entries)
                if (e.avail_time <= time &&
                    (config_.max_phrase_len == 0 || e.phrase.size() <= config_.max_phrase_len))
                    out.insert(e.phrase);
            break;
        case Family::Static:
            for (const auto& w : config_.static_phrases)
                if (!w.empty() &&
                    (config_.max_phrase_len == 0 || w.size() <= config_.max_phrase_len))
                    out.insert(w);
            break;
    }
    return {out.begin(), out.end()};
}

PropertyReport is_suffix_closed_static(const std::vector<Bytes>& phrases) {
    std::set<Bytes> set(phrases.begin(), phrases.end());
    for (const auto& w : phrases) {
        for (std::size_t k = 1; k < w.size(); ++k) {
            Bytes suffix(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            if (!set.count(suffix))
                return PropertyReport::fail({0, w, k, PropertyViolation::SuffixMissing});
        }
    }
    return PropertyReport::ok();
}

PropertyReport is_prefix_closed_static(const std::vector<Bytes>& phrases) {
    std::set<Bytes> set(phrases.begin(), phrases.end());
    for (const auto& w : phrases) {
        for (std::size_t k = 1; k < w.size(); ++k) {
            Bytes prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            if (!set.count(prefix))
                return PropertyReport::fail({0, w, k, PropertyViolation::PrefixMissing});
        }
    }
    return PropertyReport::ok();
}

namespace {

// Phrase sets for every time 0..n, materialized once. Checkers are the only
// place dictionaries exist as explicit sets.
std::vector<std::set<Bytes>> all_phrase_sets(const Dictionary& dict, std::size_t n) {
    std::vector<std::set<Bytes>> sets(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        auto phrases = dict.phrases_at(i);
        sets[i] = std::set<Bytes>(phrases.begin(), phrases.end());
    }
    return sets;
}

}  // namespace

PropertyReport check_dynamic_suffix_closed(const DictionaryConfig& config, const Bytes& text,
                                           const ScaleLimits& limits) {
    require_checker_scale(config, text, limits);
    Dictionary dict(config, text);
    std::size_t n = text.size();
    auto sets = all_phrase_sets(dict, n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (const Bytes& w : sets[i]) {
            for (std::size_t k = 0; k < w.size(); ++k) {
                Bytes suffix(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
                if (!sets[i].count(suffix))
                    return PropertyReport::fail({i, w, k, PropertyViolation::SuffixMissingNow});
                // D_{i+k} exists only while the process runs; times past |T|
                // are outside the dictionary's lifetime and are skipped.
                if (i + k <= n && !sets[i + k].count(suffix))
                    return PropertyReport::fail({i, w, k, PropertyViolation::SuffixMissingLater});
            }
        }
    }
    return PropertyReport::ok();
}

PropertyReport check_non_decreasing(const DictionaryConfig& config, const Bytes& text,
                                    const ScaleLimits& limits) {
    require_checker_scale(config, text, limits);
    Dictionary dict(config, text);
    std::size_t n = text.size();
    auto sets = all_phrase_sets(dict, n);
    // adjacent inclusions suffice by transitivity
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        for (const Bytes& w : sets[i]) {
            if (!sets[i + 1].count(w))
                return PropertyReport::fail({i, w, 0, PropertyViolation::PhraseDropped});
        }
    }
    return PropertyReport::ok();
}

PropertyReport check_natural_suffix_closed(const DictionaryConfig& config, const Bytes& text,
                                           const ScaleLimits& limits) {
    require_checker_scale(config, text, limits);
    Dictionary dict(config, text);
    for (std::size_t i = 0; i <= text.size(); ++i) {
        PropertyReport r = is_suffix_closed_static(dict.phrases_at(i));
        if (!r.holds) {
            r.witness->time = i;
            return r;
        }
    }
    return PropertyReport::ok();
}

std::vector<Bytes> load_static_phrases(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dictionary file: " + path);
    std::vector<Bytes> phrases;
    std::string line;
    bool pending_empty = false;
    while (std::getline(in, line)) {
        if (pending_empty)
            throw Error("empty phrase in dictionary file: " + path);
        if (line.empty()) {
            pending_empty = true;  // only legal as the final empty segment
            continue;
        }
        phrases.push_back(to_bytes(line));
    }
    if (pending_empty)
        throw Error("empty phrase in dictionary file: " + path);
    return phrases;
}

}  // namespace lzpl
