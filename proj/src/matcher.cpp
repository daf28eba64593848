#include "lzpl/matcher.hpp"

#include <algorithm>

namespace lzpl {

SlidingMatcher::SlidingMatcher(const Bytes& text, const DictionaryConfig& config)
    : text_(text),
      window_h_(config.window_h),
      max_len_(config.max_phrase_len),
      allow_overlap_(config.allow_overlap),
      pair_head_(65536, kNoPos),
      pair_prev_(text.size(), kNoPos),
      last_byte_(256, kNoPos) {
    if (config.family != Family::LZ77Sliding)
        throw FamilyMismatch("SlidingMatcher requires the LZ77 sliding-window family");
}

void SlidingMatcher::index_up_to(std::size_t i) {
    for (; next_insert_ < i; ++next_insert_) {
        std::size_t p = next_insert_;
        last_byte_[text_[p]] = p;
        if (p + 1 < text_.size()) {
            std::size_t key = (static_cast<std::size_t>(text_[p]) << 8) | text_[p + 1];
            pair_prev_[p] = pair_head_[key];
            pair_head_[key] = p;
        }
    }
}

MatchResult SlidingMatcher::find(std::size_t i) {
    index_up_to(i);
    std::size_t n = text_.size();
    std::size_t cap = n - i;
    if (max_len_ > 0) cap = std::min(cap, max_len_);
    if (cap == 0 || i == 0) return {};
    std::size_t max_d = std::min(i, window_h_);
    std::size_t low = i - max_d;  // oldest admissible occurrence start

    MatchResult best;
    // length-1 candidate: the most recent prior occurrence of text[i]
    if (std::size_t p = last_byte_[text_[i]]; p != kNoPos && p >= low)
        best = {1, i - p};

    if (cap >= 2 && i + 1 < n) {
        std::size_t key = (static_cast<std::size_t>(text_[i]) << 8) | text_[i + 1];
        // most-recent-first: at equal length the smallest offset sticks
        for (std::size_t p = pair_head_[key]; p != kNoPos && p >= low; p = pair_prev_[p]) {
            std::size_t d = i - p;
            std::size_t d_cap = allow_overlap_ ? cap : std::min(cap, d);
            if (d_cap <= best.length) continue;
            std::size_t len = 2 > d_cap ? d_cap : 2;  // first two bytes equal by key
            if (len == 2) {
                while (len < d_cap && text_[p + len] == text_[i + len]) ++len;
            } else {
                len = text_[p] == text_[i] ? 1 : 0;
            }
            if (len > best.length) best = {len, d};
        }
    }
    return best;
}

}  // namespace lzpl
