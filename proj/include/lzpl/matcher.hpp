#pragma once

#include "lzpl/core.hpp"
#include "lzpl/dictionary.hpp"

namespace lzpl {

/// Index-accelerated longest-match search for the LZ77 sliding-window
/// dictionary. Same contract as Dictionary::longest_match (longest match,
/// smallest offset on ties), backed by 2-byte hash chains plus a per-byte
/// last-occurrence table instead of a backward window scan.
///
/// Positions must be queried left to right; find(i) indexes everything
/// before i on demand.
class SlidingMatcher {
public:
    SlidingMatcher(const Bytes& text, const DictionaryConfig& config);

    MatchResult find(std::size_t i);

private:
    static constexpr std::size_t kNoPos = kUnbounded;

    void index_up_to(std::size_t i);

    const Bytes& text_;
    std::size_t window_h_;
    std::size_t max_len_;  // 0 = uncapped
    bool allow_overlap_;
    std::size_t next_insert_ = 0;
    std::vector<std::size_t> pair_head_;  // 65536 chain heads
    std::vector<std::size_t> pair_prev_;  // per position
    std::vector<std::size_t> last_byte_;  // 256 most-recent positions
};

}  // namespace lzpl
