#pragma once

#include <random>
#include <vector>

#include "lzpl/core.hpp"

namespace lzpl {

/// Uniform i.i.d. symbols over the first `alphabet` byte values.
Bytes gen_iid(std::mt19937_64& rng, std::size_t len, std::size_t alphabet);

/// A short random seed string repeated to length, with sparse point
/// mutations. Produces the long matches i.i.d. texts rarely have.
Bytes gen_repetitive(std::mt19937_64& rng, std::size_t len, std::size_t alphabet);

/// Random prefix-closed static dictionary: a handful of random words over the
/// alphabet, closed under taking prefixes.
std::vector<Bytes> gen_prefix_closed_dict(std::mt19937_64& rng, std::size_t alphabet,
                                          std::size_t words, std::size_t max_word_len);

}  // namespace lzpl
