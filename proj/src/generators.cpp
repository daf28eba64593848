#include "lzpl/generators.hpp"

#include <algorithm>
#include <set>

namespace lzpl {

Bytes gen_iid(std::mt19937_64& rng, std::size_t len, std::size_t alphabet) {
    if (alphabet == 0 || alphabet > 256) throw Error("alphabet size must be in 1..256");
    std::uniform_int_distribution<int> sym(0, static_cast<int>(alphabet) - 1);
    Bytes out(len);
    for (auto& b : out) b = static_cast<std::uint8_t>(sym(rng));
    return out;
}

Bytes gen_repetitive(std::mt19937_64& rng, std::size_t len, std::size_t alphabet) {
    if (alphabet == 0 || alphabet > 256) throw Error("alphabet size must be in 1..256");
    if (len == 0) return {};
    std::uniform_int_distribution<int> sym(0, static_cast<int>(alphabet) - 1);
    std::size_t unit_len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(8, len))(rng);
    Bytes unit(unit_len);
    for (auto& b : unit) b = static_cast<std::uint8_t>(sym(rng));
    Bytes out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = unit[i % unit_len];
    std::size_t mutations = len / 16;
    std::uniform_int_distribution<std::size_t> pos(0, len - 1);
    for (std::size_t m = 0; m < mutations; ++m)
        out[pos(rng)] = static_cast<std::uint8_t>(sym(rng));
    return out;
}

std::vector<Bytes> gen_prefix_closed_dict(std::mt19937_64& rng, std::size_t alphabet,
                                          std::size_t words, std::size_t max_word_len) {
    if (alphabet == 0 || alphabet > 256) throw Error("alphabet size must be in 1..256");
    std::uniform_int_distribution<int> sym(0, static_cast<int>(alphabet) - 1);
    std::set<Bytes> closed;
    for (std::size_t w = 0; w < words; ++w) {
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_word_len)(rng);
        Bytes word(len);
        for (auto& b : word) b = static_cast<std::uint8_t>(sym(rng));
        for (std::size_t k = 1; k <= word.size(); ++k)
            closed.insert(Bytes(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k)));
    }
    return {closed.begin(), closed.end()};
}

}  // namespace lzpl
