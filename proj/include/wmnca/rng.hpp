#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wmnca {

// std::uniform_int_distribution is implementation-defined, so seeded runs
// would not replay across standard libraries. These helpers keep every
// seeded draw fully specified.

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace wmnca
