// Shared fixtures: the [7,3,4] cyclic simplex code and friends.
#pragma once

#include <set>
#include <vector>

#include "pseudocone/constructions.hpp"
#include "pseudocone/gf2.hpp"

namespace fixtures {

inline pseudocone::BinaryMatrix example1_h() {
    return pseudocone::circulant({1, 1, 0, 1, 0, 0, 0});
}

inline pseudocone::BinaryMatrix hamming7_h() { return pseudocone::hamming_simplex_h(3); }

inline std::vector<std::uint8_t> cyclic_shift(const std::vector<std::uint8_t>& v,
                                              std::size_t by) {
    std::vector<std::uint8_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + by) % v.size()] = v[i];
    return out;
}

// the 7 non-zero codewords: (1,0,1,1,1,0,0) and its cyclic shifts
inline std::set<std::vector<std::uint8_t>> example1_nonzero_codewords() {
    std::set<std::vector<std::uint8_t>> s;
    const std::vector<std::uint8_t> base{1, 0, 1, 1, 1, 0, 0};
    for (std::size_t i = 0; i < 7; ++i) s.insert(cyclic_shift(base, i));
    return s;
}

// the paper's 7 smallest stopping sets, 0-based
inline std::set<std::vector<std::size_t>> example1_smallest_stopping_sets() {
    return {{0, 2, 3, 4}, {1, 3, 4, 5}, {2, 4, 5, 6}, {0, 3, 5, 6},
            {0, 1, 4, 6}, {0, 1, 2, 5}, {1, 2, 3, 6}};
}

}  // namespace fixtures
