#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pseudocone/gf2.hpp"

namespace pseudocone {

inline constexpr std::size_t kDefaultStoppingCap = 40;    // branch-and-bound search
inline constexpr std::size_t kDefaultExhaustiveCap = 20;  // full subset sweep / listing

struct StoppingReport {
    // nullopt when no non-empty stopping set exists (possible when k = 0)
    std::optional<std::size_t> stopping_distance;
    std::vector<std::vector<std::size_t>> smallest_sets;  // each sorted, 0-based
    std::uint64_t count_smallest = 0;                     // T_s(H)
    // every non-empty stopping set; only filled in exhaustive mode
    std::optional<std::vector<std::vector<std::size_t>>> all_sets;
};

// Definition: the restriction of H to S contains no row of weight one.
// The empty set is vacuously a stopping set.
bool is_stopping_set(const BinaryMatrix& h, const std::vector<std::size_t>& s);

// Smallest non-empty stopping sets by branch-and-bound over ascending sizes.
// If exhaustive, additionally sweeps all 2^n - 1 subsets and lists every
// non-empty stopping set (requires n <= cap_exhaustive).
StoppingReport stopping_distance(const BinaryMatrix& h, bool exhaustive = false,
                                 std::size_t cap_n = kDefaultStoppingCap,
                                 std::size_t cap_exhaustive = kDefaultExhaustiveCap);

}  // namespace pseudocone
