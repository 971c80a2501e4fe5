#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pseudocone/gf2.hpp"
#include "pseudocone/rational.hpp"

namespace pseudocone {

inline constexpr std::size_t kDefaultRayCap = 20;  // DD is exponential in the worst case
inline constexpr std::size_t kHardRayCap = 32;     // keeps the int128 rank kernel exact

// Inequality rows a with meaning a . x >= 0.  Entries are always -1/0/1:
// n nonnegativity rows first, then for each check j and each i in supp(h_j)
// the row (sum over supp(h_j) \ {i}) - x_i >= 0, in row-major order.
using InequalityRow = std::vector<int>;

std::vector<InequalityRow> cone_inequalities(const BinaryMatrix& h);

// Exact membership in K(H).
bool is_pseudo_codeword(const BinaryMatrix& h, const std::vector<Rational>& x);

// AWGN pseudo-weight ||x||_1^2 / ||x||_2^2, exact.  Throws ZeroVector.
Rational pseudo_weight(const std::vector<Rational>& x);
Rational pseudo_weight(const std::vector<BigInt>& x);

enum class RayClass { codeword_multiple, non_codeword };

struct Ray {
    std::vector<BigInt> representative;  // primitive: nonnegative integers, gcd 1
    Rational weight;                     // pseudo-weight
    std::vector<std::size_t> support;    // 0-based
    RayClass classification = RayClass::non_codeword;
};

struct RayCatalog {
    std::vector<Ray> rays;   // pairwise non-equivalent, sorted by representative
    Rational d_p = 0;        // min pseudo-weight over rays (0 when empty)
    std::uint64_t b_p = 0;   // number of rays attaining d_p
    std::size_t edge_count() const { return rays.size(); }
};

// Complete extreme-ray enumeration of K(H) by the double description method,
// processing inequalities one at a time starting from the nonnegative orthant.
// Ray adjacency is decided algebraically: rank of the shared active rows
// must be n - 2.  Exact throughout.  Throws DimensionTooLarge above cap_n.
RayCatalog enumerate_rays(const BinaryMatrix& h, std::size_t cap_n = kDefaultRayCap);

}  // namespace pseudocone
