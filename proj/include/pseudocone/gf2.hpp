#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pseudocone/errors.hpp"

namespace pseudocone {

inline constexpr std::size_t kDefaultCodewordCap = 28;  // max k for enumeration

// Dense GF(2) matrix with row-major bit packing.  Rows may be linearly
// dependent (parity-check matrices often are).
class BinaryMatrix {
public:
    BinaryMatrix(std::size_t rows, std::size_t cols);

    // rows as 0/1 vectors, all the same length
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v);

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    std::vector<std::size_t> row_support(std::size_t r) const;
    std::vector<std::size_t> col_support(std::size_t c) const;
    bool is_zero() const;

    std::size_t words_per_row() const { return words_; }
    const std::uint64_t* row_words(std::size_t r) const { return bits_.data() + r * words_; }
    std::uint64_t* row_words(std::size_t r) { return bits_.data() + r * words_; }

    void xor_row_into(std::size_t src, std::size_t dst);  // dst ^= src
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::uint64_t word(std::size_t r, std::size_t w) const { return bits_[r * words_ + w]; }

    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(const BinaryMatrix& m);

// true iff v lies in the row space of m
bool row_space_contains(const BinaryMatrix& m, const std::vector<std::uint8_t>& v);

// H * c^T == 0 over GF(2).  c must have length cols().
bool is_codeword(const BinaryMatrix& h, const std::vector<std::uint8_t>& c);

enum class DistanceSource { exhaustive, bound_plus_witness, unknown };

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> min_distance;         // absent when not computed
    std::map<std::size_t, std::uint64_t> weight_distribution;  // weight -> A_w
    DistanceSource d_source = DistanceSource::unknown;
};

namespace detail {

// Null-space basis of H arranged for Gray-code enumeration: basis[i] is the
// packed codeword whose i-th information (free) bit is 1 and the rest 0.
struct NullSpaceBasis {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> basis;  // k rows of `words` words each
};

NullSpaceBasis null_space_basis(const BinaryMatrix& h);

}  // namespace detail

// Visits all 2^k codewords exactly once.  Gray-code order over information
// bits, so each successive codeword is one row-XOR away from the previous.
// visit(packed_words, hamming_weight); packed layout matches BinaryMatrix rows.
// Throws DimensionTooLarge when k exceeds cap_k.
template <class Visit>
void for_each_codeword(const BinaryMatrix& h, Visit&& visit,
                       std::size_t cap_k = kDefaultCodewordCap) {
    const auto ns = detail::null_space_basis(h);
    if (ns.k > cap_k)
        throw DimensionTooLarge("codeword enumeration needs k <= " + std::to_string(cap_k) +
                                ", got k = " + std::to_string(ns.k));
    std::vector<std::uint64_t> cur(ns.words, 0);
    auto weight = [&cur]() {
        std::size_t w = 0;
        for (auto x : cur) w += std::popcount(x);
        return w;
    };
    visit(cur, weight());
    const std::uint64_t total = std::uint64_t{1} << ns.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        const std::uint64_t* b = ns.basis.data() + bit * ns.words;
        for (std::size_t w = 0; w < ns.words; ++w) cur[w] ^= b[w];
        visit(cur, weight());
    }
}

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint64_t>& words, std::size_t n);

// All codewords as 0/1 vectors; convenience wrapper, intended for small k.
std::vector<std::vector<std::uint8_t>> enumerate_codewords(
    const BinaryMatrix& h, std::size_t cap_k = kDefaultCodewordCap);

// Exhaustive minimum distance + full weight distribution.  Refuses (throws
// DimensionTooLarge) rather than silently degrading when k > cap_k.
CodeParameters compute_code_parameters(const BinaryMatrix& h,
                                       std::size_t cap_k = kDefaultCodewordCap);

std::size_t min_distance(const BinaryMatrix& h, std::size_t cap_k = kDefaultCodewordCap);

}  // namespace pseudocone
