#include "pseudocone/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pseudocone {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
    if (rows == 0 || cols == 0) throw Error("BinaryMatrix requires rows >= 1 and cols >= 1");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw Error("BinaryMatrix::from_rows requires a non-empty row list");
    BinaryMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw LengthMismatch("ragged row list");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] != 0 && rows[r][c] != 1) throw Error("entries must be 0 or 1");
            if (rows[r][c]) m.set(r, c, true);
        }
    }
    return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_; ++i) w += std::popcount(word(r, i));
    return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
    return w;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < words_; ++i) {
        std::uint64_t w = word(r, i);
        while (w) {
            s.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return s;
}

std::vector<std::size_t> BinaryMatrix::col_support(std::size_t c) const {
    std::vector<std::size_t> s;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) s.push_back(r);
    return s;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    std::uint64_t* d = row_words(dst);
    const std::uint64_t* s = row_words(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = row_words(a);
    std::uint64_t* pb = row_words(b);
    for (std::size_t i = 0; i < words_; ++i) std::swap(pa[i], pb[i]);
}

namespace {

// Row echelon reduction in place; returns pivot columns (ascending).
std::vector<std::size_t> reduce_to_rref(BinaryMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && !m.get(sel, c)) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(sel, pivot_row);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pivot_row && m.get(r, c)) m.xor_row_into(pivot_row, r);
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

std::size_t gf2_rank(const BinaryMatrix& m) {
    BinaryMatrix copy = m;
    return reduce_to_rref(copy).size();
}

bool row_space_contains(const BinaryMatrix& m, const std::vector<std::uint8_t>& v) {
    if (v.size() != m.cols()) throw LengthMismatch("vector length does not match matrix columns");
    BinaryMatrix ext(m.rows() + 1, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t w = 0; w < m.words_per_row(); ++w)
            ext.row_words(r)[w] = m.row_words(r)[w];
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c]) ext.set(m.rows(), c, true);
    return gf2_rank(ext) == gf2_rank(m);
}

bool is_codeword(const BinaryMatrix& h, const std::vector<std::uint8_t>& c) {
    if (c.size() != h.cols())
        throw LengthMismatch("codeword length " + std::to_string(c.size()) +
                             " != n = " + std::to_string(h.cols()));
    std::vector<std::uint64_t> packed((h.cols() + 63) / 64, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) packed[i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::uint64_t parity = 0;
        const std::uint64_t* rw = h.row_words(r);
        for (std::size_t w = 0; w < packed.size(); ++w) parity ^= rw[w] & packed[w];
        if (std::popcount(parity) % 2 != 0) return false;
    }
    return true;
}

namespace detail {

NullSpaceBasis null_space_basis(const BinaryMatrix& h) {
    BinaryMatrix rref = h;
    const auto pivots = reduce_to_rref(rref);

    std::vector<bool> is_pivot(h.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    NullSpaceBasis ns;
    ns.n = h.cols();
    ns.k = free_cols.size();
    ns.words = (h.cols() + 63) / 64;
    ns.basis.assign(ns.k * ns.words, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::uint64_t* b = ns.basis.data() + i * ns.words;
        const std::size_t f = free_cols[i];
        b[f / 64] |= std::uint64_t{1} << (f % 64);
        // pivot variable p (row r) takes the value of rref[r][f]
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rref.get(r, f)) b[pivots[r] / 64] |= std::uint64_t{1} << (pivots[r] % 64);
    }
    return ns;
}

}  // namespace detail

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint64_t>& words, std::size_t n) {
    std::vector<std::uint8_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i] = (words[i / 64] >> (i % 64)) & 1u;
    return out;
}

std::vector<std::vector<std::uint8_t>> enumerate_codewords(const BinaryMatrix& h,
                                                           std::size_t cap_k) {
    std::vector<std::vector<std::uint8_t>> out;
    for_each_codeword(
        h, [&](const std::vector<std::uint64_t>& w, std::size_t) {
            out.push_back(unpack_bits(w, h.cols()));
        },
        cap_k);
    return out;
}

CodeParameters compute_code_parameters(const BinaryMatrix& h, std::size_t cap_k) {
    CodeParameters p;
    p.n = h.cols();
    p.k = h.cols() - gf2_rank(h);
    std::size_t best = h.cols() + 1;
    for_each_codeword(
        h,
        [&](const std::vector<std::uint64_t>&, std::size_t w) {
            ++p.weight_distribution[w];
            if (w != 0 && w < best) best = w;
        },
        cap_k);
    if (best <= h.cols()) {
        p.min_distance = best;
        p.d_source = DistanceSource::exhaustive;
    }
    return p;
}

std::size_t min_distance(const BinaryMatrix& h, std::size_t cap_k) {
    const auto p = compute_code_parameters(h, cap_k);
    if (!p.min_distance) throw Error("code has no non-zero codewords (k = 0)");
    return *p.min_distance;
}

}  // namespace pseudocone
