#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pseudocone/gf2.hpp"

namespace pseudocone {

// GF(2^s) in polynomial basis.  Fixed primitive moduli keep every constructed
// matrix reproducible bit-for-bit.
class Gf2mField {
public:
    explicit Gf2mField(unsigned s);  // 1 <= s <= 8

    unsigned s() const { return s_; }
    unsigned size() const { return 1u << s_; }      // q
    unsigned modulus() const { return modulus_; }   // bit-coded primitive polynomial

    unsigned add(unsigned a, unsigned b) const { return a ^ b; }
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;  // a != 0
    unsigned pow(unsigned a, unsigned e) const;

private:
    unsigned s_;
    unsigned modulus_;
};

// n x n matrix of cyclic right shifts of first_row.
BinaryMatrix circulant(const std::vector<int>& first_row);

// (2^r - 1) x (2^r - 1) matrix whose rows are all non-zero codewords of the
// [2^r - 1, r] simplex code; parity-check matrix of the [2^r-1, 2^r-1-r, 3]
// Hamming code with gamma = 2^(r-1) and lambda = 2^(r-2).
BinaryMatrix hamming_simplex_h(std::size_t r);

// Point/hyperplane incidence of EG(m, 2^s) with the origin removed together
// with all hyperplanes through it: (q^m - 1) x (q^m - 1), rows = hyperplanes.
BinaryMatrix eg_point_hyperplane_h(std::size_t m, unsigned s);

// k x n generator matrix of the cyclic code generated by
// g(x) = sum of x^e over g_exponents; g(x) must divide x^n - 1 over GF(2).
BinaryMatrix cyclic_code_generator(std::size_t n, const std::vector<std::size_t>& g_exponents);

}  // namespace pseudocone
