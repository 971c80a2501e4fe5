#include "pseudocone/constructions.hpp"

#include <algorithm>
#include <string>

namespace pseudocone {

namespace {

// primitive polynomials per degree, bit-coded (x^4 + x + 1 -> 0b10011)
constexpr unsigned kPrimitivePoly[9] = {
    0,    // unused
    0b11,        // x + 1 (trivial GF(2))
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1000011,   // x^6 + x + 1
    0b10001001,  // x^7 + x^3 + 1
    0b100011101, // x^8 + x^4 + x^3 + x^2 + 1
};

}  // namespace

Gf2mField::Gf2mField(unsigned s) : s_(s) {
    if (s < 1 || s > 8) throw Error("GF(2^s) supported for 1 <= s <= 8, got s = " + std::to_string(s));
    modulus_ = kPrimitivePoly[s];
}

unsigned Gf2mField::mul(unsigned a, unsigned b) const {
    unsigned acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << s_)) a ^= modulus_;
    }
    return acc;
}

unsigned Gf2mField::pow(unsigned a, unsigned e) const {
    unsigned r = 1;
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

unsigned Gf2mField::inv(unsigned a) const {
    if (a == 0) throw Error("inverse of 0 in GF(2^s)");
    return pow(a, size() - 2);
}

BinaryMatrix circulant(const std::vector<int>& first_row) {
    if (std::all_of(first_row.begin(), first_row.end(), [](int b) { return b == 0; }))
        throw ZeroRow("circulant requires a non-zero first row");
    const std::size_t n = first_row.size();
    BinaryMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (first_row[(c + n - r) % n]) h.set(r, c, true);
    return h;
}

BinaryMatrix hamming_simplex_h(std::size_t r) {
    if (r < 2) throw InvalidR("hamming_simplex_h requires r >= 2");
    const std::size_t n = (std::size_t{1} << r) - 1;
    // simplex generator: column j (1-based) is the binary expansion of j
    // row u of H (1-based) is the codeword generated by the bits of u
    BinaryMatrix h(n, n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t j = 1; j <= n; ++j)
            if (std::popcount(u & j) % 2 == 1) h.set(u - 1, j - 1, true);
    return h;
}

BinaryMatrix eg_point_hyperplane_h(std::size_t m, unsigned s) {
    if (m < 2) throw Error("EG construction requires m >= 2");
    if (s < 1) throw Error("EG construction requires s >= 1");
    const Gf2mField field(s);
    const std::uint64_t q = field.size();
    std::uint64_t qm = 1;
    for (std::size_t i = 0; i < m; ++i) {
        qm *= q;
        if (qm > (std::uint64_t{1} << 16))
            throw DimensionTooLarge("EG construction needs q^m <= 2^16");
    }

    // points: nonzero vectors of GF(q)^m, indexed by the base-q expansion of
    // 1..q^m-1 (coordinate 0 = least significant digit)
    auto digits = [&](std::uint64_t v) {
        std::vector<unsigned> p(m);
        for (std::size_t i = 0; i < m; ++i) {
            p[i] = static_cast<unsigned>(v % q);
            v /= q;
        }
        return p;
    };

    // hyperplanes {x : a.x = b} with a normalized (first non-zero coord = 1)
    // and b != 0: exactly the hyperplanes avoiding the origin
    std::vector<std::pair<std::vector<unsigned>, unsigned>> hyperplanes;
    for (std::uint64_t av = 1; av < qm; ++av) {
        const auto a = digits(av);
        unsigned lead = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (a[i] != 0) {
                lead = a[i];
                break;
            }
        if (lead != 1) continue;  // one representative per direction
        for (unsigned b = 1; b < q; ++b) hyperplanes.emplace_back(a, b);
    }
    if (hyperplanes.size() != qm - 1)
        throw Error("internal: unexpected hyperplane count");  // (q-1)(q^m-1)/(q-1)

    BinaryMatrix h(qm - 1, qm - 1);
    for (std::size_t row = 0; row < hyperplanes.size(); ++row) {
        const auto& [a, b] = hyperplanes[row];
        for (std::uint64_t pv = 1; pv < qm; ++pv) {
            const auto p = digits(pv);
            unsigned acc = 0;
            for (std::size_t i = 0; i < m; ++i) acc ^= field.mul(a[i], p[i]);
            if (acc == b) h.set(row, pv - 1, true);
        }
    }
    return h;
}

namespace {

// polynomial over GF(2) as coefficient bits, index = exponent
std::vector<std::uint8_t> poly_from_exponents(const std::vector<std::size_t>& exps) {
    std::size_t deg = 0;
    for (auto e : exps) deg = std::max(deg, e);
    std::vector<std::uint8_t> p(deg + 1, 0);
    for (auto e : exps) p[e] ^= 1;  // repeated exponents cancel over GF(2)
    return p;
}

// remainder of x^n + 1 modulo g
bool divides_xn_plus_1(const std::vector<std::uint8_t>& g, std::size_t n) {
    const std::size_t deg = g.size() - 1;
    std::vector<std::uint8_t> rem(n + 1, 0);
    rem[0] = 1;
    rem[n] ^= 1;
    for (std::size_t shift = n - deg + 1; shift-- > 0;) {
        if (!rem[shift + deg]) continue;
        for (std::size_t i = 0; i <= deg; ++i) rem[shift + i] ^= g[i];
    }
    return std::all_of(rem.begin(), rem.end(), [](std::uint8_t b) { return b == 0; });
}

}  // namespace

BinaryMatrix cyclic_code_generator(std::size_t n, const std::vector<std::size_t>& g_exponents) {
    if (g_exponents.empty()) throw ZeroRow("empty generator polynomial");
    auto g = poly_from_exponents(g_exponents);
    while (g.size() > 1 && g.back() == 0) g.pop_back();
    if (g.size() == 1 && g[0] == 0) throw ZeroRow("zero generator polynomial");
    const std::size_t deg = g.size() - 1;
    if (deg >= n) throw Error("deg g >= n");
    if (!divides_xn_plus_1(g, n))
        throw NotADivisor("g(x) does not divide x^n - 1 over GF(2)");
    const std::size_t k = n - deg;
    BinaryMatrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t e = 0; e <= deg; ++e)
            if (g[e]) gen.set(i, i + e, true);
    return gen;
}

}  // namespace pseudocone
