#include "pseudocone/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace pseudocone {

std::vector<BigInt> canonicalize(const std::vector<Rational>& x) {
    bool all_zero = true;
    for (const auto& v : x) {
        if (v < 0) throw NegativeCoordinate("canonicalize: negative coordinate");
        if (v != 0) all_zero = false;
    }
    if (x.empty() || all_zero) throw ZeroVector("canonicalize: zero vector");

    BigInt common_den = 1;
    for (const auto& v : x) common_den = lcm(common_den, BigInt(denominator(v)));
    std::vector<BigInt> scaled(x.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        scaled[i] = BigInt(numerator(x[i])) * (common_den / BigInt(denominator(x[i])));
        g = gcd(g, scaled[i]);
    }
    for (auto& v : scaled) v /= g;
    return scaled;
}

std::vector<Rational> to_rational_vector(const std::vector<BigInt>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

}  // namespace pseudocone
