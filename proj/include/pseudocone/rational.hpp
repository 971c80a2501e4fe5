#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "pseudocone/errors.hpp"

namespace pseudocone {

// Exact arithmetic everywhere that touches the cone: tightness classification
// is an if-and-only-if statement, so floating point is not an option.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Scale a nonnegative rational vector to the unique primitive integer
// representative of its ray: clear denominators, divide by the gcd.
std::vector<BigInt> canonicalize(const std::vector<Rational>& x);

std::vector<Rational> to_rational_vector(const std::vector<BigInt>& v);

}  // namespace pseudocone
