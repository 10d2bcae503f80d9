#ifndef POLYINV_TYPES_HPP
#define POLYINV_TYPES_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace polyinv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Integer vector in Z^d; used for lattice points, covectors and exponents.
using IntVector = std::vector<Integer>;

inline std::string to_string(const Integer& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1) {
        return boost::multiprecision::numerator(value).str();
    }
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

}  // namespace polyinv

#endif
