#ifndef BENTHAD_NUMERIC_HPP
#define BENTHAD_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace benthad {

// All arithmetic in this library is exact: big integers for group orders
// and determinants, rationals for eigenspace bases and polynomial
// coefficients. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact integer square root test: returns s with s*s == n, if it exists.
std::optional<std::int64_t> perfect_sqrt(std::int64_t n);

// "2^9*3^2*5" style factorization of a positive integer. Factors are found
// by trial division; a large remaining cofactor is emitted verbatim.
std::string factored(const BigInt& n);

} // namespace benthad

#endif
