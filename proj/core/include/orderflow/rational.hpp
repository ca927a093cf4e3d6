#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orderflow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant of a square matrix. Rows are cleared of denominators and the
/// integer matrix is reduced by fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& m);

/// Bareiss elimination on an integer matrix; every intermediate division is exact.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// -1, 0 or +1.
int sign(const Rational& x);

} // namespace orderflow
