#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latcap {

// Exact counting value; triangulation counts overflow 64 bits quickly
// (f(4,10) already has ~25 digits).
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, used by the extrapolation fits.
using BigRat = boost::multiprecision::cpp_rational;

// log2 of a positive BigCount, accurate to double precision.
double log2_big(const BigCount& v);

} // namespace latcap
