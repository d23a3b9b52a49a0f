#pragma once

#include <complex>

namespace freeo {

// x87 extended format: 80-bit storage, 64-bit significand.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

}  // namespace freeo
