#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "qbern/rational.hpp"

namespace qbern {

/// 120 significant decimal digits. Archimedean checks cancel terms of size
/// (1-q)^{-n-1}, which for q = 1 - 10^-6 and n = 8 reach 10^54.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                           boost::multiprecision::et_off>;

Real to_real(const Rational& r);

/// Scientific notation with the given number of significant digits.
std::string format_real(const Real& x, int significant_digits = 15);

}  // namespace qbern
