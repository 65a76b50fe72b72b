#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fekete/powerseries.hpp"

namespace fekete {

using Rational = boost::multiprecision::cpp_rational;

/// Generalized telephone numbers T_k(0..N) for one parameter k >= 0,
/// values[n] = values[n-1] + k (n-1) values[n-2] with values[0] = values[1] = 1.
struct GtnSequence {
  Rational varkappa;
  std::vector<Rational> values;
};

/// T_varkappa(n) by the recurrence, exactly. NegativeIndex for n < 0,
/// ParameterOutOfRange for varkappa < 0.
Rational gtn(const Rational& varkappa, long n);

GtnSequence gtn_sequence(const Rational& varkappa, std::size_t max_n);

/// exp(z + varkappa z^2 / 2) through z^order. Its coefficients are T(n)/n!.
TruncatedSeries x_series(double varkappa, std::size_t order);

/// n! times the n-th coefficient of x_series, in floating point.
double gtn_via_egf(double varkappa, std::size_t n);

/// Parses "7/2", "-3", "3.25" or "1e-3" into an exact rational.
/// Throws BadParameter on malformed input.
Rational parse_rational(std::string_view text);

/// "7/2", or "4" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace fekete
