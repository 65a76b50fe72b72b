#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fekete/powerseries.hpp"

namespace fekete {

enum class DistributionKind { Poisson, Borel, Pascal, Custom };

std::string_view to_string(DistributionKind kind);
/// BadParameter for anything but poisson, borel, pascal or custom.
DistributionKind parse_distribution_kind(std::string_view text);

/// m^(n-1) e^(-m) / (n-1)!  for m > 0, n >= 1.
double poisson_coeff(double m, long n);
/// (sigma (n-1))^(n-2) e^(-sigma (n-1)) / (n-1)!  for 0 < sigma <= 1, n >= 2.
double borel_coeff(double sigma, long n);
/// binom(n+s-2, s-1) q^(n-1) (1-q)^s  for 0 <= q < 1, s >= 1, n >= 1.
double pascal_coeff(double q, long s, long n);

/// Coefficients of z + sum_{n>=2} w_n z^n. `values[n]` holds w_n for
/// n = 2..max_n(); entries 0 and 1 are fixed at 0 and 1 so the vector can be
/// used as a series.
struct DistributionCoeffs {
  DistributionKind kind = DistributionKind::Custom;
  double param = 0.0;
  long s = 1;
  std::vector<double> values;

  std::size_t max_n() const { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t n) const { return values.at(n); }
};

DistributionCoeffs poisson_coeffs(double m, std::size_t max_n);
DistributionCoeffs borel_coeffs(double sigma, std::size_t max_n);
DistributionCoeffs pascal_coeffs(double q, long s, std::size_t max_n);
/// Arbitrary weights, given for n = 2, 3, ...
DistributionCoeffs custom_coeffs(std::vector<double> from_two);

/// Hadamard product: coefficient n of the result is w_n a_n for n >= 2, the
/// linear term is kept. f must be normalized (NotNormalized) and d must reach
/// f.order() (OrderMismatch).
TruncatedSeries convolve(const TruncatedSeries& f, const DistributionCoeffs& d);

}  // namespace fekete
