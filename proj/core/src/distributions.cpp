#include "fekete/distributions.hpp"

#include <cmath>
#include <string>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

constexpr long kLogSpaceThreshold = 100;

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::BadParameter, message);
}

// x^e / k! with the factorial built incrementally, or through lgamma once k
// is large enough for the product to overflow.
double power_over_factorial(double x, long e, long k) {
  if (k > kLogSpaceThreshold || e > kLogSpaceThreshold) {
    if (x == 0.0) return e == 0 ? 1.0 / std::exp(std::lgamma(k + 1.0)) : 0.0;
    return std::exp(e * std::log(x) - std::lgamma(k + 1.0));
  }
  double value = std::pow(x, static_cast<double>(e));
  for (long j = 2; j <= k; ++j) value /= static_cast<double>(j);
  return value;
}

double binomial(long n, long k) {
  if (n > kLogSpaceThreshold) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
  }
  k = std::min(k, n - k);
  double value = 1.0;
  for (long j = 1; j <= k; ++j) value = value * static_cast<double>(n - k + j) / static_cast<double>(j);
  return value;
}

DistributionCoeffs make(DistributionKind kind, double param, long s, std::size_t max_n) {
  DistributionCoeffs d{kind, param, s, std::vector<double>(max_n + 1, 0.0)};
  if (max_n >= 1) d.values[1] = 1.0;
  return d;
}

}  // namespace

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Poisson:
      return "poisson";
    case DistributionKind::Borel:
      return "borel";
    case DistributionKind::Pascal:
      return "pascal";
    case DistributionKind::Custom:
      return "custom";
  }
  return "unknown";
}

DistributionKind parse_distribution_kind(std::string_view text) {
  for (auto kind : {DistributionKind::Poisson, DistributionKind::Borel, DistributionKind::Pascal,
                    DistributionKind::Custom}) {
    if (text == to_string(kind)) return kind;
  }
  throw Error(ErrorCode::BadParameter, "unknown distribution '" + std::string(text) + "'");
}

double poisson_coeff(double m, long n) {
  require(std::isfinite(m) && m > 0.0, "poisson parameter m must be > 0");
  require(n >= 1, "poisson index must be >= 1");
  if (n - 1 > kLogSpaceThreshold) {
    return std::exp((n - 1) * std::log(m) - m - std::lgamma(static_cast<double>(n)));
  }
  return power_over_factorial(m, n - 1, n - 1) * std::exp(-m);
}

double borel_coeff(double sigma, long n) {
  require(std::isfinite(sigma) && sigma > 0.0 && sigma <= 1.0, "borel parameter must lie in (0, 1]");
  require(n >= 2, "borel index must be >= 2");
  const double x = sigma * static_cast<double>(n - 1);
  if (n - 1 > kLogSpaceThreshold) {
    return std::exp((n - 2) * std::log(x) - x - std::lgamma(static_cast<double>(n)));
  }
  return power_over_factorial(x, n - 2, n - 1) * std::exp(-x);
}

double pascal_coeff(double q, long s, long n) {
  require(std::isfinite(q) && q >= 0.0 && q < 1.0, "pascal parameter q must lie in [0, 1)");
  require(s >= 1, "pascal s must be a positive integer");
  require(n >= 1, "pascal index must be >= 1");
  if (q == 0.0) return n == 1 ? 1.0 : 0.0;
  if (n + s > kLogSpaceThreshold) {
    const double log_binom =
        std::lgamma(n + s - 1.0) - std::lgamma(static_cast<double>(s)) - std::lgamma(static_cast<double>(n));
    return std::exp(log_binom + (n - 1) * std::log(q) + s * std::log1p(-q));
  }
  return binomial(n + s - 2, s - 1) * std::pow(q, static_cast<double>(n - 1)) *
         std::pow(1.0 - q, static_cast<double>(s));
}

DistributionCoeffs poisson_coeffs(double m, std::size_t max_n) {
  auto d = make(DistributionKind::Poisson, m, 1, max_n);
  poisson_coeff(m, 2);
  for (std::size_t n = 2; n <= max_n; ++n) d.values[n] = poisson_coeff(m, static_cast<long>(n));
  return d;
}

DistributionCoeffs borel_coeffs(double sigma, std::size_t max_n) {
  auto d = make(DistributionKind::Borel, sigma, 1, max_n);
  borel_coeff(sigma, 2);
  for (std::size_t n = 2; n <= max_n; ++n) d.values[n] = borel_coeff(sigma, static_cast<long>(n));
  return d;
}

DistributionCoeffs pascal_coeffs(double q, long s, std::size_t max_n) {
  auto d = make(DistributionKind::Pascal, q, s, max_n);
  pascal_coeff(q, s, 2);
  for (std::size_t n = 2; n <= max_n; ++n) d.values[n] = pascal_coeff(q, s, static_cast<long>(n));
  return d;
}

DistributionCoeffs custom_coeffs(std::vector<double> from_two) {
  auto d = make(DistributionKind::Custom, 0.0, 1, from_two.size() + 1);
  for (std::size_t i = 0; i < from_two.size(); ++i) {
    require(std::isfinite(from_two[i]), "custom coefficients must be finite");
    d.values[i + 2] = from_two[i];
  }
  return d;
}

TruncatedSeries convolve(const TruncatedSeries& f, const DistributionCoeffs& d) {
  if (f.order() < 1 || std::abs(f[0]) > kUnitTolerance || std::abs(f[1] - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::NotNormalized, "expected f = z + a2 z^2 + ...");
  }
  if (d.max_n() < f.order()) {
    throw Error(ErrorCode::OrderMismatch, "distribution has " + std::to_string(d.max_n()) +
                                              " coefficients, series needs " + std::to_string(f.order()));
  }
  TruncatedSeries out = f;
  for (std::size_t n = 2; n <= f.order(); ++n) out[n] *= d.values[n];
  return out;
}

}  // namespace fekete
