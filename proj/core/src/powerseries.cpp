#include "fekete/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "fekete/errors.hpp"

namespace fekete {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Complex{}) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<Complex> coeffs)
    : coeffs_(order + 1, Complex{}) {
  std::size_t k = 0;
  for (const Complex& c : coeffs) {
    if (k > order) break;
    coeffs_[k++] = c;
  }
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Complex> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::BadParameter, "a series needs at least one coefficient");
  }
  TruncatedSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  return monomial(1, 1.0, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, Complex coeff, std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order) s.coeffs_[power] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
  std::vector<Complex> c(order + 1, Complex{});
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), c.size()), c.begin());
  return from_coeffs(std::move(c));
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double TruncatedSeries::max_abs_on_circle(double radius, std::size_t samples) const {
  double best = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    best = std::max(best, std::abs(evaluate(std::polar(radius, theta))));
  }
  return best;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scalar) {
  for (Complex& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
  TruncatedSeries r = a;
  r *= factor;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc{};
    for (std::size_t i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    r[k] = acc;
  }
  return r;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (std::abs(b[0]) <= kUnitTolerance) {
    throw Error(ErrorCode::DivisionByNonUnit, "divisor has a vanishing constant term");
  }
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = a[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

// b = exp(a) satisfies b' = a' b, i.e. k b_k = sum_{i=1..k} i a_i b_{k-i}.
TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (std::abs(a[0]) > kUnitTolerance) {
    throw Error(ErrorCode::NonzeroConstantTerm, "exp_series needs a zero constant term");
  }
  const std::size_t n = a.order();
  TruncatedSeries b(n);
  b[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t i = 1; i <= k; ++i) acc += static_cast<double>(i) * a[i] * b[k - i];
    b[k] = acc / static_cast<double>(k);
  }
  return b;
}

// l = log(a) satisfies a l' = a', i.e. k l_k = k a_k - sum_{i=1..k-1} i l_i a_{k-i}.
TruncatedSeries log_series(const TruncatedSeries& a) {
  if (std::abs(a[0] - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::ConstantTermNotOne, "log_series needs a unit constant term");
  }
  const std::size_t n = a.order();
  TruncatedSeries l(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (std::size_t i = 1; i < k; ++i) acc -= static_cast<double>(i) * l[i] * a[k - i];
    l[k] = acc / static_cast<double>(k);
  }
  return l;
}

TruncatedSeries pow_real(const TruncatedSeries& a, double exponent) {
  return exp_series(scale(log_series(a), exponent));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (std::abs(inner[0]) > kUnitTolerance) {
    throw Error(ErrorCode::InnerConstantNonzero, "inner series must vanish at 0");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const TruncatedSeries w = inner.with_order(n);
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = mul(acc, w);
    acc[0] += outer[k];
  }
  return acc;
}

// Order-by-order: with b_1..b_{k-1} fixed and b_k = 0, coefficient k of
// a(b(z)) is a_1 b_k + (terms in lower b's), so b_k = -[z^k] a(b) / a_1.
TruncatedSeries revert(const TruncatedSeries& a) {
  if (a.order() < 1 || std::abs(a[0]) > kUnitTolerance || std::abs(a[1]) <= kUnitTolerance) {
    throw Error(ErrorCode::NotInvertible, "revert needs a[0] == 0 and a[1] != 0");
  }
  const std::size_t n = a.order();
  TruncatedSeries b(n);
  b[1] = 1.0 / a[1];
  for (std::size_t k = 2; k <= n; ++k) {
    const TruncatedSeries partial = compose(a.with_order(k), b.with_order(k));
    b[k] = -partial[k] / a[1];
  }
  return b;
}

TruncatedSeries derive(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(a.order() - 1);
  for (std::size_t k = 1; k <= a.order(); ++k) d[k - 1] = static_cast<double>(k) * a[k];
  return d;
}

TruncatedSeries integrate(const TruncatedSeries& a) {
  TruncatedSeries r(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
  return r;
}

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace fekete
