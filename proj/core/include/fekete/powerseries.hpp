#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fekete {

using Complex = std::complex<double>;

/// Complex Taylor coefficients c[0..N] of a series truncated after z^N.
///
/// The truncation order N is always explicit: binary operations produce a
/// result at the smaller of the two operand orders, so coefficients that
/// depend on unknown higher terms are never fabricated.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);

  /// Series of the given order whose leading coefficients are `coeffs`;
  /// missing coefficients are zero and surplus ones are dropped.
  TruncatedSeries(std::size_t order, std::initializer_list<Complex> coeffs);

  /// Order is coeffs.size() - 1. Throws BadParameter on an empty vector.
  static TruncatedSeries from_coeffs(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex value, std::size_t order);
  /// The series z (zero when order == 0).
  static TruncatedSeries identity(std::size_t order);
  static TruncatedSeries monomial(std::size_t power, Complex coeff, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Truncates, or zero-extends when the series is known to be a polynomial.
  TruncatedSeries with_order(std::size_t order) const;

  Complex evaluate(Complex z) const;

  /// max |s(z)| over `samples` equispaced points of |z| = radius.
  double max_abs_on_circle(double radius, std::size_t samples) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(Complex scalar);

 private:
  std::vector<Complex> coeffs_;
};

/// Tolerance used for unit / zero constant-term preconditions.
inline constexpr double kUnitTolerance = 1e-12;

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);
/// Cauchy product truncated at min(a.order, b.order).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws DivisionByNonUnit when |b[0]| <= 1e-12.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(a); requires a[0] == 0 (NonzeroConstantTerm).
TruncatedSeries exp_series(const TruncatedSeries& a);
/// Principal log(a); requires a[0] == 1 (ConstantTermNotOne).
TruncatedSeries log_series(const TruncatedSeries& a);
/// a^e = exp(e log a) on the principal branch; requires a[0] == 1.
TruncatedSeries pow_real(const TruncatedSeries& a, double exponent);

/// outer(inner(z)); requires inner[0] == 0 (InnerConstantNonzero).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse b with a(b(z)) = z. Requires a[0] == 0 and
/// a[1] != 0, otherwise NotInvertible.
TruncatedSeries revert(const TruncatedSeries& a);

/// d/dz; the result has order max(order - 1, 0).
TruncatedSeries derive(const TruncatedSeries& a);
/// Antiderivative vanishing at 0; the result has order + 1.
TruncatedSeries integrate(const TruncatedSeries& a);

/// max_k |a[k] - b[k]| over the common order.
double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }
inline TruncatedSeries operator*(Complex s, const TruncatedSeries& a) { return scale(a, s); }
inline TruncatedSeries operator*(const TruncatedSeries& a, Complex s) { return scale(a, s); }

}  // namespace fekete
