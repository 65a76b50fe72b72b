#pragma once

#include <string_view>

#include "fekete/bazilevic.hpp"

namespace fekete {

// Bound formulas evaluated exactly as they are printed. None of these
// functions corrects a formula; the verify module pairs each one with an
// independently derived value.

enum class Branch { BelowSigma1, Between, AboveSigma2 };

std::string_view to_string(Branch branch);

struct PiecewiseVerdict {
  double value = 0.0;
  Branch branch = Branch::Between;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double aleph = 0.0;
  /// The upper knot at which the middle and upper branches actually meet.
  double continuous_sigma2 = 0.0;
  /// Set when the printed branch produced a value <= 0.
  bool non_positive = false;
};

/// Convolution weights wp2 = coefficient 2, wp3 = coefficient 3 of the
/// distribution series. Both must be finite and > 0.
struct ConvolutionWeights {
  double wp2 = 1.0;
  double wp3 = 1.0;

  /// ZeroConvolutionCoefficient otherwise.
  void validate() const;
};

double a2_bound(const ClassParams& params);
double a3_bound(const ClassParams& params);

/// Three-branch bound for real mu. Branches: mu <= sigma1, sigma1 < mu < sigma2,
/// mu >= sigma2. Total in mu.
PiecewiseVerdict fs_real(const ClassParams& params, double mu);

/// (1/L) max{1, |1 + varkappa + (2T - 2 mu L)/W^2| / 2}.
double fs_complex(const ClassParams& params, Complex mu);
/// The same expression with 1/((vartheta + 2)(1 + 2 kappa)) in front.
double fs_complex_alt_prefactor(const ClassParams& params, Complex mu);

struct StatedVsOracle {
  double as_stated = 0.0;
  double oracle = 0.0;
};

/// |d2| for the inverse function: as_stated 1/(2W); oracle 1/W from d2 = -a2.
StatedVsOracle inverse_d2_bound(const ClassParams& params);

/// |d3 - hbar d2^2| bound.
double inverse_fs(const ClassParams& params, Complex hbar);

/// (1/(2L)) max{1, |(-(1 + varkappa) W^2 - 2T + 4L)/(2W^2)|}, printed under a
/// |d2| label although the quantity it controls is |d3|.
double inverse_second_bound(const ClassParams& params);

struct LogCoeffBounds {
  double g1 = 0.0;
  double g2 = 0.0;
  /// fs_complex(1/2) / 2, which is what 2 gamma2 = a3 - a2^2/2 implies.
  double g2_reference = 0.0;
};

LogCoeffBounds log_coeff_bounds(const ClassParams& params);

double conv_fs_complex(const ClassParams& params, Complex mu, const ConvolutionWeights& weights);
PiecewiseVerdict conv_fs_real(const ClassParams& params, double mu, const ConvolutionWeights& weights);

/// The a3 bounds printed in the remarks for each preset, next to the
/// theorem's a3_bound at the same parameters. For presets printed only in
/// closed form max_form == closed_form.
struct RemarkA3 {
  double max_form = 0.0;
  double closed_form = 0.0;
  double theorem = 0.0;
};

RemarkA3 remark_a3(ClassPreset preset, double varkappa);

}  // namespace fekete
