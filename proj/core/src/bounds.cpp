#include "fekete/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

// Shared by the plain and convolution piecewise theorems. `ratio` is
// wp2^2 / wp3 and `scale` is 1 / wp3; both are 1 for the plain theorem.
PiecewiseVerdict piecewise(const ClassParams& p, double mu, double ratio, double scale) {
  const double w2 = p.a2_scale() * p.a2_scale();
  const double l = p.a3_scale();
  const double t = p.stated_quadratic();

  PiecewiseVerdict v;
  v.sigma1 = ratio * ((p.varkappa - 1.0) * w2 + 2.0 * t) / (2.0 * l);
  v.sigma2 = ratio * (p.varkappa * w2 + 2.0 * t) / (2.0 * l);
  v.continuous_sigma2 = ratio * ((p.varkappa + 3.0) * w2 + 2.0 * t) / (2.0 * l);
  v.aleph = 2.0 * t - 2.0 * mu * l / ratio;

  const double outer = (1.0 + p.varkappa + v.aleph / w2) * scale / (2.0 * l);
  if (mu <= v.sigma1) {
    v.branch = Branch::BelowSigma1;
    v.value = outer;
  } else if (mu < v.sigma2) {
    v.branch = Branch::Between;
    v.value = scale / l;
  } else {
    v.branch = Branch::AboveSigma2;
    v.value = -outer;
  }
  v.non_positive = v.value <= 0.0;
  return v;
}

double fs_inner(const ClassParams& p, Complex mu) {
  const double w2 = p.a2_scale() * p.a2_scale();
  const Complex aleph = 2.0 * p.stated_quadratic() - 2.0 * mu * p.a3_scale();
  return std::max(1.0, 0.5 * std::abs(1.0 + p.varkappa + aleph / w2));
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::BelowSigma1:
      return "below-sigma1";
    case Branch::Between:
      return "between";
    case Branch::AboveSigma2:
      return "above-sigma2";
  }
  return "unknown";
}

void ConvolutionWeights::validate() const {
  if (!(std::isfinite(wp2) && wp2 > 0.0) || !(std::isfinite(wp3) && wp3 > 0.0)) {
    throw Error(ErrorCode::ZeroConvolutionCoefficient, "convolution coefficients must be positive");
  }
}

double a2_bound(const ClassParams& params) { return 1.0 / params.a2_scale(); }

double a3_bound(const ClassParams& params) {
  const double w = params.a2_scale();
  const double inner = params.stated_quadratic() / (w * w) + (1.0 + params.varkappa) / 2.0;
  return std::max(1.0, std::abs(inner)) / params.a3_scale();
}

PiecewiseVerdict fs_real(const ClassParams& params, double mu) { return piecewise(params, mu, 1.0, 1.0); }

double fs_complex(const ClassParams& params, Complex mu) { return fs_inner(params, mu) / params.a3_scale(); }

double fs_complex_alt_prefactor(const ClassParams& params, Complex mu) {
  return fs_inner(params, mu) / ((params.vartheta + 2.0) * (1.0 + 2.0 * params.kappa));
}

StatedVsOracle inverse_d2_bound(const ClassParams& params) {
  const double w = params.a2_scale();
  return {1.0 / (2.0 * w), 1.0 / w};
}

double inverse_fs(const ClassParams& params, Complex hbar) {
  const double w2 = params.a2_scale() * params.a2_scale();
  const double l = params.a3_scale();
  const Complex num = (1.0 + params.varkappa) * w2 + 2.0 * params.stated_quadratic() + 2.0 * l * (hbar - 2.0);
  return std::max(1.0, std::abs(num / (2.0 * w2))) / l;
}

double inverse_second_bound(const ClassParams& params) {
  const double w2 = params.a2_scale() * params.a2_scale();
  const double l = params.a3_scale();
  const double num = -(1.0 + params.varkappa) * w2 - 2.0 * params.stated_quadratic() + 4.0 * l;
  return std::max(1.0, std::abs(num / (2.0 * w2))) / (2.0 * l);
}

LogCoeffBounds log_coeff_bounds(const ClassParams& params) {
  const double w = params.a2_scale();
  const double l = params.a3_scale();
  LogCoeffBounds out;
  out.g1 = 1.0 / (2.0 * w);
  out.g2 = std::max(1.0, 0.5 * std::abs(1.0 + params.varkappa + (2.0 * params.stated_quadratic() - l) / (w * w))) / l;
  out.g2_reference = 0.5 * fs_complex(params, 0.5);
  return out;
}

double conv_fs_complex(const ClassParams& params, Complex mu, const ConvolutionWeights& weights) {
  weights.validate();
  const double l = params.a3_scale();
  const double d = params.a2_scale() * weights.wp2;
  const double d2 = d * d;
  const double mixed = (params.vartheta + 2.0) * (1.0 + 2.0 * params.kappa);
  const Complex inner =
      -1.0 - params.varkappa + 2.0 * params.stated_quadratic() / d2 + 2.0 * mu * mixed * weights.wp3 / d2;
  return 2.0 / (l * weights.wp3) * std::max(1.0, 0.5 * std::abs(inner));
}

PiecewiseVerdict conv_fs_real(const ClassParams& params, double mu, const ConvolutionWeights& weights) {
  weights.validate();
  return piecewise(params, mu, weights.wp2 * weights.wp2 / weights.wp3, 1.0 / weights.wp3);
}

RemarkA3 remark_a3(ClassPreset preset, double varkappa) {
  const ClassParams params = preset_params(preset, varkappa);
  params.validate();
  const double th = params.vartheta;
  const double k = params.kappa;
  RemarkA3 out;
  out.theorem = a3_bound(params);

  switch (preset) {
    case ClassPreset::GeneralKappa: {
      const double poly = k * k + 8.0 * k + 3.0;
      const double front = 1.0 / (2.0 * (1.0 + 2.0 * k));
      out.max_form = front * std::max(1.0, std::abs(poly / (2.0 * (1.0 + k) * (1.0 + k)) + varkappa));
      out.closed_form = front * (poly / (2.0 * (1.0 + 2.0 * k) * (1.0 + k) * (1.0 + k)) + varkappa);
      break;
    }
    case ClassPreset::Starlike:
      out.max_form = out.closed_form = 0.5 * (1.5 + varkappa);
      break;
    case ClassPreset::Convex:
      out.max_form = out.closed_form = (0.5 + varkappa) / 6.0;
      break;
    case ClassPreset::GeneralVartheta: {
      const double s = (1.0 + th) * (1.0 + th);
      out.max_form = std::max(1.0, 0.5 * std::abs((th * th + th - 2.0) / s - 1.0 - varkappa)) / (th + 2.0);
      out.closed_form = ((th + 3.0) / s + varkappa) / (2.0 * (1.0 + th));
      break;
    }
    case ClassPreset::RClass:
      out.max_form = std::max(1.0, 0.5 * std::abs(1.0 + varkappa)) / 3.0;
      out.closed_form = (1.0 + varkappa) / 6.0;
      break;
  }
  return out;
}

}  // namespace fekete
