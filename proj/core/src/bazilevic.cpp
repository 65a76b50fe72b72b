#include "fekete/bazilevic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fekete/errors.hpp"
#include "fekete/telephone.hpp"

namespace fekete {

namespace {

constexpr std::array<PresetInfo, 5> kPresets = {{
    {ClassPreset::GeneralKappa, "g-kappa", 0.0, 0.5},
    {ClassPreset::Starlike, "starlike", 0.0, 0.0},
    {ClassPreset::Convex, "convex", 0.0, 1.0},
    {ClassPreset::GeneralVartheta, "b-vartheta", 0.5, 0.0},
    {ClassPreset::RClass, "r-class", 1.0, 0.0},
}};

void check_normalized(const TruncatedSeries& f) {
  if (f.order() < 1 || std::abs(f[0]) > kUnitTolerance || std::abs(f[1] - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::NotNormalized, "expected f = z + a2 z^2 + ...");
  }
}

TruncatedSeries checked_pow(const TruncatedSeries& base, double exponent) {
  if (std::abs(base[0] - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::PowerBranchFailure, "bracket base does not start at 1");
  }
  return pow_real(base, exponent);
}

// Unchecked core of w_functional; f must be normalized.
TruncatedSeries class_functional(const TruncatedSeries& f, const ClassParams& p) {
  const std::size_t n = f.order() - 1;

  TruncatedSeries f_over_z(n);
  for (std::size_t k = 0; k <= n; ++k) f_over_z[k] = f[k + 1];

  const TruncatedSeries fp = derive(f);
  TruncatedSeries z_fpp(n);
  const TruncatedSeries fpp = derive(fp);
  for (std::size_t k = 1; k <= n; ++k) z_fpp[k] = fpp[k - 1];

  const TruncatedSeries one = TruncatedSeries::constant(1.0, n);
  const TruncatedSeries zfp_over_f = fp / f_over_z;
  const TruncatedSeries a = fp * checked_pow(f_over_z, p.kappa - 1.0);
  const TruncatedSeries b = a + z_fpp / fp + (p.kappa - 1.0) * (zfp_over_f - one);

  return checked_pow(b, p.vartheta) * checked_pow(a, 1.0 - p.vartheta);
}

struct Estimate {
  double value;
  double spread;
};

// est(h) = c + O(h): extrapolate with 2 est(h) - est(2h).
Estimate richardson(double at_h, double at_2h) {
  return {2.0 * at_h - at_2h, std::abs(at_h - at_2h)};
}

}  // namespace

void ClassParams::validate() const {
  for (double v : {vartheta, kappa, varkappa}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::ParameterOutOfRange, "vartheta, kappa and varkappa must be finite and >= 0");
    }
  }
}

std::span<const PresetInfo> class_presets() { return kPresets; }

const PresetInfo& preset_info(ClassPreset preset) {
  for (const auto& info : kPresets) {
    if (info.preset == preset) return info;
  }
  throw Error(ErrorCode::BadParameter, "unknown preset");
}

ClassParams preset_params(ClassPreset preset, double varkappa) {
  const auto& info = preset_info(preset);
  return {info.vartheta, info.kappa, varkappa};
}

TruncatedSeries w_functional(const TruncatedSeries& f, const ClassParams& params) {
  params.validate();
  check_normalized(f);
  return class_functional(f, params);
}

CoefficientRelation derive_relation(const ClassParams& params) {
  params.validate();
  constexpr double kStep = 1e-3;
  constexpr double kAgreement = 1e-6;

  auto coeffs = [&](std::size_t power, double eps) {
    TruncatedSeries f(3, {0.0, 1.0});
    f[power] = eps;
    const TruncatedSeries w = class_functional(f, params);
    return std::array<double, 2>{w[1].real(), w[2].real()};
  };

  const auto sq_h = coeffs(2, kStep);
  const auto sq_2h = coeffs(2, 2 * kStep);
  const auto cube_h = coeffs(3, kStep);
  const auto cube_2h = coeffs(3, 2 * kStep);

  const Estimate lin_a2 = richardson(sq_h[0] / kStep, sq_2h[0] / (2 * kStep));
  const Estimate quad = richardson(sq_h[1] / (kStep * kStep), sq_2h[1] / (4 * kStep * kStep));
  const Estimate lin_a3 = richardson(cube_h[1] / kStep, cube_2h[1] / (2 * kStep));

  for (const Estimate& e : {lin_a2, quad, lin_a3}) {
    if (!(e.spread <= kAgreement * std::max(1.0, std::abs(e.value)))) {
      throw Error(ErrorCode::FitUnstable, "relation estimates disagree between step sizes");
    }
  }
  return {lin_a2.value, lin_a3.value, quad.value};
}

CoefficientRelation stated_relation(const ClassParams& p) {
  return {p.a2_scale(), (1.0 + 2.0 * p.vartheta) * (2.0 + p.kappa), p.stated_quadratic()};
}

CoefficientRelation stated_relation_theorem(const ClassParams& p) {
  return {p.a2_scale(), p.a3_scale(), p.stated_quadratic()};
}

SubordinationRelation derive_subordination(double varkappa) {
  const TruncatedSeries x = x_series(varkappa, 2);
  auto image = [&](Complex c1, Complex c2) {
    const TruncatedSeries p(2, {1.0, c1, c2});
    const TruncatedSeries one = TruncatedSeries::constant(1.0, 2);
    return compose(x, (p - one) / (p + one));
  };
  const TruncatedSeries from_c1 = image(1.0, 0.0);
  const TruncatedSeries from_c2 = image(0.0, 1.0);
  return {from_c1[1], from_c2[2], from_c1[2]};
}

CoefficientMap::CoefficientMap(const ClassParams& params)
    : CoefficientMap(derive_relation(params), derive_subordination(params.varkappa)) {}

CoefficientMap::CoefficientMap(const CoefficientRelation& relation, const SubordinationRelation& subordination)
    : rel_(relation), sub_(subordination) {}

CoefficientMap::QuadraticForm CoefficientMap::fekete_szego_form(Complex mu) const {
  const Complex scale = sub_.b2_per_c2 / rel_.linear_a3;
  const Complex b1 = sub_.b1_per_c1 / rel_.linear_a2;
  const Complex c1sq = sub_.b2_per_c1sq / rel_.linear_a3 - (rel_.quad_a2 / rel_.linear_a3 + mu) * b1 * b1;
  return {scale, -c1sq / scale};
}

TruncatedSeries solve_from_schwarz(const TruncatedSeries& w, const ClassParams& params, std::size_t order) {
  params.validate();
  if (std::abs(w[0]) > kUnitTolerance) {
    throw Error(ErrorCode::NotSchwarz, "w(0) must vanish");
  }
  if (w.max_abs_on_circle(kSchwarzRadius, kSchwarzSamples) >= 1.0) {
    throw Error(ErrorCode::NotSchwarz, "max |w| on |z| = 0.99 is not below 1");
  }
  if (order < 1) {
    throw Error(ErrorCode::BadParameter, "order must be at least 1");
  }

  TruncatedSeries f = TruncatedSeries::identity(order);
  if (order == 1) return f;

  const TruncatedSeries target = compose(x_series(params.varkappa, order - 1), w.with_order(order - 1));

  // Coefficient n of the class functional is affine in a_{n+1} once
  // a_2..a_n are fixed.
  for (std::size_t n = 1; n < order; ++n) {
    TruncatedSeries probe = f.with_order(n + 1);
    probe[n + 1] = 0.0;
    const Complex at0 = class_functional(probe, params)[n];
    probe[n + 1] = 1.0;
    const Complex slope = class_functional(probe, params)[n] - at0;
    if (std::abs(slope) <= kUnitTolerance) {
      throw Error(ErrorCode::SolveSingular, "vanishing linear coefficient at step " + std::to_string(n));
    }
    const Complex a = (target[n] - at0) / slope;
    probe[n + 1] = a;
    const Complex residual = class_functional(probe, params)[n] - target[n];
    if (std::abs(residual) > 1e-8 * std::max({1.0, std::abs(a * slope), std::abs(target[n])})) {
      throw Error(ErrorCode::SolveSingular, "step " + std::to_string(n) + " is not linear in its unknown");
    }
    f[n + 1] = a;
  }
  return f;
}

MembershipWitness membership_witness(const TruncatedSeries& f, const ClassParams& params) {
  const TruncatedSeries value = w_functional(f, params);
  MembershipWitness out;
  if (value.order() == 0) {
    out.w = TruncatedSeries(0);
    return out;
  }

  const TruncatedSeries g = log_series(value);
  const TruncatedSeries h(g.order(), {0.0, 1.0, params.varkappa / 2.0});
  out.w = compose(revert(h), g);

  for (std::size_t j = 0; j < kSchwarzSamples; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / kSchwarzSamples;
    const Complex wz = out.w.evaluate(std::polar(kSchwarzRadius, theta));
    if (std::abs(1.0 + params.varkappa * wz) < 1e-9) {
      throw Error(ErrorCode::WitnessUndefined, "1 + varkappa w vanishes on the sampling circle");
    }
  }
  out.sup_norm = out.w.max_abs_on_circle(kSchwarzRadius, kSchwarzSamples);
  return out;
}

}  // namespace fekete
