#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "fekete/caratheodory.hpp"
#include "fekete/powerseries.hpp"

namespace fekete {

/// The triple (vartheta, kappa, varkappa) selecting one class, and the
/// constants built from it. Derived constants are computed on demand.
struct ClassParams {
  double vartheta = 0.0;
  double kappa = 0.0;
  double varkappa = 1.0;

  /// ParameterOutOfRange unless all three are finite and >= 0.
  void validate() const;

  /// M = vartheta^2 - vartheta + 1
  double m_coeff() const { return vartheta * vartheta - vartheta + 1.0; }
  /// S = 2 vartheta^2 - 4 vartheta + 1
  double s_coeff() const { return 2.0 * vartheta * vartheta - 4.0 * vartheta + 1.0; }
  /// Q = vartheta^2 - 7 vartheta - 2
  double q_coeff() const { return vartheta * vartheta - 7.0 * vartheta - 2.0; }
  /// M kappa^2 + S kappa + Q, the a2^2 coefficient as the bound formulas use it.
  double stated_quadratic() const { return m_coeff() * kappa * kappa + s_coeff() * kappa + q_coeff(); }
  /// W = (1 + vartheta)(1 + kappa)
  double a2_scale() const { return (1.0 + vartheta) * (1.0 + kappa); }
  /// L = (1 + 2 vartheta)(1 + 2 kappa)
  double a3_scale() const { return (1.0 + 2.0 * vartheta) * (1.0 + 2.0 * kappa); }
};

/// Named subclasses used by the remark suite.
enum class ClassPreset { GeneralKappa, Starlike, Convex, GeneralVartheta, RClass };

struct PresetInfo {
  ClassPreset preset;
  std::string_view id;
  double vartheta;
  double kappa;
};

/// The five presets in a fixed order. The one-parameter families use
/// kappa = 1/2 (GeneralKappa) and vartheta = 1/2 (GeneralVartheta).
std::span<const PresetInfo> class_presets();
const PresetInfo& preset_info(ClassPreset preset);
ClassParams preset_params(ClassPreset preset, double varkappa);

/// b1 = linear_a2 a2,  b2 = linear_a3 a3 + quad_a2 a2^2.
struct CoefficientRelation {
  double linear_a2 = 0.0;
  double linear_a3 = 0.0;
  double quad_a2 = 0.0;
};

/// b1 = b1_per_c1 c1,  b2 = b2_per_c2 c2 + b2_per_c1sq c1^2 for
/// X(w(z)) = 1 + b1 z + b2 z^2 + ..., w = (p - 1)/(p + 1).
struct SubordinationRelation {
  Complex b1_per_c1;
  Complex b2_per_c2;
  Complex b2_per_c1sq;
};

/// Series of the class functional
///   [A + z f''/f' + (kappa - 1)(z f'/f - 1)]^vartheta  A^(1 - vartheta),
///   A = z f' / (f^(1 - kappa) z^kappa),
/// for a normalized f (f[0] = 0, f[1] = 1, else NotNormalized). The result
/// has order f.order() - 1. Both bracket bases start at 1, so the powers use
/// the principal branch; PowerBranchFailure if that ever fails to hold.
TruncatedSeries w_functional(const TruncatedSeries& f, const ClassParams& params);

/// Coefficient relation recovered numerically from w_functional with
/// f = z + eps z^2 and f = z + eps z^3 at eps = 1e-3 and 2e-3, Richardson
/// extrapolated. FitUnstable if the two step sizes disagree by more than 1e-6.
CoefficientRelation derive_relation(const ClassParams& params);

/// (W, (1 + 2 vartheta)(2 + kappa), M kappa^2 + S kappa + Q) as printed for b2.
CoefficientRelation stated_relation(const ClassParams& params);
/// Same but with linear_a3 = L, the divisor the bound theorems use.
CoefficientRelation stated_relation_theorem(const ClassParams& params);

/// Map from (c1, c2) to X(w) coefficients, computed with the series engine.
SubordinationRelation derive_subordination(double varkappa);

/// Oracle map (c1, c2) -> (a2, a3) for members of the class.
class CoefficientMap {
 public:
  explicit CoefficientMap(const ClassParams& params);
  CoefficientMap(const CoefficientRelation& relation, const SubordinationRelation& subordination);

  Complex a2(Complex c1) const { return sub_.b1_per_c1 * c1 / rel_.linear_a2; }
  Complex a3(Complex c1, Complex c2) const {
    const Complex x = a2(c1);
    return (sub_.b2_per_c2 * c2 + sub_.b2_per_c1sq * c1 * c1 - rel_.quad_a2 * x * x) / rel_.linear_a3;
  }
  Complex a2(const CaratheodoryPoint& p) const { return a2(p.c1); }
  Complex a3(const CaratheodoryPoint& p) const { return a3(p.c1, p.c2); }

  /// a3 - mu a2^2 == scale * (c2 - v c1^2).
  struct QuadraticForm {
    Complex scale;
    Complex v;
  };
  QuadraticForm fekete_szego_form(Complex mu) const;

  const CoefficientRelation& relation() const { return rel_; }
  const SubordinationRelation& subordination() const { return sub_; }

 private:
  CoefficientRelation rel_;
  SubordinationRelation sub_;
};

inline constexpr double kSchwarzRadius = 0.99;
inline constexpr std::size_t kSchwarzSamples = 256;
inline constexpr double kMembershipThreshold = 1.0 - 1e-6;

/// Builds f through z^order with w_functional(f) = X(w) coefficientwise.
///
/// `w` is read as a polynomial (zero-extended when shorter than order - 1).
/// NotSchwarz unless w(0) = 0 and max |w| < 1 on |z| = 0.99 (256 samples).
/// SolveSingular if a step's linear coefficient vanishes or the step is not
/// linear in the new unknown.
TruncatedSeries solve_from_schwarz(const TruncatedSeries& w, const ClassParams& params, std::size_t order);

struct MembershipWitness {
  TruncatedSeries w;
  double sup_norm = 0.0;

  bool member(double threshold = kMembershipThreshold) const { return sup_norm <= threshold; }
};

/// Solves X(w) = w_functional(f) for w, i.e. w = h^{-1}(log W) with
/// h(u) = u + varkappa u^2 / 2, and reports max |w| on |z| = 0.99.
/// WitnessUndefined when 1 + varkappa w vanishes on that circle.
MembershipWitness membership_witness(const TruncatedSeries& f, const ClassParams& params);

}  // namespace fekete
