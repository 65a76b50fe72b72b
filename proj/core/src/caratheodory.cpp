#include "fekete/caratheodory.hpp"

#include <string>

#include "fekete/errors.hpp"

namespace fekete {

bool is_admissible(const CaratheodoryPoint& p, double tol) {
  const double a1 = std::abs(p.c1);
  if (a1 > 2.0 + tol) return false;
  return std::abs(p.c2 - 0.5 * p.c1 * p.c1) <= 2.0 - 0.5 * a1 * a1 + tol;
}

CaratheodoryPoint sample_point(double rho, double alpha, double tau, double beta) {
  if (!(rho >= 0.0 && rho <= 1.0) || !(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "rho and tau must lie in [0, 1]");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::ParameterOutOfRange, "angles must be finite");
  }
  const Complex c1 = std::polar(2.0 * rho, alpha);
  const double radius = 2.0 - 0.5 * std::norm(c1);
  return {c1, 0.5 * c1 * c1 + std::polar(radius * tau, beta)};
}

void GridSpec::validate() const {
  if (rho_steps < 2 || alpha_steps < 2 || tau_steps < 2 || beta_steps < 2) {
    throw Error(ErrorCode::ParameterOutOfRange, "every grid dimension needs at least 2 steps");
  }
}

double lemma1_bound(double v) {
  if (v <= 0.0) return 2.0 - 4.0 * v;
  if (v <= 1.0) return 2.0;
  return 4.0 * v - 2.0;
}

double lemma3_bound(Complex v) { return 2.0 * std::max(1.0, std::abs(2.0 * v - 1.0)); }

double lemma4_bound(Complex hbar) { return std::max(2.0, 2.0 * std::abs(hbar - 1.0)); }

namespace detail {

SupResult refine_sup(const std::function<double(const CaratheodoryPoint&)>& functional,
                     const SupResult& start, const GridSpec& grid) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr int kSweeps = 3;
  constexpr int kIterations = 40;

  SupResult best = start;
  std::array<double, 4> x = {start.at.rho, start.at.alpha, start.at.tau, start.at.beta};
  const std::array<double, 4> step = {1.0 / (grid.rho_steps - 1), grid.alpha(1), 1.0 / (grid.tau_steps - 1),
                                      grid.beta(1)};
  const std::array<bool, 4> bounded = {true, false, true, false};

  auto eval = [&](const std::array<double, 4>& y) {
    const double v = functional(sample_point(y[0], y[1], y[2], y[3]));
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };

  for (int sweep = 0; sweep < kSweeps; ++sweep) {
    for (std::size_t d = 0; d < 4; ++d) {
      double lo = x[d] - step[d];
      double hi = x[d] + step[d];
      if (bounded[d]) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, 1.0);
      }
      auto probe = x;
      auto at = [&](double t) {
        probe[d] = t;
        return eval(probe);
      };
      double a = hi - kInvPhi * (hi - lo);
      double b = lo + kInvPhi * (hi - lo);
      double fa = at(a);
      double fb = at(b);
      for (int it = 0; it < kIterations; ++it) {
        if (fa < fb) {
          lo = a;
          a = b;
          fa = fb;
          b = lo + kInvPhi * (hi - lo);
          fb = at(b);
        } else {
          hi = b;
          b = a;
          fb = fa;
          a = hi - kInvPhi * (hi - lo);
          fa = at(a);
        }
      }
      const double t = fa > fb ? a : b;
      const double v = std::max(fa, fb);
      if (v > best.value) {
        x[d] = t;
        best.value = v;
        best.at = {x[0], x[1], x[2], x[3]};
        best.witness = sample_point(best.at);
      }
    }
  }
  return best;
}

}  // namespace detail

}  // namespace fekete
