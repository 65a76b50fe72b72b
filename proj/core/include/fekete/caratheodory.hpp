#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "fekete/powerseries.hpp"

namespace fekete {

/// First two coefficients of some p = 1 + c1 z + c2 z^2 + ... with Re p > 0.
struct CaratheodoryPoint {
  Complex c1;
  Complex c2;
};

/// |c1| <= 2 and |c2 - c1^2/2| <= 2 - |c1|^2/2, each up to `tol`.
bool is_admissible(const CaratheodoryPoint& p, double tol = 1e-12);

/// Parameters of the exact sampler, see sample_point.
struct SampleParams {
  double rho = 0.0;
  double alpha = 0.0;
  double tau = 0.0;
  double beta = 0.0;
};

/// c1 = 2 rho e^{i alpha},  c2 = c1^2/2 + (2 - |c1|^2/2) tau e^{i beta}.
///
/// As (rho, tau) range over [0,1]^2 and the angles over the circle this
/// covers exactly the body of admissible (c1, c2) pairs. Throws
/// ParameterOutOfRange when rho or tau leave [0, 1] or an angle is not finite.
CaratheodoryPoint sample_point(double rho, double alpha, double tau, double beta);
inline CaratheodoryPoint sample_point(const SampleParams& s) {
  return sample_point(s.rho, s.alpha, s.tau, s.beta);
}

/// Steps per sampler parameter. rho and tau include both endpoints 0 and 1;
/// angles are 2 pi j / steps.
struct GridSpec {
  int rho_steps = 60;
  int alpha_steps = 60;
  int tau_steps = 60;
  int beta_steps = 60;

  static GridSpec uniform(int steps) { return {steps, steps, steps, steps}; }

  /// ParameterOutOfRange unless every step count is >= 2.
  void validate() const;

  double rho(int i) const { return static_cast<double>(i) / (rho_steps - 1); }
  double tau(int k) const { return static_cast<double>(k) / (tau_steps - 1); }
  double alpha(int j) const { return 2.0 * std::numbers::pi * j / alpha_steps; }
  double beta(int l) const { return 2.0 * std::numbers::pi * l / beta_steps; }
};

/// Piecewise bound on |c2 - v c1^2| for real v: 2-4v, 2, 4v-2.
double lemma1_bound(double v);
/// 2 max(1, |2v - 1|) for complex v.
double lemma3_bound(Complex v);
/// max(2, 2|hbar - 1|), the bound on |c2 - hbar c1^2 / 2|.
double lemma4_bound(Complex hbar);

struct SupResult {
  double value = -std::numeric_limits<double>::infinity();
  CaratheodoryPoint witness{};
  SampleParams at{};
};

struct SupOptions {
  /// Golden-section polish of each parameter around the grid argmax.
  bool refine = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

namespace detail {

struct GridIndex {
  std::array<int, 4> idx{};
  double value = -std::numeric_limits<double>::infinity();
  bool found = false;
};

// Strictly larger value wins; equal values keep the lexicographically
// smaller index tuple.
inline bool improves(const GridIndex& candidate, const GridIndex& incumbent) {
  if (!candidate.found) return false;
  if (!incumbent.found) return true;
  if (candidate.value != incumbent.value) return candidate.value > incumbent.value;
  return candidate.idx < incumbent.idx;
}

SupResult refine_sup(const std::function<double(const CaratheodoryPoint&)>& functional,
                     const SupResult& start, const GridSpec& grid);

}  // namespace detail

/// Maximum of `functional` over the sampler grid, with its argmax.
///
/// The grid is split by rho index across threads; the merge is
/// order-independent, so the result equals a sequential scan. NaN values
/// are skipped. `functional` must be callable concurrently.
template <class F>
SupResult brute_force_sup(F&& functional, const GridSpec& grid, SupOptions options = {}) {
  grid.validate();

  std::vector<Complex> alpha_unit(grid.alpha_steps);
  std::vector<Complex> beta_unit(grid.beta_steps);
  for (int j = 0; j < grid.alpha_steps; ++j) alpha_unit[j] = std::polar(1.0, grid.alpha(j));
  for (int l = 0; l < grid.beta_steps; ++l) beta_unit[l] = std::polar(1.0, grid.beta(l));

  auto scan = [&](int i_begin, int i_end) {
    detail::GridIndex best;
    for (int i = i_begin; i < i_end; ++i) {
      const double rho = grid.rho(i);
      for (int j = 0; j < grid.alpha_steps; ++j) {
        const Complex c1 = 2.0 * rho * alpha_unit[j];
        const Complex half_sq = 0.5 * c1 * c1;
        const double radius = 2.0 - 0.5 * std::norm(c1);
        for (int k = 0; k < grid.tau_steps; ++k) {
          const double r = radius * grid.tau(k);
          for (int l = 0; l < grid.beta_steps; ++l) {
            const CaratheodoryPoint p{c1, half_sq + r * beta_unit[l]};
            const double v = functional(p);
            if (v > best.value || (!best.found && v == best.value)) {
              best.value = v;
              best.idx = {i, j, k, l};
              best.found = true;
            }
          }
        }
      }
    }
    return best;
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.rho_steps));

  detail::GridIndex best;
  if (threads <= 1) {
    best = scan(0, grid.rho_steps);
  } else {
    std::vector<detail::GridIndex> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const int chunk = (grid.rho_steps + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const int lo = std::min(grid.rho_steps, static_cast<int>(t) * chunk);
      const int hi = std::min(grid.rho_steps, lo + chunk);
      workers.emplace_back([&, t, lo, hi] { partial[t] = scan(lo, hi); });
    }
    for (auto& w : workers) w.join();
    for (const auto& p : partial) {
      if (detail::improves(p, best)) best = p;
    }
  }

  SupResult result;
  if (!best.found) return result;
  result.at = {grid.rho(best.idx[0]), grid.alpha(best.idx[1]), grid.tau(best.idx[2]), grid.beta(best.idx[3])};
  const Complex c1 = 2.0 * result.at.rho * alpha_unit[best.idx[1]];
  const double radius = 2.0 - 0.5 * std::norm(c1);
  result.witness = {c1, 0.5 * c1 * c1 + radius * result.at.tau * beta_unit[best.idx[3]]};
  result.value = best.value;

  if (options.refine) {
    result = detail::refine_sup(std::function<double(const CaratheodoryPoint&)>(functional), result, grid);
  }
  return result;
}

}  // namespace fekete
