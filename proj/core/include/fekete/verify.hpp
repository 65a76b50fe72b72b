#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fekete/bazilevic.hpp"
#include "fekete/bounds.hpp"
#include "fekete/caratheodory.hpp"

namespace fekete {

enum class FunctionalKind {
  A2,
  A3,
  FeketeSzego,
  InverseD2,
  InverseFs,
  LogGamma1,
  LogGamma2,
  ConvFs,
  Lemma1,
  Lemma3,
  Lemma4,
};

std::string_view to_string(FunctionalKind kind);

/// What an experiment maximizes. `arg` is mu (FeketeSzego, ConvFs), hbar
/// (InverseFs, Lemma4) or v (Lemma1, Lemma3) and is ignored otherwise.
struct FunctionalDescriptor {
  FunctionalKind kind = FunctionalKind::A2;
  Complex arg{};
  ConvolutionWeights weights{};
  /// Free-form name of the weights, e.g. "unit" or "poisson(m=1)".
  std::string weights_label = "unit";

  static FunctionalDescriptor a2() { return {FunctionalKind::A2}; }
  static FunctionalDescriptor a3() { return {FunctionalKind::A3}; }
  static FunctionalDescriptor fekete_szego(Complex mu) { return {FunctionalKind::FeketeSzego, mu}; }
  static FunctionalDescriptor inverse_d2() { return {FunctionalKind::InverseD2}; }
  static FunctionalDescriptor inverse_fs(Complex hbar) { return {FunctionalKind::InverseFs, hbar}; }
  static FunctionalDescriptor log_gamma1() { return {FunctionalKind::LogGamma1}; }
  static FunctionalDescriptor log_gamma2() { return {FunctionalKind::LogGamma2}; }
  static FunctionalDescriptor conv_fs(Complex mu, ConvolutionWeights weights, std::string label) {
    return {FunctionalKind::ConvFs, mu, weights, std::move(label)};
  }
  static FunctionalDescriptor lemma1(double v) { return {FunctionalKind::Lemma1, v}; }
  static FunctionalDescriptor lemma3(Complex v) { return {FunctionalKind::Lemma3, v}; }
  static FunctionalDescriptor lemma4(Complex hbar) { return {FunctionalKind::Lemma4, hbar}; }

  /// BadParameter for a non-real Lemma1 argument or a non-finite arg;
  /// ZeroConvolutionCoefficient for bad weights.
  void validate() const;
  /// Stable human-readable name such as "fs(mu=0.5)".
  std::string label() const;
};

struct Discrepancy {
  std::string id;
  double stated = 0.0;
  double reference = 0.0;
  std::string note;
};

struct BoundReport {
  std::string experiment_id;
  ClassParams params;
  FunctionalDescriptor functional;
  double as_stated = 0.0;
  double oracle = 0.0;
  double empirical_sup = 0.0;
  CaratheodoryPoint witness{};
  SampleParams witness_at{};
  std::vector<Discrepancy> discrepancies;
  /// Three-branch verdict for real mu (fs and conv-fs only).
  std::optional<PiecewiseVerdict> piecewise;

  double gap() const { return oracle - empirical_sup; }
  bool sound(double tol = 1e-9) const { return empirical_sup <= oracle + tol; }
  bool has(std::string_view id) const;
};

struct ExperimentOptions {
  SupOptions sup{};
  /// Threshold for recording a numeric mismatch as a discrepancy.
  double discrepancy_tol = 1e-9;
};

/// The preset with these (vartheta, kappa), if any.
std::optional<ClassPreset> match_preset(const ClassParams& params);

/// Maps every sampler grid point to (a2, a3) through the series-derived
/// relation, maximizes the descriptor's functional, and pairs the result with
/// the as-stated formula and the Lemma-3 based oracle. FitUnstable propagates.
BoundReport run_experiment(const FunctionalDescriptor& functional, const ClassParams& params, const GridSpec& grid,
                           const ExperimentOptions& options = {});

struct SweepSummary {
  std::size_t reports = 0;
  std::size_t soundness_violations = 0;
  std::map<std::string, std::size_t> discrepancy_counts;
};

struct SweepResult {
  std::vector<BoundReport> reports;
  SweepSummary summary;
};

/// One report per (params, functional), ordered by (vartheta, kappa,
/// varkappa) and then by position in `functionals`. EmptySweep when either
/// list is empty.
SweepResult sweep(const std::vector<ClassParams>& params, const std::vector<FunctionalDescriptor>& functionals,
                  const GridSpec& grid, const ExperimentOptions& options = {});

enum class Suite { Remarks, Lemmas, Full };

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);

/// Runs a named suite. Remarks: the five presets x {a2, a3, fs(mu) for
/// mu in {-2, 0, 1/2, 1, 2}}. Lemmas: the sampler against the three lemmas.
/// Full: both, plus inverse, logarithmic and convolution experiments on the
/// presets.
SweepResult run_suite(Suite suite, const GridSpec& grid, double varkappa = 1.0, const ExperimentOptions& options = {});

SweepSummary summarize(const std::vector<BoundReport>& reports);

/// Rounds to `significant` digits, mapping -0 to 0.
double round_significant(double value, int significant);
/// printf-style %.Ng text of round_significant(value, N).
std::string format_number(double value, int significant);

/// One JSON object per line, numbers at 12 significant digits.
std::string to_json_line(const BoundReport& report);
std::string summary_json_line(const SweepSummary& summary);

}  // namespace fekete
